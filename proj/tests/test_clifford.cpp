#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <map>
#include <numbers>
#include <random>
#include <set>

#include "stabsym/clifford.hpp"
#include "support/dense.hpp"

using namespace stabsym;
constexpr double pi = std::numbers::pi;

namespace {

/* Distance up to global phase, aligned on the largest entry of b. */
double proportional_distance(const Eigen::Matrix2cd& a, const Eigen::Matrix2cd& b) {
  Eigen::Index i, j;
  b.cwiseAbs().maxCoeff(&i, &j);
  std::complex<double> lambda = a(i, j) / b(i, j);
  Eigen::Matrix2cd err = a - lambda * b;
  return err.cwiseAbs().maxCoeff();
}

Eigen::Matrix2cd signed_pauli(Pauli p, bool neg) {
  Eigen::Matrix2cd m = pauli_matrix_2x2(p);
  if (neg) m = -m;
  return m;
}

}  // namespace

TEST_CASE("dyadic angles canonicalize, evaluate and print") {
  CHECK(DyadicAngle(2, 3) == DyadicAngle(1, 2));
  CHECK(DyadicAngle(8, 2) == DyadicAngle(0, 0));
  CHECK(DyadicAngle(-1, 3) == DyadicAngle(15, 3));
  CHECK(DyadicAngle(3, 0) == DyadicAngle(1, 0));
  CHECK(DyadicAngle(1, 3).value() == doctest::Approx(pi / 8));
  CHECK(DyadicAngle(1, 3).to_string() == "1/8*pi");
  CHECK(DyadicAngle(1, 0).to_string() == "pi");
  CHECK(DyadicAngle(0, 0).to_string() == "0");
  CHECK(DyadicAngle(3, 2).to_string() == "3/4*pi");
  CHECK(DyadicAngle(1, 3).times_two() == DyadicAngle(1, 2));
  CHECK(DyadicAngle(1, 0).times_two() == DyadicAngle(0, 0));
  CHECK(DyadicAngle(1, 1).is_half_pi_multiple());
  CHECK_FALSE(DyadicAngle(1, 2).is_half_pi_multiple());
}

TEST_CASE("the single-qubit Clifford group has 24 elements in canonical order") {
  const auto& all = all_single_qubit_cliffords();
  REQUIRE(all.size() == 24);
  std::set<int> seen;
  for (const auto& c : all) seen.insert(c.index());
  CHECK(seen.size() == 24);
  for (int i = 0; i < 24; ++i) {
    CHECK(all[i].index() == i);
    CHECK(clifford_from_class_and_pauli(all[i].class_index(), all[i].pauli_part()) == all[i]);
  }
}

TEST_CASE("each element's unitary realizes its exact conjugation action") {
  for (const auto& c : all_single_qubit_cliffords()) {
    Eigen::Matrix2cd u = clifford_unitary(c);
    Eigen::Matrix2cd uerr = u * u.adjoint() - Eigen::Matrix2cd::Identity();
    CHECK(uerr.cwiseAbs().maxCoeff() < 1e-12);
    for (Pauli l : {Pauli::X, Pauli::Y, Pauli::Z}) {
      auto [img, neg] = c.image(l);
      Eigen::Matrix2cd got = u * pauli_matrix_2x2(l) * u.adjoint();
      Eigen::Matrix2cd err = got - signed_pauli(img, neg);
      CHECK(err.cwiseAbs().maxCoeff() < 1e-12);
    }
  }
}

TEST_CASE("composition matches numeric multiplication and is associative") {
  const auto& all = all_single_qubit_cliffords();
  for (const auto& a : all)
    for (const auto& b : all) {
      SingleQubitClifford ab = compose(a, b);
      Eigen::Matrix2cd u = clifford_unitary(a) * clifford_unitary(b);
      auto fromu = clifford_from_unitary(u, 1e-10);
      REQUIRE(fromu.has_value());
      CHECK(*fromu == ab);
      CHECK(table1_map(ab) == mat_mul(table1_map(a), table1_map(b)));
    }
  std::mt19937 rng(3);
  for (int t = 0; t < 200; ++t) {
    const auto &a = all[rng() % 24], &b = all[rng() % 24], &c = all[rng() % 24];
    CHECK(compose(compose(a, b), c) == compose(a, compose(b, c)));
  }
}

TEST_CASE("inverses compose to the identity") {
  for (const auto& c : all_single_qubit_cliffords()) {
    CHECK(compose(c, inverse(c)).is_identity());
    CHECK(compose(inverse(c), c).is_identity());
  }
}

TEST_CASE("element orders take the values 1,2,3,4 with the right multiplicities") {
  std::map<int, int> counts;
  for (const auto& c : all_single_qubit_cliffords()) ++counts[clifford_order(c)];
  CHECK(counts[1] == 1);
  CHECK(counts[2] == 9);
  CHECK(counts[3] == 8);
  CHECK(counts[4] == 6);

  CHECK(clifford_order(SingleQubitClifford{}) == 1);
  CHECK(clifford_order(clifford_from_class_and_pauli(1, Pauli::I)) == 4);  /* exp(i*pi/4*Z) */
  auto ry = clifford_from_class_and_pauli(2, Pauli::I);
  auto rx = clifford_from_class_and_pauli(3, Pauli::I);
  CHECK(clifford_order(compose(ry, rx)) == 3);  /* circuit exp(i*pi/4*X) then exp(i*pi/4*Y) */
}

TEST_CASE("the six symplectic classes match the binary table") {
  CHECK(table1_map(SingleQubitClifford{}) == BitMatrix::from_rows({{1, 0}, {0, 1}}));
  CHECK(table1_map(clifford_from_class_and_pauli(1, Pauli::I)) ==
        BitMatrix::from_rows({{1, 1}, {0, 1}}));
  CHECK(table1_map(clifford_from_class_and_pauli(4, Pauli::I)) ==
        BitMatrix::from_rows({{0, 1}, {1, 1}}));
  CHECK(table1_map(clifford_from_class_and_pauli(5, Pauli::I)) ==
        BitMatrix::from_rows({{1, 1}, {1, 0}}));

  for (int idx = 0; idx < 6; ++idx) {
    const auto& entry = table1_inverse(table1_map(clifford_from_class_and_pauli(idx, Pauli::I)));
    CHECK(entry.class_index == idx);
    auto back = clifford_from_unitary(entry.unitary, 1e-10);
    REQUIRE(back.has_value());
    CHECK(*back == entry.representative);
  }
  CHECK_THROWS_AS(table1_inverse(BitMatrix::from_rows({{1, 1}, {1, 1}})), std::invalid_argument);
  CHECK_THROWS_AS(table1_inverse(BitMatrix::from_rows({{0, 0}, {0, 1}})), std::invalid_argument);
}

TEST_CASE("conjugating Pauli strings through factor tuples matches the dense oracle") {
  std::mt19937 rng(11);
  const auto& all = all_single_qubit_cliffords();
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t n = 1 + rng() % 3;
    std::vector<SingleQubitClifford> tuple;
    std::vector<testsup::Mat> mats;
    for (std::size_t j = 0; j < n; ++j) {
      tuple.push_back(all[rng() % 24]);
      mats.push_back(clifford_unitary(tuple.back()));
    }
    PauliString p(n);
    p.phase_exp = uint8_t(2 * (rng() % 2));
    for (std::size_t j = 0; j < n; ++j) p.set_letter(j, static_cast<Pauli>(rng() % 4));

    PauliString image = conjugate(tuple, p);
    testsup::Mat u = testsup::kron_all(mats);
    testsup::Mat got = u * testsup::realize(p) * u.adjoint();
    CHECK(testsup::approx_equal(got, testsup::realize(image), 1e-10));
  }
}

TEST_CASE("exact Cliffords print as canonical local factors") {
  CHECK(SingleQubitClifford{}.to_string() == "1");
  CHECK(conjugation_by(Pauli::X).to_string() == "X");
  CHECK(clifford_from_class_and_pauli(1, Pauli::I).to_string() == "exp(i*1/4*pi*Z)");
  CHECK(clifford_from_class_and_pauli(5, Pauli::I).to_string() == "C3[XY]");
  CHECK(clifford_from_class_and_pauli(4, Pauli::Z).to_string() == "Z*C3[ZY]");

  Eigen::Matrix2cd h;
  h << 1, 1, 1, -1;
  h /= std::sqrt(2.0);
  auto ch = clifford_from_unitary(h, 1e-10);
  REQUIRE(ch.has_value());
  CHECK(ch->to_string() == "Z*exp(i*1/4*pi*Y)");

  for (const auto& c : all_single_qubit_cliffords()) {
    LocalFactor f = clifford_to_factor(c);
    CHECK(proportional_distance(f.realize(), clifford_unitary(c)) < 1e-12);
  }
}

TEST_CASE("pauli_exp_factor normalizes half-pi multiples away") {
  CHECK(pauli_exp_factor(Pauli::I, Pauli::Z, FactorAngle::make_dyadic(DyadicAngle(1, 1))) ==
        pauli_factor(Pauli::Z));
  CHECK(pauli_exp_factor(Pauli::X, Pauli::X, FactorAngle::make_dyadic(DyadicAngle(1, 1))) ==
        identity_factor());
  CHECK(pauli_exp_factor(Pauli::X, Pauli::Y, FactorAngle::make_dyadic(DyadicAngle(1, 0))) ==
        pauli_factor(Pauli::X));
  CHECK(pauli_exp_factor(Pauli::I, Pauli::Z, FactorAngle::make_real(pi)) == identity_factor());

  /* 5/4*pi reduces mod pi to 1/4*pi (sign only); 3/4*pi folds, absorbing the
   * axis letter into sigma1. */
  LocalFactor f = pauli_exp_factor(Pauli::I, Pauli::Z, FactorAngle::make_dyadic(DyadicAngle(5, 2)));
  CHECK(f == pauli_exp_factor(Pauli::I, Pauli::Z, FactorAngle::make_dyadic(DyadicAngle(1, 2))));
  f = pauli_exp_factor(Pauli::I, Pauli::Z, FactorAngle::make_dyadic(DyadicAngle(3, 2)));
  CHECK(f.kind == LocalFactor::Kind::PauliExp);
  CHECK(f.sigma1 == Pauli::Z);
  CHECK(f.angle == FactorAngle::make_dyadic(DyadicAngle(1, 2)));

  LocalFactor free = pauli_exp_factor(Pauli::I, Pauli::X, FactorAngle::make_free(1));
  CHECK(free.to_string() == "exp(i*a*X)");
  CHECK(pauli_exp_factor(Pauli::I, Pauli::Z, FactorAngle::make_free(-1)).to_string() ==
        "exp(-i*a*Z)");
  CHECK(free.realize(0.37).isApprox(exp_pauli(Pauli::X, 0.37), 1e-12));
}

TEST_CASE("factor serialization matches the documented shapes") {
  LocalFactor f = pauli_exp_factor(Pauli::Z, Pauli::Y, FactorAngle::make_dyadic(DyadicAngle(1, 3)));
  CHECK(f.to_string() == "Z*exp(i*1/8*pi*Y)");
  CHECK(proportional_distance(f.realize(),
                              pauli_matrix_2x2(Pauli::Z) * exp_pauli(Pauli::Y, pi / 8)) < 1e-12);
}

TEST_CASE("classify_factor recovers every admissible form") {
  auto ry = clifford_from_class_and_pauli(2, Pauli::I);
  auto rx = clifford_from_class_and_pauli(3, Pauli::I);
  Eigen::Matrix2cd u = clifford_unitary(ry) * clifford_unitary(rx);
  auto f = classify_factor(u);
  REQUIRE(f.has_value());
  CHECK(f->kind == LocalFactor::Kind::CliffordOrder3);
  CHECK(f->to_string() == "C3[XY]");

  f = classify_factor(exp_pauli(Pauli::X, pi / 8));
  REQUIRE(f.has_value());
  CHECK(*f == pauli_exp_factor(Pauli::I, Pauli::X, FactorAngle::make_dyadic(DyadicAngle(1, 3))));

  f = classify_factor(pauli_matrix_2x2(Pauli::Z) * exp_pauli(Pauli::Y, pi / 3));
  REQUIRE(f.has_value());
  CHECK(f->kind == LocalFactor::Kind::PauliExp);
  CHECK(f->sigma1 == Pauli::Z);
  CHECK(f->sigma2 == Pauli::Y);
  CHECK(f->angle.kind == FactorAngle::Kind::Real);
  CHECK(f->angle.real == doctest::Approx(pi / 3).epsilon(1e-12));

  CHECK(classify_factor(exp_pauli(Pauli::X, pi / 5) * exp_pauli(Pauli::Z, pi / 7)) == std::nullopt);
  CHECK(classify_factor(pauli_matrix_2x2(Pauli::X)) == pauli_factor(Pauli::X));
  CHECK(classify_factor(Eigen::Matrix2cd::Identity()) == identity_factor());
  CHECK_THROWS_AS(classify_factor(2.0 * Eigen::Matrix2cd::Identity()), std::invalid_argument);

  /* Folding: exp(i*7/8*pi*Z) = Z * exp(i*3/8*pi*Z) up to phase. */
  f = classify_factor(exp_pauli(Pauli::Z, 7 * pi / 8));
  REQUIRE(f.has_value());
  CHECK(*f == pauli_exp_factor(Pauli::Z, Pauli::Z, FactorAngle::make_dyadic(DyadicAngle(3, 3))));
  CHECK(proportional_distance(f->realize(), exp_pauli(Pauli::Z, 7 * pi / 8)) < 1e-10);

  /* Snapping respects the k bound. */
  double tiny = pi / double(1 << 26);
  f = classify_factor(exp_pauli(Pauli::Y, tiny), 1e-9, 24);
  REQUIRE(f.has_value());
  CHECK(f->angle.kind == FactorAngle::Kind::Real);
  f = classify_factor(exp_pauli(Pauli::Y, tiny), 1e-9, 26);
  REQUIRE(f.has_value());
  CHECK(f->angle == FactorAngle::make_dyadic(DyadicAngle(1, 26)));
}

TEST_CASE("classified factors rebuild to the input up to global phase") {
  std::mt19937 rng(19);
  std::uniform_real_distribution<double> ang(0.0, 2 * pi);
  for (int trial = 0; trial < 300; ++trial) {
    Pauli s1 = static_cast<Pauli>(rng() % 4);
    Pauli s2 = static_cast<Pauli>(1 + rng() % 3);
    double alpha = ang(rng);
    Eigen::Matrix2cd u = pauli_matrix_2x2(s1) * exp_pauli(s2, alpha);
    auto f = classify_factor(u);
    REQUIRE(f.has_value());
    /* Dyadic snapping may move the angle by up to 1e-8. */
    CHECK(proportional_distance(f->realize(), u) < 5e-8);
  }
}

TEST_CASE("semi-Clifford decomposition round trips") {
  auto d = semi_clifford_decompose(exp_pauli(Pauli::Z, pi / 8));
  REQUIRE(d.has_value());
  CHECK(d->c.is_identity());
  CHECK(d->axis == Pauli::Z);
  CHECK(d->alpha == doctest::Approx(pi / 8).epsilon(1e-12));

  Eigen::Matrix2cd h;
  h << 1, 1, 1, -1;
  h /= std::sqrt(2.0);
  d = semi_clifford_decompose(h);
  REQUIRE(d.has_value());
  CHECK(d->alpha == 0.0);
  CHECK(proportional_distance(clifford_unitary(d->c), h) < 1e-10);

  CHECK(semi_clifford_decompose(exp_pauli(Pauli::X, pi / 5) * exp_pauli(Pauli::Z, pi / 7)) ==
        std::nullopt);
  CHECK_THROWS_AS(semi_clifford_decompose(2.0 * Eigen::Matrix2cd::Identity()),
                  std::invalid_argument);

  std::mt19937 rng(23);
  std::uniform_real_distribution<double> ang(-1.5, 1.5);
  const auto& all = all_single_qubit_cliffords();
  for (int trial = 0; trial < 1000; ++trial) {
    const auto& c = all[rng() % 24];
    Pauli axis = static_cast<Pauli>(1 + rng() % 3);
    double alpha = (trial % 7 == 0) ? 0.0 : ang(rng);
    Eigen::Matrix2cd u = clifford_unitary(c) * exp_pauli(axis, alpha);
    auto dec = semi_clifford_decompose(u);
    REQUIRE(dec.has_value());
    Eigen::Matrix2cd rebuilt = clifford_unitary(dec->c) * exp_pauli(dec->axis, dec->alpha);
    CHECK(proportional_distance(rebuilt, u) < 1e-9);
  }
}

TEST_CASE("exp_pauli handles complex angles") {
  std::complex<double> a{0.3, 0.7};
  Eigen::Matrix2cd m = exp_pauli(Pauli::X, a);
  Eigen::Matrix2cd expct;
  expct << std::cos(a), std::complex<double>(0, 1) * std::sin(a),
      std::complex<double>(0, 1) * std::sin(a), std::cos(a);
  CHECK(testsup::approx_equal(m, expct, 1e-12));
}
