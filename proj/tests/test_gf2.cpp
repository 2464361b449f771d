#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "stabsym/gf2.hpp"

using namespace stabsym;

namespace {

/* Independent oracle: naive triple-loop product over bools. */
BitMatrix naive_mul(const BitMatrix& a, const BitMatrix& b) {
  BitMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      bool acc = false;
      for (std::size_t k = 0; k < a.cols(); ++k) acc ^= a.get(i, k) && b.get(k, j);
      out.set(i, j, acc);
    }
  return out;
}

BitMatrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c, double density = 0.5) {
  BitMatrix m(r, c);
  std::bernoulli_distribution bit(density);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      if (bit(rng)) m.set(i, j, true);
  return m;
}

}  // namespace

TEST_CASE("path graph adjacency squared matches the hand-multiplication oracle") {
  BitMatrix theta = BitMatrix::from_rows({{0, 1, 0}, {1, 0, 1}, {0, 1, 0}});
  BitMatrix sq = mat_mul(theta, theta);
  CHECK(sq == naive_mul(theta, theta));
  CHECK(sq == BitMatrix::from_rows({{1, 0, 1}, {0, 0, 0}, {1, 0, 1}}));
  CHECK(sq.get(0, 0));
  CHECK_FALSE(sq.get(1, 1));
  CHECK(sq.get(2, 2));
}

TEST_CASE("identity is neutral for mat_mul") {
  std::mt19937 rng(7);
  BitMatrix m = random_matrix(rng, 9, 9);
  CHECK(mat_mul(BitMatrix::identity(9), m) == m);
  CHECK(mat_mul(m, BitMatrix::identity(9)) == m);
}

TEST_CASE("mat_mul agrees with the naive oracle across word boundaries") {
  std::mt19937 rng(12345);
  for (auto [r, k, c] : {std::array<std::size_t, 3>{5, 7, 3},
                         {64, 64, 64},
                         {65, 70, 130},
                         {1, 100, 1}}) {
    BitMatrix a = random_matrix(rng, r, k);
    BitMatrix b = random_matrix(rng, k, c);
    CHECK(mat_mul(a, b) == naive_mul(a, b));
  }
}

TEST_CASE("mat_mul is associative") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 10; ++trial) {
    BitMatrix a = random_matrix(rng, 6, 8);
    BitMatrix b = random_matrix(rng, 8, 5);
    BitMatrix c = random_matrix(rng, 5, 9);
    CHECK(mat_mul(mat_mul(a, b), c) == mat_mul(a, mat_mul(b, c)));
  }
}

TEST_CASE("rref is idempotent and rank matches transpose rank") {
  std::mt19937 rng(4242);
  for (int trial = 0; trial < 25; ++trial) {
    BitMatrix m = random_matrix(rng, 10, 13, 0.3);
    BitMatrix r = rref(m);
    CHECK(rref(r) == r);
    CHECK(rank(m) == rank(m.transposed()));
  }
}

TEST_CASE("kernel_basis spans exactly the null space") {
  BitMatrix m = BitMatrix::from_rows({{1, 1}, {0, 0}});
  auto basis = kernel_basis(m);
  REQUIRE(basis.size() == 1);
  CHECK(basis[0] == BitVector::from_bits({1, 1}));

  std::mt19937 rng(31337);
  for (int trial = 0; trial < 25; ++trial) {
    BitMatrix a = random_matrix(rng, 9, 14, 0.4);
    auto ker = kernel_basis(a);
    CHECK(ker.size() == a.cols() - rank(a));
    for (const auto& v : ker) CHECK_FALSE(a.mul(v).any());
    /* Basis vectors are independent. */
    BitMatrix kb(ker.size(), a.cols());
    for (std::size_t i = 0; i < ker.size(); ++i) kb.set_row(i, ker[i]);
    CHECK(rank(kb) == ker.size());
  }
}

TEST_CASE("solve_affine returns exactly the solution set") {
  std::mt19937 rng(2024);
  int solvable_seen = 0, unsolvable_seen = 0;
  for (int trial = 0; trial < 60; ++trial) {
    BitMatrix a = random_matrix(rng, 8, 10, 0.35);
    BitVector b(8);
    for (std::size_t i = 0; i < 8; ++i) b.set(i, rng() & 1);
    auto sol = solve_affine(a, b);

    /* Oracle: exhaustive scan over all 2^10 candidates. */
    std::vector<BitVector> expected;
    for (unsigned mask = 0; mask < (1u << 10); ++mask) {
      BitVector x(10);
      for (std::size_t j = 0; j < 10; ++j) x.set(j, (mask >> j) & 1);
      if (a.mul(x) == b) expected.push_back(x);
    }

    if (expected.empty()) {
      CHECK_FALSE(sol.solvable);
      ++unsolvable_seen;
    } else {
      REQUIRE(sol.solvable);
      ++solvable_seen;
      CHECK(a.mul(sol.particular) == b);
      auto all = sol.enumerate();
      CHECK(all.size() == expected.size());
      std::sort(all.begin(), all.end());
      std::sort(expected.begin(), expected.end());
      CHECK(all == expected);
      for (const auto& x : expected) CHECK(sol.contains(x));
    }
  }
  CHECK(solvable_seen > 0);
  CHECK(unsolvable_seen > 0);
}

TEST_CASE("BitVector dot and ordering behave over word boundaries") {
  BitVector a(130), b(130);
  a.set(0, true);
  a.set(64, true);
  a.set(129, true);
  b.set(64, true);
  b.set(129, true);
  CHECK_FALSE(a.dot(b));  /* two shared bits */
  b.set(0, true);
  CHECK(a.dot(b));
  CHECK(a.popcount() == 3);
  BitVector c = a ^ b;
  CHECK_FALSE(c.any());
  b.flip(100);
  CHECK(a < b);  /* first difference at bit 100, where a is 0 */
}
