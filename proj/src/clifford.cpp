#include "stabsym/clifford.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace stabsym {

namespace {

constexpr double kPi = std::numbers::pi;
using Mat2 = Eigen::Matrix2cd;
const std::complex<double> kI{0.0, 1.0};

Pauli letter_product(Pauli a, Pauli b) {
  return pauli_from_bits(x_bit(a) != x_bit(b), z_bit(a) != z_bit(b));
}

/* Pauli-basis coefficients of a 2x2 matrix: m = c0*1 + cx*X + cy*Y + cz*Z. */
struct PauliCoeffs {
  std::complex<double> c[4];
};

PauliCoeffs pauli_decompose(const Mat2& m) {
  PauliCoeffs out;
  out.c[0] = (m(0, 0) + m(1, 1)) / 2.0;
  out.c[1] = (m(0, 1) + m(1, 0)) / 2.0;
  out.c[2] = (m(0, 1) - m(1, 0)) / 2.0 * kI;
  out.c[3] = (m(0, 0) - m(1, 1)) / 2.0;
  return out;
}

bool is_unitary(const Mat2& u, double tol) {
  Mat2 err = u * u.adjoint() - Mat2::Identity();
  return err.cwiseAbs().maxCoeff() <= std::max(tol, 1e-12);
}

bool proportional_within(const Mat2& a, const Mat2& b, double tol) {
  Eigen::Index i, j;
  double scale = b.cwiseAbs().maxCoeff(&i, &j);
  if (scale < 1e-12) return a.cwiseAbs().maxCoeff() < tol;
  std::complex<double> lambda = a(i, j) / b(i, j);
  Mat2 err = a - lambda * b;
  return err.cwiseAbs().maxCoeff() <= std::max(tol, 1e-12);
}

/* Signed single-letter content of a 2x2 matrix, if it is one within tol. */
std::optional<std::pair<Pauli, bool>> signed_letter(const Mat2& m, double tol) {
  PauliCoeffs pc = pauli_decompose(m);
  int found = -1;
  for (int p = 1; p < 4; ++p) {
    if (std::abs(pc.c[p]) > 0.5) {
      if (found >= 0) return std::nullopt;
      found = p;
    }
  }
  if (found < 0) return std::nullopt;
  for (int p = 0; p < 4; ++p) {
    if (p == found) continue;
    if (std::abs(pc.c[p]) > tol) return std::nullopt;
  }
  std::complex<double> c = pc.c[found];
  if (std::abs(c.imag()) > tol) return std::nullopt;
  bool neg = c.real() < 0;
  if (std::abs(std::abs(c.real()) - 1.0) > tol) return std::nullopt;
  return std::make_pair(static_cast<Pauli>(found), neg);
}

struct ClassTables {
  SingleQubitClifford rep[6];
  Mat2 rep_unitary[6];
  std::string form[6];
  int encode_to_index[16];  /* 4-bit symplectic matrix -> class index, -1 if singular */
};

int encode_class(const BitMatrix& m) {
  return (m.get(0, 0) << 3) | (m.get(0, 1) << 2) | (m.get(1, 0) << 1) | int(m.get(1, 1));
}

const ClassTables& class_tables() {
  static const ClassTables t = [] {
    ClassTables t;
    t.rep[0] = {Pauli::X, false, Pauli::Z, false};
    t.rep[1] = {Pauli::Y, true, Pauli::Z, false};
    t.rep[2] = {Pauli::Z, false, Pauli::X, true};
    t.rep[3] = {Pauli::X, false, Pauli::Y, false};
    t.rep[4] = {Pauli::Y, true, Pauli::X, true};
    t.rep[5] = {Pauli::Z, false, Pauli::Y, false};
    t.rep_unitary[0] = Mat2::Identity();
    t.rep_unitary[1] = exp_pauli(Pauli::Z, kPi / 4);
    t.rep_unitary[2] = exp_pauli(Pauli::Y, kPi / 4);
    t.rep_unitary[3] = exp_pauli(Pauli::X, kPi / 4);
    t.rep_unitary[4] = t.rep_unitary[2] * t.rep_unitary[1];
    t.rep_unitary[5] = t.rep_unitary[2] * t.rep_unitary[3];
    t.form[0] = "1";
    t.form[1] = "exp(i*1/4*pi*Z)";
    t.form[2] = "exp(i*1/4*pi*Y)";
    t.form[3] = "exp(i*1/4*pi*X)";
    t.form[4] = "exp(i*1/4*pi*Z)*exp(i*1/4*pi*Y)";
    t.form[5] = "exp(i*1/4*pi*X)*exp(i*1/4*pi*Y)";
    for (int e = 0; e < 16; ++e) t.encode_to_index[e] = -1;
    for (int idx = 0; idx < 6; ++idx)
      t.encode_to_index[encode_class(t.rep[idx].symplectic_class())] = idx;
    return t;
  }();
  return t;
}

std::string format_double(double v) {
  std::ostringstream ss;
  ss.precision(17);
  ss << v;
  return ss.str();
}

}  // namespace

DyadicAngle::DyadicAngle(long long m_, int k_) : m(m_), k(k_) {
  if (k < 0) throw std::invalid_argument("DyadicAngle: negative k");
  while (m % 2 == 0 && k > 0 && m != 0) {
    m /= 2;
    --k;
  }
  if (m == 0) {
    k = 0;
    return;
  }
  long long period = 2LL << k;  /* 2^{k+1}: angle reduced mod 2*pi */
  m %= period;
  if (m < 0) m += period;
  if (m == 0) k = 0;
}

double DyadicAngle::value() const { return double(m) * kPi / double(1LL << k); }

DyadicAngle DyadicAngle::times_two() const {
  if (k == 0) return DyadicAngle(2 * m, 0);
  return DyadicAngle(m, k - 1);
}

std::string DyadicAngle::to_string() const {
  if (m == 0) return "0";
  std::ostringstream ss;
  if (k == 0) {
    if (m != 1) ss << m << "*";
    ss << "pi";
  } else {
    ss << m << "/" << (1LL << k) << "*pi";
  }
  return ss.str();
}

std::pair<Pauli, bool> SingleQubitClifford::image(Pauli letter, bool neg) const {
  switch (letter) {
    case Pauli::I:
      return {Pauli::I, neg};
    case Pauli::X:
      return {img_x, neg != neg_x};
    case Pauli::Z:
      return {img_z, neg != neg_z};
    case Pauli::Y: {
      /* Y = i X Z, so the image is i * (s_x img_x)(s_z img_z). */
      int ph = pauli_product_phase(img_x, img_z);
      bool extra = ((1 + ph) & 3) == 2;
      return {letter_product(img_x, img_z), neg != (neg_x != (neg_z != extra))};
    }
  }
  return {Pauli::I, neg};
}

BitMatrix SingleQubitClifford::symplectic_class() const {
  BitMatrix m(2, 2);
  /* columns: image of Z (first), image of X; rows: z-bit, x-bit */
  m.set(0, 0, z_bit(img_z));
  m.set(1, 0, x_bit(img_z));
  m.set(0, 1, z_bit(img_x));
  m.set(1, 1, x_bit(img_x));
  return m;
}

int SingleQubitClifford::class_index() const {
  int idx = class_tables().encode_to_index[encode_class(symplectic_class())];
  if (idx < 0) throw std::logic_error("invalid SingleQubitClifford");
  return idx;
}

Pauli SingleQubitClifford::pauli_part() const {
  const SingleQubitClifford& rep = class_tables().rep[class_index()];
  for (int p = 0; p < 4; ++p) {
    Pauli q = static_cast<Pauli>(p);
    if (compose(conjugation_by(q), rep) == *this) return q;
  }
  throw std::logic_error("invalid SingleQubitClifford");
}

std::string SingleQubitClifford::to_string() const { return clifford_to_factor(*this).to_string(); }

bool operator<(const SingleQubitClifford& a, const SingleQubitClifford& b) {
  return a.index() < b.index();
}

SingleQubitClifford compose(const SingleQubitClifford& a, const SingleQubitClifford& b) {
  auto [ix, nx] = a.image(b.img_x, b.neg_x);
  auto [iz, nz] = a.image(b.img_z, b.neg_z);
  return {ix, nx, iz, nz};
}

SingleQubitClifford inverse(const SingleQubitClifford& c) {
  SingleQubitClifford r;
  for (Pauli l : {Pauli::X, Pauli::Y, Pauli::Z}) {
    auto [img, neg] = c.image(l);
    if (img == Pauli::X) {
      r.img_x = l;
      r.neg_x = neg;
    } else if (img == Pauli::Z) {
      r.img_z = l;
      r.neg_z = neg;
    }
  }
  return r;
}

SingleQubitClifford conjugation_by(Pauli p) {
  return {Pauli::X, p == Pauli::Y || p == Pauli::Z, Pauli::Z, p == Pauli::X || p == Pauli::Y};
}

int clifford_order(const SingleQubitClifford& c) {
  SingleQubitClifford acc = c;
  for (int k = 1; k <= 4; ++k) {
    if (acc.is_identity()) return k;
    acc = compose(acc, c);
  }
  throw std::logic_error("single-qubit Clifford of order > 4");
}

const std::vector<SingleQubitClifford>& all_single_qubit_cliffords() {
  static const std::vector<SingleQubitClifford> all = [] {
    std::vector<SingleQubitClifford> v;
    for (int idx = 0; idx < 6; ++idx)
      for (int p = 0; p < 4; ++p) v.push_back(clifford_from_class_and_pauli(idx, static_cast<Pauli>(p)));
    return v;
  }();
  return all;
}

SingleQubitClifford clifford_from_class_and_pauli(int class_index, Pauli pauli_part) {
  if (class_index < 0 || class_index >= 6) throw std::invalid_argument("class index out of range");
  return compose(conjugation_by(pauli_part), class_tables().rep[class_index]);
}

Eigen::Matrix2cd clifford_unitary(const SingleQubitClifford& c) {
  return pauli_matrix_2x2(c.pauli_part()) * class_tables().rep_unitary[c.class_index()];
}

Eigen::Matrix2cd exp_pauli(Pauli axis, std::complex<double> alpha) {
  Mat2 m = std::cos(alpha) * Mat2::Identity() + kI * std::sin(alpha) * pauli_matrix_2x2(axis);
  return m;
}

Eigen::Matrix2cd pauli_matrix_2x2(Pauli p) {
  Mat2 m;
  switch (p) {
    case Pauli::I: m << 1, 0, 0, 1; break;
    case Pauli::X: m << 0, 1, 1, 0; break;
    case Pauli::Y: m << 0, -kI, kI, 0; break;
    case Pauli::Z: m << 1, 0, 0, -1; break;
  }
  return m;
}

BitMatrix table1_map(const SingleQubitClifford& c) { return c.symplectic_class(); }

const Table1Entry& table1_inverse(const BitMatrix& m) {
  if (m.rows() != 2 || m.cols() != 2) throw std::invalid_argument("table1_inverse: need 2x2");
  bool det = (m.get(0, 0) && m.get(1, 1)) != (m.get(0, 1) && m.get(1, 0));
  if (!det) throw std::invalid_argument("table1_inverse: singular matrix");
  static const std::vector<Table1Entry> entries = [] {
    std::vector<Table1Entry> v;
    const ClassTables& t = class_tables();
    for (int idx = 0; idx < 6; ++idx)
      v.push_back({idx, t.rep[idx], t.rep_unitary[idx], t.form[idx]});
    return v;
  }();
  return entries[class_tables().encode_to_index[encode_class(m)]];
}

PauliString conjugate(const std::vector<SingleQubitClifford>& factors, const PauliString& p) {
  if (factors.size() != p.n) throw std::invalid_argument("conjugate: size mismatch");
  PauliString out(p.n);
  int phase = p.phase_exp;
  for (std::size_t j = 0; j < p.n; ++j) {
    auto [img, neg] = factors[j].image(p.letter(j));
    out.set_letter(j, img);
    if (neg) phase += 2;
  }
  out.phase_exp = uint8_t(phase & 3);
  return out;
}

FactorAngle FactorAngle::make_dyadic(DyadicAngle a) {
  FactorAngle f;
  f.kind = Kind::Dyadic;
  f.dyadic = a;
  return f;
}

FactorAngle FactorAngle::make_real(double a) {
  FactorAngle f;
  f.kind = Kind::Real;
  f.real = a;
  return f;
}

FactorAngle FactorAngle::make_complex(std::complex<double> a) {
  FactorAngle f;
  f.kind = Kind::Complex;
  f.cplx = a;
  return f;
}

FactorAngle FactorAngle::make_free(int sign) {
  FactorAngle f;
  f.kind = Kind::Free;
  f.free_sign = sign >= 0 ? 1 : -1;
  return f;
}

double FactorAngle::numeric() const {
  switch (kind) {
    case Kind::Dyadic: return dyadic.value();
    case Kind::Real: return real;
    case Kind::Complex: return cplx.real();
    case Kind::Free: return 0.0;
  }
  return 0.0;
}

std::string FactorAngle::to_string() const {
  switch (kind) {
    case Kind::Dyadic: return dyadic.to_string();
    case Kind::Real: return format_double(real);
    case Kind::Complex: {
      std::ostringstream ss;
      ss << "(" << format_double(cplx.real()) << (cplx.imag() < 0 ? "-" : "+")
         << format_double(std::abs(cplx.imag())) << "i)";
      return ss.str();
    }
    case Kind::Free: return free_sign >= 0 ? "a" : "-a";
  }
  return "";
}

std::string LocalFactor::to_string() const {
  switch (kind) {
    case Kind::Identity: return "1";
    case Kind::PauliOnly: return std::string(1, pauli_char(sigma1));
    case Kind::PauliExp: {
      std::ostringstream ss;
      if (sigma1 != Pauli::I) ss << pauli_char(sigma1) << "*";
      if (angle.kind == FactorAngle::Kind::Free && angle.free_sign < 0)
        ss << "exp(-i*a*" << pauli_char(sigma2) << ")";
      else
        ss << "exp(i*" << angle.to_string() << "*" << pauli_char(sigma2) << ")";
      return ss.str();
    }
    case Kind::CliffordOrder3: {
      std::ostringstream ss;
      Pauli p = c3.pauli_part();
      if (p != Pauli::I) ss << pauli_char(p) << "*";
      ss << (c3.class_index() == 4 ? "C3[ZY]" : "C3[XY]");
      return ss.str();
    }
  }
  return "";
}

Eigen::Matrix2cd LocalFactor::realize(double alpha) const {
  switch (kind) {
    case Kind::Identity: return Mat2::Identity();
    case Kind::PauliOnly: return pauli_matrix_2x2(sigma1);
    case Kind::PauliExp: {
      std::complex<double> a;
      switch (angle.kind) {
        case FactorAngle::Kind::Dyadic: a = angle.dyadic.value(); break;
        case FactorAngle::Kind::Real: a = angle.real; break;
        case FactorAngle::Kind::Complex: a = angle.cplx; break;
        case FactorAngle::Kind::Free: a = angle.free_sign * alpha; break;
      }
      return pauli_matrix_2x2(sigma1) * exp_pauli(sigma2, a);
    }
    case Kind::CliffordOrder3: return clifford_unitary(c3);
  }
  return Mat2::Identity();
}

namespace {

auto factor_key(const LocalFactor& f) {
  return std::tuple(static_cast<int>(f.kind), static_cast<int>(f.sigma1),
                    static_cast<int>(f.sigma2), static_cast<int>(f.angle.kind), f.angle.dyadic.m,
                    f.angle.dyadic.k, f.angle.real, f.angle.cplx.real(), f.angle.cplx.imag(),
                    f.angle.free_sign, f.c3.index());
}

}  // namespace

bool operator<(const LocalFactor& a, const LocalFactor& b) { return factor_key(a) < factor_key(b); }

std::string LocalSymmetry::to_string() const {
  std::ostringstream ss;
  for (std::size_t j = 0; j < factors.size(); ++j) {
    if (j) ss << " (x) ";
    ss << factors[j].to_string();
  }
  return ss.str();
}

std::vector<Eigen::Matrix2cd> LocalSymmetry::realize(double alpha) const {
  std::vector<Eigen::Matrix2cd> out;
  out.reserve(factors.size());
  for (const auto& f : factors) out.push_back(f.realize(alpha));
  return out;
}

bool operator<(const LocalSymmetry& a, const LocalSymmetry& b) {
  return std::lexicographical_compare(a.factors.begin(), a.factors.end(), b.factors.begin(),
                                      b.factors.end());
}

LocalFactor identity_factor() { return LocalFactor{}; }

LocalFactor pauli_factor(Pauli p) {
  LocalFactor f;
  if (p == Pauli::I) return f;
  f.kind = LocalFactor::Kind::PauliOnly;
  f.sigma1 = p;
  return f;
}

LocalFactor pauli_exp_factor(Pauli sigma1, Pauli sigma2, FactorAngle angle) {
  if (sigma2 == Pauli::I) throw std::invalid_argument("pauli_exp_factor: axis must be X, Y or Z");
  auto finish = [&](FactorAngle a) {
    LocalFactor f;
    f.kind = LocalFactor::Kind::PauliExp;
    f.sigma1 = sigma1;
    f.sigma2 = sigma2;
    f.angle = a;
    return f;
  };
  auto fold_quarter = [&] { sigma1 = letter_product(sigma1, sigma2); };

  switch (angle.kind) {
    case FactorAngle::Kind::Free:
      return finish(angle);
    case FactorAngle::Kind::Dyadic: {
      DyadicAngle d = angle.dyadic;
      if (d.is_zero()) return pauli_factor(sigma1);
      if (d.k == 0) return pauli_factor(sigma1);                       /* exp(i*m*pi*s) ∝ 1 */
      if (d.k == 1) { fold_quarter(); return pauli_factor(sigma1); }   /* exp(i*m*pi/2*s) ∝ s */
      long long half = 1LL << d.k;       /* angle mod pi: period 2^k in m */
      long long m = d.m % half;
      long long quarter = half / 2;
      if (m >= quarter) {
        m -= quarter;
        fold_quarter();
      }
      return finish(FactorAngle::make_dyadic(DyadicAngle(m, d.k)));
    }
    case FactorAngle::Kind::Real: {
      double a = std::fmod(angle.real, kPi);
      if (a < 0) a += kPi;
      if (a >= kPi / 2) {
        a -= kPi / 2;
        fold_quarter();
      }
      if (std::abs(a) < 1e-12) return pauli_factor(sigma1);
      if (std::abs(a - kPi / 2) < 1e-12) { fold_quarter(); return pauli_factor(sigma1); }
      return finish(FactorAngle::make_real(a));
    }
    case FactorAngle::Kind::Complex: {
      std::complex<double> a = angle.cplx;
      if (std::abs(a.imag()) < 1e-15)
        return pauli_exp_factor(sigma1, sigma2, FactorAngle::make_real(a.real()));
      double re = std::fmod(a.real(), kPi);
      if (re < 0) re += kPi;
      if (re >= kPi / 2) {
        re -= kPi / 2;
        fold_quarter();
      }
      return finish(FactorAngle::make_complex({re, a.imag()}));
    }
  }
  return finish(angle);
}

LocalFactor clifford_order3_factor(const SingleQubitClifford& c) {
  if (clifford_order(c) != 3) throw std::invalid_argument("clifford_order3_factor: order != 3");
  LocalFactor f;
  f.kind = LocalFactor::Kind::CliffordOrder3;
  f.c3 = c;
  return f;
}

LocalFactor clifford_to_factor(const SingleQubitClifford& c) {
  int idx = c.class_index();
  if (idx == 0) return pauli_factor(c.pauli_part());
  if (idx >= 4) return clifford_order3_factor(c);
  Pauli axis = idx == 1 ? Pauli::Z : (idx == 2 ? Pauli::Y : Pauli::X);
  return pauli_exp_factor(c.pauli_part(), axis, FactorAngle::make_dyadic(DyadicAngle(1, 2)));
}

std::optional<SingleQubitClifford> clifford_from_unitary(const Eigen::Matrix2cd& u, double tol) {
  double t = std::max(tol, 1e-12);
  Mat2 ax = u * pauli_matrix_2x2(Pauli::X) * u.adjoint();
  Mat2 az = u * pauli_matrix_2x2(Pauli::Z) * u.adjoint();
  auto lx = signed_letter(ax, t);
  auto lz = signed_letter(az, t);
  if (!lx || !lz) return std::nullopt;
  if (lx->first == lz->first || lx->first == Pauli::I || lz->first == Pauli::I)
    return std::nullopt;
  return SingleQubitClifford{lx->first, lx->second, lz->first, lz->second};
}

std::optional<SemiCliffordDecomposition> semi_clifford_decompose(const Eigen::Matrix2cd& u,
                                                                 double tol) {
  if (!is_unitary(u, std::max(tol, 1e-9) * 10)) throw std::invalid_argument("non-unitary input");
  if (auto c = clifford_from_unitary(u, tol)) return SemiCliffordDecomposition{*c, Pauli::X, 0.0};
  for (Pauli a : {Pauli::X, Pauli::Y, Pauli::Z}) {
    Mat2 img = u * pauli_matrix_2x2(a) * u.adjoint();
    auto lb = signed_letter(img, std::max(tol, 1e-9));
    if (!lb) continue;
    for (const SingleQubitClifford& c0 : all_single_qubit_cliffords()) {
      if (c0.image(a) != std::make_pair(lb->first, lb->second)) continue;
      Mat2 w = clifford_unitary(c0).adjoint() * u;
      PauliCoeffs pc = pauli_decompose(w);
      double alpha;
      if (std::abs(pc.c[0]) < 1e-9) {
        alpha = kPi / 2;
      } else {
        std::complex<double> t = pc.c[static_cast<int>(a)] / pc.c[0] / kI;
        if (std::abs(t.imag()) > 1e-7) continue;
        alpha = std::atan(t.real());
      }
      Mat2 rebuilt = clifford_unitary(c0) * exp_pauli(a, alpha);
      if (proportional_within(u, rebuilt, std::max(tol, 1e-8)))
        return SemiCliffordDecomposition{c0, a, alpha};
    }
  }
  return std::nullopt;
}

std::optional<LocalFactor> classify_factor(const Eigen::Matrix2cd& u, double tol,
                                           int snap_k_bound) {
  if (!is_unitary(u, std::max(tol, 1e-9) * 10)) throw std::invalid_argument("non-unitary input");
  if (auto c = clifford_from_unitary(u, std::max(tol, 1e-9))) return clifford_to_factor(*c);

  for (Pauli axis : {Pauli::X, Pauli::Y, Pauli::Z}) {
    Mat2 img = u * pauli_matrix_2x2(axis) * u.adjoint();
    auto lb = signed_letter(img, std::max(tol, 1e-9));
    if (!lb || lb->first != axis) continue;
    /* u = sigma1 * exp(i*alpha*axis); the sign of the preserved axis pins down
     * whether sigma1 commutes with the axis. */
    for (int p = 0; p < 4; ++p) {
      Pauli sigma1 = static_cast<Pauli>(p);
      bool anti = sigma1 != Pauli::I && sigma1 != axis;
      if (anti != lb->second) continue;
      Mat2 w = pauli_matrix_2x2(sigma1) * u;  /* ∝ exp(i*alpha*axis) if sigma1 is right */
      PauliCoeffs pc = pauli_decompose(w);
      bool clean = true;
      for (int q = 1; q < 4; ++q)
        if (q != static_cast<int>(axis) && std::abs(pc.c[q]) > std::max(tol, 1e-8)) clean = false;
      if (!clean || std::abs(pc.c[0]) < 1e-9) continue;
      std::complex<double> t = pc.c[static_cast<int>(axis)] / pc.c[0] / kI;
      if (std::abs(t.imag()) > 1e-7) continue;
      double alpha = std::atan(t.real());
      if (alpha < 0) {
        alpha += kPi / 2;
        sigma1 = letter_product(sigma1, axis);
      }
      Mat2 rebuilt = pauli_matrix_2x2(sigma1) * exp_pauli(axis, alpha);
      if (!proportional_within(u, rebuilt, std::max(tol, 1e-8) * 10)) continue;

      FactorAngle fa = FactorAngle::make_real(alpha);
      for (int k = 0; k <= snap_k_bound; ++k) {
        long long m = std::llround(alpha * double(1LL << k) / kPi);
        if (std::abs(alpha - double(m) * kPi / double(1LL << k)) < 1e-8) {
          fa = FactorAngle::make_dyadic(DyadicAngle(m, k));
          break;
        }
      }
      return pauli_exp_factor(sigma1, axis, fa);
    }
  }
  return std::nullopt;
}

}  // namespace stabsym
