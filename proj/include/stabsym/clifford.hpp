#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "stabsym/gf2.hpp"
#include "stabsym/pauli.hpp"

namespace stabsym {

/* Angle m*pi/2^k, stored exactly.  Canonical: m odd or (m=0,k=0), and
 * 0 <= m < 2^{k+1} (value reduced mod 2*pi). */
struct DyadicAngle {
  long long m = 0;
  int k = 0;

  DyadicAngle() = default;
  DyadicAngle(long long m_, int k_);

  double value() const;
  DyadicAngle times_two() const;
  bool is_zero() const { return m == 0; }
  /* Multiple of pi/2, i.e. the factor exp(i*angle*sigma) is a Pauli (or 1) up to phase. */
  bool is_half_pi_multiple() const { return k <= 1; }
  std::string to_string() const;  /* "0", "3*pi", "1/8*pi" */

  bool operator==(const DyadicAngle&) const = default;
  auto operator<=>(const DyadicAngle&) const = default;
};

/* One of the 24 single-qubit Cliffords up to global phase, stored as the exact
 * conjugation action: U X U^dag = (-1)^{neg_x} img_x, U Z U^dag = (-1)^{neg_z} img_z. */
struct SingleQubitClifford {
  Pauli img_x = Pauli::X;
  bool neg_x = false;
  Pauli img_z = Pauli::Z;
  bool neg_z = false;

  bool operator==(const SingleQubitClifford&) const = default;

  /* Signed image of a letter (I,X,Y,Z) under conjugation. */
  std::pair<Pauli, bool> image(Pauli letter, bool neg = false) const;

  bool is_identity() const { return *this == SingleQubitClifford{}; }

  /* 2x2 binary symplectic action on b(sigma) = (z; x):  b(U sigma U^dag) = M b(sigma). */
  BitMatrix symplectic_class() const;
  int class_index() const;  /* 0..5, Table order: 1, Rz, Ry, Rx, Ry*Rz, Ry*Rx */
  Pauli pauli_part() const; /* p with U ∝ p * representative(class) */
  int index() const { return class_index() * 4 + static_cast<int>(pauli_part()); }

  std::string to_string() const;
};

bool operator<(const SingleQubitClifford& a, const SingleQubitClifford& b);

/* Action of U_a * U_b (b applied to the state first). */
SingleQubitClifford compose(const SingleQubitClifford& a, const SingleQubitClifford& b);
SingleQubitClifford inverse(const SingleQubitClifford& c);
SingleQubitClifford conjugation_by(Pauli p);
int clifford_order(const SingleQubitClifford& c);  /* smallest k with c^k = 1 up to phase */

/* All 24 elements in canonical order (class-major, Pauli part 1,X,Y,Z). */
const std::vector<SingleQubitClifford>& all_single_qubit_cliffords();

SingleQubitClifford clifford_from_class_and_pauli(int class_index, Pauli pauli_part);

/* A concrete unitary realizing the action: pauli_part * representative(class). */
Eigen::Matrix2cd clifford_unitary(const SingleQubitClifford& c);

/* exp(i*alpha*sigma) = cos(alpha) + i sin(alpha) sigma; alpha may be complex. */
Eigen::Matrix2cd exp_pauli(Pauli axis, std::complex<double> alpha);
Eigen::Matrix2cd pauli_matrix_2x2(Pauli p);

/* Table of the 6 symplectic classes. */
struct Table1Entry {
  int class_index;
  SingleQubitClifford representative;
  Eigen::Matrix2cd unitary;
  std::string form;  /* e.g. "exp(i*1/4*pi*Z)*exp(i*1/4*pi*Y)" (circuit order) */
};

BitMatrix table1_map(const SingleQubitClifford& c);
const Table1Entry& table1_inverse(const BitMatrix& m);  /* throws on singular input */

/* Conjugate an n-qubit Pauli through per-qubit Clifford actions, exact sign. */
PauliString conjugate(const std::vector<SingleQubitClifford>& factors, const PauliString& p);

/* Local factor in one of the admissible single-qubit symmetry forms. */
struct FactorAngle {
  enum class Kind { Dyadic, Real, Complex, Free };
  Kind kind = Kind::Dyadic;
  DyadicAngle dyadic{};
  double real = 0.0;
  std::complex<double> cplx{};
  int free_sign = 1;  /* Free: angle = free_sign * a, a an unconstrained real parameter */

  static FactorAngle make_dyadic(DyadicAngle a);
  static FactorAngle make_real(double a);
  static FactorAngle make_complex(std::complex<double> a);
  static FactorAngle make_free(int sign = 1);

  double numeric() const;  /* real part value; Free -> 0 */
  std::string to_string() const;
  bool operator==(const FactorAngle&) const = default;
};

struct LocalFactor {
  enum class Kind { Identity, PauliOnly, PauliExp, CliffordOrder3 };
  Kind kind = Kind::Identity;
  Pauli sigma1 = Pauli::I;  /* PauliOnly: X,Y,Z; PauliExp: I,X,Y,Z */
  Pauli sigma2 = Pauli::I;  /* PauliExp axis: X,Y,Z */
  FactorAngle angle{};      /* PauliExp */
  SingleQubitClifford c3{}; /* CliffordOrder3 */

  bool operator==(const LocalFactor&) const = default;
  std::string to_string() const;
  /* Concrete matrix; a Free angle is evaluated at free_sign * alpha. */
  Eigen::Matrix2cd realize(double alpha = 0.0) const;
};

bool operator<(const LocalFactor& a, const LocalFactor& b);

/* Tensor product of per-qubit factors, up to global phase. */
struct LocalSymmetry {
  std::vector<LocalFactor> factors;

  std::size_t size() const { return factors.size(); }
  bool operator==(const LocalSymmetry&) const = default;
  std::string to_string() const;  /* factors joined with " (x) " */
  /* Per-qubit matrices; Free angles are evaluated at alpha. */
  std::vector<Eigen::Matrix2cd> realize(double alpha = 0.0) const;
};

bool operator<(const LocalSymmetry& a, const LocalSymmetry& b);

LocalFactor identity_factor();
LocalFactor pauli_factor(Pauli p);  /* p = I gives Identity */
/* sigma1 * exp(i*angle*sigma2), normalized: pi/2-multiple angles collapse to
 * PauliOnly/Identity, real/dyadic angles canonicalized into [0, pi/2). */
LocalFactor pauli_exp_factor(Pauli sigma1, Pauli sigma2, FactorAngle angle);
LocalFactor clifford_order3_factor(const SingleQubitClifford& c);
/* Exact factor form of a Clifford action (canonical across all 24 elements). */
LocalFactor clifford_to_factor(const SingleQubitClifford& c);

/* Exact Clifford action of a numeric unitary, if it is Clifford within tol. */
std::optional<SingleQubitClifford> clifford_from_unitary(const Eigen::Matrix2cd& u, double tol);

struct SemiCliffordDecomposition {
  SingleQubitClifford c;
  Pauli axis = Pauli::Z;
  double alpha = 0.0;
};

/* u ∝ C * exp(i*alpha*sigma); nullopt when u conjugates no Pauli into the Pauli group. */
std::optional<SemiCliffordDecomposition> semi_clifford_decompose(const Eigen::Matrix2cd& u,
                                                                 double tol = 1e-9);

/* Exact LocalFactor matching u up to global phase, or nullopt when u fits no
 * admissible form.  Angles snap to dyadic values with k <= snap_k_bound when
 * within 1e-8, else stay symbolic-real. */
std::optional<LocalFactor> classify_factor(const Eigen::Matrix2cd& u, double tol = 1e-9,
                                           int snap_k_bound = 24);

}  // namespace stabsym
