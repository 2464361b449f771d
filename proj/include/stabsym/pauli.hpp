#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "stabsym/gf2.hpp"

namespace stabsym {

enum class Pauli : uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

constexpr bool x_bit(Pauli p) { return p == Pauli::X || p == Pauli::Y; }
constexpr bool z_bit(Pauli p) { return p == Pauli::Z || p == Pauli::Y; }
constexpr Pauli pauli_from_bits(bool x, bool z) {
  return static_cast<Pauli>((x && z) ? 2 : (x ? 1 : (z ? 3 : 0)));
}
constexpr char pauli_char(Pauli p) { return "1XYZ"[static_cast<int>(p)]; }
std::optional<Pauli> pauli_from_char(char c);

/* Exponent of i in the letter product p*q (content is the XOR of bit pairs). */
int pauli_product_phase(Pauli p, Pauli q);

/*
 * n-qubit Pauli operator i^phase_exp * (P_0 x ... x P_{n-1}) with letters
 * encoded by per-qubit bits (x_j, z_j); Y has both bits set.
 */
struct PauliString {
  std::size_t n = 0;
  uint8_t phase_exp = 0;  /* mod 4 */
  BitVector x, z;

  PauliString() = default;
  explicit PauliString(std::size_t n_) : n(n_), x(n_), z(n_) {}
  static PauliString single(std::size_t n, std::size_t j, Pauli p, uint8_t phase_exp = 0);

  Pauli letter(std::size_t j) const { return pauli_from_bits(x.get(j), z.get(j)); }
  void set_letter(std::size_t j, Pauli p) {
    x.set(j, x_bit(p));
    z.set(j, z_bit(p));
  }
  bool is_identity_content() const { return !x.any() && !z.any(); }
  std::size_t weight() const;
  bool is_hermitian() const { return (phase_exp & 1) == 0; }

  /* 2n-bit column (z-part first, then x-part). */
  BitVector binary_rep() const;
  static PauliString from_binary_rep(const BitVector& b, uint8_t phase_exp = 0);

  bool commutes(const PauliString& o) const;
  bool operator==(const PauliString&) const = default;
  bool operator<(const PauliString& o) const;

  /* "+XZ1", "-iYY1", ... */
  std::string to_string() const;
  static std::optional<PauliString> parse(std::string_view s);
};

PauliString multiply(const PauliString& a, const PauliString& b);

/* Canonical graph-state generators: S_(j) = X_j prod_{k in N_j} Z_k. */
std::vector<PauliString> canonical_generators(const BitMatrix& theta);

/* lambda * p lies in the group, lambda = i^lambda_exp. */
struct MemberWitness {
  BitVector exponents;
  uint8_t lambda_exp = 0;
};

/*
 * Group generated by phase-carrying Pauli strings. Generators must be
 * content-independent (their binary reps have full column rank).
 */
class StabilizerGroup {
 public:
  explicit StabilizerGroup(std::vector<PauliString> generators);

  std::size_t num_qubits() const { return n_; }
  const std::vector<PauliString>& generators() const { return gens_; }

  /* Exact product prod_i gens[i]^{e_i} in index order. */
  PauliString product(const BitVector& exponents) const;
  /* Membership up to a phase: finds e and lambda with lambda*p = prod gens^e. */
  std::optional<MemberWitness> member(const PauliString& p) const;
  /* Exact membership (lambda = 1). */
  bool contains(const PauliString& p) const;
  /* All 2^k elements; throws above 2^24. */
  std::vector<PauliString> elements() const;

 private:
  std::size_t n_ = 0;
  std::vector<PauliString> gens_;
  BitMatrix rep_;  /* 2n x k, columns are generator binary reps */
};

}  // namespace stabsym
