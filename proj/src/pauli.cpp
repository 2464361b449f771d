#include "stabsym/pauli.hpp"

#include <stdexcept>

namespace stabsym {

std::optional<Pauli> pauli_from_char(char c) {
  switch (c) {
    case '1': case 'I': return Pauli::I;
    case 'X': return Pauli::X;
    case 'Y': return Pauli::Y;
    case 'Z': return Pauli::Z;
    default: return std::nullopt;
  }
}

int pauli_product_phase(Pauli p, Pauli q) {
  /* [p][q] -> exponent of i; cyclic XY=iZ, YZ=iX, ZX=iY. */
  static constexpr int table[4][4] = {
      {0, 0, 0, 0},
      {0, 0, 1, 3},
      {0, 3, 0, 1},
      {0, 1, 3, 0},
  };
  return table[static_cast<int>(p)][static_cast<int>(q)];
}

PauliString PauliString::single(std::size_t n, std::size_t j, Pauli p, uint8_t phase_exp) {
  PauliString s(n);
  s.phase_exp = phase_exp & 3;
  s.set_letter(j, p);
  return s;
}

std::size_t PauliString::weight() const {
  std::size_t c = 0;
  for (std::size_t j = 0; j < n; ++j)
    if (x.get(j) || z.get(j)) ++c;
  return c;
}

BitVector PauliString::binary_rep() const {
  BitVector b(2 * n);
  for (std::size_t j = 0; j < n; ++j) {
    if (z.get(j)) b.set(j, true);
    if (x.get(j)) b.set(n + j, true);
  }
  return b;
}

PauliString PauliString::from_binary_rep(const BitVector& b, uint8_t phase_exp) {
  if (b.size() % 2 != 0) throw std::invalid_argument("binary rep must have even length");
  PauliString p(b.size() / 2);
  p.phase_exp = phase_exp & 3;
  for (std::size_t j = 0; j < p.n; ++j) {
    p.z.set(j, b.get(j));
    p.x.set(j, b.get(p.n + j));
  }
  return p;
}

bool PauliString::commutes(const PauliString& o) const {
  if (n != o.n) throw std::invalid_argument("qubit count mismatch");
  return !(x.dot(o.z) ^ z.dot(o.x));
}

bool PauliString::operator<(const PauliString& o) const {
  if (n != o.n) return n < o.n;
  if (z != o.z) return z < o.z;
  if (x != o.x) return x < o.x;
  return phase_exp < o.phase_exp;
}

std::string PauliString::to_string() const {
  static constexpr const char* prefix[4] = {"+", "+i", "-", "-i"};
  std::string s = prefix[phase_exp & 3];
  for (std::size_t j = 0; j < n; ++j) s += pauli_char(letter(j));
  return s;
}

std::optional<PauliString> PauliString::parse(std::string_view s) {
  uint8_t phase = 0;
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
    if (s[i] == '-') phase = 2;
    ++i;
  }
  if (i < s.size() && s[i] == 'i') {
    phase = (phase + 1) & 3;
    ++i;
  }
  PauliString p(s.size() - i);
  p.phase_exp = phase;
  for (std::size_t j = 0; i < s.size(); ++i, ++j) {
    auto letter = pauli_from_char(s[i]);
    if (!letter) return std::nullopt;
    p.set_letter(j, *letter);
  }
  return p;
}

PauliString multiply(const PauliString& a, const PauliString& b) {
  if (a.n != b.n) throw std::invalid_argument("qubit count mismatch");
  PauliString out(a.n);
  int phase = a.phase_exp + b.phase_exp;
  for (std::size_t j = 0; j < a.n; ++j) phase += pauli_product_phase(a.letter(j), b.letter(j));
  out.phase_exp = static_cast<uint8_t>(phase & 3);
  out.x = a.x ^ b.x;
  out.z = a.z ^ b.z;
  return out;
}

std::vector<PauliString> canonical_generators(const BitMatrix& theta) {
  if (theta.rows() != theta.cols()) throw std::invalid_argument("adjacency must be square");
  const std::size_t n = theta.rows();
  std::vector<PauliString> gens;
  gens.reserve(n);
  for (std::size_t j = 0; j < n; ++j) {
    PauliString g(n);
    g.x.set(j, true);
    for (std::size_t k = 0; k < n; ++k)
      if (theta.get(j, k)) g.z.set(k, true);
    if (g.z.get(j)) throw std::invalid_argument("adjacency must have zero diagonal");
    gens.push_back(std::move(g));
  }
  return gens;
}

StabilizerGroup::StabilizerGroup(std::vector<PauliString> generators)
    : gens_(std::move(generators)) {
  if (gens_.empty()) throw std::invalid_argument("empty generator list");
  n_ = gens_[0].n;
  rep_ = BitMatrix(2 * n_, gens_.size());
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (gens_[i].n != n_) throw std::invalid_argument("qubit count mismatch");
    BitVector b = gens_[i].binary_rep();
    for (std::size_t r = 0; r < 2 * n_; ++r)
      if (b.get(r)) rep_.set(r, i, true);
  }
  if (rank(rep_) != gens_.size())
    throw std::invalid_argument("generators must be content-independent");
}

PauliString StabilizerGroup::product(const BitVector& exponents) const {
  PauliString acc(n_);
  for (std::size_t i = 0; i < gens_.size(); ++i)
    if (exponents.get(i)) acc = multiply(acc, gens_[i]);
  return acc;
}

std::optional<MemberWitness> StabilizerGroup::member(const PauliString& p) const {
  if (p.n != n_) throw std::invalid_argument("qubit count mismatch");
  auto sol = solve_affine(rep_, p.binary_rep());
  if (!sol.solvable) return std::nullopt;
  PauliString prod = product(sol.particular);
  MemberWitness w;
  w.exponents = sol.particular;
  w.lambda_exp = static_cast<uint8_t>((prod.phase_exp - p.phase_exp + 4) & 3);
  return w;
}

bool StabilizerGroup::contains(const PauliString& p) const {
  auto w = member(p);
  return w && w->lambda_exp == 0;
}

std::vector<PauliString> StabilizerGroup::elements() const {
  if (gens_.size() > 24) throw std::length_error("group too large to enumerate");
  std::vector<PauliString> out;
  out.reserve(std::size_t{1} << gens_.size());
  BitVector e(gens_.size());
  for (std::size_t mask = 0; mask < (std::size_t{1} << gens_.size()); ++mask) {
    for (std::size_t b = 0; b < gens_.size(); ++b) e.set(b, (mask >> b) & 1);
    out.push_back(product(e));
  }
  return out;
}

}  // namespace stabsym
