#include "stabsym/gf2.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace stabsym {

BitVector BitVector::from_bits(std::initializer_list<int> bits) {
  return from_bits(std::vector<int>(bits));
}

BitVector BitVector::from_bits(const std::vector<int>& bits) {
  BitVector v(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) v.set(i, bits[i] & 1);
  return v;
}

BitVector& BitVector::operator^=(const BitVector& o) {
  if (n_ != o.n_) throw std::invalid_argument("BitVector size mismatch");
  for (std::size_t k = 0; k < w_.size(); ++k) w_[k] ^= o.w_[k];
  return *this;
}

bool BitVector::operator<(const BitVector& o) const {
  if (n_ != o.n_) return n_ < o.n_;
  for (std::size_t k = 0; k < w_.size(); ++k) {
    uint64_t diff = w_[k] ^ o.w_[k];
    if (diff) return !((w_[k] >> std::countr_zero(diff)) & 1);  /* bit-0-first lexicographic */
  }
  return false;
}

bool BitVector::any() const {
  for (uint64_t x : w_) if (x) return true;
  return false;
}

std::size_t BitVector::popcount() const {
  std::size_t c = 0;
  for (uint64_t x : w_) c += std::popcount(x);
  return c;
}

bool BitVector::dot(const BitVector& o) const {
  if (n_ != o.n_) throw std::invalid_argument("BitVector size mismatch");
  uint64_t acc = 0;
  for (std::size_t k = 0; k < w_.size(); ++k) acc ^= w_[k] & o.w_[k];
  return std::popcount(acc) & 1;
}

std::string BitVector::to_string() const {
  std::string s(n_, '0');
  for (std::size_t i = 0; i < n_; ++i) if (get(i)) s[i] = '1';
  return s;
}

BitMatrix BitMatrix::identity(std::size_t n) {
  BitMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
  return m;
}

BitMatrix BitMatrix::from_rows(std::initializer_list<std::initializer_list<int>> rows) {
  std::size_t r = rows.size();
  std::size_t c = r ? rows.begin()->size() : 0;
  BitMatrix m(r, c);
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != c) throw std::invalid_argument("ragged rows");
    std::size_t j = 0;
    for (int b : row) m.set(i, j++, b & 1);
    ++i;
  }
  return m;
}

BitVector BitMatrix::row(std::size_t i) const {
  BitVector v(c_);
  std::copy(row_words(i), row_words(i) + wpr_, v.words().begin());
  return v;
}

void BitMatrix::set_row(std::size_t i, const BitVector& v) {
  if (v.size() != c_) throw std::invalid_argument("row size mismatch");
  std::copy(v.words().begin(), v.words().end(), row_words(i));
}

void BitMatrix::xor_row_into(std::size_t src, std::size_t dst) {
  uint64_t* d = row_words(dst);
  const uint64_t* s = row_words(src);
  for (std::size_t k = 0; k < wpr_; ++k) d[k] ^= s[k];
}

void BitMatrix::swap_rows(std::size_t i, std::size_t j) {
  if (i == j) return;
  std::swap_ranges(row_words(i), row_words(i) + wpr_, row_words(j));
}

bool BitMatrix::operator<(const BitMatrix& o) const {
  if (r_ != o.r_) return r_ < o.r_;
  if (c_ != o.c_) return c_ < o.c_;
  return w_ < o.w_;
}

bool BitMatrix::is_zero() const {
  for (uint64_t x : w_) if (x) return false;
  return true;
}

bool BitMatrix::is_symmetric() const {
  if (r_ != c_) return false;
  for (std::size_t i = 0; i < r_; ++i)
    for (std::size_t j = i + 1; j < c_; ++j)
      if (get(i, j) != get(j, i)) return false;
  return true;
}

BitMatrix BitMatrix::transposed() const {
  BitMatrix t(c_, r_);
  for (std::size_t i = 0; i < r_; ++i)
    for (std::size_t j = 0; j < c_; ++j)
      if (get(i, j)) t.set(j, i, true);
  return t;
}

BitVector BitMatrix::mul(const BitVector& v) const {
  if (v.size() != c_) throw std::invalid_argument("mat-vec size mismatch");
  BitVector out(r_);
  for (std::size_t i = 0; i < r_; ++i) {
    uint64_t acc = 0;
    const uint64_t* rw = row_words(i);
    for (std::size_t k = 0; k < wpr_; ++k) acc ^= rw[k] & v.words()[k];
    out.set(i, std::popcount(acc) & 1);
  }
  return out;
}

std::string BitMatrix::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < r_; ++i) {
    s += row(i).to_string();
    if (i + 1 < r_) s += '\n';
  }
  return s;
}

BitMatrix mat_mul(const BitMatrix& a, const BitMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("mat_mul shape mismatch");
  BitMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    uint64_t* orow = out.row_words(i);
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (!a.get(i, k)) continue;
      const uint64_t* brow = b.row_words(k);
      for (std::size_t w = 0; w < out.words_per_row(); ++w) orow[w] ^= brow[w];
    }
  }
  return out;
}

BitMatrix mat_add(const BitMatrix& a, const BitMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("mat_add shape mismatch");
  BitMatrix out = a;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    uint64_t* orow = out.row_words(i);
    const uint64_t* brow = b.row_words(i);
    for (std::size_t w = 0; w < out.words_per_row(); ++w) orow[w] ^= brow[w];
  }
  return out;
}

BitMatrix rref(BitMatrix m) {
  std::size_t lead = 0;
  for (std::size_t col = 0; col < m.cols() && lead < m.rows(); ++col) {
    std::size_t piv = lead;
    while (piv < m.rows() && !m.get(piv, col)) ++piv;
    if (piv == m.rows()) continue;
    m.swap_rows(piv, lead);
    for (std::size_t i = 0; i < m.rows(); ++i)
      if (i != lead && m.get(i, col)) m.xor_row_into(lead, i);
    ++lead;
  }
  return m;
}

std::size_t rank(const BitMatrix& m) {
  BitMatrix r = rref(m);
  std::size_t k = 0;
  for (std::size_t i = 0; i < r.rows(); ++i) {
    bool nonzero = false;
    for (std::size_t w = 0; w < r.words_per_row(); ++w)
      if (r.row_words(i)[w]) { nonzero = true; break; }
    if (nonzero) ++k;
  }
  return k;
}

std::vector<BitVector> kernel_basis(const BitMatrix& m) {
  BitMatrix r = rref(m);
  std::vector<std::ptrdiff_t> pivot_of_col(m.cols(), -1);
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    if (r.get(row, col)) pivot_of_col[col] = static_cast<std::ptrdiff_t>(row++);
  }
  std::vector<BitVector> basis;
  for (std::size_t col = 0; col < m.cols(); ++col) {
    if (pivot_of_col[col] >= 0) continue;
    BitVector v(m.cols());
    v.set(col, true);
    for (std::size_t c2 = 0; c2 < col; ++c2)
      if (pivot_of_col[c2] >= 0 && r.get(static_cast<std::size_t>(pivot_of_col[c2]), col))
        v.set(c2, true);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<BitVector> AffineSolutionSet::enumerate() const {
  std::vector<BitVector> out;
  if (!solvable) return out;
  const std::size_t k = kernel.size();
  if (k > 30) throw std::length_error("AffineSolutionSet too large to enumerate");
  out.reserve(std::size_t{1} << k);
  for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
    BitVector x = particular;
    for (std::size_t b = 0; b < k; ++b)
      if ((mask >> b) & 1) x ^= kernel[b];
    out.push_back(std::move(x));
  }
  return out;
}

bool AffineSolutionSet::contains(const BitVector& x) const {
  if (!solvable) return false;
  /* x - particular must lie in span(kernel). */
  BitVector d = x;
  d ^= particular;
  BitMatrix k(kernel.size(), d.size());
  for (std::size_t i = 0; i < kernel.size(); ++i) k.set_row(i, kernel[i]);
  BitMatrix ext(kernel.size() + 1, d.size());
  for (std::size_t i = 0; i < kernel.size(); ++i) ext.set_row(i, kernel[i]);
  ext.set_row(kernel.size(), d);
  return rank(ext) == rank(k);
}

AffineSolutionSet solve_affine(const BitMatrix& a, const BitVector& b) {
  if (a.rows() != b.size()) throw std::invalid_argument("solve_affine shape mismatch");
  const std::size_t n = a.cols();
  BitMatrix aug(a.rows(), n + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t w = 0; w < a.words_per_row(); ++w) aug.row_words(i)[w] = a.row_words(i)[w];
    /* Clear any tail bits beyond column n, then place b. */
    for (std::size_t j = n; j < aug.cols(); ++j) aug.set(i, j, false);
    aug.set(i, n, b.get(i));
  }
  aug = rref(std::move(aug));

  AffineSolutionSet sol;
  std::vector<std::ptrdiff_t> pivot_of_col(n, -1);
  std::size_t row = 0;
  for (std::size_t col = 0; col <= n && row < aug.rows(); ++col) {
    if (!aug.get(row, col)) continue;
    if (col == n) return sol;  /* pivot in augmented column: inconsistent */
    pivot_of_col[col] = static_cast<std::ptrdiff_t>(row++);
  }
  sol.solvable = true;
  sol.particular = BitVector(n);
  for (std::size_t col = 0; col < n; ++col)
    if (pivot_of_col[col] >= 0)
      sol.particular.set(col, aug.get(static_cast<std::size_t>(pivot_of_col[col]), n));
  for (std::size_t col = 0; col < n; ++col) {
    if (pivot_of_col[col] >= 0) continue;
    BitVector v(n);
    v.set(col, true);
    for (std::size_t c2 = 0; c2 < col; ++c2)
      if (pivot_of_col[c2] >= 0 && aug.get(static_cast<std::size_t>(pivot_of_col[c2]), col))
        v.set(c2, true);
    sol.kernel.push_back(std::move(v));
  }
  return sol;
}

}  // namespace stabsym
