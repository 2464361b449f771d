#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace stabsym {

/* Dense GF(2) vector, bits packed into 64-bit words. */
class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t n) : n_(n), w_(words_for(n)) {}
  static BitVector from_bits(std::initializer_list<int> bits);
  static BitVector from_bits(const std::vector<int>& bits);

  std::size_t size() const { return n_; }
  bool get(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i, bool v) {
    uint64_t m = uint64_t{1} << (i & 63);
    if (v) w_[i >> 6] |= m; else w_[i >> 6] &= ~m;
  }
  void flip(std::size_t i) { w_[i >> 6] ^= uint64_t{1} << (i & 63); }

  BitVector& operator^=(const BitVector& o);
  friend BitVector operator^(BitVector a, const BitVector& b) { a ^= b; return a; }
  bool operator==(const BitVector&) const = default;
  bool operator<(const BitVector& o) const;

  bool any() const;
  std::size_t popcount() const;
  /* <a,b> over GF(2). */
  bool dot(const BitVector& o) const;
  /* Bits as "0101..." (index 0 first). */
  std::string to_string() const;

  const std::vector<uint64_t>& words() const { return w_; }
  std::vector<uint64_t>& words() { return w_; }
  static std::size_t words_for(std::size_t n) { return (n + 63) >> 6; }

 private:
  std::size_t n_ = 0;
  std::vector<uint64_t> w_;
};

/* Dense GF(2) matrix with bit-packed row-major rows; row ops are word-parallel. */
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols)
      : r_(rows), c_(cols), wpr_(BitVector::words_for(cols)), w_(r_ * wpr_) {}
  static BitMatrix identity(std::size_t n);
  static BitMatrix from_rows(std::initializer_list<std::initializer_list<int>> rows);

  std::size_t rows() const { return r_; }
  std::size_t cols() const { return c_; }
  bool get(std::size_t i, std::size_t j) const {
    return (w_[i * wpr_ + (j >> 6)] >> (j & 63)) & 1u;
  }
  void set(std::size_t i, std::size_t j, bool v) {
    uint64_t m = uint64_t{1} << (j & 63);
    if (v) w_[i * wpr_ + (j >> 6)] |= m; else w_[i * wpr_ + (j >> 6)] &= ~m;
  }
  void flip(std::size_t i, std::size_t j) { w_[i * wpr_ + (j >> 6)] ^= uint64_t{1} << (j & 63); }

  const uint64_t* row_words(std::size_t i) const { return w_.data() + i * wpr_; }
  uint64_t* row_words(std::size_t i) { return w_.data() + i * wpr_; }
  std::size_t words_per_row() const { return wpr_; }

  BitVector row(std::size_t i) const;
  void set_row(std::size_t i, const BitVector& v);
  void xor_row_into(std::size_t src, std::size_t dst);  /* row dst ^= row src */
  void swap_rows(std::size_t i, std::size_t j);

  bool operator==(const BitMatrix&) const = default;
  bool operator<(const BitMatrix& o) const;
  bool is_zero() const;
  bool is_symmetric() const;
  BitMatrix transposed() const;
  /* Mat-vec product over GF(2). */
  BitVector mul(const BitVector& v) const;
  std::string to_string() const;

 private:
  std::size_t r_ = 0, c_ = 0, wpr_ = 0;
  std::vector<uint64_t> w_;
};

BitMatrix mat_mul(const BitMatrix& a, const BitMatrix& b);
BitMatrix mat_add(const BitMatrix& a, const BitMatrix& b);

/* Reduced row echelon form; canonical for use as a set key. */
BitMatrix rref(BitMatrix m);
std::size_t rank(const BitMatrix& m);
std::vector<BitVector> kernel_basis(const BitMatrix& m);

/* Solution set of a x = b: empty, or particular + span(kernel). */
struct AffineSolutionSet {
  bool solvable = false;
  BitVector particular;
  std::vector<BitVector> kernel;

  std::size_t dimension() const { return kernel.size(); }
  /* All 2^dim solutions; caller must ensure dim is small. */
  std::vector<BitVector> enumerate() const;
  bool contains(const BitVector& x) const;
};

AffineSolutionSet solve_affine(const BitMatrix& a, const BitVector& b);

}  // namespace stabsym
