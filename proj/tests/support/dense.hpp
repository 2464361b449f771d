#pragma once

/* Dense linear-algebra helpers for test oracles; independent of the library's
 * exact algebra.  Qubit j maps to bit j of the basis index (qubit 0 = LSB). */

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "stabsym/pauli.hpp"

namespace testsup {

using Mat = Eigen::MatrixXcd;
using cd = std::complex<double>;

inline Mat pauli_matrix(stabsym::Pauli p) {
  Mat m(2, 2);
  switch (p) {
    case stabsym::Pauli::I: m << 1, 0, 0, 1; break;
    case stabsym::Pauli::X: m << 0, 1, 1, 0; break;
    case stabsym::Pauli::Y: m << 0, cd(0, -1), cd(0, 1), 0; break;
    case stabsym::Pauli::Z: m << 1, 0, 0, -1; break;
  }
  return m;
}

inline Mat kron(const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

/* factors[j] acts on qubit j; qubit 0 is the least significant index bit. */
inline Mat kron_all(const std::vector<Mat>& factors) {
  Mat out = Mat::Identity(1, 1);
  for (const Mat& f : factors) out = kron(f, out);
  return out;
}

inline Mat realize(const stabsym::PauliString& p) {
  std::vector<Mat> f;
  for (std::size_t j = 0; j < p.n; ++j) f.push_back(pauli_matrix(p.letter(j)));
  cd phase = std::pow(cd(0, 1), static_cast<int>(p.phase_exp & 3));
  return phase * kron_all(f);
}

inline bool approx_equal(const Mat& a, const Mat& b, double tol = 1e-12) {
  return a.rows() == b.rows() && a.cols() == b.cols() && (a - b).cwiseAbs().maxCoeff() <= tol;
}

/* a = c*b for some nonzero scalar c. */
inline bool proportional(const Mat& a, const Mat& b, double tol = 1e-9) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  Eigen::Index imax = 0, jmax = 0;
  b.cwiseAbs().maxCoeff(&imax, &jmax);
  if (std::abs(b(imax, jmax)) < tol) return a.cwiseAbs().maxCoeff() < tol;
  cd c = a(imax, jmax) / b(imax, jmax);
  if (std::abs(c) < tol) return false;
  return (a - c * b).cwiseAbs().maxCoeff() <= tol * std::max(1.0, std::abs(c));
}

}  // namespace testsup
