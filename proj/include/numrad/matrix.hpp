#pragma once

#include <complex>
#include <vector>

#include "numrad/errors.hpp"

namespace numrad {

using cxd = std::complex<double>;
using CVector = std::vector<cxd>;

// Dense square complex matrix, row-major storage.  Entries are validated to
// be finite on construction and after every mutating helper.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(int dim, CVector entries);

  static ComplexMatrix zero(int dim);
  static ComplexMatrix identity(int dim);
  static ComplexMatrix diagonal(const CVector& diag);

  int dim() const { return dim_; }
  const CVector& entries() const { return e_; }

  cxd operator()(int i, int j) const { return e_[static_cast<size_t>(i) * dim_ + j]; }
  cxd& operator()(int i, int j) { return e_[static_cast<size_t>(i) * dim_ + j]; }

  ComplexMatrix adjoint() const;
  ComplexMatrix transpose() const;
  cxd trace() const;
  double frobenius_norm() const;
  double max_abs() const;

  // A - lambda * I
  ComplexMatrix shifted(cxd lambda) const;

  bool is_hermitian(double tol = 1e-12) const;

 private:
  int dim_ = 0;
  CVector e_;
};

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(cxd s, const ComplexMatrix& a);

// A^k for k >= 0 (k = 0 gives the identity); repeated multiplication, which
// keeps A^1 bit-identical to A.
ComplexMatrix matpow(const ComplexMatrix& a, int k);

// Adjoint products, built entry-by-entry so the result is exactly Hermitian
// in floating point (upper triangle computed, lower mirrored, diagonal real).
ComplexMatrix gram(const ComplexMatrix& a);       // A* A
ComplexMatrix gram_adj(const ComplexMatrix& a);   // A A*

// (A + A*)/2 and i(A - A*)/2, both exactly Hermitian.
ComplexMatrix hermitian_part(const ComplexMatrix& a);
ComplexMatrix skew_part_rotated(const ComplexMatrix& a);

CVector matvec(const ComplexMatrix& a, const CVector& x);

// <x, y> = sum_i x_i * conj(y_i): linear in the first argument.
cxd inner(const CVector& x, const CVector& y);
double vec_norm(const CVector& x);
CVector normalized(const CVector& x);  // throws ZeroVector

}  // namespace numrad
