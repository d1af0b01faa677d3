#include "numrad/matrix.hpp"

#include <cmath>
#include <string>

namespace numrad {

namespace {

void check_finite(const CVector& e) {
  for (const cxd& v : e) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
      throw DomainError("matrix entry is not finite");
    }
  }
}

}  // namespace

ComplexMatrix::ComplexMatrix(int dim, CVector entries) : dim_(dim), e_(std::move(entries)) {
  if (dim_ < 1) throw DomainError("matrix dimension must be >= 1");
  if (e_.size() != static_cast<size_t>(dim_) * dim_) {
    throw DomainError("entry count does not match dimension (need dim*dim, row-major)");
  }
  check_finite(e_);
}

ComplexMatrix ComplexMatrix::zero(int dim) {
  return ComplexMatrix(dim, CVector(static_cast<size_t>(dim) * dim, cxd(0.0, 0.0)));
}

ComplexMatrix ComplexMatrix::identity(int dim) {
  ComplexMatrix m = zero(dim);
  for (int i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(const CVector& diag) {
  ComplexMatrix m = zero(static_cast<int>(diag.size()));
  for (int i = 0; i < m.dim(); ++i) m(i, i) = diag[static_cast<size_t>(i)];
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix m = zero(dim_);
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) m(j, i) = std::conj((*this)(i, j));
  return m;
}

ComplexMatrix ComplexMatrix::transpose() const {
  ComplexMatrix m = zero(dim_);
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) m(j, i) = (*this)(i, j);
  return m;
}

cxd ComplexMatrix::trace() const {
  cxd t = 0.0;
  for (int i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

double ComplexMatrix::frobenius_norm() const {
  double s = 0.0;
  for (const cxd& v : e_) s += std::norm(v);
  return std::sqrt(s);
}

double ComplexMatrix::max_abs() const {
  double m = 0.0;
  for (const cxd& v : e_) m = std::max(m, std::abs(v));
  return m;
}

ComplexMatrix ComplexMatrix::shifted(cxd lambda) const {
  ComplexMatrix m = *this;
  for (int i = 0; i < dim_; ++i) m(i, i) -= lambda;
  return m;
}

bool ComplexMatrix::is_hermitian(double tol) const {
  for (int i = 0; i < dim_; ++i) {
    for (int j = i; j < dim_; ++j) {
      if (std::abs((*this)(i, j) - std::conj((*this)(j, i))) > tol) return false;
    }
  }
  return true;
}

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim()) throw DomainError("matrix dimensions differ");
  CVector e(a.entries());
  for (size_t k = 0; k < e.size(); ++k) e[k] += b.entries()[k];
  return ComplexMatrix(a.dim(), std::move(e));
}

ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim()) throw DomainError("matrix dimensions differ");
  CVector e(a.entries());
  for (size_t k = 0; k < e.size(); ++k) e[k] -= b.entries()[k];
  return ComplexMatrix(a.dim(), std::move(e));
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim()) throw DomainError("matrix dimensions differ");
  const int n = a.dim();
  ComplexMatrix m = ComplexMatrix::zero(n);
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      const cxd aik = a(i, k);
      if (aik == cxd(0.0, 0.0)) continue;
      for (int j = 0; j < n; ++j) m(i, j) += aik * b(k, j);
    }
  }
  return m;
}

ComplexMatrix operator*(cxd s, const ComplexMatrix& a) {
  CVector e(a.entries());
  for (cxd& v : e) v *= s;
  return ComplexMatrix(a.dim(), std::move(e));
}

ComplexMatrix matpow(const ComplexMatrix& a, int k) {
  if (k < 0) throw DomainError("matrix power must be >= 0");
  if (k == 0) return ComplexMatrix::identity(a.dim());
  ComplexMatrix m = a;
  for (int i = 1; i < k; ++i) m = m * a;
  return m;
}

ComplexMatrix gram(const ComplexMatrix& a) {
  const int n = a.dim();
  ComplexMatrix g = ComplexMatrix::zero(n);
  for (int i = 0; i < n; ++i) {
    double d = 0.0;
    for (int k = 0; k < n; ++k) d += std::norm(a(k, i));
    g(i, i) = d;
    for (int j = i + 1; j < n; ++j) {
      cxd s = 0.0;
      for (int k = 0; k < n; ++k) s += std::conj(a(k, i)) * a(k, j);
      g(i, j) = s;
      g(j, i) = std::conj(s);
    }
  }
  return g;
}

ComplexMatrix gram_adj(const ComplexMatrix& a) {
  const int n = a.dim();
  ComplexMatrix g = ComplexMatrix::zero(n);
  for (int i = 0; i < n; ++i) {
    double d = 0.0;
    for (int k = 0; k < n; ++k) d += std::norm(a(i, k));
    g(i, i) = d;
    for (int j = i + 1; j < n; ++j) {
      cxd s = 0.0;
      for (int k = 0; k < n; ++k) s += a(i, k) * std::conj(a(j, k));
      g(i, j) = s;
      g(j, i) = std::conj(s);
    }
  }
  return g;
}

ComplexMatrix hermitian_part(const ComplexMatrix& a) {
  const int n = a.dim();
  ComplexMatrix h = ComplexMatrix::zero(n);
  for (int i = 0; i < n; ++i) {
    h(i, i) = a(i, i).real();
    for (int j = i + 1; j < n; ++j) {
      const cxd v = 0.5 * (a(i, j) + std::conj(a(j, i)));
      h(i, j) = v;
      h(j, i) = std::conj(v);
    }
  }
  return h;
}

ComplexMatrix skew_part_rotated(const ComplexMatrix& a) {
  const int n = a.dim();
  const cxd iu(0.0, 1.0);
  ComplexMatrix h = ComplexMatrix::zero(n);
  for (int i = 0; i < n; ++i) {
    h(i, i) = -a(i, i).imag();
    for (int j = i + 1; j < n; ++j) {
      const cxd v = 0.5 * iu * (a(i, j) - std::conj(a(j, i)));
      h(i, j) = v;
      h(j, i) = std::conj(v);
    }
  }
  return h;
}

CVector matvec(const ComplexMatrix& a, const CVector& x) {
  const int n = a.dim();
  if (x.size() != static_cast<size_t>(n)) throw DomainError("vector length does not match matrix");
  CVector y(static_cast<size_t>(n), cxd(0.0, 0.0));
  for (int i = 0; i < n; ++i) {
    cxd s = 0.0;
    for (int j = 0; j < n; ++j) s += a(i, j) * x[static_cast<size_t>(j)];
    y[static_cast<size_t>(i)] = s;
  }
  return y;
}

cxd inner(const CVector& x, const CVector& y) {
  if (x.size() != y.size()) throw DomainError("vector lengths differ");
  cxd s = 0.0;
  for (size_t i = 0; i < x.size(); ++i) s += x[i] * std::conj(y[i]);
  return s;
}

double vec_norm(const CVector& x) {
  double s = 0.0;
  for (const cxd& v : x) s += std::norm(v);
  return std::sqrt(s);
}

CVector normalized(const CVector& x) {
  const double n = vec_norm(x);
  if (n == 0.0) throw ZeroVector("cannot normalize the zero vector");
  CVector y(x);
  for (cxd& v : y) v /= n;
  return y;
}

}  // namespace numrad
