#include "numrad/eig.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace numrad {

namespace detail {

namespace {

constexpr double kJacobiTol = 1e-13;
constexpr int kJacobiMaxSweeps = 100;

// One cyclic pass over the strict upper triangle.  Rotations on pivots with
// |h_pq| <= skip are not worth doing; skip is sized so a full pass of skipped
// pivots certifies convergence.
void jacobi_sweep(cxd* h, int n, cxd* v, double skip) {
  for (int p = 0; p < n - 1; ++p) {
    for (int q = p + 1; q < n; ++q) {
      const cxd apq = h[static_cast<size_t>(p) * n + q];
      const double r = std::abs(apq);
      if (r <= skip) continue;
      const double app = h[static_cast<size_t>(p) * n + p].real();
      const double aqq = h[static_cast<size_t>(q) * n + q].real();
      const cxd phase = apq / r;
      const double tau = (aqq - app) / (2.0 * r);
      const double t = tau >= 0.0 ? 1.0 / (tau + std::sqrt(1.0 + tau * tau))
                                  : 1.0 / (tau - std::sqrt(1.0 + tau * tau));
      const double c = 1.0 / std::sqrt(1.0 + t * t);
      const double s = t * c;
      const cxd sp = s * phase;
      const cxd spc = s * std::conj(phase);
      for (int k = 0; k < n; ++k) {
        if (k == p || k == q) continue;
        const cxd hkp = h[static_cast<size_t>(k) * n + p];
        const cxd hkq = h[static_cast<size_t>(k) * n + q];
        const cxd nkp = c * hkp - spc * hkq;
        const cxd nkq = sp * hkp + c * hkq;
        h[static_cast<size_t>(k) * n + p] = nkp;
        h[static_cast<size_t>(p) * n + k] = std::conj(nkp);
        h[static_cast<size_t>(k) * n + q] = nkq;
        h[static_cast<size_t>(q) * n + k] = std::conj(nkq);
      }
      h[static_cast<size_t>(p) * n + p] = c * c * app - 2.0 * s * c * r + s * s * aqq;
      h[static_cast<size_t>(q) * n + q] = s * s * app + 2.0 * s * c * r + c * c * aqq;
      h[static_cast<size_t>(p) * n + q] = cxd(0.0, 0.0);
      h[static_cast<size_t>(q) * n + p] = cxd(0.0, 0.0);
      if (v) {
        for (int k = 0; k < n; ++k) {
          const cxd vkp = v[static_cast<size_t>(k) * n + p];
          const cxd vkq = v[static_cast<size_t>(k) * n + q];
          v[static_cast<size_t>(k) * n + p] = c * vkp - spc * vkq;
          v[static_cast<size_t>(k) * n + q] = sp * vkp + c * vkq;
        }
      }
    }
  }
}

}  // namespace

double offdiag_frobenius(const cxd* h, int n) {
  double s = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) s += std::norm(h[static_cast<size_t>(i) * n + j]);
  return std::sqrt(2.0 * s);
}

void jacobi_diagonalize(cxd* h, int n, cxd* v) {
  if (n == 1) return;
  double fro = 0.0;
  for (int k = 0; k < n * n; ++k) fro += std::norm(h[k]);
  fro = std::sqrt(fro);
  const double thresh = kJacobiTol * std::max(1.0, fro);
  const double skip = thresh / (4.0 * n);
  for (int sweep = 0; sweep < kJacobiMaxSweeps; ++sweep) {
    if (offdiag_frobenius(h, n) <= thresh) return;
    jacobi_sweep(h, n, v, skip);
  }
  if (offdiag_frobenius(h, n) <= thresh) return;
  throw NoConvergence("hermitian eigensolver: off-diagonal mass stalled above threshold");
}

double lambda_max_inplace(cxd* h, int n) {
  jacobi_diagonalize(h, n, nullptr);
  double m = h[0].real();
  for (int i = 1; i < n; ++i) m = std::max(m, h[static_cast<size_t>(i) * n + i].real());
  return m;
}

void gram_into(const cxd* a, int n, cxd* g) {
  for (int i = 0; i < n; ++i) {
    double d = 0.0;
    for (int k = 0; k < n; ++k) d += std::norm(a[static_cast<size_t>(k) * n + i]);
    g[static_cast<size_t>(i) * n + i] = d;
    for (int j = i + 1; j < n; ++j) {
      cxd s = 0.0;
      for (int k = 0; k < n; ++k)
        s += std::conj(a[static_cast<size_t>(k) * n + i]) * a[static_cast<size_t>(k) * n + j];
      g[static_cast<size_t>(i) * n + j] = s;
      g[static_cast<size_t>(j) * n + i] = std::conj(s);
    }
  }
}

}  // namespace detail

namespace {

void require_hermitian(const ComplexMatrix& h, const char* who) {
  if (!h.is_hermitian(1e-12)) {
    throw NotHermitian(std::string(who) + ": input is not Hermitian within 1e-12");
  }
}

// Copy with exact symmetrization so the rotation kernel sees a numerically
// Hermitian buffer even when the input only passes the tolerance check.
CVector hermitized_copy(const ComplexMatrix& h) {
  const int n = h.dim();
  CVector e(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    e[static_cast<size_t>(i) * n + i] = h(i, i).real();
    for (int j = i + 1; j < n; ++j) {
      const cxd v = 0.5 * (h(i, j) + std::conj(h(j, i)));
      e[static_cast<size_t>(i) * n + j] = v;
      e[static_cast<size_t>(j) * n + i] = std::conj(v);
    }
  }
  return e;
}

}  // namespace

HermitianEig hermitian_eig(const ComplexMatrix& h) {
  require_hermitian(h, "hermitian_eig");
  const int n = h.dim();
  CVector buf = hermitized_copy(h);
  CVector v(static_cast<size_t>(n) * n, cxd(0.0, 0.0));
  for (int i = 0; i < n; ++i) v[static_cast<size_t>(i) * n + i] = 1.0;
  detail::jacobi_diagonalize(buf.data(), n, v.data());

  std::vector<int> idx(static_cast<size_t>(n));
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) {
    return buf[static_cast<size_t>(a) * n + a].real() < buf[static_cast<size_t>(b) * n + b].real();
  });

  HermitianEig out;
  out.eigenvalues.resize(static_cast<size_t>(n));
  out.eigenvectors = ComplexMatrix::zero(n);
  for (int j = 0; j < n; ++j) {
    const int src = idx[static_cast<size_t>(j)];
    out.eigenvalues[static_cast<size_t>(j)] = buf[static_cast<size_t>(src) * n + src].real();
    for (int i = 0; i < n; ++i) out.eigenvectors(i, j) = v[static_cast<size_t>(i) * n + src];
  }
  return out;
}

ComplexMatrix psd_power(const HermitianEig& eig, double p) {
  const int n = eig.eigenvectors.dim();
  std::vector<double> d(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    double lam = eig.eigenvalues[static_cast<size_t>(i)];
    if (lam < 0.0) {
      if (lam < -1e-10) {
        throw NotPSD("psd_power: eigenvalue " + std::to_string(lam) + " below -1e-10");
      }
      lam = 0.0;
    }
    d[static_cast<size_t>(i)] = std::pow(lam, p);  // pow(0, 0) == 1 by IEEE semantics
  }
  ComplexMatrix r = ComplexMatrix::zero(n);
  for (int i = 0; i < n; ++i) {
    double diag = 0.0;
    for (int k = 0; k < n; ++k) diag += d[static_cast<size_t>(k)] * std::norm(eig.eigenvectors(i, k));
    r(i, i) = diag;
    for (int j = i + 1; j < n; ++j) {
      cxd s = 0.0;
      for (int k = 0; k < n; ++k)
        s += d[static_cast<size_t>(k)] * eig.eigenvectors(i, k) * std::conj(eig.eigenvectors(j, k));
      r(i, j) = s;
      r(j, i) = std::conj(s);
    }
  }
  return r;
}

ComplexMatrix psd_power(const ComplexMatrix& h, double p) {
  require_hermitian(h, "psd_power");
  return psd_power(hermitian_eig(h), p);
}

ComplexMatrix matrix_abs(const ComplexMatrix& a) { return psd_power(gram(a), 0.5); }

double operator_norm(const ComplexMatrix& a) {
  const int n = a.dim();
  CVector g(static_cast<size_t>(n) * n);
  detail::gram_into(a.entries().data(), n, g.data());
  const double lam = detail::lambda_max_inplace(g.data(), n);
  return std::sqrt(std::max(lam, 0.0));
}

double min_eig_hermitian(const ComplexMatrix& h) {
  require_hermitian(h, "min_eig_hermitian");
  const int n = h.dim();
  CVector buf = hermitized_copy(h);
  detail::jacobi_diagonalize(buf.data(), n, nullptr);
  double m = buf[0].real();
  for (int i = 1; i < n; ++i) m = std::min(m, buf[static_cast<size_t>(i) * n + i].real());
  return m;
}

}  // namespace numrad
