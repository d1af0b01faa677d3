#pragma once

#include "numrad/matrix.hpp"

namespace numrad {

struct HermitianEig {
  std::vector<double> eigenvalues;  // ascending
  ComplexMatrix eigenvectors;       // columns match eigenvalues
};

// Full eigendecomposition of a Hermitian matrix via cyclic complex Jacobi
// rotations.  Throws NotHermitian when the input fails the 1e-12 symmetry
// check, NoConvergence if the off-diagonal mass stalls.
HermitianEig hermitian_eig(const ComplexMatrix& h);

// H^p for Hermitian positive semidefinite H (eigenvalues in [-1e-10, 0) are
// clamped to zero; anything lower throws NotPSD).  0^0 counts as 1.
ComplexMatrix psd_power(const ComplexMatrix& h, double p);

// Same, reusing an existing decomposition (saves the Jacobi run when several
// powers of one matrix are needed).
ComplexMatrix psd_power(const HermitianEig& eig, double p);

// |A| = (A* A)^{1/2}
ComplexMatrix matrix_abs(const ComplexMatrix& a);

// Largest singular value.
double operator_norm(const ComplexMatrix& a);

// Smallest eigenvalue of a Hermitian matrix.
double min_eig_hermitian(const ComplexMatrix& h);

namespace detail {

// In-place kernels on raw row-major buffers; callers own the workspace so the
// hot paths allocate nothing.

// Diagonalize Hermitian h (n x n) in place.  v, when non-null, must hold the
// identity on entry and accumulates the unitary (columns = eigenvectors).
// Convergence: off-diagonal Frobenius mass below 1e-13 relative to the
// Frobenius scale of h (an absolute 1e-13 floor is unreachable in binary64
// once the matrix norm grows past ~1e2).
void jacobi_diagonalize(cxd* h, int n, cxd* v);

// Diagonalize in place and return the largest diagonal value; no vectors.
double lambda_max_inplace(cxd* h, int n);

// g = a' a (exactly Hermitian), raw-buffer variant.
void gram_into(const cxd* a, int n, cxd* g);

double offdiag_frobenius(const cxd* h, int n);

}  // namespace detail

}  // namespace numrad
