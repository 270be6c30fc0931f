#pragma once

#include <Eigen/Dense>
#include <complex>

#include "qbound/rng.hpp"

namespace qbound {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

/// Largest supported matrix side. Bipartite states up to 64x64 local dims.
inline constexpr int kMaxMatrixDim = 4096;

/// Default entrywise tolerance for Hermiticity preconditions.
inline constexpr double kHermitianTol = 1e-10;

struct SvdResult {
  ComplexMatrix u;       // rows x rows, unitary
  RealVector values;     // min(rows, cols), descending
  ComplexMatrix v;       // cols x cols, unitary; a = u * diag(values) * v^dagger
};

struct HermitianEig {
  RealVector values;     // ascending
  ComplexMatrix vectors; // orthonormal columns, a * v_i = values_i * v_i
};

/// Kronecker product; entry ((i*b.rows+k),(j*b.cols+l)) = a(i,j)*b(k,l).
ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b,
                     int max_dim = kMaxMatrixDim);

/// Kronecker product of column vectors.
ComplexVector tensor_vec(const ComplexVector& a, const ComplexVector& b,
                         int max_dim = kMaxMatrixDim);

/// Singular values, descending.
RealVector singular_values(const ComplexMatrix& a);

/// Full SVD with deterministic ordering (values descending).
SvdResult svd(const ComplexMatrix& a);

/// Nuclear norm: sum of singular values.
double trace_norm(const ComplexMatrix& a);

double frobenius_norm(const ComplexMatrix& a);

/// max |a(i,j) - conj(a(j,i))| over all entries; 0 for exactly Hermitian input.
double hermiticity_error(const ComplexMatrix& a);

/// Eigendecomposition of a Hermitian matrix. Throws PreconditionError if the
/// entrywise deviation from a^dagger exceeds tol.
HermitianEig eig_hermitian(const ComplexMatrix& a, double tol = kHermitianTol);

/// Eigenvalues only (ascending), same precondition as eig_hermitian.
RealVector eigvals_hermitian(const ComplexMatrix& a, double tol = kHermitianTol);

/**
 * Haar-distributed d x d unitary: a complex-Gaussian matrix orthonormalized
 * by modified Gram-Schmidt, with each column phased so the triangular
 * factor's diagonal is real and positive.
 */
ComplexMatrix random_unitary(int d, Rng& rng);

/// Throws DimensionError/PreconditionError if entries are non-finite or the
/// shape is degenerate or over the cap.
void check_matrix(const ComplexMatrix& a, int max_dim = kMaxMatrixDim);

}  // namespace qbound
