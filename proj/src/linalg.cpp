#include "qbound/linalg.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <cmath>
#include <sstream>

#include "qbound/errors.hpp"

namespace qbound {

void check_matrix(const ComplexMatrix& a, int max_dim) {
  if (a.rows() < 1 || a.cols() < 1) {
    throw DimensionError("matrix has empty dimension");
  }
  if (a.rows() > max_dim || a.cols() > max_dim) {
    std::ostringstream os;
    os << "matrix " << a.rows() << "x" << a.cols()
       << " exceeds the configured cap " << max_dim;
    throw DimensionError(os.str());
  }
  if (!a.allFinite()) {
    throw PreconditionError("matrix contains non-finite entries");
  }
}

ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b, int max_dim) {
  const long rows = a.rows() * b.rows();
  const long cols = a.cols() * b.cols();
  if (rows > max_dim || cols > max_dim) {
    std::ostringstream os;
    os << "tensor result " << rows << "x" << cols
       << " exceeds the configured cap " << max_dim;
    throw DimensionError(os.str());
  }
  ComplexMatrix out(rows, cols);
  for (long i = 0; i < a.rows(); ++i) {
    for (long j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

ComplexVector tensor_vec(const ComplexVector& a, const ComplexVector& b, int max_dim) {
  const long n = a.size() * b.size();
  if (n > static_cast<long>(max_dim) * max_dim) {
    throw DimensionError("tensor_vec result exceeds the configured cap");
  }
  ComplexVector out(n);
  for (long i = 0; i < a.size(); ++i) {
    out.segment(i * b.size(), b.size()) = a(i) * b;
  }
  return out;
}

namespace {

[[noreturn]] void svd_failure(const ComplexMatrix& a) {
  std::ostringstream os;
  os << "SVD did not converge on a " << a.rows() << "x" << a.cols()
     << " matrix (frobenius " << a.norm() << ")";
  throw NumericError(os.str());
}

// JacobiSVD is the accurate choice at the sizes this library works with;
// BDCSVD takes over for large inputs.
SvdResult svd_impl(const ComplexMatrix& a, unsigned options) {
  SvdResult r;
  if (a.rows() <= 128 && a.cols() <= 128) {
    Eigen::JacobiSVD<ComplexMatrix> s(a, options);
    if (s.info() != Eigen::Success) svd_failure(a);
    r.values = s.singularValues();
    if (options & Eigen::ComputeFullU) r.u = s.matrixU();
    if (options & Eigen::ComputeFullV) r.v = s.matrixV();
  } else {
    Eigen::BDCSVD<ComplexMatrix> s(a, options);
    if (s.info() != Eigen::Success) svd_failure(a);
    r.values = s.singularValues();
    if (options & Eigen::ComputeFullU) r.u = s.matrixU();
    if (options & Eigen::ComputeFullV) r.v = s.matrixV();
  }
  return r;
}

}  // namespace

RealVector singular_values(const ComplexMatrix& a) {
  check_matrix(a);
  return svd_impl(a, 0).values;
}

SvdResult svd(const ComplexMatrix& a) {
  check_matrix(a);
  return svd_impl(a, Eigen::ComputeFullU | Eigen::ComputeFullV);
}

double trace_norm(const ComplexMatrix& a) {
  return singular_values(a).sum();
}

double frobenius_norm(const ComplexMatrix& a) { return a.norm(); }

double hermiticity_error(const ComplexMatrix& a) {
  if (a.rows() != a.cols()) {
    return std::numeric_limits<double>::infinity();
  }
  double worst = 0.0;
  for (long i = 0; i < a.rows(); ++i) {
    for (long j = 0; j <= i; ++j) {
      worst = std::max(worst, std::abs(a(i, j) - std::conj(a(j, i))));
    }
  }
  return worst;
}

HermitianEig eig_hermitian(const ComplexMatrix& a, double tol) {
  check_matrix(a);
  if (a.rows() != a.cols()) {
    throw PreconditionError("eig_hermitian: matrix is not square");
  }
  const double dev = hermiticity_error(a);
  if (dev > tol) {
    std::ostringstream os;
    os << "eig_hermitian: input deviates from Hermitian by " << dev
       << " (tolerance " << tol << ")";
    throw PreconditionError(os.str());
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(a);
  if (es.info() != Eigen::Success) {
    throw NumericError("Hermitian eigendecomposition did not converge");
  }
  return {es.eigenvalues(), es.eigenvectors()};
}

RealVector eigvals_hermitian(const ComplexMatrix& a, double tol) {
  check_matrix(a);
  if (a.rows() != a.cols()) {
    throw PreconditionError("eigvals_hermitian: matrix is not square");
  }
  const double dev = hermiticity_error(a);
  if (dev > tol) {
    std::ostringstream os;
    os << "eigvals_hermitian: input deviates from Hermitian by " << dev
       << " (tolerance " << tol << ")";
    throw PreconditionError(os.str());
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(a, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) {
    throw NumericError("Hermitian eigendecomposition did not converge");
  }
  return es.eigenvalues();
}

ComplexMatrix random_unitary(int d, Rng& rng) {
  if (d < 1 || d > kMaxMatrixDim) {
    throw DimensionError("random_unitary: dimension out of range");
  }
  ComplexMatrix g(d, d);
  for (int j = 0; j < d; ++j) {
    for (int i = 0; i < d; ++i) {
      g(i, j) = rng.complex_gaussian();
    }
  }
  // Modified Gram-Schmidt; the diagonal of the implicit triangular factor is
  // kept real positive, which makes the result Haar-distributed.
  for (int j = 0; j < d; ++j) {
    for (int k = 0; k < j; ++k) {
      const Complex proj = g.col(k).dot(g.col(j));  // conjugates col(k)
      g.col(j) -= proj * g.col(k);
    }
    const double nrm = g.col(j).norm();
    if (nrm < 1e-300) {
      throw NumericError("random_unitary: Gram-Schmidt breakdown");
    }
    g.col(j) /= nrm;
  }
  return g;
}

}  // namespace qbound
