#include "qbound/bipartite.hpp"

#include <cmath>
#include <sstream>

#include "qbound/errors.hpp"

namespace qbound {

namespace {

void require_dims(const BipartiteDims& dims) {
  if (dims.m < 1 || dims.n < 1) {
    throw DimensionError("bipartite dims must be positive");
  }
  if (dims.total() > kMaxMatrixDim) {
    throw DimensionError("bipartite dims exceed the configured cap");
  }
}

void require_square(const ComplexMatrix& x, int d, const char* who) {
  if (x.rows() != d || x.cols() != d) {
    std::ostringstream os;
    os << who << ": expected " << d << "x" << d << " matrix, got " << x.rows()
       << "x" << x.cols();
    throw DimensionError(os.str());
  }
}

}  // namespace

BipartiteDensity::BipartiteDensity(BipartiteDims dims, ComplexMatrix rho,
                                   const DensityTolerances& tol)
    : dims_(dims), rho_(std::move(rho)) {
  require_dims(dims_);
  require_square(rho_, dims_.total(), "BipartiteDensity");
  check_matrix(rho_);

  const double herm = hermiticity_error(rho_);
  if (herm > tol.hermitian) {
    std::ostringstream os;
    os << "density matrix is not Hermitian: max |rho - rho^dagger| = " << herm
       << " exceeds " << tol.hermitian;
    throw PreconditionError(os.str());
  }
  const double tr_dev = std::abs(rho_.trace() - Complex(1.0, 0.0));
  if (tr_dev > tol.trace) {
    std::ostringstream os;
    os << "density matrix trace deviates from 1 by " << tr_dev << " (exceeds "
       << tol.trace << ")";
    throw PreconditionError(os.str());
  }
  // Hermiticity was verified entrywise, so the solver precondition is looser.
  const RealVector ev = eigvals_hermitian(rho_, tol.hermitian * 10);
  if (ev(0) < tol.eigenvalue) {
    std::ostringstream os;
    os << "density matrix is not positive semidefinite: min eigenvalue "
       << ev(0) << " below " << tol.eigenvalue;
    throw PreconditionError(os.str());
  }
}

ComplexMatrix partial_trace_b_raw(const ComplexMatrix& x, BipartiteDims dims) {
  require_dims(dims);
  require_square(x, dims.total(), "partial_trace_b");
  const int m = dims.m, n = dims.n;
  ComplexMatrix out = ComplexMatrix::Zero(m, m);
  for (int i = 0; i < m; ++i) {
    for (int k = 0; k < m; ++k) {
      Complex acc = 0.0;
      for (int j = 0; j < n; ++j) {
        acc += x(i * n + j, k * n + j);
      }
      out(i, k) = acc;
    }
  }
  return out;
}

ComplexMatrix partial_trace_a_raw(const ComplexMatrix& x, BipartiteDims dims) {
  require_dims(dims);
  require_square(x, dims.total(), "partial_trace_a");
  const int m = dims.m, n = dims.n;
  ComplexMatrix out = ComplexMatrix::Zero(n, n);
  for (int j = 0; j < n; ++j) {
    for (int l = 0; l < n; ++l) {
      Complex acc = 0.0;
      for (int i = 0; i < m; ++i) {
        acc += x(i * n + j, i * n + l);
      }
      out(j, l) = acc;
    }
  }
  return out;
}

ComplexMatrix partial_trace_b(const BipartiteDensity& s) {
  return partial_trace_b_raw(s.rho(), s.dims());
}

ComplexMatrix partial_trace_a(const BipartiteDensity& s) {
  return partial_trace_a_raw(s.rho(), s.dims());
}

ComplexMatrix partial_transpose_a(const BipartiteDensity& s) {
  const int m = s.dims().m, n = s.dims().n;
  const ComplexMatrix& rho = s.rho();
  ComplexMatrix out(m * n, m * n);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < m; ++k) {
        for (int l = 0; l < n; ++l) {
          out(i * n + j, k * n + l) = rho(k * n + j, i * n + l);
        }
      }
    }
  }
  return out;
}

ComplexMatrix realign(const ComplexMatrix& x, BipartiteDims dims) {
  require_dims(dims);
  require_square(x, dims.total(), "realign");
  const int m = dims.m, n = dims.n;
  ComplexMatrix out(m * m, n * n);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      for (int k = 0; k < n; ++k) {
        for (int l = 0; l < n; ++l) {
          out(i * m + j, k * n + l) = x(i * n + k, j * n + l);
        }
      }
    }
  }
  return out;
}

ComplexMatrix realign_inverse(const ComplexMatrix& y, BipartiteDims dims) {
  require_dims(dims);
  const int m = dims.m, n = dims.n;
  if (y.rows() != m * m || y.cols() != n * n) {
    std::ostringstream os;
    os << "realign_inverse: expected " << m * m << "x" << n * n
       << " matrix, got " << y.rows() << "x" << y.cols();
    throw DimensionError(os.str());
  }
  ComplexMatrix out(m * n, m * n);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      for (int k = 0; k < n; ++k) {
        for (int l = 0; l < n; ++l) {
          out(i * n + k, j * n + l) = y(i * m + j, k * n + l);
        }
      }
    }
  }
  return out;
}

ComplexMatrix realign_adjoint(const ComplexMatrix& y, BipartiteDims dims) {
  return realign_inverse(y, dims);
}

SchmidtDecomposition schmidt(const ComplexVector& psi, BipartiteDims dims) {
  require_dims(dims);
  if (psi.size() != dims.total()) {
    throw DimensionError("schmidt: vector length does not match dims");
  }
  const double nrm = psi.norm();
  if (std::abs(nrm - 1.0) > 1e-10) {
    std::ostringstream os;
    os << "schmidt: state norm " << nrm << " deviates from 1 beyond 1e-10";
    throw PreconditionError(os.str());
  }
  const int m = dims.m, n = dims.n;
  ComplexMatrix coeff(m, n);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) {
      coeff(i, j) = psi(i * n + j);
    }
  }
  SvdResult s = svd(coeff);
  const int r = static_cast<int>(s.values.size());  // min(m, n)

  SchmidtDecomposition out;
  out.mu = RealVector(r);
  for (int i = 0; i < r; ++i) {
    const double mu = s.values(i) * s.values(i);
    out.mu(i) = (mu < 1e-12) ? 0.0 : mu;
  }
  out.basis_a = s.u.leftCols(r);
  // M = U S V^dagger means |psi> = sum_k s_k |u_k> (x) conj(|v_k>).
  out.basis_b = s.v.leftCols(r).conjugate();
  return out;
}

}  // namespace qbound
