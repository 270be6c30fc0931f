#include "qbound/concurrence.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "qbound/criteria.hpp"
#include "qbound/errors.hpp"

namespace qbound {

namespace {

void require_normalized(const ComplexVector& psi) {
  const double nrm = psi.norm();
  if (std::abs(nrm - 1.0) > 1e-10) {
    std::ostringstream os;
    os << "pure state norm " << nrm << " deviates from 1 beyond 1e-10";
    throw PreconditionError(os.str());
  }
}

// rho_A of |psi><psi| as an m x m matrix: M M^dagger with M_ij = psi_{i n + j}.
ComplexMatrix marginal_a(const ComplexVector& psi, BipartiteDims dims) {
  ComplexMatrix coeff(dims.m, dims.n);
  for (int i = 0; i < dims.m; ++i) {
    for (int j = 0; j < dims.n; ++j) {
      coeff(i, j) = psi(i * dims.n + j);
    }
  }
  return coeff * coeff.adjoint();
}

}  // namespace

double pure_concurrence(const ComplexVector& psi, BipartiteDims dims) {
  if (psi.size() != dims.total()) {
    throw DimensionError("pure_concurrence: vector length does not match dims");
  }
  require_normalized(psi);

  const double tr_a2 = purity(marginal_a(psi, dims));
  const double direct = std::sqrt(std::max(0.0, 2.0 * (1.0 - tr_a2)));

  // Schmidt route: C^2 = 4 sum_{i<j} mu_i mu_j. Kept as a live cross-check;
  // the two routes must agree for any normalized input.
  const SchmidtDecomposition sd = schmidt(psi, dims);
  double cross = 0.0;
  for (int i = 0; i < sd.mu.size(); ++i) {
    for (int j = i + 1; j < sd.mu.size(); ++j) {
      cross += sd.mu(i) * sd.mu(j);
    }
  }
  const double via_schmidt = std::sqrt(std::max(0.0, 4.0 * cross));
  if (std::abs(direct - via_schmidt) > 1e-10) {
    std::ostringstream os;
    os << "pure_concurrence: marginal-purity route " << direct
       << " and Schmidt route " << via_schmidt << " disagree";
    throw NumericError(os.str());
  }
  return direct;
}

ConcurrenceBound lower_bound(const BipartiteDensity& s) {
  const int m = s.dims().m, n = s.dims().n;
  if (std::min(m, n) < 2) {
    throw DimensionError(
        "lower_bound: one-dimensional subsystem, concurrence is trivially 0");
  }
  const int big = std::max(m, n);
  ConcurrenceBound b;
  b.scale_factor =
      std::sqrt(2.0 * big / ((big - 1.0) * (big + 1.0) * (big + 1.0)));
  b.f_value = enhanced_f(s);
  // Clamp at the criterion tolerance, not at exact zero: product states land
  // at f = 0 in exact arithmetic and must not report a noise-level bound.
  if (b.f_value > kCriterionTol) {
    b.lower_bound = b.scale_factor * b.f_value;
    b.clamped = false;
  } else {
    b.lower_bound = 0.0;
    b.clamped = true;
  }
  return b;
}

namespace {

// Antisymmetric projector P_- on H_d (x) H_d: (I - SWAP)/2.
ComplexMatrix antisymmetric_projector(int d) {
  const int dd = d * d;
  ComplexMatrix p = 0.5 * ComplexMatrix::Identity(dd, dd);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      p(i * d + j, j * d + i) -= 0.5;
    }
  }
  return p;
}

}  // namespace

TwoCopyExpectations two_copy_expectations(const BipartiteDensity& s) {
  const int m = s.dims().m, n = s.dims().n;
  TwoCopyExpectations out;
  out.k1 = 1.0 - purity(partial_trace_b(s));
  out.k2 = 1.0 - purity(partial_trace_a(s));

  const long doubled = static_cast<long>(m) * n * m * n;
  if (doubled > kMaxMatrixDim) {
    out.explicit_path = false;
    return out;
  }
  out.explicit_path = true;

  // K_1 on the doubled space ordered A1 B1 A2 B2:
  //   K1[(a1 b1 a2 b2),(a1' b1' a2' b2')]
  //     = 4 (P_-^A)[(a1 a2),(a1' a2')] delta_{b1 b1'} delta_{b2 b2'}.
  const ComplexMatrix rr = tensor(s.rho(), s.rho());
  auto contract = [&](const ComplexMatrix& pminus, bool on_a) {
    // Tr[(rho (x) rho) K]/2 without materializing K: reindex the trace sum.
    Complex acc = 0.0;
    const int d = on_a ? m : n;
    for (int a1 = 0; a1 < m; ++a1)
      for (int b1 = 0; b1 < n; ++b1)
        for (int a2 = 0; a2 < m; ++a2)
          for (int b2 = 0; b2 < n; ++b2)
            for (int a1p = 0; a1p < m; ++a1p)
              for (int b1p = 0; b1p < n; ++b1p)
                for (int a2p = 0; a2p < m; ++a2p)
                  for (int b2p = 0; b2p < n; ++b2p) {
                    double k;
                    if (on_a) {
                      if (b1 != b1p || b2 != b2p) continue;
                      k = pminus(a1 * d + a2, a1p * d + a2p).real();
                    } else {
                      if (a1 != a1p || a2 != a2p) continue;
                      k = pminus(b1 * d + b2, b1p * d + b2p).real();
                    }
                    const long row = ((a1 * n + b1) * static_cast<long>(m * n)) + a2 * n + b2;
                    const long col = ((a1p * n + b1p) * static_cast<long>(m * n)) + a2p * n + b2p;
                    acc += rr(col, row) * k;  // Tr[rr K] = sum rr(col,row) K(row,col)
                  }
    return 4.0 * acc.real() / 2.0;
  };

  const ComplexMatrix pa = antisymmetric_projector(m);
  const ComplexMatrix pb = antisymmetric_projector(n);
  const double k1_explicit = contract(pa, true);
  const double k2_explicit = contract(pb, false);
  if (std::abs(k1_explicit - out.k1) > 1e-10 ||
      std::abs(k2_explicit - out.k2) > 1e-10) {
    std::ostringstream os;
    os << "two_copy_expectations: explicit path (" << k1_explicit << ", "
       << k2_explicit << ") disagrees with purity shortcut (" << out.k1 << ", "
       << out.k2 << ")";
    throw NumericError(os.str());
  }
  // Report the explicitly measured values; they passed the cross-check.
  out.k1 = k1_explicit;
  out.k2 = k2_explicit;
  return out;
}

double pure_two_copy_concurrence(const ComplexVector& psi, BipartiteDims dims) {
  if (psi.size() != dims.total()) {
    throw DimensionError("pure_two_copy_concurrence: vector length mismatch");
  }
  require_normalized(psi);
  const int m = dims.m, n = dims.n;
  const long doubled = static_cast<long>(m) * n * m * n;
  if (doubled > kMaxMatrixDim) {
    throw DimensionError("pure_two_copy_concurrence: doubled space exceeds cap");
  }

  const ComplexVector psi2 = tensor_vec(psi, psi);  // ordered A1 B1 A2 B2
  const ComplexMatrix pa = antisymmetric_projector(m);
  const ComplexMatrix pb = antisymmetric_projector(n);

  // <psi psi| 4 P_-^A (x) P_-^B |psi psi> with the A copies at slots 1,3 and
  // the B copies at slots 2,4.
  Complex acc = 0.0;
  for (int a1 = 0; a1 < m; ++a1)
    for (int b1 = 0; b1 < n; ++b1)
      for (int a2 = 0; a2 < m; ++a2)
        for (int b2 = 0; b2 < n; ++b2) {
          const long row = ((a1 * n + b1) * static_cast<long>(m * n)) + a2 * n + b2;
          Complex inner = 0.0;
          for (int a1p = 0; a1p < m; ++a1p)
            for (int b1p = 0; b1p < n; ++b1p)
              for (int a2p = 0; a2p < m; ++a2p)
                for (int b2p = 0; b2p < n; ++b2p) {
                  const Complex k = pa(a1 * m + a2, a1p * m + a2p) *
                                    pb(b1 * n + b2, b1p * n + b2p);
                  if (k == Complex(0.0, 0.0)) continue;
                  const long col =
                      ((a1p * n + b1p) * static_cast<long>(m * n)) + a2p * n + b2p;
                  inner += k * psi2(col);
                }
          acc += std::conj(psi2(row)) * inner;
        }
  const double val = 4.0 * acc.real();
  return std::sqrt(std::max(0.0, val));
}

double mixing_gap_F(double x1, double x2, double x3, double x4) {
  for (double x : {x1, x2, x3, x4}) {
    if (!(x >= 0.0 && x <= 1.0)) {
      throw PreconditionError("mixing_gap_F: arguments must lie in [0, 1]");
    }
  }
  const double s12 = x1 + x2;
  const double s34 = x3 + x4;
  return -(3.0 / 16.0) * s12 * s12 + (1.0 / 8.0) * s12 * s34 +
         0.25 * x3 * x4 - 0.5 * s34 + 0.5 * s12;
}

namespace {

using RowMajorMatrix =
    Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

// Average ensemble concurrence for the isometry u (L x r) over the
// eigenensemble columns b_k = sqrt(lambda_k) e_k.
double ensemble_average(const ComplexMatrix& u, const ComplexMatrix& b,
                        BipartiteDims dims, RowMajorMatrix& scratch) {
  scratch.noalias() = u * b.transpose();  // L x d, row i = unnormalized psi_i
  const int m = dims.m, n = dims.n;
  double total = 0.0;
  for (long i = 0; i < scratch.rows(); ++i) {
    const double p = scratch.row(i).squaredNorm();
    if (p < 1e-15) continue;
    // Tr[(M M^dagger)^2] with M the m x n reshape of the row; rows are
    // contiguous in the row-major scratch, so the map is stride-free.
    Eigen::Map<const RowMajorMatrix> mview(scratch.data() + i * scratch.cols(),
                                           m, n);
    const ComplexMatrix g = mview * mview.adjoint();
    const double tr2 = g.squaredNorm();  // g Hermitian
    const double c2 = 2.0 * (1.0 - tr2 / (p * p));
    total += p * std::sqrt(std::max(0.0, c2));
  }
  return total;
}

// Orthonormalize columns in place (modified Gram-Schmidt).
void orthonormalize_columns(ComplexMatrix& a) {
  for (long j = 0; j < a.cols(); ++j) {
    for (long k = 0; k < j; ++k) {
      const Complex proj = a.col(k).dot(a.col(j));
      a.col(j) -= proj * a.col(k);
    }
    const double nrm = a.col(j).norm();
    if (nrm < 1e-300) throw NumericError("roof_upper: isometry degenerated");
    a.col(j) /= nrm;
  }
}

}  // namespace

RoofEstimate roof_upper(const BipartiteDensity& s, const RoofSettings& settings) {
  if (settings.restarts < 1 || settings.ensemble_factor < 1 ||
      settings.max_iters < 1) {
    throw PreconditionError("roof_upper: settings must be positive");
  }
  const BipartiteDims dims = s.dims();
  const int d = dims.total();

  const HermitianEig eig = eig_hermitian(s.rho(), 1e-9);
  int rank = 0;
  for (int i = 0; i < d; ++i) {
    if (eig.values(i) > 1e-12) ++rank;
  }
  if (rank == 0) throw NumericError("roof_upper: state has no spectrum");

  // b columns: sqrt(lambda_k) e_k for the kept spectrum.
  ComplexMatrix b(d, rank);
  {
    int c = 0;
    for (int i = 0; i < d; ++i) {
      if (eig.values(i) > 1e-12) {
        b.col(c++) = std::sqrt(eig.values(i)) * eig.vectors.col(i);
      }
    }
  }

  const int L = settings.ensemble_factor * rank;
  Rng rng(settings.seed);

  ComplexMatrix u(L, rank), trial(L, rank);
  RowMajorMatrix scratch(L, d);
  RoofEstimate best;
  best.upper_value = std::numeric_limits<double>::infinity();
  best.ensemble_size = L;
  best.restarts_used = settings.restarts;
  bool all_converged = true;
  ComplexMatrix best_u;

  for (int restart = 0; restart < settings.restarts; ++restart) {
    for (int j = 0; j < rank; ++j)
      for (int i = 0; i < L; ++i) u(i, j) = rng.complex_gaussian();
    orthonormalize_columns(u);
    double current = ensemble_average(u, b, dims, scratch);

    double step = settings.step;
    int rejections = 0;
    bool converged = false;
    for (int iter = 0; iter < settings.max_iters; ++iter) {
      trial = u;
      for (int j = 0; j < rank; ++j)
        for (int i = 0; i < L; ++i)
          trial(i, j) += step * rng.complex_gaussian();
      orthonormalize_columns(trial);
      const double value = ensemble_average(trial, b, dims, scratch);
      if (value < current) {
        current = value;
        u.swap(trial);
        rejections = 0;
      } else if (++rejections >= 50) {
        rejections = 0;
        step *= 0.5;
        if (step < settings.tol) {
          converged = true;
          break;
        }
      }
    }
    all_converged = all_converged && converged;
    if (current < best.upper_value) {
      best.upper_value = current;
      best_u = u;
    }
  }
  best.converged = all_converged;

  // Materialize the winning ensemble.
  scratch.noalias() = best_u * b.transpose();
  for (int i = 0; i < L; ++i) {
    const double p = scratch.row(i).squaredNorm();
    if (p < 1e-15) continue;
    ComplexVector psi = scratch.row(i).transpose() / std::sqrt(p);
    best.best_ensemble.emplace_back(p, std::move(psi));
  }

  // Cross-check against the analytical bound; a violation means a bug in one
  // of the two paths.
  if (std::min(dims.m, dims.n) >= 2) {
    const ConcurrenceBound lb = lower_bound(s);
    if (best.upper_value < lb.lower_bound - 1e-6) {
      std::ostringstream os;
      os << "roof_upper " << best.upper_value
         << " fell below the analytical lower bound " << lb.lower_bound;
      throw NumericError(os.str());
    }
  }
  return best;
}

}  // namespace qbound
