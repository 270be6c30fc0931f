#include "qbound/criteria.hpp"

#include <cmath>

namespace qbound {

double purity(const ComplexMatrix& x) {
  return (x * x).trace().real();
}

double ppt_min_eigenvalue(const BipartiteDensity& s) {
  return eigvals_hermitian(partial_transpose_a(s), 1e-9)(0);
}

double ccnr_value(const BipartiteDensity& s) {
  return trace_norm(realign(s.rho(), s.dims()));
}

namespace {

struct FParts {
  double realigned_norm;
  double geometric_term;  // sqrt((1 - Tr rho_A^2)(1 - Tr rho_B^2))
  double tr_a2, tr_b2;
};

FParts f_parts(const BipartiteDensity& s) {
  const ComplexMatrix rho_a = partial_trace_b(s);
  const ComplexMatrix rho_b = partial_trace_a(s);
  const ComplexMatrix sigma = s.rho() - tensor(rho_a, rho_b);
  FParts p;
  p.realigned_norm = trace_norm(realign(sigma, s.dims()));
  p.tr_a2 = purity(rho_a);
  p.tr_b2 = purity(rho_b);
  const double ga = std::max(0.0, 1.0 - p.tr_a2);
  const double gb = std::max(0.0, 1.0 - p.tr_b2);
  p.geometric_term = std::sqrt(ga * gb);
  return p;
}

}  // namespace

double enhanced_f(const BipartiteDensity& s) {
  const FParts p = f_parts(s);
  return p.realigned_norm - p.geometric_term;
}

double nonlinear_witness_value(const BipartiteDensity& s) {
  const FParts p = f_parts(s);
  return 1.0 - p.realigned_norm - 0.5 * (p.tr_a2 + p.tr_b2);
}

CriteriaReport evaluate_criteria(const BipartiteDensity& s, double tol) {
  CriteriaReport r;
  r.ppt_min_eigenvalue = ppt_min_eigenvalue(s);
  r.ccnr_value = ccnr_value(s);
  const FParts p = f_parts(s);
  r.f_value = p.realigned_norm - p.geometric_term;
  r.nonlinear_witness_value = 1.0 - p.realigned_norm - 0.5 * (p.tr_a2 + p.tr_b2);

  r.ppt_verdict = (r.ppt_min_eigenvalue < -tol) ? Verdict::entangled : Verdict::undecided;
  r.ccnr_verdict = (r.ccnr_value > 1.0 + tol) ? Verdict::entangled : Verdict::undecided;
  r.enhanced_verdict = (r.f_value > tol) ? Verdict::entangled : Verdict::undecided;
  r.nonlinear_verdict =
      (r.nonlinear_witness_value < -tol) ? Verdict::entangled : Verdict::undecided;
  return r;
}

}  // namespace qbound
