#pragma once

#include "qbound/bipartite.hpp"

namespace qbound {

/// One-sided separability tests never prove separability, only rule it out.
enum class Verdict { entangled, undecided };

/// Threshold slack on all criterion verdicts (double-precision SVD noise floor).
inline constexpr double kCriterionTol = 1e-9;

struct CriteriaReport {
  double ppt_min_eigenvalue = 0.0;      // min eig of rho^{T_A}
  double ccnr_value = 0.0;              // ||R(rho)||
  double f_value = 0.0;                 // enhanced criterion violation
  double nonlinear_witness_value = 0.0; // auxiliary diagnostic, see below

  Verdict ppt_verdict = Verdict::undecided;        // entangled iff min eig < -tol
  Verdict ccnr_verdict = Verdict::undecided;       // entangled iff value > 1 + tol
  Verdict enhanced_verdict = Verdict::undecided;   // entangled iff f > tol
  Verdict nonlinear_verdict = Verdict::undecided;  // entangled iff value < -tol
};

/// Minimum eigenvalue of the partial transpose; negative certifies entanglement.
double ppt_min_eigenvalue(const BipartiteDensity& s);

/// ||R(rho)||; a value above 1 certifies entanglement.
double ccnr_value(const BipartiteDensity& s);

/**
 * Violation of the criterion that strengthens CCNR:
 *   f(rho) = ||R(rho - rho_A (x) rho_B)|| - sqrt((1 - Tr rho_A^2)(1 - Tr rho_B^2)).
 * Positive f certifies entanglement; f also drives the concurrence lower bound.
 */
double enhanced_f(const BipartiteDensity& s);

/**
 * 1 - ||tau|| - (Tr rho_A^2 + Tr rho_B^2)/2 with tau := R(rho - rho_A (x) rho_B).
 * Auxiliary diagnostic only; negative values indicate entanglement under this
 * reading of tau. The choice of tau is an assumption and is labeled as such in
 * serialized reports.
 */
double nonlinear_witness_value(const BipartiteDensity& s);

/// All criterion values and verdicts in one pass.
CriteriaReport evaluate_criteria(const BipartiteDensity& s,
                                 double tol = kCriterionTol);

/// Tr[x^2] for Hermitian x, as a real number.
double purity(const ComplexMatrix& x);

}  // namespace qbound
