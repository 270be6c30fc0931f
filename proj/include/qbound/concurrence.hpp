#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "qbound/bipartite.hpp"

namespace qbound {

/// Analytical concurrence lower bound: scale_factor * f_value clamped to 0
/// from below, with scale_factor = sqrt(2n / ((n-1)(n+1)^2)) and
/// n = max(dims.m, dims.n). Clamping triggers at the criterion tolerance so
/// states with f = 0 in exact arithmetic report a clean zero.
struct ConcurrenceBound {
  double f_value = 0.0;
  double scale_factor = 0.0;
  double lower_bound = 0.0;
  bool clamped = false;
};

struct TwoCopyExpectations {
  double k1 = 0.0;  // 1 - Tr rho_A^2
  double k2 = 0.0;  // 1 - Tr rho_B^2
  bool explicit_path = false;  // false when the doubled space exceeded the cap
};

/// Settings for the convex-roof search.
struct RoofSettings {
  int restarts = 20;
  int ensemble_factor = 2;   // ensemble size L = factor * rank(rho)
  int max_iters = 20000;     // per restart
  double step = 0.1;         // initial perturbation scale
  double tol = 1e-6;         // stop once the step shrinks below this
  std::uint64_t seed = 1;
};

/// Best ensemble found by the convex-roof search; always an upper bound.
struct RoofEstimate {
  double upper_value = 0.0;
  int ensemble_size = 0;
  int restarts_used = 0;
  bool converged = false;  // every restart hit the step tolerance in budget
  std::vector<std::pair<double, ComplexVector>> best_ensemble;
};

/// sqrt(2 (1 - Tr rho_A^2)), cross-checked against 4 sum_{i<j} mu_i mu_j.
double pure_concurrence(const ComplexVector& psi, BipartiteDims dims);

/// The analytical mixed-state bound; requires min(m, n) >= 2.
ConcurrenceBound lower_bound(const BipartiteDensity& s);

/**
 * Marginal linear entropies via the two-copy observables K_1 = 4 P_-^(A) (x) 1
 * and K_2 = 4 (1 (x) P_-^(B)): k_i = Tr[(rho (x) rho) K_i] / 2. Both the
 * explicit doubled-space contraction and the purity shortcut are evaluated
 * and must agree to 1e-10; if the doubled space exceeds the dimension cap the
 * shortcut alone is used and explicit_path is false.
 */
TwoCopyExpectations two_copy_expectations(const BipartiteDensity& s);

/// Pure-state concurrence through the two-copy representation
/// sqrt(<psi psi| 4 P_-^(A) (x) P_-^(B) |psi psi>); equals pure_concurrence.
double pure_two_copy_concurrence(const ComplexVector& psi, BipartiteDims dims);

/**
 * Gap polynomial of the mixing step:
 *   F = -(3/16)(x1+x2)^2 + (1/8)(x1+x2)(x3+x4) + (1/4) x3 x4
 *       - (1/2)(x3+x4) + (1/2)(x1+x2);
 * non-negative over the admissible overlap region. Arguments must be in [0, 1].
 */
double mixing_gap_F(double x1, double x2, double x3, double x4);

/**
 * Convex-roof upper bound: minimizes sum_i p_i C(psi_i) over ensembles
 * |psi~_i> = sum_k U_ik sqrt(lambda_k) |e_k> with U an L x r isometry over
 * the eigenensemble of rho. Random-restart greedy search with shrinking
 * random perturbation steps; deterministic for a fixed seed.
 */
RoofEstimate roof_upper(const BipartiteDensity& s, const RoofSettings& settings = {});

}  // namespace qbound
