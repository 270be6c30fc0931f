#pragma once

#include <string>

#include "qbound/bipartite.hpp"

namespace qbound {

/**
 * The single observable whose expectation on rho - rho_A (x) rho_B reads out
 * ||R(rho - rho_A (x) rho_B)||. Built from the SVD U D V^dagger of the
 * realigned difference: the isometry core V Itilde U^dagger is pulled back
 * through the realignment's transpose map,
 *   W = [R^{-1}((V Itilde U^dagger)^T)]^T,
 * so that Tr[W sigma] = sum of singular values of R(sigma).
 */
struct WitnessOperator {
  ComplexMatrix w_raw;        // mn x mn, as constructed
  ComplexMatrix w_hermitian;  // (W + W^dagger)/2, the measurable part
  BipartiteDims dims;
  std::string source_state_hash;  // FNV-1a digest of the source rho bytes
  bool degenerate = false;        // source was a product state (zero difference)
  double achieved_expectation = 0.0;  // Tr[W sigma] on the source state
  double trace_norm_value = 0.0;      // ||R(sigma)|| of the source state
};

WitnessOperator build_witness(const BipartiteDensity& s);

/// Re Tr[w_hermitian (rho - rho_A (x) rho_B)]. Equals the realigned trace
/// norm on the witness's source state; on any other state it is only a lower
/// estimate of that state's realigned norm.
double witness_expectation(const WitnessOperator& w, const BipartiteDensity& s);

/// FNV-1a 64-bit digest of dims and raw entry bytes, as fixed-width hex.
std::string state_hash(const BipartiteDensity& s);

}  // namespace qbound
