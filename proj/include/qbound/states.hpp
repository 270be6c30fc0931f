#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qbound/bipartite.hpp"

namespace qbound {

/// Isotropic state in d x d: the U (x) U* invariant mixture of the maximally
/// entangled state with white noise, parameterized by fidelity F in [0, 1].
BipartiteDensity isotropic(int d, double fidelity);

/// The 3 x 3 bound entangled state, real and symmetric, 0 < a < 1.
BipartiteDensity horodecki_a(double a);

/// p * horodecki_a(a) + (1 - p) * I/9.
BipartiteDensity horodecki_noisy(double a, double p);

/**
 * The 3 x 3 one-parameter family
 *   rho(alpha) = 2/7 |Psi+><Psi+| + alpha/7 sigma_+ + (5 - alpha)/7 sigma_-
 * for 2 <= alpha <= 5, with sigma_+/- the cyclic product-state mixtures over
 * |01>,|12>,|20> and |10>,|21>,|02|. The sigma_+ weight alpha/7 is what
 * normalizes the family to unit trace.
 */
BipartiteDensity alpha_family(double alpha);

/// |Psi+><Psi+| with |Psi+> = (1/sqrt d) sum_i |ii>.
BipartiteDensity max_entangled(int d);

/// Random pure product state |a><a| (x) |b><b|, deterministic per seed.
BipartiteDensity random_product(int m, int n, std::uint64_t seed);

/// Ginibre-induced random state G G^dagger / Tr, deterministic per seed.
BipartiteDensity random_density(int m, int n, int rank, std::uint64_t seed);

/// sum_i sqrt(mu_i) |ii>; mu must be non-negative and sum to 1.
ComplexVector pure_from_schmidt(const RealVector& mu, BipartiteDims dims);

/// Haar-random pure state on m x n.
ComplexVector random_pure(int m, int n, Rng& rng);

/// Random mixture of up to max_terms pure product states (separable by
/// construction); term count and weights drawn from the rng.
BipartiteDensity random_separable(int m, int n, int max_terms, Rng& rng);

// --- CLI state-selection grammar -------------------------------------------

enum class StateFamily {
  isotropic,
  horodecki_a,
  horodecki_noisy,
  alpha_family,
  max_entangled,
  product,
  random_ginibre,
  pure_schmidt,
};

/// Named parameters for one state family; ranges are enforced per family.
struct StateSpec {
  StateFamily family = StateFamily::isotropic;
  int d = 2;
  double fidelity = 1.0;
  double a = 0.5;
  double p = 1.0;
  double alpha = 2.0;
  std::uint64_t seed = 1;
  int rank = 1;
  std::vector<double> mu;
};

BipartiteDensity make_state(const StateSpec& spec);

StateFamily parse_family(const std::string& name);
std::string family_name(StateFamily family);

}  // namespace qbound
