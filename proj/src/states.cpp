#include "qbound/states.hpp"

#include <cmath>
#include <sstream>

#include "qbound/errors.hpp"

namespace qbound {

namespace {

void require_range(bool ok, const char* what) {
  if (!ok) throw PreconditionError(std::string("parameter out of range: ") + what);
}

ComplexVector max_entangled_ket(int d) {
  ComplexVector psi = ComplexVector::Zero(d * d);
  const double c = 1.0 / std::sqrt(static_cast<double>(d));
  for (int i = 0; i < d; ++i) {
    psi(i * d + i) = c;
  }
  return psi;
}

}  // namespace

BipartiteDensity isotropic(int d, double fidelity) {
  require_range(d >= 2, "d >= 2");
  require_range(fidelity >= 0.0 && fidelity <= 1.0, "F in [0,1]");
  const ComplexVector psi = max_entangled_ket(d);
  const ComplexMatrix proj = psi * psi.adjoint();
  const int dd = d * d;
  ComplexMatrix rho = ((1.0 - fidelity) / (dd - 1)) *
                          (ComplexMatrix::Identity(dd, dd) - proj) +
                      fidelity * proj;
  const double achieved = (psi.adjoint() * rho * psi)(0).real();
  if (std::abs(achieved - fidelity) > 1e-12) {
    throw NumericError("isotropic: fidelity self-check failed");
  }
  return BipartiteDensity({d, d}, std::move(rho));
}

BipartiteDensity horodecki_a(double a) {
  require_range(a > 0.0 && a < 1.0, "a in (0,1)");
  ComplexMatrix h = ComplexMatrix::Zero(9, 9);
  for (int i = 0; i < 9; ++i) h(i, i) = a;
  h(6, 6) = h(8, 8) = (1.0 + a) / 2.0;
  h(0, 4) = h(4, 0) = a;
  h(0, 8) = h(8, 0) = a;
  h(4, 8) = h(8, 4) = a;
  h(6, 8) = h(8, 6) = std::sqrt(1.0 - a * a) / 2.0;
  h /= (8.0 * a + 1.0);
  return BipartiteDensity({3, 3}, std::move(h));
}

BipartiteDensity horodecki_noisy(double a, double p) {
  require_range(p >= 0.0 && p <= 1.0, "p in [0,1]");
  const ComplexMatrix base = horodecki_a(a).rho();
  ComplexMatrix rho =
      p * base + ((1.0 - p) / 9.0) * ComplexMatrix::Identity(9, 9);
  return BipartiteDensity({3, 3}, std::move(rho));
}

BipartiteDensity alpha_family(double alpha) {
  require_range(alpha >= 2.0 && alpha <= 5.0, "alpha in [2,5]");
  const ComplexVector psi = max_entangled_ket(3);
  ComplexMatrix rho = (2.0 / 7.0) * (psi * psi.adjoint());

  auto basis_proj = [](int i, int j) {
    ComplexMatrix p = ComplexMatrix::Zero(9, 9);
    p(i * 3 + j, i * 3 + j) = 1.0;
    return p;
  };
  // sigma_+ cycles |01>,|12>,|20>; sigma_- cycles |10>,|21>,|02>.
  const ComplexMatrix sigma_plus =
      (basis_proj(0, 1) + basis_proj(1, 2) + basis_proj(2, 0)) / 3.0;
  const ComplexMatrix sigma_minus =
      (basis_proj(1, 0) + basis_proj(2, 1) + basis_proj(0, 2)) / 3.0;

  rho += (alpha / 7.0) * sigma_plus + ((5.0 - alpha) / 7.0) * sigma_minus;
  return BipartiteDensity({3, 3}, std::move(rho));
}

BipartiteDensity max_entangled(int d) {
  require_range(d >= 2, "d >= 2");
  const ComplexVector psi = max_entangled_ket(d);
  return BipartiteDensity({d, d}, psi * psi.adjoint());
}

ComplexVector random_pure(int m, int n, Rng& rng) {
  ComplexVector psi(m * n);
  for (int i = 0; i < m * n; ++i) psi(i) = rng.complex_gaussian();
  psi /= psi.norm();
  return psi;
}

BipartiteDensity random_product(int m, int n, std::uint64_t seed) {
  require_range(m >= 1 && n >= 1, "dims >= 1");
  Rng rng(seed);
  ComplexVector a(m), b(n);
  for (int i = 0; i < m; ++i) a(i) = rng.complex_gaussian();
  for (int i = 0; i < n; ++i) b(i) = rng.complex_gaussian();
  a /= a.norm();
  b /= b.norm();
  const ComplexVector psi = tensor_vec(a, b);
  return BipartiteDensity({m, n}, psi * psi.adjoint());
}

BipartiteDensity random_density(int m, int n, int rank, std::uint64_t seed) {
  require_range(m >= 1 && n >= 1, "dims >= 1");
  require_range(rank >= 1 && rank <= m * n, "1 <= rank <= m*n");
  Rng rng(seed);
  const int d = m * n;
  ComplexMatrix g(d, rank);
  for (int j = 0; j < rank; ++j) {
    for (int i = 0; i < d; ++i) {
      g(i, j) = rng.complex_gaussian();
    }
  }
  ComplexMatrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  // Exactly symmetrize away the last bits of rounding noise.
  rho = (rho + rho.adjoint().eval()) / 2.0;
  return BipartiteDensity({m, n}, std::move(rho));
}

BipartiteDensity random_separable(int m, int n, int max_terms, Rng& rng) {
  require_range(max_terms >= 1, "max_terms >= 1");
  const int terms = 1 + static_cast<int>(rng.uniform() * max_terms);
  ComplexMatrix rho = ComplexMatrix::Zero(m * n, m * n);
  double total = 0.0;
  for (int t = 0; t < terms; ++t) {
    ComplexVector a(m), b(n);
    for (int i = 0; i < m; ++i) a(i) = rng.complex_gaussian();
    for (int i = 0; i < n; ++i) b(i) = rng.complex_gaussian();
    a /= a.norm();
    b /= b.norm();
    const double w = rng.uniform() + 1e-6;
    const ComplexVector psi = tensor_vec(a, b);
    rho += w * (psi * psi.adjoint());
    total += w;
  }
  rho /= total;
  rho = (rho + rho.adjoint().eval()) / 2.0;
  return BipartiteDensity({m, n}, std::move(rho));
}

ComplexVector pure_from_schmidt(const RealVector& mu, BipartiteDims dims) {
  if (mu.size() < 1 || mu.size() > std::min(dims.m, dims.n)) {
    throw DimensionError("pure_from_schmidt: mu length exceeds min(m,n)");
  }
  double sum = 0.0;
  for (int i = 0; i < mu.size(); ++i) {
    require_range(mu(i) >= 0.0, "mu_i >= 0");
    sum += mu(i);
  }
  if (std::abs(sum - 1.0) > 1e-10) {
    std::ostringstream os;
    os << "pure_from_schmidt: sum mu = " << sum << " deviates from 1";
    throw PreconditionError(os.str());
  }
  ComplexVector psi = ComplexVector::Zero(dims.total());
  for (int i = 0; i < mu.size(); ++i) {
    psi(i * dims.n + i) = std::sqrt(mu(i));
  }
  return psi;
}

BipartiteDensity make_state(const StateSpec& spec) {
  switch (spec.family) {
    case StateFamily::isotropic:
      return isotropic(spec.d, spec.fidelity);
    case StateFamily::horodecki_a:
      return horodecki_a(spec.a);
    case StateFamily::horodecki_noisy:
      return horodecki_noisy(spec.a, spec.p);
    case StateFamily::alpha_family:
      return alpha_family(spec.alpha);
    case StateFamily::max_entangled:
      return max_entangled(spec.d);
    case StateFamily::product:
      return random_product(spec.d, spec.d, spec.seed);
    case StateFamily::random_ginibre:
      return random_density(spec.d, spec.d, spec.rank, spec.seed);
    case StateFamily::pure_schmidt: {
      RealVector mu(static_cast<long>(spec.mu.size()));
      for (size_t i = 0; i < spec.mu.size(); ++i) mu(i) = spec.mu[i];
      const int d = std::max(spec.d, static_cast<int>(spec.mu.size()));
      const ComplexVector psi = pure_from_schmidt(mu, {d, d});
      return BipartiteDensity({d, d}, psi * psi.adjoint());
    }
  }
  throw PreconditionError("unknown state family");
}

StateFamily parse_family(const std::string& name) {
  if (name == "isotropic") return StateFamily::isotropic;
  if (name == "horodecki_a") return StateFamily::horodecki_a;
  if (name == "horodecki_noisy") return StateFamily::horodecki_noisy;
  if (name == "alpha_family") return StateFamily::alpha_family;
  if (name == "max_entangled") return StateFamily::max_entangled;
  if (name == "product") return StateFamily::product;
  if (name == "random_ginibre") return StateFamily::random_ginibre;
  if (name == "pure_schmidt") return StateFamily::pure_schmidt;
  throw PreconditionError("unknown state family: " + name);
}

std::string family_name(StateFamily family) {
  switch (family) {
    case StateFamily::isotropic: return "isotropic";
    case StateFamily::horodecki_a: return "horodecki_a";
    case StateFamily::horodecki_noisy: return "horodecki_noisy";
    case StateFamily::alpha_family: return "alpha_family";
    case StateFamily::max_entangled: return "max_entangled";
    case StateFamily::product: return "product";
    case StateFamily::random_ginibre: return "random_ginibre";
    case StateFamily::pure_schmidt: return "pure_schmidt";
  }
  return "unknown";
}

}  // namespace qbound
