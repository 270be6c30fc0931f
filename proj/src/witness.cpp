#include "qbound/witness.hpp"

#include <cstdint>
#include <cstring>
#include <iomanip>
#include <sstream>

#include "qbound/errors.hpp"

namespace qbound {

namespace {

constexpr std::uint64_t kFnvOffset = 1469598103934665603ULL;
constexpr std::uint64_t kFnvPrime = 1099511628211ULL;

void fnv_mix(std::uint64_t& h, const void* data, size_t len) {
  const auto* bytes = static_cast<const unsigned char*>(data);
  for (size_t i = 0; i < len; ++i) {
    h ^= bytes[i];
    h *= kFnvPrime;
  }
}

}  // namespace

std::string state_hash(const BipartiteDensity& s) {
  std::uint64_t h = kFnvOffset;
  const std::int64_t m = s.dims().m, n = s.dims().n;
  fnv_mix(h, &m, sizeof(m));
  fnv_mix(h, &n, sizeof(n));
  const ComplexMatrix& rho = s.rho();
  for (long j = 0; j < rho.cols(); ++j) {
    for (long i = 0; i < rho.rows(); ++i) {
      const double re = rho(i, j).real();
      const double im = rho(i, j).imag();
      fnv_mix(h, &re, sizeof(re));
      fnv_mix(h, &im, sizeof(im));
    }
  }
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

WitnessOperator build_witness(const BipartiteDensity& s) {
  const BipartiteDims dims = s.dims();
  const int m2 = dims.m * dims.m;
  const int n2 = dims.n * dims.n;

  const ComplexMatrix sigma =
      s.rho() - tensor(partial_trace_b(s), partial_trace_a(s));
  const ComplexMatrix realigned = realign(sigma, dims);

  WitnessOperator w;
  w.dims = dims;
  w.source_state_hash = state_hash(s);
  w.trace_norm_value = 0.0;

  ComplexMatrix core;  // V Itilde U^dagger, n^2 x m^2, all singular values 1
  const double scale = realigned.norm();
  if (scale < 1e-14) {
    // Product state: the difference vanishes and the SVD factors are
    // arbitrary. Use the identity pair so the construction stays defined.
    w.degenerate = true;
    core = ComplexMatrix::Zero(n2, m2);
    for (int i = 0; i < std::min(m2, n2); ++i) core(i, i) = 1.0;
  } else {
    const SvdResult dec = svd(realigned);
    w.trace_norm_value = dec.values.sum();
    ComplexMatrix itilde = ComplexMatrix::Zero(n2, m2);
    for (int i = 0; i < std::min(m2, n2); ++i) itilde(i, i) = 1.0;
    core.noalias() = dec.v * itilde * dec.u.adjoint();
  }

  // Pull the core back through the realignment: W satisfies
  // Tr[W X] = Tr[core R(X)] for every mn x mn matrix X.
  w.w_raw = realign_inverse(core.transpose(), dims).transpose();
  w.w_hermitian = 0.5 * (w.w_raw + w.w_raw.adjoint().eval());
  w.achieved_expectation = (w.w_raw * sigma).trace().real();
  return w;
}

double witness_expectation(const WitnessOperator& w, const BipartiteDensity& s) {
  if (!(w.dims == s.dims())) {
    throw DimensionError("witness_expectation: dims mismatch");
  }
  const ComplexMatrix sigma =
      s.rho() - tensor(partial_trace_b(s), partial_trace_a(s));
  return (w.w_hermitian * sigma).trace().real();
}

}  // namespace qbound
