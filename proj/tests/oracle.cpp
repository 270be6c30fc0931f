#include "oracle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qbound::oracle {

std::vector<double> jacobi_singular_values(const ComplexMatrix& a) {
  // Work on the tall orientation; singular values are transpose-invariant.
  ComplexMatrix w = (a.rows() >= a.cols()) ? a : ComplexMatrix(a.transpose());
  const long cols = w.cols();
  const double fro = w.norm();
  if (fro == 0.0) return std::vector<double>(cols, 0.0);
  // Columns this small contribute below the agreement tolerance and only
  // keep the sweep loop grinding on rounding noise.
  const double negligible = 1e-15 * fro;

  bool rotated = true;
  int sweep = 0;
  while (rotated && sweep < 100) {
    rotated = false;
    ++sweep;
    for (long i = 0; i + 1 < cols; ++i) {
      for (long j = i + 1; j < cols; ++j) {
        const double alpha = w.col(i).squaredNorm();
        const double beta = w.col(j).squaredNorm();
        if (alpha < negligible * negligible || beta < negligible * negligible)
          continue;
        const Complex gamma = w.col(i).dot(w.col(j));
        const double g = std::abs(gamma);
        // Rotations leave eps-level couplings behind in other pairs, so a
        // machine-epsilon threshold never settles; 1e-14 relative does.
        if (g <= 1e-14 * std::sqrt(alpha * beta) || g == 0.0) continue;
        rotated = true;
        const Complex phase = gamma / g;
        const double tau = (beta - alpha) / (2.0 * g);
        const double t =
            (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = c * t;
        // Unitary column mix; kills the (i, j) off-diagonal Gram entry.
        const ComplexVector vi = w.col(i);
        const ComplexVector vj = std::conj(phase) * w.col(j);
        w.col(i) = c * vi - s * vj;
        w.col(j) = s * vi + c * vj;
      }
    }
  }
  if (rotated) {
    throw std::runtime_error("jacobi_singular_values: no convergence");
  }

  std::vector<double> sv(cols);
  for (long i = 0; i < cols; ++i) sv[i] = w.col(i).norm();
  std::sort(sv.begin(), sv.end(), std::greater<>());
  return sv;
}

double jacobi_trace_norm(const ComplexMatrix& a) {
  double sum = 0.0;
  for (double s : jacobi_singular_values(a)) sum += s;
  return sum;
}

ComplexMatrix kron_loops(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (long i = 0; i < out.rows(); ++i) {
    for (long j = 0; j < out.cols(); ++j) {
      out(i, j) = a(i / b.rows(), j / b.cols()) * b(i % b.rows(), j % b.cols());
    }
  }
  return out;
}

ComplexMatrix partial_trace_b_loops(const ComplexMatrix& rho, int m, int n) {
  ComplexMatrix out = ComplexMatrix::Zero(m, m);
  for (int i = 0; i < m; ++i)
    for (int k = 0; k < m; ++k)
      for (int j = 0; j < n; ++j) out(i, k) += rho(i * n + j, k * n + j);
  return out;
}

ComplexMatrix partial_trace_a_loops(const ComplexMatrix& rho, int m, int n) {
  ComplexMatrix out = ComplexMatrix::Zero(n, n);
  for (int j = 0; j < n; ++j)
    for (int l = 0; l < n; ++l)
      for (int i = 0; i < m; ++i) out(j, l) += rho(i * n + j, i * n + l);
  return out;
}

ComplexMatrix realign_loops(const ComplexMatrix& x, int m, int n) {
  ComplexMatrix out(m * m, n * n);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l)
          out(i * m + j, k * n + l) = x(i * n + k, j * n + l);
  return out;
}

double enhanced_f_loops(const ComplexMatrix& rho, int m, int n) {
  const ComplexMatrix ra = partial_trace_b_loops(rho, m, n);
  const ComplexMatrix rb = partial_trace_a_loops(rho, m, n);
  const ComplexMatrix sigma = rho - kron_loops(ra, rb);

  double tr_a2 = 0.0, tr_b2 = 0.0;
  for (int i = 0; i < m; ++i)
    for (int k = 0; k < m; ++k) tr_a2 += (ra(i, k) * ra(k, i)).real();
  for (int j = 0; j < n; ++j)
    for (int l = 0; l < n; ++l) tr_b2 += (rb(j, l) * rb(l, j)).real();

  const double ga = std::max(0.0, 1.0 - tr_a2);
  const double gb = std::max(0.0, 1.0 - tr_b2);
  return jacobi_trace_norm(realign_loops(sigma, m, n)) - std::sqrt(ga * gb);
}

}  // namespace qbound::oracle
