#pragma once

#include "qbound/linalg.hpp"

namespace qbound {

/**
 * Subsystem dimensions of an m x n bipartite system. The composite ket |ij>
 * maps to row i*n + j (subsystem A major) everywhere in this library; all
 * index gymnastics below assume that layout.
 */
struct BipartiteDims {
  int m = 0;  // dim of subsystem A
  int n = 0;  // dim of subsystem B

  int total() const { return m * n; }
  bool operator==(const BipartiteDims&) const = default;
};

struct DensityTolerances {
  double hermitian = 1e-10;   // entrywise |rho - rho^dagger|
  double trace = 1e-10;       // |Tr rho - 1|
  double eigenvalue = -1e-9;  // smallest admissible eigenvalue
};

/**
 * A density matrix tagged with its bipartite split. Construction validates
 * Hermiticity, unit trace and positive semidefiniteness (up to tolerance)
 * and throws PreconditionError naming the violated invariant and by how much.
 */
class BipartiteDensity {
 public:
  BipartiteDensity(BipartiteDims dims, ComplexMatrix rho,
                   const DensityTolerances& tol = {});

  const BipartiteDims& dims() const { return dims_; }
  const ComplexMatrix& rho() const { return rho_; }

 private:
  BipartiteDims dims_;
  ComplexMatrix rho_;
};

/// Schmidt data of a bipartite pure state: |psi> = sum_i sqrt(mu_i) |a_i>|b_i>.
struct SchmidtDecomposition {
  RealVector mu;          // descending, sums to 1; entries below 1e-12 clamped to 0
  ComplexMatrix basis_a;  // m x min(m,n), orthonormal columns
  ComplexMatrix basis_b;  // n x min(m,n), orthonormal columns
};

/// (rho_A)_{ik} = sum_j rho_{ij,kj}
ComplexMatrix partial_trace_b(const BipartiteDensity& s);
/// (rho_B)_{jl} = sum_i rho_{ij,il}
ComplexMatrix partial_trace_a(const BipartiteDensity& s);

/// (rho^{T_A})_{ij,kl} = rho_{kj,il}
ComplexMatrix partial_transpose_a(const BipartiteDensity& s);

/**
 * Realignment: (rho^R)_{ij,kl} = rho_{ik,jl}. Output is m^2 x n^2 with row
 * index i*m + j (both A indices) and column index k*n + l (both B indices).
 * Accepts any (mn)x(mn) matrix, not only density matrices.
 */
ComplexMatrix realign(const ComplexMatrix& x, BipartiteDims dims);

/// Inverse of realign: realign(realign_inverse(y)) == y exactly.
ComplexMatrix realign_inverse(const ComplexMatrix& y, BipartiteDims dims);

/**
 * Hilbert-Schmidt adjoint of the realignment map:
 * Tr[R(X) Y^dagger] = Tr[X (R*(Y))^dagger] for all X. Realignment permutes
 * entries, so it is unitary on the Hilbert-Schmidt space and its adjoint
 * coincides with the inverse map.
 */
ComplexMatrix realign_adjoint(const ComplexMatrix& y, BipartiteDims dims);

/// Schmidt decomposition of a normalized pure state (norm checked to 1e-10).
SchmidtDecomposition schmidt(const ComplexVector& psi, BipartiteDims dims);

// Raw-matrix partial traces; used where the argument is not a state
// (e.g. rho - rho_A (x) rho_B).
ComplexMatrix partial_trace_b_raw(const ComplexMatrix& x, BipartiteDims dims);
ComplexMatrix partial_trace_a_raw(const ComplexMatrix& x, BipartiteDims dims);

}  // namespace qbound
