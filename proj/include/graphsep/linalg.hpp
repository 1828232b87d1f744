#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "graphsep/matrix.hpp"
#include "graphsep/profile.hpp"

namespace graphsep {

inline constexpr double kPsdTolerance = 1e-9;
inline constexpr double kDominanceTolerance = 1e-10;

struct EigenPair {
  double value = 0.0;
  std::vector<double> vector;  // unit norm
};

/// Eigenpairs of a real symmetric matrix, eigenvalues descending.
///
/// Each eigenvector is signed so that its first component with magnitude
/// above 1e-12 is positive. Degenerate eigenvalues keep the order in which
/// the Jacobi sweep left them on the diagonal.
struct Eigendecomposition {
  std::size_t order = 0;
  std::vector<EigenPair> pairs;
  int sweeps = 0;

  std::vector<double> values() const;
};

// Cyclic Jacobi. Sweeps until the off-diagonal Frobenius mass drops to
// 1e-13 ||S||_F or 100 sweeps have run. Throws DomainError when S is not
// symmetric within 1e-12 (relative to its largest entry, floor 1).
Eigendecomposition spectral_decomposition(const RealMatrix& s);

// sum_r lambda_r u_r u_r^T
RealMatrix reconstruct(const Eigendecomposition& eig);

struct PsdCertificate {
  bool psd = false;
  double min_eigenvalue = 0.0;
  double max_abs_eigenvalue = 0.0;
};

// True iff lambda_min >= -tol * max(1, max |lambda|).
PsdCertificate is_psd(const RealMatrix& s, double tol = kPsdTolerance);

struct DominanceCertificate {
  bool dominant = true;
  std::vector<std::size_t> violating_rows;  // 0-based
  double min_slack = 0.0;                   // min over rows of S_ii - sum_{j != i} |S_ij|
};

// Row i passes when S_ii >= sum_{j != i} |S_ij| - tol * max(1, |S_ii|), and
// S_ii > 0 whenever row i has a nonzero off-diagonal entry. tol = 0 gives
// the exact test.
DominanceCertificate is_diagonally_dominant(const RealMatrix& s, double tol = kDominanceTolerance);

// Maximum absolute row sum.
double inf_norm(const RealMatrix& s);
// Upper bound on the spectral radius: |lambda| <= spr(S) <= ||S||_inf.
double spectral_radius_bound(const RealMatrix& s);

double frobenius_norm(const RealMatrix& s);
double frobenius_distance(const RealMatrix& a, const RealMatrix& b);

// Left-to-right Kronecker product. Throws DomainError on an empty list.
RealMatrix kron(const std::vector<RealMatrix>& factors);
IntMatrix kron(const std::vector<IntMatrix>& factors);

// Transpose on subsystem `axis` (1-based): the entry at row label
// (..., i_t, ...) and column label (..., j_t, ...) moves to row (..., j_t, ...)
// and column (..., i_t, ...). Throws DomainError on order or axis mismatch.
template <typename T>
SquareMatrix<T> partial_transpose_matrix(const SquareMatrix<T>& m, const DimensionProfile& profile,
                                         std::size_t axis);

}  // namespace graphsep
