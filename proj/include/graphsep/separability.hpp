#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "graphsep/graph.hpp"
#include "graphsep/linalg.hpp"
#include "graphsep/transforms.hpp"

namespace graphsep {

inline constexpr double kReassemblyTolerance = 1e-8;

// ---------------------------------------------------------------------------
// Hypotheses of the constructive separability result
// ---------------------------------------------------------------------------

struct IntraLayerReport {
  bool holds = true;
  std::vector<Edge> witnesses;  // edges joining two vertices with equal i_1
};

struct BlockPair {
  std::vector<int> row_prefix;  // 1-based
  std::vector<int> col_prefix;
};

/// Block uniformity at one recursion level z: every nonzero block coupling two
/// distinct length-z prefixes must equal one common block of order N_{z+1}...N_n.
struct LevelBlockReport {
  std::size_t level = 0;
  bool uniform = true;
  std::size_t nonzero_blocks = 0;
  std::optional<IntMatrix> common_block;  // first nonzero block in prefix order
  std::optional<BlockPair> reference;     // where common_block was taken from
  std::optional<BlockPair> mismatch;      // first block differing from it
};

struct LayerDegreeReport {
  bool holds = true;
  // Degrees of the vertices of each top layer C_{i_1}, in index order.
  std::vector<std::vector<std::int64_t>> layer_degrees;
  // d_{i_1}; only meaningful when `holds`.
  std::vector<std::int64_t> degree_per_layer;
  // Same uniformity test on the finer layers C_{i_1,i_2}. Reported only.
  bool sublayers_uniform = true;
};

struct ConditionReport {
  PartialSymmetryReport partial_symmetry;  // axis 1, prerequisite
  IntraLayerReport no_intra_layer_edges;   // condition (1)
  std::vector<LevelBlockReport> block_levels;
  bool uniform_blocks = true;              // condition (2), all levels
  LayerDegreeReport layer_degrees;         // condition (3)
  bool overall = true;                     // (1) && (2) && (3)

  bool prerequisites_met() const { return overall && partial_symmetry.symmetric; }
};

ConditionReport check_theorem_conditions(const MultipartiteGraph& g);

// One line per fact, key=value.
std::string describe(const ConditionReport& report);

// ---------------------------------------------------------------------------
// Fully separable decomposition
// ---------------------------------------------------------------------------

struct DecompositionTerm {
  double weight = 0.0;
  std::vector<RealMatrix> factors;  // factor k acts on subsystem k+1
};

/// Audit record of how one term was produced.
struct TermTrace {
  std::vector<double> ladder;          // lambda_{r_1}, ..., lambda_{r_{n-1}}
  RealMatrix final_b;                  // B^{(n-1)}, order N_1
  std::vector<std::int64_t> degrees;   // d_1, ..., d_{N_1}
};

/// One B^{(z)} matrix of the recursion and the bound on the eigenvalue it uses.
struct LevelStep {
  std::size_t level = 0;
  std::vector<double> ladder;     // lambda_{r_1}, ..., lambda_{r_z}
  double parent_inf_norm = 0.0;   // inf-norm of the matrix ladder.back() is an eigenvalue of
  RealMatrix b;
  DominanceCertificate dominance;
};

struct SeparableDecomposition {
  DimensionProfile profile;
  std::vector<DecompositionTerm> terms;
  std::vector<TermTrace> trace;   // parallel to terms; may be empty for loaded records
  std::vector<LevelStep> levels;
  double residual = 0.0;          // relative Frobenius residual of the last verification
};

class PreconditionError : public std::runtime_error {
 public:
  PreconditionError(const std::string& what, std::optional<ConditionReport> report = std::nullopt,
                    std::optional<DegreeSymmetryReport> degrees = std::nullopt)
      : std::runtime_error(what), report_(std::move(report)), degrees_(std::move(degrees)) {}

  const std::optional<ConditionReport>& report() const { return report_; }
  const std::optional<DegreeSymmetryReport>& degree_report() const { return degrees_; }

 private:
  std::optional<ConditionReport> report_;
  std::optional<DegreeSymmetryReport> degrees_;
};

class ConstructionError : public std::runtime_error {
 public:
  ConstructionError(const std::string& what, RealMatrix offending, double residual)
      : std::runtime_error(what), offending_(std::move(offending)), residual_(residual) {}

  const RealMatrix& offending() const { return offending_; }
  double residual() const { return residual_; }

 private:
  RealMatrix offending_;
  double residual_;
};

/// Builds rho_q(G) = sum_r w_r F_r^(1) (x) ... (x) F_r^(n) by the layer recursion.
///
/// The innermost common block K is diagonalized; each eigenvalue lambda scales
/// the next level's 0/1 block pattern into H, which is diagonalized in turn,
/// down to the N_1 x N_1 matrix B = diag(d) + lambda T with T the top-level
/// pattern. Terms come out in lexicographic (r_1, ..., r_{n-1}) order with
/// weight 1/(N_2...N_n) and first factor B / (d_1 + ... + d_{N_1}).
///
/// Throws PreconditionError (with the report) when the graph has no edges or
/// the hypotheses fail, and ConstructionError when a dominance or eigenvalue
/// bound certificate fails or the terms do not reassemble to rho_q(G).
SeparableDecomposition decompose(const MultipartiteGraph& g);

RealMatrix reassemble(const SeparableDecomposition& dec);

struct VerificationCertificate {
  bool passed = false;
  bool weights_normalized = false;   // |sum w - 1| <= 1e-10
  bool weights_nonnegative = false;  // every w >= -1e-12
  bool factors_valid = false;        // shape, symmetry, unit trace, PSD
  std::string factor_issue;
  double weight_sum = 0.0;
  double residual = 0.0;             // ||sum w kron - rho||_F
  double relative_residual = 0.0;    // residual / ||rho||_F
};

// Throws DomainError when the profiles differ.
VerificationCertificate verify_decomposition(const SeparableDecomposition& dec,
                                             const DensityMatrix& rho,
                                             double tol = kReassemblyTolerance);

struct PptCertificate {
  bool passed = false;
  std::size_t axis = 0;
  double min_eigenvalue = 0.0;
};

PptCertificate ppt_check(const RealMatrix& rho, const DimensionProfile& profile, std::size_t axis,
                         double tol = kPsdTolerance);
PptCertificate ppt_check(const DensityMatrix& rho, std::size_t axis, double tol = kPsdTolerance);

struct TransferCertificate {
  bool exact_identity = false;      // L(G') == L(G)^{T_axis} in integers
  double max_abs_difference = 0.0;  // between rho_l(G') and rho_l(G)^{T_axis}
  bool holds = false;
  std::optional<SeparableDecomposition> transported;
  std::optional<VerificationCertificate> transported_check;
};

/// Certifies rho_l(gtpt(G, axis)) = rho_l(G)^{T_axis}. When a separable
/// decomposition of rho_l(G) is supplied, the subsystem-`axis` factor of each
/// term is transposed and the result verified against rho_l(G').
///
/// Throws PreconditionError carrying the degree deltas when G is not degree
/// symmetric on `axis`.
TransferCertificate gtpt_transfer(const MultipartiteGraph& g, std::size_t axis = 1,
                                const SeparableDecomposition* combinatorial = nullptr);

}  // namespace graphsep
