#pragma once

#include <compare>
#include <cstddef>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "graphsep/matrix.hpp"
#include "graphsep/profile.hpp"

namespace graphsep {

/// Unordered vertex pair, stored with 1-based indices and a < b.
struct Edge {
  std::size_t a = 0;
  std::size_t b = 0;

  static Edge of(std::size_t u, std::size_t v) { return u < v ? Edge{u, v} : Edge{v, u}; }

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

std::string to_string(const Edge& e);

using EdgeSet = std::set<Edge>;

/// Simple graph on the vertices of a DimensionProfile.
///
/// Immutable once built. Construction rejects loops and endpoints outside
/// 1..total; duplicate edges collapse (set semantics) unless built through
/// the strict edge-list constructor.
class MultipartiteGraph {
 public:
  MultipartiteGraph(DimensionProfile profile, EdgeSet edges);
  // Throws DomainError on loops, out-of-range endpoints or repeated edges.
  MultipartiteGraph(DimensionProfile profile, std::span<const Edge> edges);

  const DimensionProfile& profile() const { return profile_; }
  const EdgeSet& edges() const { return edges_; }
  std::size_t edge_count() const { return edges_.size(); }
  bool has_edge(std::size_t u, std::size_t v) const { return edges_.contains(Edge::of(u, v)); }

  // Degree of every vertex, 0-based position.
  std::vector<std::int64_t> degrees() const;

  friend bool operator==(const MultipartiteGraph&, const MultipartiteGraph&) = default;

 private:
  void validate() const;

  DimensionProfile profile_;
  EdgeSet edges_;
};

IntMatrix adjacency_matrix(const MultipartiteGraph& g);
IntMatrix degree_matrix(const MultipartiteGraph& g);
IntMatrix laplacian(const MultipartiteGraph& g);
IntMatrix signless_laplacian(const MultipartiteGraph& g);

enum class DensityKind { combinatorial, signless };

std::string to_string(DensityKind kind);

/// Unit-trace positive semidefinite matrix over a multipartite profile.
class DensityMatrix {
 public:
  // Validates order, symmetry (1e-12), unit trace (1e-12) and PSD.
  static DensityMatrix from_matrix(RealMatrix m, const DimensionProfile& profile, DensityKind kind);

  const RealMatrix& matrix() const { return matrix_; }
  const DimensionProfile& profile() const { return profile_; }
  DensityKind kind() const { return kind_; }

 private:
  friend DensityMatrix density_matrix(const MultipartiteGraph&, DensityKind);
  DensityMatrix(RealMatrix m, DimensionProfile profile, DensityKind kind)
      : matrix_(std::move(m)), profile_(std::move(profile)), kind_(kind) {}

  RealMatrix matrix_;
  DimensionProfile profile_;
  DensityKind kind_;
};

// L/tr(L) or Q/tr(Q). Throws ZeroTraceError for a graph without edges.
DensityMatrix density_matrix(const MultipartiteGraph& g, DensityKind kind);

/// Block of `m` coupling the layer with coordinate prefix `row_prefix` to the
/// layer with prefix `col_prefix`. Prefixes are 1-based and of equal length
/// z in 1..n-1; the block has order N_{z+1}...N_n.
template <typename T>
SquareMatrix<T> sub_block(const SquareMatrix<T>& m, const DimensionProfile& profile,
                          std::span<const int> row_prefix, std::span<const int> col_prefix);

// 0-based offset of the first vertex carrying the given 1-based prefix.
std::size_t prefix_offset(const DimensionProfile& profile, std::span<const int> prefix);

}  // namespace graphsep
