#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "graphsep/graph.hpp"

namespace graphsep {

/// Graph-theoretical partial transpose on subsystem `axis` (default 1).
///
/// Every edge whose endpoints differ in coordinate `axis` is replaced by the
/// edge obtained by exchanging that coordinate between the endpoints; all other
/// edges are kept. The rewrite is an involution on vertex pairs, so the edge
/// count is preserved.
MultipartiteGraph gtpt(const MultipartiteGraph& g, std::size_t axis = 1);

// Image of a single edge under the axis rewrite.
Edge gtpt_edge(const Edge& e, const DimensionProfile& profile, std::size_t axis);

struct DegreeDelta {
  std::size_t vertex = 0;  // 1-based
  std::int64_t before = 0;
  std::int64_t after = 0;
};

struct DegreeSymmetryReport {
  bool symmetric = true;
  std::vector<DegreeDelta> deltas;  // vertices whose degree changes under gtpt
};

DegreeSymmetryReport is_degree_symmetric(const MultipartiteGraph& g, std::size_t axis = 1);

struct PartialSymmetryReport {
  bool symmetric = true;
  std::optional<Edge> violating_edge;   // first edge (in order) whose partner is absent
  std::optional<Edge> missing_partner;
};

PartialSymmetryReport is_partially_symmetric(const MultipartiteGraph& g, std::size_t axis = 1);

struct MatrixIdentityCertificate {
  bool holds = true;
  // First differing entry (0-based) when the identity fails.
  std::optional<std::pair<std::size_t, std::size_t>> first_difference;
};

// A(gtpt(G, axis)) == partial transpose of A(G) on `axis`, entrywise and exact.
MatrixIdentityCertificate gtpt_matrix_identity(const MultipartiteGraph& g, std::size_t axis = 1);

}  // namespace graphsep
