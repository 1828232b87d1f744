#include "graphsep/graph.hpp"

#include <cmath>

#include "graphsep/errors.hpp"
#include "graphsep/linalg.hpp"

namespace graphsep {

std::string to_string(const Edge& e) {
  return "{" + std::to_string(e.a) + "," + std::to_string(e.b) + "}";
}

MultipartiteGraph::MultipartiteGraph(DimensionProfile profile, EdgeSet edges)
    : profile_(std::move(profile)), edges_(std::move(edges)) {
  validate();
}

MultipartiteGraph::MultipartiteGraph(DimensionProfile profile, std::span<const Edge> edges)
    : profile_(std::move(profile)) {
  for (const Edge& raw : edges) {
    const Edge e = Edge::of(raw.a, raw.b);
    if (!edges_.insert(e).second) throw DomainError("duplicate edge " + to_string(e));
  }
  validate();
}

void MultipartiteGraph::validate() const {
  for (const Edge& e : edges_) {
    if (e.a == e.b) throw DomainError("loop at vertex " + std::to_string(e.a));
    if (e.a < 1 || e.b > profile_.total() || e.a > e.b)
      throw DomainError("edge " + to_string(e) + " has an endpoint outside 1.." +
                        std::to_string(profile_.total()));
  }
}

std::vector<std::int64_t> MultipartiteGraph::degrees() const {
  std::vector<std::int64_t> d(profile_.total(), 0);
  for (const Edge& e : edges_) {
    ++d[e.a - 1];
    ++d[e.b - 1];
  }
  return d;
}

IntMatrix adjacency_matrix(const MultipartiteGraph& g) {
  IntMatrix a(g.profile().total());
  for (const Edge& e : g.edges()) {
    a(e.a - 1, e.b - 1) = 1;
    a(e.b - 1, e.a - 1) = 1;
  }
  return a;
}

IntMatrix degree_matrix(const MultipartiteGraph& g) {
  const auto deg = g.degrees();
  IntMatrix d(deg.size());
  for (std::size_t v = 0; v < deg.size(); ++v) d(v, v) = deg[v];
  return d;
}

namespace {

IntMatrix combine(const MultipartiteGraph& g, std::int64_t adjacency_sign) {
  IntMatrix m = degree_matrix(g);
  for (const Edge& e : g.edges()) {
    m(e.a - 1, e.b - 1) = adjacency_sign;
    m(e.b - 1, e.a - 1) = adjacency_sign;
  }
  return m;
}

}  // namespace

IntMatrix laplacian(const MultipartiteGraph& g) { return combine(g, -1); }
IntMatrix signless_laplacian(const MultipartiteGraph& g) { return combine(g, +1); }

std::string to_string(DensityKind kind) {
  return kind == DensityKind::combinatorial ? "combinatorial" : "signless";
}

DensityMatrix DensityMatrix::from_matrix(RealMatrix m, const DimensionProfile& profile,
                                         DensityKind kind) {
  if (m.order() != profile.total())
    throw DomainError("matrix order " + std::to_string(m.order()) + " does not match profile total " +
                      std::to_string(profile.total()));
  if (!is_symmetric(m, 1e-12)) throw DomainError("density matrix is not symmetric");
  if (std::abs(m.trace() - 1.0) > 1e-12) throw DomainError("density matrix trace is not 1");
  if (!is_psd(m).psd) throw DomainError("density matrix is not positive semidefinite");
  return DensityMatrix(std::move(m), profile, kind);
}

// L and Q are PSD by construction (Q is diagonally dominant with nonnegative
// diagonal), so no eigen-check here.
DensityMatrix density_matrix(const MultipartiteGraph& g, DensityKind kind) {
  if (g.edge_count() == 0) throw ZeroTraceError();
  const IntMatrix m = kind == DensityKind::combinatorial ? laplacian(g) : signless_laplacian(g);
  const double tr = static_cast<double>(m.trace());
  RealMatrix rho(m.order());
  for (std::size_t i = 0; i < m.size(); ++i) rho.data()[i] = static_cast<double>(m.data()[i]) / tr;
  return DensityMatrix(std::move(rho), g.profile(), kind);
}

std::size_t prefix_offset(const DimensionProfile& profile, std::span<const int> prefix) {
  if (prefix.empty() || prefix.size() >= profile.parties())
    throw DomainError("prefix length " + std::to_string(prefix.size()) + " out of range 1.." +
                      std::to_string(profile.parties() - 1));
  std::size_t offset = 0;
  for (std::size_t axis = 1; axis <= prefix.size(); ++axis) {
    const int c = prefix[axis - 1];
    if (c < 1 || c > profile.dim(axis))
      throw DomainError("prefix coordinate " + std::to_string(c) + " on axis " +
                        std::to_string(axis) + " out of range 1.." +
                        std::to_string(profile.dim(axis)));
    offset += static_cast<std::size_t>(c - 1) * profile.stride(axis);
  }
  return offset;
}

template <typename T>
SquareMatrix<T> sub_block(const SquareMatrix<T>& m, const DimensionProfile& profile,
                          std::span<const int> row_prefix, std::span<const int> col_prefix) {
  if (m.order() != profile.total())
    throw DomainError("matrix order does not match profile total");
  if (row_prefix.size() != col_prefix.size())
    throw DomainError("row and column prefixes differ in length");
  const std::size_t r0 = prefix_offset(profile, row_prefix);
  const std::size_t c0 = prefix_offset(profile, col_prefix);
  const std::size_t size = profile.block_size(row_prefix.size());
  SquareMatrix<T> block(size);
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = 0; j < size; ++j) block(i, j) = m(r0 + i, c0 + j);
  return block;
}

template IntMatrix sub_block(const IntMatrix&, const DimensionProfile&, std::span<const int>,
                             std::span<const int>);
template RealMatrix sub_block(const RealMatrix&, const DimensionProfile&, std::span<const int>,
                              std::span<const int>);

}  // namespace graphsep
