#include "graphsep/transforms.hpp"

#include <stdexcept>

#include "graphsep/errors.hpp"
#include "graphsep/linalg.hpp"

namespace graphsep {

Edge gtpt_edge(const Edge& e, const DimensionProfile& profile, std::size_t axis) {
  const std::size_t stride = profile.stride(axis);
  const std::size_t dim = static_cast<std::size_t>(profile.dim(axis));
  const std::size_t u = e.a - 1;
  const std::size_t v = e.b - 1;
  const std::size_t ui = (u / stride) % dim;
  const std::size_t vi = (v / stride) % dim;
  if (ui == vi) return e;
  const std::size_t u2 = u - ui * stride + vi * stride;
  const std::size_t v2 = v - vi * stride + ui * stride;
  if (u2 == v2) throw std::logic_error("gtpt produced a loop from edge " + to_string(e));
  return Edge::of(u2 + 1, v2 + 1);
}

MultipartiteGraph gtpt(const MultipartiteGraph& g, std::size_t axis) {
  g.profile().check_axis(axis);
  EdgeSet image;
  for (const Edge& e : g.edges()) image.insert(gtpt_edge(e, g.profile(), axis));
  if (image.size() != g.edge_count())
    throw std::logic_error("gtpt collision: " + std::to_string(g.edge_count()) + " edges mapped to " +
                           std::to_string(image.size()));
  return MultipartiteGraph(g.profile(), std::move(image));
}

DegreeSymmetryReport is_degree_symmetric(const MultipartiteGraph& g, std::size_t axis) {
  const auto before = g.degrees();
  const auto after = gtpt(g, axis).degrees();
  DegreeSymmetryReport report;
  for (std::size_t v = 0; v < before.size(); ++v)
    if (before[v] != after[v]) report.deltas.push_back({v + 1, before[v], after[v]});
  report.symmetric = report.deltas.empty();
  return report;
}

PartialSymmetryReport is_partially_symmetric(const MultipartiteGraph& g, std::size_t axis) {
  g.profile().check_axis(axis);
  PartialSymmetryReport report;
  for (const Edge& e : g.edges()) {
    const Edge partner = gtpt_edge(e, g.profile(), axis);
    if (!g.edges().contains(partner)) {
      report.symmetric = false;
      report.violating_edge = e;
      report.missing_partner = partner;
      break;
    }
  }
  return report;
}

MatrixIdentityCertificate gtpt_matrix_identity(const MultipartiteGraph& g, std::size_t axis) {
  const IntMatrix lhs = adjacency_matrix(gtpt(g, axis));
  const IntMatrix rhs = partial_transpose_matrix(adjacency_matrix(g), g.profile(), axis);
  MatrixIdentityCertificate cert;
  for (std::size_t i = 0; i < lhs.order() && cert.holds; ++i)
    for (std::size_t j = 0; j < lhs.order(); ++j)
      if (lhs(i, j) != rhs(i, j)) {
        cert.holds = false;
        cert.first_difference = {i, j};
        break;
      }
  return cert;
}

}  // namespace graphsep
