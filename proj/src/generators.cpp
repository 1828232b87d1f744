#include "graphsep/generators.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "graphsep/linalg.hpp"
#include "graphsep/separability.hpp"
#include "graphsep/transforms.hpp"

namespace graphsep {

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

std::uint64_t SplitMix64::below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("SplitMix64::below: bound must be positive");
  // Largest multiple of bound representable; draws at or above it are rejected.
  const std::uint64_t limit = std::uint64_t(0) - (std::uint64_t(0) - bound) % bound;
  for (;;) {
    const std::uint64_t x = next();
    if (limit == 0 || x < limit) return x % bound;
  }
}

namespace {

constexpr int kPatternRetries = 64;

Edge random_pair(const DimensionProfile& profile, SplitMix64& rng) {
  const std::uint64_t n = profile.total();
  const std::size_t u = rng.below(n) + 1;
  std::size_t v = rng.below(n - 1) + 1;
  if (v >= u) ++v;
  return Edge::of(u, v);
}

// Symmetric circulant pattern on Z_N with a nonempty connection set S = -S,
// then relabelled by a random permutation. Every row has |S| ones.
IntMatrix random_regular_pattern(int order, SplitMix64& rng) {
  const auto n = static_cast<std::size_t>(order);
  std::vector<bool> in_set(n, false);
  while (std::none_of(in_set.begin(), in_set.end(), [](bool b) { return b; })) {
    for (std::size_t s = 0; s <= n / 2; ++s) {
      const bool take = rng.coin();
      in_set[s] = take;
      in_set[(n - s) % n] = take;
    }
  }
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  for (std::size_t i = n - 1; i > 0; --i) std::swap(perm[i], perm[rng.below(i + 1)]);

  IntMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (in_set[(j + n - i) % n]) m(perm[i], perm[j]) = 1;
  return m;
}

IntMatrix random_top_pattern(int order, SplitMix64& rng) {
  const auto n = static_cast<std::size_t>(order);
  for (int attempt = 0; attempt < kPatternRetries; ++attempt) {
    IntMatrix t(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (rng.coin()) t(i, j) = t(j, i) = 1;
    if (!t.is_zero()) return t;
  }
  throw std::runtime_error("gen_theorem_graph: no nonzero top-level pattern after " +
                           std::to_string(kPatternRetries) + " draws");
}

}  // namespace

MultipartiteGraph gen_partially_symmetric(const DimensionProfile& profile, std::size_t budget,
                                          std::uint64_t seed) {
  SplitMix64 rng(seed);
  EdgeSet edges;
  for (std::size_t k = 0; k < budget; ++k) {
    const Edge e = random_pair(profile, rng);
    edges.insert(e);
    edges.insert(gtpt_edge(e, profile, 1));
  }
  return MultipartiteGraph(profile, std::move(edges));
}

MultipartiteGraph gen_theorem_graph(const DimensionProfile& profile, std::uint64_t seed) {
  SplitMix64 rng(seed);
  const std::size_t n = profile.parties();
  std::vector<IntMatrix> factors;
  factors.push_back(random_top_pattern(profile.dim(1), rng));
  for (std::size_t axis = 2; axis <= n; ++axis) factors.push_back(random_regular_pattern(profile.dim(axis), rng));
  const IntMatrix a = kron(factors);

  EdgeSet edges;
  for (std::size_t i = 0; i < a.order(); ++i)
    for (std::size_t j = i + 1; j < a.order(); ++j)
      if (a(i, j) != 0) edges.insert(Edge{i + 1, j + 1});
  MultipartiteGraph g(profile, std::move(edges));

  if (!check_theorem_conditions(g).prerequisites_met())
    throw std::logic_error("gen_theorem_graph produced a graph outside the hypothesis class");
  return g;
}

DegreeSymmetricSample gen_degree_symmetric_only(const DimensionProfile& profile, std::uint64_t seed,
                                                std::size_t budget) {
  SplitMix64 rng(seed);
  const MultipartiteGraph base = gen_partially_symmetric(profile, budget, rng.next());
  EdgeSet edges = base.edges();

  const std::size_t layer = profile.stride(1);  // vertices per top layer
  const auto layers = static_cast<std::uint64_t>(profile.dim(1));
  const std::size_t intra = 1 + rng.below(std::max<std::size_t>(budget, 1));
  for (std::size_t k = 0; k < intra; ++k) {
    const std::size_t top = rng.below(layers);
    const std::size_t u = rng.below(layer);
    std::size_t v = rng.below(layer - 1);
    if (v >= u) ++v;
    edges.insert(Edge::of(top * layer + u + 1, top * layer + v + 1));
  }

  if (layer >= 3 && rng.coin()) {
    const std::size_t a = rng.below(layers);
    std::size_t b = rng.below(layers - 1);
    if (b >= a) ++b;
    const std::size_t m = 3 + rng.below(std::min<std::size_t>(layer, 6) - 2);
    std::vector<std::size_t> tails(layer);
    std::iota(tails.begin(), tails.end(), std::size_t{0});
    for (std::size_t i = 0; i < m; ++i) std::swap(tails[i], tails[i + rng.below(layer - i)]);

    std::vector<Edge> cycle;
    for (std::size_t k = 0; k < m; ++k)
      cycle.push_back(Edge::of(a * layer + tails[k] + 1, b * layer + tails[(k + 1) % m] + 1));
    // Degree balance needs the cycle to be disjoint from what is already there.
    if (std::none_of(cycle.begin(), cycle.end(), [&](const Edge& e) { return edges.contains(e); }))
      edges.insert(cycle.begin(), cycle.end());
  }

  MultipartiteGraph g(profile, std::move(edges));
  const bool psym = is_partially_symmetric(g, 1).symmetric;
  return {std::move(g), psym};
}

}  // namespace graphsep
