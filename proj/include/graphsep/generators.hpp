#pragma once

#include <cstddef>
#include <cstdint>

#include "graphsep/graph.hpp"

namespace graphsep {

/// SplitMix64. State advances by 0x9E3779B97F4A7C15; output mixing uses
/// 0xBF58476D1CE4E5B9 and 0x94D049BB133111EB with shifts 30, 27, 31.
/// Bounded draws reject the biased tail, so streams are reproducible from
/// these constants alone.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next();
  // Uniform in [0, bound); bound must be positive.
  std::uint64_t below(std::uint64_t bound);
  bool coin() { return (next() >> 63) != 0; }
  // Independent stream seeded from this one.
  SplitMix64 split() { return SplitMix64(next()); }

 private:
  std::uint64_t state_;
};

/// `budget` random vertex pairs, each inserted with its axis-1 GTPT partner.
/// Repeated draws collapse, so the result has at most 2 * budget edges.
MultipartiteGraph gen_partially_symmetric(const DimensionProfile& profile, std::size_t budget,
                                          std::uint64_t seed);

/// Graph satisfying the separability hypotheses:
/// A = T (x) M_2 (x) ... (x) M_{n-1} (x) K with T a random nonzero symmetric
/// 0/1 matrix with zero diagonal and every M_z, K a randomly relabelled
/// symmetric circulant 0/1 pattern (hence regular).
/// Throws std::runtime_error if no nonzero T is drawn within the retry limit.
MultipartiteGraph gen_theorem_graph(const DimensionProfile& profile, std::uint64_t seed);

struct DegreeSymmetricSample {
  MultipartiteGraph graph;
  bool partially_symmetric = false;  // checked on the result, not assumed
};

/// gen_partially_symmetric draw plus random intra-layer edges (i_1 = j_1,
/// fixed by GTPT) and, for about half the seeds, a degree-balanced cross-layer
/// cycle (a, r_k)-(b, r_{k+1}) over m >= 3 distinct tails r_k. The cycle keeps
/// every degree under GTPT but is not closed under it, so those samples are
/// degree symmetric without being partially symmetric.
DegreeSymmetricSample gen_degree_symmetric_only(const DimensionProfile& profile, std::uint64_t seed,
                                                std::size_t budget = 4);

}  // namespace graphsep
