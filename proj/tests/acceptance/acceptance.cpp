// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "graphsep/cli.hpp"
#include "graphsep/errors.hpp"
#include "graphsep/generators.hpp"
#include "graphsep/io.hpp"
#include "graphsep/linalg.hpp"
#include "graphsep/separability.hpp"
#include "graphsep/transforms.hpp"

using namespace graphsep;

namespace {

// Tolerances pinned by the acceptance criteria.
constexpr double kM222Residual = 1e-12;    // AC1, absolute Frobenius
constexpr double kSweepResidual = 1e-8;    // AC2, relative Frobenius
constexpr double kFactorPsd = 1e-9;        // AC2
constexpr double kWeightSum = 1e-10;       // AC2
constexpr double kTransferEntry = 1e-12;   // AC4, entrywise
constexpr double kEigenResidual = 1e-10;   // AC7, relative Frobenius
constexpr double kEigenOrtho = 1e-10;      // AC7
constexpr double kClosedForm = 1e-12;      // AC7
constexpr double kDominance = 1e-10;       // AC6, relative slack allowance

struct Outcome {
  bool pass = true;
  std::string detail;
};

class Check {
 public:
  void require(bool ok, const std::string& what) {
    if (!ok && out_.pass) out_.detail = what;
    out_.pass = out_.pass && ok;
  }
  void note(const std::string& s) {
    if (out_.pass) out_.detail = s;
  }
  Outcome result() const { return out_; }

 private:
  Outcome out_;
};

std::string fmt(const char* f, double a, double b = 0, double c = 0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

MultipartiteGraph m222() {
  return MultipartiteGraph(DimensionProfile({2, 2, 2}), EdgeSet{{1, 5}, {2, 6}, {3, 7}, {4, 8}});
}

// Every successful decomposition seen by AC1 and AC2, for AC6.
std::vector<SeparableDecomposition> g_decompositions;

Outcome ac1() {
  Check c;
  const auto t0 = std::chrono::steady_clock::now();
  const auto g = m222();
  const auto dec = decompose(g);
  const double elapsed = seconds_since(t0);

  c.require(dec.terms.size() == 4, "term count " + std::to_string(dec.terms.size()) + " != 4");
  for (const auto& t : dec.terms) {
    c.require(t.weight == 0.25, "weight != 1/4");
    const auto& f = t.factors.at(0);
    c.require(f.order() == 2 && f(0, 0) == 0.5 && f(0, 1) == 0.5 && f(1, 0) == 0.5 && f(1, 1) == 0.5,
              "first factor != (1/2)[[1,1],[1,1]]");
  }
  // rho_q = (1/8)[[I4, I4], [I4, I4]] written out directly
  RealMatrix expected(8);
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < 8; ++j) expected(i, j) = (i % 4 == j % 4) ? 0.125 : 0.0;
  const double residual = frobenius_distance(reassemble(dec), expected);
  c.require(residual <= kM222Residual, fmt("residual %.3g > 1e-12", residual));
  c.require(elapsed < 1.0, fmt("runtime %.3f s >= 1 s", elapsed));
  c.note(fmt("4 terms, weight 1/4, residual %.3g, %.4f s", residual, elapsed));
  g_decompositions.push_back(dec);
  return c.result();
}

Outcome ac2() {
  Check c;
  const std::vector<std::vector<int>> profiles{{2, 2, 2}, {2, 2, 3}, {2, 3, 2}, {3, 2, 2}, {2, 2, 2, 2}};
  constexpr std::uint64_t kSeedsPerProfile = 24;
  const auto t0 = std::chrono::steady_clock::now();
  std::size_t graphs = 0;
  double worst = 0;
  for (const auto& dims : profiles) {
    const DimensionProfile p(dims);
    for (std::uint64_t seed = 1; seed <= kSeedsPerProfile; ++seed) {
      const std::string tag = to_string(p) + " seed " + std::to_string(seed);
      const auto g = gen_theorem_graph(p, seed);
      const auto report = check_theorem_conditions(g);
      c.require(report.prerequisites_met(), "conditions fail for " + tag);
      SeparableDecomposition dec{p, {}, {}, {}, 0.0};
      try {
        dec = decompose(g);
      } catch (const std::exception& e) {
        c.require(false, "decompose failed for " + tag + ": " + e.what());
        continue;
      }
      ++graphs;
      const auto rho = density_matrix(g, DensityKind::signless);
      const auto cert = verify_decomposition(dec, rho, kSweepResidual);
      worst = std::max(worst, cert.relative_residual);
      c.require(cert.relative_residual <= kSweepResidual, "residual too large for " + tag);
      c.require(std::abs(cert.weight_sum - 1.0) <= kWeightSum, "weights do not sum to 1 for " + tag);
      for (const auto& t : dec.terms)
        for (const auto& f : t.factors) c.require(is_psd(f, kFactorPsd).psd, "factor not PSD for " + tag);
      for (std::size_t axis = 1; axis <= p.parties(); ++axis)
        c.require(ppt_check(rho, axis).passed, "PPT fails on axis " + std::to_string(axis) + " for " + tag);
      g_decompositions.push_back(std::move(dec));
    }
  }
  const double elapsed = seconds_since(t0);
  c.require(graphs >= 100, "fewer than 100 graphs decomposed");
  c.require(elapsed < 60.0, fmt("runtime %.1f s >= 60 s", elapsed));
  c.note(std::to_string(graphs) + " graphs over 5 profiles, worst relative residual " + fmt("%.3g", worst) + ", " +
         fmt("%.2f s", elapsed));
  return c.result();
}

Outcome ac3() {
  Check c;
  SplitMix64 meta(3003);
  const std::vector<std::vector<int>> profiles{{2, 2}, {2, 3}, {3, 3}, {2, 2, 2}, {2, 3, 2}, {3, 2, 3},
                                               {4, 4, 4}, {2, 2, 2, 2}, {2, 2, 2, 2, 2, 2}, {4, 2, 8}};
  std::size_t tested = 0, cross = 0;
  for (int i = 0; i < 240; ++i) {
    const DimensionProfile p(profiles[i % profiles.size()]);
    const auto g = gen_partially_symmetric(p, meta.below(20), meta.next());
    const bool psym = is_partially_symmetric(g, 1).symmetric;
    const bool dsym = is_degree_symmetric(g, 1).symmetric;
    c.require(psym, "generator output not partially symmetric");
    c.require(!psym || dsym, "counterexample: partially symmetric but not degree symmetric on " + to_string(p));
    ++tested;
    for (const Edge& e : g.edges()) cross += gtpt_edge(e, p, 1) != e ? 1 : 0;
  }
  c.require(cross > 0, "no cross-layer pairs generated");
  c.note(std::to_string(tested) + " graphs, 0 counterexamples, " + std::to_string(cross) + " non-fixed edges");
  return c.result();
}

Outcome ac4() {
  Check c;
  const std::vector<std::vector<int>> profiles{{2, 2, 2}, {2, 3, 2}, {3, 2, 2}, {2, 2, 3}, {4, 2, 2}, {3, 3}};
  std::size_t from_psym = 0, from_dsym = 0, non_psym = 0;
  double worst = 0;
  auto test = [&](const MultipartiteGraph& g) {
    const auto image = gtpt(g, 1);
    const RealMatrix lhs = density_matrix(image, DensityKind::combinatorial).matrix();
    const RealMatrix rhs =
        partial_transpose_matrix(density_matrix(g, DensityKind::combinatorial).matrix(), g.profile(), 1);
    double diff = 0;
    for (std::size_t i = 0; i < lhs.size(); ++i) diff = std::max(diff, std::abs(lhs.data()[i] - rhs.data()[i]));
    worst = std::max(worst, diff);
    c.require(diff <= kTransferEntry, fmt("entrywise difference %.3g", diff));
    c.require(gtpt_transfer(g, 1).holds, "gtpt_transfer certificate fails");
  };
  for (std::uint64_t seed = 0; from_psym < 60; ++seed) {
    const auto g = gen_partially_symmetric(DimensionProfile(profiles[seed % profiles.size()]), 1 + seed % 8, seed);
    if (g.edge_count() == 0) continue;
    c.require(is_degree_symmetric(g, 1).symmetric, "psym sample not degree symmetric");
    test(g);
    ++from_psym;
  }
  for (std::uint64_t seed = 0; from_dsym < 60; ++seed) {
    const auto s = gen_degree_symmetric_only(DimensionProfile(profiles[seed % profiles.size()]), seed, 1 + seed % 6);
    c.require(is_degree_symmetric(s.graph, 1).symmetric, "degsym sample not degree symmetric");
    test(s.graph);
    ++from_dsym;
    non_psym += s.partially_symmetric ? 0 : 1;
  }
  c.note(std::to_string(from_psym + from_dsym) + " graphs (" + std::to_string(non_psym) +
         " not partially symmetric), max entry difference " + fmt("%.3g", worst));
  return c.result();
}

Outcome ac5() {
  Check c;
  SplitMix64 rng(5005);
  std::size_t graphs = 0;
  for (; graphs < 600; ++graphs) {
    std::vector<int> dims;
    std::size_t total = 1;
    do {
      dims.clear();
      total = 1;
      const std::size_t parties = 2 + rng.below(4);
      for (std::size_t k = 0; k < parties; ++k) {
        dims.push_back(2 + static_cast<int>(rng.below(4)));
        total *= static_cast<std::size_t>(dims.back());
      }
    } while (total > 64);
    const DimensionProfile p(dims);
    const std::uint64_t density = 1 + rng.below(6);
    EdgeSet edges;
    for (std::size_t u = 1; u <= total; ++u)
      for (std::size_t v = u + 1; v <= total; ++v)
        if (rng.below(8) < density) edges.insert(Edge{u, v});
    const MultipartiteGraph g(p, std::move(edges));
    const std::size_t axis = 1 + rng.below(p.parties());
    const auto image = gtpt(g, axis);
    const std::string tag = to_string(p) + " axis " + std::to_string(axis);
    c.require(gtpt(image, axis) == g, "not an involution on " + tag);
    c.require(image.edge_count() == g.edge_count(), "edge count changed on " + tag);
    c.require(gtpt_matrix_identity(g, axis).holds, "matrix identity fails on " + tag);
    c.require(adjacency_matrix(image) == partial_transpose_matrix(adjacency_matrix(g), p, axis),
              "A(G') != A(G)^T on " + tag);
  }
  c.note(std::to_string(graphs) + " random graphs, product <= 64");
  return c.result();
}

Outcome ac6() {
  Check c;
  std::size_t steps = 0;
  for (const auto& dec : g_decompositions) {
    for (const auto& step : dec.levels) {
      ++steps;
      const RealMatrix& b = step.b;
      for (std::size_t i = 0; i < b.order(); ++i) {
        double off = 0;
        for (std::size_t j = 0; j < b.order(); ++j)
          if (j != i) off += std::abs(b(i, j));
        c.require(b(i, i) >= off - kDominance * std::max(1.0, std::abs(b(i, i))),
                  "B at level " + std::to_string(step.level) + " not diagonally dominant");
      }
      const double lambda = step.ladder.back();
      c.require(std::abs(lambda) <= step.parent_inf_norm * (1 + kDominance) + kDominance,
                fmt("|lambda| = %.17g exceeds inf-norm %.17g", std::abs(lambda), step.parent_inf_norm));
    }
    const std::size_t expected_levels = [&] {
      // one B per partial ladder (r_1..r_z), z = 1..n-1
      std::size_t total = 0, prefix = 1;
      const auto& dims = dec.profile.dims();
      for (std::size_t z = 1; z < dims.size(); ++z) {
        prefix *= static_cast<std::size_t>(dims[dims.size() - z]);
        total += prefix;
      }
      return total;
    }();
    c.require(dec.levels.size() == expected_levels, "missing recorded B matrices");
  }
  c.require(!g_decompositions.empty(), "no decompositions recorded");
  c.note(std::to_string(steps) + " recorded B matrices across " + std::to_string(g_decompositions.size()) +
         " decompositions");
  return c.result();
}

Outcome ac7() {
  Check c;
  SplitMix64 rng(7007);
  auto random_symmetric = [&](std::size_t n) {
    RealMatrix m(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j)
        m(i, j) = m(j, i) = static_cast<double>(rng.next() >> 11) / double(1ull << 52) - 1.0;
    return m;
  };
  double worst_res = 0, worst_dot = 0, worst_closed = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng.below(32);
    const RealMatrix m = random_symmetric(n);
    const auto eig = spectral_decomposition(m);
    const double res = frobenius_distance(reconstruct(eig), m) / frobenius_norm(m);
    worst_res = std::max(worst_res, res);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b)
        worst_dot = std::max(worst_dot, std::abs(std::inner_product(eig.pairs[a].vector.begin(), eig.pairs[a].vector.end(),
                                                                     eig.pairs[b].vector.begin(), 0.0)));
  }
  c.require(worst_res <= kEigenResidual, fmt("reconstruction error %.3g", worst_res));
  c.require(worst_dot <= kEigenOrtho, fmt("eigenvector overlap %.3g", worst_dot));

  for (int trial = 0; trial < 100; ++trial) {
    const RealMatrix m2 = random_symmetric(2);
    const double mean = (m2(0, 0) + m2(1, 1)) / 2, rad = std::hypot((m2(0, 0) - m2(1, 1)) / 2, m2(0, 1));
    const auto v2 = spectral_decomposition(m2).values();
    worst_closed = std::max({worst_closed, std::abs(v2[0] - (mean + rad)), std::abs(v2[1] - (mean - rad))});

    // Roots of det(xI - M) = x^3 - c2 x^2 + c1 x - c0 by the trigonometric method.
    const RealMatrix m = random_symmetric(3);
    const double c2 = m.trace();
    const double c1 = m(0, 0) * m(1, 1) + m(0, 0) * m(2, 2) + m(1, 1) * m(2, 2) - m(0, 1) * m(0, 1) -
                      m(0, 2) * m(0, 2) - m(1, 2) * m(1, 2);
    const double c0 = m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(1, 2)) - m(0, 1) * (m(0, 1) * m(2, 2) - m(1, 2) * m(0, 2)) +
                      m(0, 2) * (m(0, 1) * m(1, 2) - m(1, 1) * m(0, 2));
    const double shift = c2 / 3;
    const double p = c1 - c2 * c2 / 3;                                // depressed cubic t^3 + p t + q
    const double q = -(2 * c2 * c2 * c2 / 27 - c2 * c1 / 3 + c0);
    const double r = 2 * std::sqrt(-p / 3);
    const double phi = std::acos(std::clamp(3 * q / (p * r), -1.0, 1.0)) / 3;
    std::vector<double> roots{shift + r * std::cos(phi), shift + r * std::cos(phi - 2 * M_PI / 3),
                              shift + r * std::cos(phi - 4 * M_PI / 3)};
    std::sort(roots.rbegin(), roots.rend());
    const auto v3 = spectral_decomposition(m).values();
    for (std::size_t k = 0; k < 3; ++k) worst_closed = std::max(worst_closed, std::abs(v3[k] - roots[k]));
  }
  c.require(worst_closed <= kClosedForm, fmt("closed-form mismatch %.3g", worst_closed));
  c.note("200 matrices n<=32: residual " + fmt("%.3g", worst_res) + ", overlap " + fmt("%.3g", worst_dot) +
         "; closed form 2x2/3x3 " + fmt("%.3g", worst_closed));
  return c.result();
}

Outcome ac8() {
  Check c;
  // intra-layer edges are rejected at condition 1
  SplitMix64 rng(8008);
  int rejected = 0;
  for (int i = 0; i < 20; ++i) {
    const auto s = gen_degree_symmetric_only(DimensionProfile({2, 2, 2}), rng.next(), 3);
    try {
      decompose(s.graph);
      c.require(false, "graph with intra-layer edge was decomposed");
    } catch (const PreconditionError& e) {
      c.require(e.report() && !e.report()->no_intra_layer_edges.holds &&
                    !e.report()->no_intra_layer_edges.witnesses.empty(),
                "rejection does not cite condition 1");
      ++rejected;
    }
  }

  // a tampered decomposition file fails verify
  const auto dir = std::filesystem::temp_directory_path() / "graphsep-acceptance";
  std::filesystem::create_directories(dir);
  const std::string graph_file = (dir / "m222.graph").string(), dec_file = (dir / "m222.dec").string();
  {
    std::ofstream out(graph_file);
    write_graph(out, m222());
  }
  std::ostringstream sink, errs;
  c.require(run_cli({"decompose", graph_file, dec_file}, sink, errs) == kExitPass, "decompose via CLI failed");
  c.require(run_cli({"verify", graph_file, dec_file}, sink, errs) == kExitPass, "untampered file fails verify");
  std::string text;
  {
    std::ifstream in(dec_file);
    std::stringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  const auto pos = text.find("weight 0.25");
  c.require(pos != std::string::npos, "record has no weight line");
  if (pos != std::string::npos) {
    text.replace(pos, 11, "weight 0.26");
    std::ofstream(dec_file) << text;
    c.require(run_cli({"verify", graph_file, dec_file}, sink, errs) == kExitPropertyFalse,
              "tampered file passes verify");
  }
  std::filesystem::remove_all(dir);

  // non-degree-symmetric graph: {v_111, v_212} loses vertex 1 and gains vertex 2
  const MultipartiteGraph g(DimensionProfile({2, 2, 2}), EdgeSet{{1, 6}});
  try {
    gtpt_transfer(g, 1);
    c.require(false, "transfer accepted a non-degree-symmetric graph");
  } catch (const PreconditionError& e) {
    const auto& r = e.degree_report();
    c.require(r.has_value(), "no degree report");
    if (r) {
      std::vector<std::tuple<std::size_t, std::int64_t, std::int64_t>> got;
      for (const auto& d : r->deltas) got.emplace_back(d.vertex, d.before, d.after);
      const decltype(got) expected{{1, 1, 0}, {2, 0, 1}, {5, 0, 1}, {6, 1, 0}};
      c.require(got == expected, "degree-delta witness differs from (1:1->0, 2:0->1, 5:0->1, 6:1->0)");
    }
  }
  c.note(std::to_string(rejected) + " intra-layer graphs rejected at cond1; tampered record exit 1; delta witness ok");
  return c.result();
}

}  // namespace

int main() {
  struct Criterion {
    const char* id;
    const char* title;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {"AC1", "matching graph end-to-end", ac1},
      {"AC2", "hypothesis-class sweep", ac2},
      {"AC3", "partial symmetry implies degree symmetry", ac3},
      {"AC4", "laplacian density transfer identity", ac4},
      {"AC5", "GTPT algebra", ac5},
      {"AC6", "proof-chain certificates", ac6},
      {"AC7", "eigensolver quality", ac7},
      {"AC8", "negative controls", ac8},
  };
  int failures = 0;
  for (const auto& cr : criteria) {
    Outcome o;
    try {
      o = cr.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::printf("%s %s  %s: %s\n", cr.id, o.pass ? "PASS" : "FAIL", cr.title, o.detail.c_str());
    failures += o.pass ? 0 : 1;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
