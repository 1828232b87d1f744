#include "graphsep/separability.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

#include "graphsep/errors.hpp"
#include "graphsep/simd/kernels.hpp"

namespace graphsep {

namespace {

// 1-based coordinates of the `index`-th (0-based) prefix of length `depth`.
std::vector<int> prefix_coords(const DimensionProfile& profile, std::size_t depth, std::size_t index) {
  std::vector<int> coords(depth);
  for (std::size_t axis = depth; axis >= 1; --axis) {
    const auto dim = static_cast<std::size_t>(profile.dim(axis));
    coords[axis - 1] = static_cast<int>(index % dim) + 1;
    index /= dim;
  }
  return coords;
}

bool block_is_zero(const IntMatrix& a, std::size_t r0, std::size_t c0, std::size_t size) {
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = 0; j < size; ++j)
      if (a(r0 + i, c0 + j) != 0) return false;
  return true;
}

bool block_equals(const IntMatrix& a, std::size_t r0, std::size_t c0, const IntMatrix& ref) {
  for (std::size_t i = 0; i < ref.order(); ++i)
    for (std::size_t j = 0; j < ref.order(); ++j)
      if (a(r0 + i, c0 + j) != ref(i, j)) return false;
  return true;
}

IntMatrix copy_block(const IntMatrix& a, std::size_t r0, std::size_t c0, std::size_t size) {
  IntMatrix b(size);
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = 0; j < size; ++j) b(i, j) = a(r0 + i, c0 + j);
  return b;
}

LevelBlockReport check_level(const IntMatrix& a, const DimensionProfile& profile, std::size_t level) {
  LevelBlockReport report;
  report.level = level;
  const std::size_t size = profile.block_size(level);
  const std::size_t prefixes = profile.total() / size;
  for (std::size_t p = 0; p < prefixes; ++p)
    for (std::size_t q = 0; q < prefixes; ++q) {
      if (p == q || block_is_zero(a, p * size, q * size, size)) continue;
      ++report.nonzero_blocks;
      if (!report.common_block) {
        report.common_block = copy_block(a, p * size, q * size, size);
        report.reference = BlockPair{prefix_coords(profile, level, p), prefix_coords(profile, level, q)};
      } else if (report.uniform && !block_equals(a, p * size, q * size, *report.common_block)) {
        report.uniform = false;
        report.mismatch = BlockPair{prefix_coords(profile, level, p), prefix_coords(profile, level, q)};
      }
    }
  return report;
}

bool all_equal(const std::int64_t* first, std::size_t count) {
  return std::all_of(first, first + count, [&](std::int64_t d) { return d == *first; });
}

}  // namespace

ConditionReport check_theorem_conditions(const MultipartiteGraph& g) {
  const DimensionProfile& profile = g.profile();
  const std::size_t n = profile.parties();
  const std::size_t layer = profile.stride(1);
  ConditionReport report;

  report.partial_symmetry = is_partially_symmetric(g, 1);

  for (const Edge& e : g.edges())
    if ((e.a - 1) / layer == (e.b - 1) / layer) report.no_intra_layer_edges.witnesses.push_back(e);
  report.no_intra_layer_edges.holds = report.no_intra_layer_edges.witnesses.empty();

  const IntMatrix a = adjacency_matrix(g);
  for (std::size_t z = 1; z < n; ++z) {
    report.block_levels.push_back(check_level(a, profile, z));
    report.uniform_blocks = report.uniform_blocks && report.block_levels.back().uniform;
  }

  const auto degrees = g.degrees();
  auto& deg = report.layer_degrees;
  for (std::size_t t = 0; t < static_cast<std::size_t>(profile.dim(1)); ++t) {
    const std::int64_t* first = degrees.data() + t * layer;
    deg.layer_degrees.emplace_back(first, first + layer);
    deg.degree_per_layer.push_back(*first);
    deg.holds = deg.holds && all_equal(first, layer);
  }
  const std::size_t sub = profile.block_size(2);
  for (std::size_t s = 0; s < profile.total(); s += sub)
    deg.sublayers_uniform = deg.sublayers_uniform && all_equal(degrees.data() + s, sub);

  report.overall = report.no_intra_layer_edges.holds && report.uniform_blocks && deg.holds;
  return report;
}

namespace {

std::string prefix_string(const std::vector<int>& p) {
  std::string s;
  for (std::size_t k = 0; k < p.size(); ++k) s += (k ? "," : "") + std::to_string(p[k]);
  return s;
}

}  // namespace

std::string describe(const ConditionReport& r) {
  std::ostringstream os;
  os << "partial_symmetry=" << (r.partial_symmetry.symmetric ? "true" : "false") << '\n';
  if (r.partial_symmetry.violating_edge)
    os << "partial_symmetry.violating_edge=" << to_string(*r.partial_symmetry.violating_edge)
       << "\npartial_symmetry.missing_partner=" << to_string(*r.partial_symmetry.missing_partner)
       << '\n';
  os << "cond1_no_intra_layer_edges=" << (r.no_intra_layer_edges.holds ? "true" : "false") << '\n';
  if (!r.no_intra_layer_edges.holds) {
    os << "cond1.witnesses=";
    for (std::size_t i = 0; i < r.no_intra_layer_edges.witnesses.size(); ++i)
      os << (i ? " " : "") << to_string(r.no_intra_layer_edges.witnesses[i]);
    os << '\n';
  }
  os << "cond2_uniform_blocks=" << (r.uniform_blocks ? "true" : "false") << '\n';
  for (const auto& level : r.block_levels) {
    os << "cond2.level" << level.level << "=" << (level.uniform ? "true" : "false")
       << " nonzero_blocks=" << level.nonzero_blocks;
    if (level.reference)
      os << " reference=(" << prefix_string(level.reference->row_prefix) << ")|("
         << prefix_string(level.reference->col_prefix) << ")";
    if (level.mismatch)
      os << " mismatch=(" << prefix_string(level.mismatch->row_prefix) << ")|("
         << prefix_string(level.mismatch->col_prefix) << ")";
    os << '\n';
  }
  os << "cond3_layer_degrees=" << (r.layer_degrees.holds ? "true" : "false") << '\n';
  for (std::size_t t = 0; t < r.layer_degrees.layer_degrees.size(); ++t) {
    os << "cond3.layer" << t + 1 << "=";
    const auto& d = r.layer_degrees.layer_degrees[t];
    for (std::size_t i = 0; i < d.size(); ++i) os << (i ? "," : "") << d[i];
    os << '\n';
  }
  os << "cond3.sublayers_uniform=" << (r.layer_degrees.sublayers_uniform ? "true" : "false") << '\n';
  os << "overall=" << (r.overall ? "true" : "false") << '\n';
  return os.str();
}

// ---------------------------------------------------------------------------

namespace {

// parts x parts 0/1 matrix marking the nonzero sub-blocks of `block`.
IntMatrix block_pattern(const IntMatrix& block, std::size_t parts) {
  const std::size_t size = block.order() / parts;
  IntMatrix pattern(parts);
  for (std::size_t i = 0; i < parts; ++i)
    for (std::size_t j = 0; j < parts; ++j)
      pattern(i, j) = block_is_zero(block, i * size, j * size, size) ? 0 : 1;
  return pattern;
}

RealMatrix diagonal(const std::vector<std::int64_t>& d) {
  RealMatrix m(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = static_cast<double>(d[i]);
  return m;
}

bool within_bound(double value, double bound) {
  return std::abs(value) <= bound + kDominanceTolerance * std::max(1.0, bound);
}

class Builder {
 public:
  Builder(const MultipartiteGraph& g, const ConditionReport& report)
      : profile_(g.profile()), n_(profile_.parties()), dec_{profile_, {}, {}, {}, 0.0} {
    degrees_ = report.layer_degrees.degree_per_layer;
    degree_sum_ = std::accumulate(degrees_.begin(), degrees_.end(), std::int64_t{0});

    // patterns_[k] is the 0/1 pattern of subsystem k+1 for k = 0..n-2;
    // kernel_ is the common innermost block (subsystem n).
    const IntMatrix a = adjacency_matrix(g);
    patterns_.push_back(block_pattern(a, static_cast<std::size_t>(profile_.dim(1))));
    for (std::size_t z = 2; z < n_; ++z)
      patterns_.push_back(block_pattern(*report.block_levels[z - 2].common_block,
                                        static_cast<std::size_t>(profile_.dim(z))));
    kernel_ = to_real(*report.block_levels[n_ - 2].common_block);

    // B^{(z)} = diag(d) (x) I + lambda_{r_z} T (x) M_2 (x) ... (x) M_{n-z}
    for (std::size_t z = 1; z < n_; ++z) {
      std::vector<RealMatrix> diag_factors{diagonal(degrees_)};
      std::vector<IntMatrix> pattern_factors;
      std::size_t inner = 1;
      for (std::size_t k = 0; k + z < n_; ++k) {
        pattern_factors.push_back(patterns_[k]);
        if (k > 0) inner *= static_cast<std::size_t>(profile_.dim(k + 1));
      }
      if (inner > 1) diag_factors.push_back(RealMatrix::identity(inner));
      diag_part_.push_back(kron(diag_factors));
      pattern_part_.push_back(to_real(kron(pattern_factors)));
    }
    vectors_.resize(n_);
    weight_ = static_cast<double>(profile_.dim(1)) / static_cast<double>(profile_.total());
  }

  SeparableDecomposition run() {
    const double norm = inf_norm(kernel_);
    for (const auto& pair : spectral_decomposition(kernel_).pairs) {
      vectors_[n_ - 1] = pair.vector;
      descend(1, {pair.value}, norm);
    }
    return std::move(dec_);
  }

 private:
  void descend(std::size_t level, std::vector<double> ladder, double parent_norm) {
    const double lambda = ladder.back();
    if (!within_bound(lambda, parent_norm)) {
      std::ostringstream os;
      os << "construction failed: eigenvalue " << lambda << " at level " << level
         << " exceeds the inf-norm bound " << parent_norm;
      throw ConstructionError(os.str(), RealMatrix{}, 0.0);
    }

    RealMatrix b = diag_part_[level - 1];
    simd::active().axpy(lambda, pattern_part_[level - 1].data(), b.data(), b.size());
    auto dominance = is_diagonally_dominant(b);
    if (!dominance.dominant) {
      std::ostringstream os;
      os << "construction failed: B at level " << level << " is not diagonally dominant (row "
         << dominance.violating_rows.front() + 1 << ", slack " << dominance.min_slack << ")";
      throw ConstructionError(os.str(), b, 0.0);
    }
    dec_.levels.push_back({level, ladder, parent_norm, b, dominance});

    if (level + 1 == n_) {
      emit(std::move(ladder), b);
      return;
    }
    // H = lambda * M_{n-level}; its eigenvectors act on subsystem n-level.
    const std::size_t subsystem = n_ - level;
    RealMatrix h = scaled(to_real(patterns_[subsystem - 1]), lambda);
    const double h_norm = inf_norm(h);
    for (const auto& pair : spectral_decomposition(h).pairs) {
      vectors_[subsystem - 1] = pair.vector;
      auto next = ladder;
      next.push_back(pair.value);
      descend(level + 1, std::move(next), h_norm);
    }
  }

  void emit(std::vector<double> ladder, const RealMatrix& b) {
    DecompositionTerm term;
    term.weight = weight_;
    term.factors.push_back(scaled(b, 1.0 / static_cast<double>(degree_sum_)));
    for (std::size_t k = 1; k < n_; ++k) term.factors.push_back(outer(vectors_[k]));
    dec_.terms.push_back(std::move(term));
    dec_.trace.push_back({std::move(ladder), b, degrees_});
  }

  const DimensionProfile& profile_;
  std::size_t n_;
  SeparableDecomposition dec_;
  std::vector<std::int64_t> degrees_;
  std::int64_t degree_sum_ = 0;
  std::vector<IntMatrix> patterns_;
  RealMatrix kernel_;
  std::vector<RealMatrix> diag_part_;
  std::vector<RealMatrix> pattern_part_;
  std::vector<std::vector<double>> vectors_;
  double weight_ = 0.0;
};

}  // namespace

SeparableDecomposition decompose(const MultipartiteGraph& g) {
  ConditionReport report = check_theorem_conditions(g);
  if (g.edge_count() == 0) throw PreconditionError("precondition failed: graph has no edges (zero trace)", report);
  if (!report.prerequisites_met())
    throw PreconditionError("precondition failed: separability hypotheses not met\n" + describe(report),
                            report);

  SeparableDecomposition dec = Builder(g, report).run();
  const DensityMatrix rho = density_matrix(g, DensityKind::signless);
  const auto cert = verify_decomposition(dec, rho);
  dec.residual = cert.relative_residual;
  if (!cert.passed) {
    std::ostringstream os;
    os << "construction failed: reassembly check did not pass (relative residual "
       << cert.relative_residual << (cert.factor_issue.empty() ? "" : ", " + cert.factor_issue) << ")";
    throw ConstructionError(os.str(), reassemble(dec), cert.relative_residual);
  }
  return dec;
}

RealMatrix reassemble(const SeparableDecomposition& dec) {
  const auto& k = simd::active();
  RealMatrix acc(dec.profile.total());
  for (const auto& term : dec.terms) {
    const RealMatrix product = kron(term.factors);
    if (product.order() != acc.order()) throw DomainError("reassemble: term order does not match profile");
    k.axpy(term.weight, product.data(), acc.data(), acc.size());
  }
  return acc;
}

VerificationCertificate verify_decomposition(const SeparableDecomposition& dec, const DensityMatrix& rho,
                                             double tol) {
  if (!(dec.profile == rho.profile()))
    throw DomainError("verify_decomposition: decomposition profile " + to_string(dec.profile) +
                      " differs from state profile " + to_string(rho.profile()));
  VerificationCertificate cert;
  const std::size_t n = dec.profile.parties();

  cert.weights_nonnegative = true;
  for (const auto& term : dec.terms) {
    cert.weight_sum += term.weight;
    if (term.weight < -1e-12) cert.weights_nonnegative = false;
  }
  cert.weights_normalized = std::abs(cert.weight_sum - 1.0) <= 1e-10;

  cert.factors_valid = true;
  for (std::size_t t = 0; t < dec.terms.size() && cert.factors_valid; ++t) {
    const auto& factors = dec.terms[t].factors;
    auto fail = [&](std::size_t k, const std::string& why) {
      cert.factors_valid = false;
      cert.factor_issue = "term " + std::to_string(t + 1) + " factor " + std::to_string(k + 1) + ": " + why;
    };
    if (factors.size() != n) {
      fail(0, "expected " + std::to_string(n) + " factors, found " + std::to_string(factors.size()));
      break;
    }
    for (std::size_t k = 0; k < n; ++k) {
      const auto& f = factors[k];
      if (f.order() != static_cast<std::size_t>(dec.profile.dim(k + 1))) {
        fail(k, "order " + std::to_string(f.order()) + " does not match dimension " +
                    std::to_string(dec.profile.dim(k + 1)));
      } else if (!is_symmetric(f, 1e-10)) {
        fail(k, "not symmetric");
      } else if (std::abs(f.trace() - 1.0) > 1e-10) {
        fail(k, "trace is not 1");
      } else if (!is_psd(f).psd) {
        fail(k, "not positive semidefinite");
      }
      if (!cert.factors_valid) break;
    }
  }

  if (cert.factors_valid) {
    const RealMatrix sum = reassemble(dec);
    cert.residual = frobenius_distance(sum, rho.matrix());
    const double scale = frobenius_norm(rho.matrix());
    cert.relative_residual = scale > 0.0 ? cert.residual / scale : cert.residual;
  } else {
    cert.residual = cert.relative_residual = std::numeric_limits<double>::infinity();
  }
  cert.passed = cert.weights_nonnegative && cert.weights_normalized && cert.factors_valid &&
                cert.relative_residual <= tol;
  return cert;
}

PptCertificate ppt_check(const RealMatrix& rho, const DimensionProfile& profile, std::size_t axis,
                         double tol) {
  const auto psd = is_psd(partial_transpose_matrix(rho, profile, axis), tol);
  return {psd.psd, axis, psd.min_eigenvalue};
}

PptCertificate ppt_check(const DensityMatrix& rho, std::size_t axis, double tol) {
  return ppt_check(rho.matrix(), rho.profile(), axis, tol);
}

TransferCertificate gtpt_transfer(const MultipartiteGraph& g, std::size_t axis,
                                  const SeparableDecomposition* combinatorial) {
  g.profile().check_axis(axis);
  auto degrees = is_degree_symmetric(g, axis);
  if (!degrees.symmetric) {
    std::ostringstream os;
    os << "precondition failed: graph is not degree symmetric on axis " << axis << " (";
    for (std::size_t i = 0; i < degrees.deltas.size(); ++i) {
      const auto& d = degrees.deltas[i];
      os << (i ? ", " : "") << "vertex " << d.vertex << ": " << d.before << "->" << d.after;
    }
    os << ")";
    throw PreconditionError(os.str(), std::nullopt, std::move(degrees));
  }

  const MultipartiteGraph image = gtpt(g, axis);
  TransferCertificate cert;
  cert.exact_identity = laplacian(image) == partial_transpose_matrix(laplacian(g), g.profile(), axis);

  const DensityMatrix rho = density_matrix(g, DensityKind::combinatorial);
  const DensityMatrix rho_image = density_matrix(image, DensityKind::combinatorial);
  const RealMatrix transposed = partial_transpose_matrix(rho.matrix(), g.profile(), axis);
  for (std::size_t i = 0; i < transposed.size(); ++i)
    cert.max_abs_difference =
        std::max(cert.max_abs_difference, std::abs(transposed.data()[i] - rho_image.matrix().data()[i]));
  cert.holds = cert.exact_identity && cert.max_abs_difference <= 1e-12;

  if (combinatorial != nullptr) {
    SeparableDecomposition moved = *combinatorial;
    for (auto& term : moved.terms)
      if (axis - 1 < term.factors.size()) term.factors[axis - 1] = term.factors[axis - 1].transposed();
    moved.trace.clear();
    moved.levels.clear();
    cert.transported_check = verify_decomposition(moved, rho_image);
    moved.residual = cert.transported_check->relative_residual;
    cert.transported = std::move(moved);
  }
  return cert;
}

}  // namespace graphsep
