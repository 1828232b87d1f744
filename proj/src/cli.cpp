#include "graphsep/cli.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "graphsep/errors.hpp"
#include "graphsep/generators.hpp"
#include "graphsep/io.hpp"
#include "graphsep/separability.hpp"
#include "graphsep/transforms.hpp"

namespace graphsep {

namespace {

const char* yes_no(bool b) { return b ? "true" : "false"; }

struct Options {
  std::string graph_file;
  std::string second_file;
  std::string matrix = "Q";
  std::string format = "human";
  std::string what;
  std::string family;
  std::size_t axis = 1;
  double tol = kReassemblyTolerance;
  std::vector<int> dims;
  std::uint64_t seed = 0;
  std::size_t budget = 4;
  std::string out_file;
};

// kv lines are emitted as-is; human output puts a space after the key.
class Report {
 public:
  Report(std::ostream& os, bool kv) : os_(os), kv_(kv) {}

  template <typename T>
  Report& line(const std::string& key, const T& value) {
    os_ << key << (kv_ ? "=" : ": ") << value << '\n';
    return *this;
  }

 private:
  std::ostream& os_;
  bool kv_;
};

int cmd_build(const Options& o, std::ostream& out) {
  const MultipartiteGraph g = load_graph(o.graph_file);
  std::ostringstream body;
  if (o.matrix == "A") write_matrix(body, adjacency_matrix(g));
  else if (o.matrix == "D") write_matrix(body, degree_matrix(g));
  else if (o.matrix == "L") write_matrix(body, laplacian(g));
  else if (o.matrix == "Q") write_matrix(body, signless_laplacian(g));
  else if (o.matrix == "rho_l") write_matrix(body, density_matrix(g, DensityKind::combinatorial).matrix());
  else write_matrix(body, density_matrix(g, DensityKind::signless).matrix());

  if (o.format == "human") {
    out << body.str();
    return kExitPass;
  }
  // kv: matrix=<kind>, order=<n>, rowK=<values>
  std::istringstream lines(body.str());
  std::string header;
  std::getline(lines, header);
  out << "matrix=" << o.matrix << "\norder=" << header.substr(6) << '\n';
  std::string row;
  for (std::size_t r = 1; std::getline(lines, row); ++r) out << "row" << r << '=' << row << '\n';
  return kExitPass;
}

int cmd_check(const Options& o, std::ostream& out) {
  const MultipartiteGraph g = load_graph(o.graph_file);
  const bool kv = o.format == "kv";
  Report rep(out, kv);
  bool holds = false;

  if (o.what == "theorem-conditions") {
    const ConditionReport r = check_theorem_conditions(g);
    holds = r.overall;
    if (kv) {
      out << "property=theorem-conditions\n" << describe(r);
      out << "prerequisites_met=" << yes_no(r.prerequisites_met()) << '\n';
    } else {
      out << "theorem-conditions: " << yes_no(r.overall) << '\n';
      out << "  partial symmetry (axis 1): " << yes_no(r.partial_symmetry.symmetric) << '\n';
      out << "  cond1 no intra-layer edges: " << yes_no(r.no_intra_layer_edges.holds);
      if (!r.no_intra_layer_edges.holds) out << " (witness " << to_string(r.no_intra_layer_edges.witnesses.front()) << ")";
      out << "\n  cond2 uniform blocks: " << yes_no(r.uniform_blocks) << '\n';
      out << "  cond3 uniform layer degrees: " << yes_no(r.layer_degrees.holds) << '\n';
      out << "  decomposable: " << yes_no(r.prerequisites_met()) << '\n';
    }
    return holds ? kExitPass : kExitPropertyFalse;
  }

  g.profile().check_axis(o.axis);
  if (o.what == "gtpt-identity") {
    const auto c = gtpt_matrix_identity(g, o.axis);
    holds = c.holds;
    rep.line("property", o.what).line("axis", o.axis).line("holds", yes_no(holds));
    if (c.first_difference)
      rep.line("first_difference", "(" + std::to_string(c.first_difference->first + 1) + "," +
                                       std::to_string(c.first_difference->second + 1) + ")");
  } else if (o.what == "degree-sym") {
    const auto r = is_degree_symmetric(g, o.axis);
    holds = r.symmetric;
    rep.line("property", o.what).line("axis", o.axis).line("holds", yes_no(holds));
    for (const auto& d : r.deltas)
      rep.line("vertex" + std::to_string(d.vertex), std::to_string(d.before) + "->" + std::to_string(d.after));
  } else {
    const auto r = is_partially_symmetric(g, o.axis);
    holds = r.symmetric;
    rep.line("property", o.what).line("axis", o.axis).line("holds", yes_no(holds));
    if (r.violating_edge)
      rep.line("violating_edge", to_string(*r.violating_edge)).line("missing_partner", to_string(*r.missing_partner));
  }
  return holds ? kExitPass : kExitPropertyFalse;
}

int cmd_decompose(const Options& o, std::ostream& out, std::ostream& err) {
  const MultipartiteGraph g = load_graph(o.graph_file);
  SeparableDecomposition dec = decompose(g);

  const DensityMatrix rho = density_matrix(g, DensityKind::signless);
  const auto cert = verify_decomposition(dec, rho, o.tol);
  dec.residual = cert.relative_residual;
  const bool dominance = std::all_of(dec.levels.begin(), dec.levels.end(),
                                     [](const LevelStep& s) { return s.dominance.dominant; });

  std::ofstream file(o.second_file);
  if (!file) throw ParseError(0, "cannot write decomposition file '" + o.second_file + "'");
  write_decomposition(file, dec, {dominance, true, cert.passed});
  file.close();
  if (!file) throw ParseError(0, "error writing '" + o.second_file + "'");

  Report rep(out, o.format == "kv");
  rep.line("terms", dec.terms.size()).line("residual", format_number(cert.relative_residual));
  rep.line("verified", yes_no(cert.passed));
  bool ppt_ok = true;
  for (std::size_t axis = 1; axis <= g.profile().parties(); ++axis) {
    const auto p = ppt_check(rho, axis);
    ppt_ok = ppt_ok && p.passed;
    rep.line("ppt.axis" + std::to_string(axis), yes_no(p.passed));
    rep.line("ppt.axis" + std::to_string(axis) + ".min_eigenvalue", format_number(p.min_eigenvalue));
  }
  if (!cert.passed && !cert.factor_issue.empty()) err << "graphsep: " << cert.factor_issue << '\n';
  return cert.passed && dominance && ppt_ok ? kExitPass : kExitCertificate;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const MultipartiteGraph g = load_graph(o.graph_file);
  const SeparableDecomposition dec = load_decomposition(o.second_file);
  if (!(dec.profile == g.profile()))
    throw ParseError(0, "decomposition dims " + to_string(dec.profile) + " do not match graph dims " +
                            to_string(g.profile()));
  const auto cert = verify_decomposition(dec, density_matrix(g, DensityKind::signless), o.tol);

  Report rep(out, o.format == "kv");
  rep.line("verified", yes_no(cert.passed));
  rep.line("terms", dec.terms.size());
  rep.line("residual", format_number(cert.relative_residual));
  rep.line("weight_sum", format_number(cert.weight_sum));
  rep.line("weights_nonnegative", yes_no(cert.weights_nonnegative));
  rep.line("factors_valid", yes_no(cert.factors_valid));
  if (!cert.factor_issue.empty()) rep.line("factor_issue", cert.factor_issue);
  return cert.passed ? kExitPass : kExitPropertyFalse;
}

int cmd_gen(const Options& o, std::ostream& out, std::ostream& err) {
  const DimensionProfile profile(o.dims);
  std::ostringstream body;
  if (o.family == "theorem") {
    write_graph(body, gen_theorem_graph(profile, o.seed));
  } else if (o.family == "psym") {
    write_graph(body, gen_partially_symmetric(profile, o.budget, o.seed));
  } else {
    const auto sample = gen_degree_symmetric_only(profile, o.seed, o.budget);
    write_graph(body, sample.graph);
    err << "partially_symmetric=" << yes_no(sample.partially_symmetric) << '\n';
  }
  if (o.out_file.empty()) {
    out << body.str();
    return kExitPass;
  }
  std::ofstream file(o.out_file);
  file << body.str();
  file.close();
  if (!file) throw ParseError(0, "cannot write graph file '" + o.out_file + "'");
  return kExitPass;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Graph density matrices, GTPT symmetry checks and separable decompositions", "graphsep"};
  app.require_subcommand(1);
  Options o;
  const std::vector<std::string> formats{"human", "kv"};

  auto* build = app.add_subcommand("build", "Print A, D, L, Q, rho_l or rho_q of a graph");
  build->add_option("graph", o.graph_file, "Graph file")->required();
  build->add_option("--matrix", o.matrix, "Matrix to print")
      ->check(CLI::IsMember({"A", "D", "L", "Q", "rho_l", "rho_q"}));
  build->add_option("--format", o.format)->check(CLI::IsMember(formats));

  auto* check = app.add_subcommand("check", "Test a graph property; exit 0 iff it holds");
  check->add_option("graph", o.graph_file, "Graph file")->required();
  check->add_option("property", o.what, "gtpt-identity, degree-sym, partial-sym or theorem-conditions")
      ->required()
      ->check(CLI::IsMember({"gtpt-identity", "degree-sym", "partial-sym", "theorem-conditions"}));
  check->add_option("--axis", o.axis, "Subsystem (1-based)")->capture_default_str();
  check->add_option("--format", o.format)->check(CLI::IsMember(formats));

  auto* dec = app.add_subcommand("decompose", "Write a fully separable decomposition of rho_q");
  dec->add_option("graph", o.graph_file, "Graph file")->required();
  dec->add_option("out", o.second_file, "Decomposition file to write")->required();
  dec->add_option("--tol", o.tol, "Relative reassembly tolerance")->capture_default_str();
  dec->add_option("--format", o.format)->check(CLI::IsMember(formats));

  auto* verify = app.add_subcommand("verify", "Re-check a stored decomposition against rho_q");
  verify->add_option("graph", o.graph_file, "Graph file")->required();
  verify->add_option("decomposition", o.second_file, "Decomposition file")->required();
  verify->add_option("--tol", o.tol, "Relative reassembly tolerance")->capture_default_str();
  verify->add_option("--format", o.format)->check(CLI::IsMember(formats));

  auto* gen = app.add_subcommand("gen", "Generate a seeded corpus graph");
  gen->add_option("family", o.family, "theorem, psym or degsym")
      ->required()
      ->check(CLI::IsMember({"theorem", "psym", "degsym"}));
  gen->add_option("--dims", o.dims, "Comma-separated dimensions, e.g. 2,2,2")->required()->delimiter(',');
  gen->add_option("--seed", o.seed)->capture_default_str();
  gen->add_option("--budget", o.budget, "Random pair draws (psym, degsym)")->capture_default_str();
  gen->add_option("--out", o.out_file, "Output file (default stdout)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "graphsep: " << e.what() << '\n';
    return kExitIo;
  }

  try {
    if (build->parsed()) return cmd_build(o, out);
    if (check->parsed()) return cmd_check(o, out);
    if (dec->parsed()) return cmd_decompose(o, out, err);
    if (verify->parsed()) return cmd_verify(o, out);
    return cmd_gen(o, out, err);
  } catch (const ParseError& e) {
    err << "graphsep: " << e.what() << '\n';
    return kExitIo;
  } catch (const PreconditionError& e) {
    err << "graphsep: " << e.what() << '\n';
    return kExitPrecondition;
  } catch (const ConstructionError& e) {
    err << "graphsep: " << e.what() << '\n';
    return kExitCertificate;
  } catch (const DomainError& e) {
    err << "graphsep: " << e.what() << '\n';
    return kExitPrecondition;
  } catch (const std::exception& e) {
    err << "graphsep: " << e.what() << '\n';
    return kExitCertificate;
  }
}

}  // namespace graphsep
