#include "graphsep/io.hpp"

#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <vector>

#include "graphsep/errors.hpp"

namespace graphsep {

std::string format_number(double v) {
  if (v == 0.0) return "0";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_matrix(std::ostream& os, const RealMatrix& m) {
  os << "order " << m.order() << '\n';
  for (std::size_t i = 0; i < m.order(); ++i) {
    for (std::size_t j = 0; j < m.order(); ++j) os << (j ? " " : "") << format_number(m(i, j));
    os << '\n';
  }
}

void write_matrix(std::ostream& os, const IntMatrix& m) {
  os << "order " << m.order() << '\n';
  for (std::size_t i = 0; i < m.order(); ++i) {
    for (std::size_t j = 0; j < m.order(); ++j) os << (j ? " " : "") << m(i, j);
    os << '\n';
  }
}

namespace {

std::vector<std::string> tokens(const std::string& line) {
  std::istringstream is(line.substr(0, line.find('#')));
  std::vector<std::string> out;
  for (std::string t; is >> t;) out.push_back(t);
  return out;
}

template <typename Int>
Int parse_int(const std::string& s, std::size_t line, const char* what) {
  Int v{};
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size())
    throw ParseError(line, std::string("invalid ") + what + " '" + s + "'");
  return v;
}

double parse_real(const std::string& s, std::size_t line) {
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (s.empty() || end != s.c_str() + s.size()) throw ParseError(line, "invalid number '" + s + "'");
  return v;
}

std::vector<int> parse_label(const std::string& s, std::size_t line) {
  std::vector<int> coords;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = s.find(',', start);
    coords.push_back(parse_int<int>(s.substr(start, comma - start), line, "label coordinate"));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return coords;
}

}  // namespace

MultipartiteGraph parse_graph(std::istream& in) {
  std::optional<DimensionProfile> profile;
  EdgeSet edges;
  std::map<Edge, std::size_t> first_seen;
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const auto tok = tokens(raw);
    if (tok.empty()) continue;
    if (!profile) {
      if (tok[0] != "dims") throw ParseError(line, "expected 'dims N_1 ... N_n' before any edge");
      std::vector<int> dims;
      for (std::size_t k = 1; k < tok.size(); ++k) dims.push_back(parse_int<int>(tok[k], line, "dimension"));
      try {
        profile.emplace(std::move(dims));
      } catch (const DomainError& e) {
        throw ParseError(line, e.what());
      }
      continue;
    }
    if ((tok[0] != "e" && tok[0] != "E") || tok.size() != 3)
      throw ParseError(line, "expected 'e a b' or 'E i1,...,in j1,...,jn'");
    std::size_t u = 0;
    std::size_t v = 0;
    try {
      if (tok[0] == "e") {
        u = parse_int<std::size_t>(tok[1], line, "vertex index");
        v = parse_int<std::size_t>(tok[2], line, "vertex index");
        vertex_label(u, *profile);
        vertex_label(v, *profile);
      } else {
        u = vertex_index(VertexLabel{parse_label(tok[1], line)}, *profile);
        v = vertex_index(VertexLabel{parse_label(tok[2], line)}, *profile);
      }
    } catch (const DomainError& e) {
      throw ParseError(line, e.what());
    }
    if (u == v) throw ParseError(line, "loop at vertex " + std::to_string(u));
    const Edge e = Edge::of(u, v);
    if (const auto it = first_seen.find(e); it != first_seen.end())
      throw ParseError(line, "duplicate edge " + to_string(e) + " (first on line " +
                                 std::to_string(it->second) + ")");
    first_seen.emplace(e, line);
    edges.insert(e);
  }
  if (!profile) throw ParseError(line, "missing 'dims' line");
  return MultipartiteGraph(*profile, std::move(edges));
}

MultipartiteGraph parse_graph(std::string_view text) {
  std::istringstream is{std::string(text)};
  return parse_graph(is);
}

MultipartiteGraph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open graph file '" + path + "'");
  try {
    return parse_graph(in);
  } catch (const ParseError& e) {
    throw ParseError(0, path + ": " + e.what());
  }
}

void write_graph(std::ostream& os, const MultipartiteGraph& g) {
  os << "dims";
  for (int d : g.profile().dims()) os << ' ' << d;
  os << '\n';
  for (const Edge& e : g.edges()) os << "e " << e.a << ' ' << e.b << '\n';
}

// ---------------------------------------------------------------------------

void write_decomposition(std::ostream& os, const SeparableDecomposition& dec,
                         const DecompositionRecordHeader& flags) {
  auto b = [](bool v) { return v ? "true" : "false"; };
  os << "graphsep-decomposition 1\n";
  os << "dims";
  for (int d : dec.profile.dims()) os << ' ' << d;
  os << "\nterms " << dec.terms.size() << '\n';
  os << "residual " << format_number(dec.residual) << '\n';
  os << "certificates dominance=" << b(flags.dominance) << " eigen_bounds=" << b(flags.eigen_bounds)
     << " reassembly=" << b(flags.reassembly) << '\n';
  for (std::size_t t = 0; t < dec.terms.size(); ++t) {
    const auto& term = dec.terms[t];
    os << "term " << t + 1 << '\n';
    os << "weight " << format_number(term.weight) << '\n';
    if (t < dec.trace.size()) {
      os << "ladder";
      for (double l : dec.trace[t].ladder) os << ' ' << format_number(l);
      os << "\ndegrees";
      for (auto d : dec.trace[t].degrees) os << ' ' << d;
      os << '\n';
    }
    for (const auto& f : term.factors) {
      os << "factor " << f.order() << '\n';
      for (std::size_t i = 0; i < f.order(); ++i) {
        for (std::size_t j = 0; j < f.order(); ++j) os << (j ? " " : "") << format_number(f(i, j));
        os << '\n';
      }
    }
  }
  os << "end\n";
}

namespace {

class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  // Next non-blank line as tokens; empty at end of input.
  std::vector<std::string> next() {
    std::string raw;
    while (std::getline(in_, raw)) {
      ++line_;
      auto tok = tokens(raw);
      if (!tok.empty()) return tok;
    }
    return {};
  }

  std::vector<std::string> expect(const char* keyword) {
    auto tok = next();
    if (tok.empty()) throw ParseError(line_, std::string("unexpected end of input, expected '") + keyword + "'");
    if (tok[0] != keyword) throw ParseError(line_, std::string("expected '") + keyword + "', found '" + tok[0] + "'");
    return tok;
  }

  std::size_t line() const { return line_; }

 private:
  std::istream& in_;
  std::size_t line_ = 0;
};

}  // namespace

SeparableDecomposition parse_decomposition(std::istream& in) {
  LineReader reader(in);
  auto tok = reader.expect("graphsep-decomposition");
  if (tok.size() != 2 || tok[1] != "1") throw ParseError(reader.line(), "unsupported record version");

  tok = reader.expect("dims");
  std::vector<int> dims;
  for (std::size_t k = 1; k < tok.size(); ++k) dims.push_back(parse_int<int>(tok[k], reader.line(), "dimension"));
  std::optional<DimensionProfile> profile;
  try {
    profile.emplace(std::move(dims));
  } catch (const DomainError& e) {
    throw ParseError(reader.line(), e.what());
  }

  tok = reader.expect("terms");
  if (tok.size() != 2) throw ParseError(reader.line(), "expected 'terms <count>'");
  const auto count = parse_int<std::size_t>(tok[1], reader.line(), "term count");

  tok = reader.expect("residual");
  if (tok.size() != 2) throw ParseError(reader.line(), "expected 'residual <value>'");
  SeparableDecomposition dec{*profile, {}, {}, {}, parse_real(tok[1], reader.line())};
  reader.expect("certificates");

  tok = reader.next();
  for (std::size_t t = 0; t < count; ++t) {
    if (tok.empty() || tok[0] != "term" || tok.size() != 2 ||
        parse_int<std::size_t>(tok[1], reader.line(), "term number") != t + 1)
      throw ParseError(reader.line(), "expected 'term " + std::to_string(t + 1) + "'");
    tok = reader.expect("weight");
    if (tok.size() != 2) throw ParseError(reader.line(), "expected 'weight <value>'");
    DecompositionTerm term;
    term.weight = parse_real(tok[1], reader.line());
    TermTrace trace;
    bool traced = false;

    tok = reader.next();
    while (!tok.empty() && tok[0] != "term" && tok[0] != "end") {
      if (tok[0] == "ladder") {
        traced = true;
        for (std::size_t k = 1; k < tok.size(); ++k) trace.ladder.push_back(parse_real(tok[k], reader.line()));
      } else if (tok[0] == "degrees") {
        for (std::size_t k = 1; k < tok.size(); ++k)
          trace.degrees.push_back(parse_int<std::int64_t>(tok[k], reader.line(), "degree"));
      } else if (tok[0] == "factor") {
        if (tok.size() != 2) throw ParseError(reader.line(), "expected 'factor <order>'");
        const auto order = parse_int<std::size_t>(tok[1], reader.line(), "factor order");
        if (order == 0 || order > profile->total()) throw ParseError(reader.line(), "factor order out of range");
        RealMatrix f(order);
        for (std::size_t i = 0; i < order; ++i) {
          const auto row = reader.next();
          if (row.size() != order)
            throw ParseError(reader.line(), "factor row has " + std::to_string(row.size()) + " values, expected " +
                                                std::to_string(order));
          for (std::size_t j = 0; j < order; ++j) f(i, j) = parse_real(row[j], reader.line());
        }
        term.factors.push_back(std::move(f));
      } else {
        throw ParseError(reader.line(), "unexpected '" + tok[0] + "' inside term");
      }
      tok = reader.next();
    }
    dec.terms.push_back(std::move(term));
    if (traced) dec.trace.push_back(std::move(trace));
  }
  if (tok.empty() || tok[0] != "end") throw ParseError(reader.line(), "expected 'end' after " + std::to_string(count) + " terms");
  if (!dec.trace.empty() && dec.trace.size() != dec.terms.size()) dec.trace.clear();
  return dec;
}

SeparableDecomposition load_decomposition(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open decomposition file '" + path + "'");
  try {
    return parse_decomposition(in);
  } catch (const ParseError& e) {
    throw ParseError(0, path + ": " + e.what());
  }
}

}  // namespace graphsep
