#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "graphsep/graph.hpp"
#include "graphsep/separability.hpp"

namespace graphsep {

// %.17g with negative zero printed as "0".
std::string format_number(double v);

// Space-separated rows preceded by "order <n>".
void write_matrix(std::ostream& os, const RealMatrix& m);
void write_matrix(std::ostream& os, const IntMatrix& m);

// ---------------------------------------------------------------------------
// Graph files
//
//   dims N_1 N_2 ... N_n
//   e a b                    1-based vertex indices
//   E i1,...,in j1,...,jn    multipartite labels
//
// '#' starts a comment; blank lines are ignored. Loops and repeated edges are
// rejected with the offending line number.
// ---------------------------------------------------------------------------

MultipartiteGraph parse_graph(std::istream& in);
MultipartiteGraph parse_graph(std::string_view text);
MultipartiteGraph load_graph(const std::string& path);

// `dims` line followed by one `e a b` line per edge in ascending order.
void write_graph(std::ostream& os, const MultipartiteGraph& g);

// ---------------------------------------------------------------------------
// Decomposition records
//
//   graphsep-decomposition 1
//   dims 2 2 2
//   terms 4
//   residual <relative Frobenius residual>
//   certificates dominance=true eigen_bounds=true reassembly=true
//   term 1
//   weight 0.25
//   ladder <lambda_{r_1}> ... <lambda_{r_{n-1}}>    (optional)
//   degrees <d_1> ... <d_{N_1}>                     (optional)
//   factor <order>
//   <row-major values, one matrix row per line>
//   ...
//   end
// ---------------------------------------------------------------------------

struct DecompositionRecordHeader {
  bool dominance = true;
  bool eigen_bounds = true;
  bool reassembly = true;
};

void write_decomposition(std::ostream& os, const SeparableDecomposition& dec,
                         const DecompositionRecordHeader& flags);
// Throws ParseError with line numbers.
SeparableDecomposition parse_decomposition(std::istream& in);
SeparableDecomposition load_decomposition(const std::string& path);

}  // namespace graphsep
