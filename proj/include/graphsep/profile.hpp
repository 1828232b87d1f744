#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace graphsep {

inline constexpr std::size_t kDefaultVertexCap = 1024;

// Cap on the number of vertices a profile may describe. Reads
// GRAPHSEP_MAX_VERTICES when set to a positive integer, else kDefaultVertexCap.
std::size_t default_vertex_cap();

/// Multipartite label (i_1, ..., i_n) of a vertex, 1-based per axis.
struct VertexLabel {
  std::vector<int> coords;

  friend bool operator==(const VertexLabel&, const VertexLabel&) = default;
};

std::string to_string(const VertexLabel& label);

/// Subsystem dimensions N_1, ..., N_n of a multipartite system.
///
/// Vertices are numbered 1..total in mixed radix with axis 1 most significant:
/// v = (i_1 - 1) N_2...N_n + (i_2 - 1) N_3...N_n + ... + i_n.
class DimensionProfile {
 public:
  // Throws DomainError when n < 2, any dim < 2, or the product exceeds `cap`.
  explicit DimensionProfile(std::vector<int> dims, std::size_t cap = default_vertex_cap());

  std::size_t parties() const { return dims_.size(); }
  int dim(std::size_t axis) const { return dims_.at(axis - 1); }  // axis is 1-based
  const std::vector<int>& dims() const { return dims_; }
  std::size_t total() const { return total_; }

  // Distance in 0-based index between consecutive values of coordinate `axis`.
  std::size_t stride(std::size_t axis) const { return strides_.at(axis - 1); }

  // Number of vertices sharing a prefix of length `depth` (0 <= depth <= n).
  std::size_t block_size(std::size_t depth) const;

  void check_axis(std::size_t axis) const;

  friend bool operator==(const DimensionProfile& a, const DimensionProfile& b) {
    return a.dims_ == b.dims_;
  }

 private:
  std::vector<int> dims_;
  std::vector<std::size_t> strides_;
  std::size_t total_ = 0;
};

std::string to_string(const DimensionProfile& profile);

// 1-based mixed-radix index of `label`. Throws DomainError naming the axis
// when a coordinate is out of range.
std::size_t vertex_index(const VertexLabel& label, const DimensionProfile& profile);

// Inverse of vertex_index. Throws DomainError unless 1 <= index <= total.
VertexLabel vertex_label(std::size_t index, const DimensionProfile& profile);

}  // namespace graphsep
