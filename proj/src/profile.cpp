#include "graphsep/profile.hpp"

#include <cerrno>
#include <cstdlib>

#include "graphsep/errors.hpp"

namespace graphsep {

std::size_t default_vertex_cap() {
  const char* env = std::getenv("GRAPHSEP_MAX_VERTICES");
  if (env == nullptr || *env == '\0') return kDefaultVertexCap;
  char* end = nullptr;
  errno = 0;
  const unsigned long long v = std::strtoull(env, &end, 10);
  if (errno != 0 || *end != '\0' || v == 0) return kDefaultVertexCap;
  return static_cast<std::size_t>(v);
}

std::string to_string(const VertexLabel& label) {
  std::string s = "(";
  for (std::size_t k = 0; k < label.coords.size(); ++k) {
    if (k) s += ',';
    s += std::to_string(label.coords[k]);
  }
  return s + ")";
}

DimensionProfile::DimensionProfile(std::vector<int> dims, std::size_t cap) : dims_(std::move(dims)) {
  if (dims_.size() < 2)
    throw DomainError("dimension profile needs at least 2 subsystems, got " +
                      std::to_string(dims_.size()));
  std::size_t total = 1;
  for (std::size_t k = 0; k < dims_.size(); ++k) {
    if (dims_[k] < 2)
      throw DomainError("subsystem " + std::to_string(k + 1) + " has dimension " +
                        std::to_string(dims_[k]) + " (must be >= 2)");
    if (total > cap / static_cast<std::size_t>(dims_[k]))
      throw DomainError("profile " + to_string(*this) + " exceeds the vertex cap of " +
                        std::to_string(cap));
    total *= static_cast<std::size_t>(dims_[k]);
  }
  total_ = total;
  strides_.assign(dims_.size(), 1);
  for (std::size_t k = dims_.size() - 1; k > 0; --k)
    strides_[k - 1] = strides_[k] * static_cast<std::size_t>(dims_[k]);
}

std::size_t DimensionProfile::block_size(std::size_t depth) const {
  if (depth > dims_.size()) throw DomainError("prefix depth out of range");
  return depth == dims_.size() ? 1 : strides_[depth] * static_cast<std::size_t>(dims_[depth]);
}

void DimensionProfile::check_axis(std::size_t axis) const {
  if (axis < 1 || axis > dims_.size())
    throw DomainError("axis " + std::to_string(axis) + " out of range 1.." +
                      std::to_string(dims_.size()));
}

std::string to_string(const DimensionProfile& profile) {
  std::string s = "(";
  for (std::size_t k = 0; k < profile.dims().size(); ++k) {
    if (k) s += ',';
    s += std::to_string(profile.dims()[k]);
  }
  return s + ")";
}

std::size_t vertex_index(const VertexLabel& label, const DimensionProfile& profile) {
  if (label.coords.size() != profile.parties())
    throw DomainError("label " + to_string(label) + " has " + std::to_string(label.coords.size()) +
                      " coordinates, profile has " + std::to_string(profile.parties()));
  std::size_t index = 0;
  for (std::size_t axis = 1; axis <= profile.parties(); ++axis) {
    const int c = label.coords[axis - 1];
    if (c < 1 || c > profile.dim(axis))
      throw DomainError("coordinate " + std::to_string(c) + " on axis " + std::to_string(axis) +
                        " out of range 1.." + std::to_string(profile.dim(axis)));
    index += static_cast<std::size_t>(c - 1) * profile.stride(axis);
  }
  return index + 1;
}

VertexLabel vertex_label(std::size_t index, const DimensionProfile& profile) {
  if (index < 1 || index > profile.total())
    throw DomainError("vertex index " + std::to_string(index) + " out of range 1.." +
                      std::to_string(profile.total()));
  VertexLabel label;
  label.coords.resize(profile.parties());
  std::size_t rest = index - 1;
  for (std::size_t axis = 1; axis <= profile.parties(); ++axis) {
    label.coords[axis - 1] = static_cast<int>(rest / profile.stride(axis)) + 1;
    rest %= profile.stride(axis);
  }
  return label;
}

}  // namespace graphsep
