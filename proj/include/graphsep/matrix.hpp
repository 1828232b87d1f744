#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace graphsep {

/// Dense square matrix stored row-major.
///
/// Used for both the exact integer constructions (adjacency, degree and the two
/// Laplacians) and the floating-point matrices derived from them.
template <typename T>
class SquareMatrix {
 public:
  using value_type = T;

  SquareMatrix() = default;
  explicit SquareMatrix(std::size_t order, T fill = T{})
      : order_(order), data_(order * order, fill) {}

  static SquareMatrix identity(std::size_t order) {
    SquareMatrix m(order);
    for (std::size_t i = 0; i < order; ++i) m(i, i) = T{1};
    return m;
  }

  std::size_t order() const { return order_; }
  std::size_t size() const { return data_.size(); }
  bool empty() const { return order_ == 0; }

  T& operator()(std::size_t row, std::size_t col) { return data_[row * order_ + col]; }
  const T& operator()(std::size_t row, std::size_t col) const {
    return data_[row * order_ + col];
  }

  std::span<T> row(std::size_t r) { return {data_.data() + r * order_, order_}; }
  std::span<const T> row(std::size_t r) const { return {data_.data() + r * order_, order_}; }

  T* data() { return data_.data(); }
  const T* data() const { return data_.data(); }
  std::span<const T> values() const { return data_; }

  T trace() const {
    T t{};
    for (std::size_t i = 0; i < order_; ++i) t += (*this)(i, i);
    return t;
  }

  SquareMatrix transposed() const {
    SquareMatrix t(order_);
    for (std::size_t i = 0; i < order_; ++i)
      for (std::size_t j = 0; j < order_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  bool is_zero() const {
    for (const T& v : data_)
      if (v != T{}) return false;
    return true;
  }

  friend bool operator==(const SquareMatrix&, const SquareMatrix&) = default;

 private:
  std::size_t order_ = 0;
  std::vector<T> data_;
};

using IntMatrix = SquareMatrix<std::int64_t>;
using RealMatrix = SquareMatrix<double>;

inline RealMatrix to_real(const IntMatrix& m) {
  RealMatrix r(m.order());
  for (std::size_t i = 0; i < m.size(); ++i) r.data()[i] = static_cast<double>(m.data()[i]);
  return r;
}

inline RealMatrix scaled(const RealMatrix& m, double factor) {
  RealMatrix r(m.order());
  for (std::size_t i = 0; i < m.size(); ++i) r.data()[i] = m.data()[i] * factor;
  return r;
}

// Outer product u u^T.
inline RealMatrix outer(std::span<const double> u) {
  RealMatrix r(u.size());
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = 0; j < u.size(); ++j) r(i, j) = u[i] * u[j];
  return r;
}

template <typename T>
bool is_symmetric(const SquareMatrix<T>& m, double tol = 0.0) {
  for (std::size_t i = 0; i < m.order(); ++i)
    for (std::size_t j = i + 1; j < m.order(); ++j) {
      const double d = static_cast<double>(m(i, j)) - static_cast<double>(m(j, i));
      if (d > tol || d < -tol) return false;
    }
  return true;
}

}  // namespace graphsep
