#include "graphsep/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "graphsep/errors.hpp"
#include "graphsep/simd/kernels.hpp"

namespace graphsep {

namespace {

constexpr int kMaxSweeps = 100;
constexpr double kConvergence = 1e-13;
constexpr double kSignThreshold = 1e-12;

double off_diagonal_norm(const RealMatrix& a, const simd::KernelTable& k) {
  double acc = 0.0;
  const std::size_t n = a.order();
  for (std::size_t p = 0; p + 1 < n; ++p) acc += k.sum_squares(&a(p, p + 1), n - p - 1);
  return std::sqrt(2.0 * acc);
}

// One Jacobi rotation zeroing a(p, q); a is kept exactly symmetric.
void rotate(RealMatrix& a, RealMatrix& basis, std::size_t p, std::size_t q,
            const simd::KernelTable& k) {
  const double apq = a(p, q);
  const double app = a(p, p);
  const double aqq = a(q, q);
  const double theta = (aqq - app) / (2.0 * apq);
  double t;
  if (std::abs(theta) > 1e150) {
    t = 0.5 / theta;
  } else {
    t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  }
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;
  const std::size_t n = a.order();

  k.rotate(&a(p, 0), &a(q, 0), n, c, s);
  a(p, p) = app - t * apq;
  a(q, q) = aqq + t * apq;
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    if (i == p || i == q) continue;
    a(i, p) = a(p, i);
    a(i, q) = a(q, i);
  }
  k.rotate(&basis(p, 0), &basis(q, 0), n, c, s);
}

}  // namespace

std::vector<double> Eigendecomposition::values() const {
  std::vector<double> v;
  v.reserve(pairs.size());
  for (const auto& p : pairs) v.push_back(p.value);
  return v;
}

Eigendecomposition spectral_decomposition(const RealMatrix& s) {
  const std::size_t n = s.order();
  double scale = 1.0;
  for (double v : s.values()) scale = std::max(scale, std::abs(v));
  if (!is_symmetric(s, 1e-12 * scale)) throw DomainError("spectral_decomposition: matrix is not symmetric");

  const auto& k = simd::active();
  RealMatrix a = s;
  // Symmetrize exactly so the row-then-mirror update stays consistent.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) a(j, i) = a(i, j) = 0.5 * (a(i, j) + a(j, i));

  // Rows of `basis` are the eigenvectors.
  RealMatrix basis = RealMatrix::identity(n);
  const double norm = std::sqrt(k.sum_squares(a.data(), a.size()));

  int sweeps = 0;
  for (; sweeps < kMaxSweeps; ++sweeps) {
    if (off_diagonal_norm(a, k) <= kConvergence * norm) break;
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q)
        if (a(p, q) != 0.0) rotate(a, basis, p, q, k);
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return a(x, x) > a(y, y); });

  Eigendecomposition eig;
  eig.order = n;
  eig.sweeps = sweeps;
  eig.pairs.reserve(n);
  for (std::size_t idx : order) {
    EigenPair pair;
    pair.value = a(idx, idx);
    pair.vector.assign(basis.row(idx).begin(), basis.row(idx).end());
    const auto lead = std::find_if(pair.vector.begin(), pair.vector.end(),
                                   [](double x) { return std::abs(x) > kSignThreshold; });
    if (lead != pair.vector.end() && *lead < 0.0)
      for (double& x : pair.vector) x = -x;
    eig.pairs.push_back(std::move(pair));
  }
  return eig;
}

RealMatrix reconstruct(const Eigendecomposition& eig) {
  const auto& k = simd::active();
  const std::size_t n = eig.order;
  RealMatrix out(n);
  for (const auto& pair : eig.pairs) {
    const double* u = pair.vector.data();
    for (std::size_t i = 0; i < n; ++i) k.axpy(pair.value * u[i], u, &out(i, 0), n);
  }
  return out;
}

PsdCertificate is_psd(const RealMatrix& s, double tol) {
  PsdCertificate cert;
  if (s.order() == 0) {
    cert.psd = true;
    return cert;
  }
  const auto values = spectral_decomposition(s).values();
  cert.min_eigenvalue = values.back();
  for (double v : values) cert.max_abs_eigenvalue = std::max(cert.max_abs_eigenvalue, std::abs(v));
  cert.psd = cert.min_eigenvalue >= -tol * std::max(1.0, cert.max_abs_eigenvalue);
  return cert;
}

DominanceCertificate is_diagonally_dominant(const RealMatrix& s, double tol) {
  const auto& k = simd::active();
  DominanceCertificate cert;
  const std::size_t n = s.order();
  bool first = true;
  for (std::size_t i = 0; i < n; ++i) {
    const double diag = s(i, i);
    const double off = k.sum_abs(&s(i, 0), n) - std::abs(diag);
    const double slack = diag - off;
    if (first || slack < cert.min_slack) cert.min_slack = slack;
    first = false;
    bool ok = slack >= -tol * std::max(1.0, std::abs(diag));
    if (off != 0.0 && !(diag > 0.0)) ok = false;
    if (!ok) {
      cert.dominant = false;
      cert.violating_rows.push_back(i);
    }
  }
  return cert;
}

double inf_norm(const RealMatrix& s) {
  const auto& k = simd::active();
  double best = 0.0;
  for (std::size_t i = 0; i < s.order(); ++i) best = std::max(best, k.sum_abs(&s(i, 0), s.order()));
  return best;
}

double spectral_radius_bound(const RealMatrix& s) { return inf_norm(s); }

double frobenius_norm(const RealMatrix& s) {
  return std::sqrt(simd::active().sum_squares(s.data(), s.size()));
}

double frobenius_distance(const RealMatrix& a, const RealMatrix& b) {
  if (a.order() != b.order()) throw DomainError("frobenius_distance: order mismatch");
  return std::sqrt(simd::active().sum_squared_diff(a.data(), b.data(), a.size()));
}

namespace {

RealMatrix kron2(const RealMatrix& a, const RealMatrix& b, const simd::KernelTable& k) {
  const std::size_t na = a.order();
  const std::size_t nb = b.order();
  RealMatrix out(na * nb);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t r = 0; r < nb; ++r) {
      double* dst = &out(i * nb + r, 0);
      for (std::size_t j = 0; j < na; ++j) k.scale_copy(a(i, j), &b(r, 0), dst + j * nb, nb);
    }
  return out;
}

IntMatrix kron2(const IntMatrix& a, const IntMatrix& b) {
  const std::size_t na = a.order();
  const std::size_t nb = b.order();
  IntMatrix out(na * nb);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < na; ++j)
      for (std::size_t r = 0; r < nb; ++r)
        for (std::size_t c = 0; c < nb; ++c) out(i * nb + r, j * nb + c) = a(i, j) * b(r, c);
  return out;
}

}  // namespace

RealMatrix kron(const std::vector<RealMatrix>& factors) {
  if (factors.empty()) throw DomainError("kron: empty factor list");
  const auto& k = simd::active();
  RealMatrix acc = factors.front();
  for (std::size_t f = 1; f < factors.size(); ++f) acc = kron2(acc, factors[f], k);
  return acc;
}

IntMatrix kron(const std::vector<IntMatrix>& factors) {
  if (factors.empty()) throw DomainError("kron: empty factor list");
  IntMatrix acc = factors.front();
  for (std::size_t f = 1; f < factors.size(); ++f) acc = kron2(acc, factors[f]);
  return acc;
}

template <typename T>
SquareMatrix<T> partial_transpose_matrix(const SquareMatrix<T>& m, const DimensionProfile& profile,
                                         std::size_t axis) {
  profile.check_axis(axis);
  if (m.order() != profile.total())
    throw DomainError("partial transpose: matrix order " + std::to_string(m.order()) +
                      " does not match profile total " + std::to_string(profile.total()));
  const std::size_t stride = profile.stride(axis);
  const std::size_t dim = static_cast<std::size_t>(profile.dim(axis));
  const std::size_t n = m.order();
  SquareMatrix<T> out(n);
  for (std::size_t r = 0; r < n; ++r) {
    const std::size_t ri = (r / stride) % dim;
    const std::size_t r_base = r - ri * stride;
    for (std::size_t c = 0; c < n; ++c) {
      const std::size_t ci = (c / stride) % dim;
      const std::size_t c_base = c - ci * stride;
      out(r_base + ci * stride, c_base + ri * stride) = m(r, c);
    }
  }
  return out;
}

template IntMatrix partial_transpose_matrix(const IntMatrix&, const DimensionProfile&, std::size_t);
template RealMatrix partial_transpose_matrix(const RealMatrix&, const DimensionProfile&, std::size_t);

}  // namespace graphsep
