#pragma once

#include <cstddef>
#include <vector>

namespace mcg {

/// Dense row-major tensor over (stage, state, action). The action index is
/// contiguous, so slice(t) is a flat (state*action)-length array suitable for
/// the vector kernels.
struct Tensor3 {
  int n0 = 0, n1 = 0, n2 = 0;
  std::vector<double> v;

  Tensor3() = default;
  Tensor3(int d0, int d1, int d2, double fill = 0.0)
      : n0(d0), n1(d1), n2(d2),
        v(static_cast<std::size_t>(d0) * d1 * d2, fill) {}

  std::size_t idx(int i, int j, int k) const {
    return (static_cast<std::size_t>(i) * n1 + j) * n2 + k;
  }
  double& operator()(int i, int j, int k) { return v[idx(i, j, k)]; }
  double operator()(int i, int j, int k) const { return v[idx(i, j, k)]; }

  double* data() { return v.data(); }
  const double* data() const { return v.data(); }
  double* slice(int i) { return v.data() + static_cast<std::size_t>(i) * n1 * n2; }
  const double* slice(int i) const {
    return v.data() + static_cast<std::size_t>(i) * n1 * n2;
  }
  std::size_t slice_size() const { return static_cast<std::size_t>(n1) * n2; }
  std::size_t size() const { return v.size(); }
  bool same_shape(const Tensor3& o) const {
    return n0 == o.n0 && n1 == o.n1 && n2 == o.n2;
  }
};

/// Dense row-major tensor over (stage, next_state, state, action).
struct Tensor4 {
  int n0 = 0, n1 = 0, n2 = 0, n3 = 0;
  std::vector<double> v;

  Tensor4() = default;
  Tensor4(int d0, int d1, int d2, int d3, double fill = 0.0)
      : n0(d0), n1(d1), n2(d2), n3(d3),
        v(static_cast<std::size_t>(d0) * d1 * d2 * d3, fill) {}

  std::size_t idx(int i, int j, int k, int l) const {
    return ((static_cast<std::size_t>(i) * n1 + j) * n2 + k) * n3 + l;
  }
  double& operator()(int i, int j, int k, int l) { return v[idx(i, j, k, l)]; }
  double operator()(int i, int j, int k, int l) const { return v[idx(i, j, k, l)]; }

  /// Flat (n2*n3)-length block for fixed leading indices (i, j).
  double* slice(int i, int j) {
    return v.data() + (static_cast<std::size_t>(i) * n1 + j) * n2 * n3;
  }
  const double* slice(int i, int j) const {
    return v.data() + (static_cast<std::size_t>(i) * n1 + j) * n2 * n3;
  }
  std::size_t slice_size() const { return static_cast<std::size_t>(n2) * n3; }
  std::size_t size() const { return v.size(); }
};

}  // namespace mcg
