#pragma once

#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <numeric>
#include <string>
#include <vector>

#include "gprwi/errors.hpp"

namespace gprwi {

// Dense row-major n-d array. `grad` is allocated lazily and always matches
// `values` in length once present.
template <typename T>
struct Tensor {
  std::vector<std::size_t> shape;
  std::vector<T> values;
  std::vector<T> grad;  // empty until required

  Tensor() = default;

  explicit Tensor(std::vector<std::size_t> s) : shape(std::move(s)) {
    values.assign(numel(), T(0));
  }

  Tensor(std::initializer_list<std::size_t> s)
      : Tensor(std::vector<std::size_t>(s)) {}

  std::size_t numel() const {
    std::size_t n = 1;
    for (std::size_t d : shape) n *= d;
    return shape.empty() ? 0 : n;
  }

  std::size_t rank() const { return shape.size(); }

  T* data() { return values.data(); }
  const T* data() const { return values.data(); }

  void ensure_grad() {
    if (grad.size() != values.size()) grad.assign(values.size(), T(0));
  }

  void zero_grad() {
    if (!grad.empty()) std::fill(grad.begin(), grad.end(), T(0));
  }

  bool has_grad() const { return grad.size() == values.size(); }

  T& operator[](std::size_t i) { return values[i]; }
  const T& operator[](std::size_t i) const { return values[i]; }

  // 2-d / 3-d / 4-d accessors for the shapes the network actually uses
  T& at(std::size_t i, std::size_t j) { return values[i * shape[1] + j]; }
  const T& at(std::size_t i, std::size_t j) const {
    return values[i * shape[1] + j];
  }
  T& at(std::size_t i, std::size_t j, std::size_t k) {
    return values[(i * shape[1] + j) * shape[2] + k];
  }
  const T& at(std::size_t i, std::size_t j, std::size_t k) const {
    return values[(i * shape[1] + j) * shape[2] + k];
  }
  T& at(std::size_t i, std::size_t j, std::size_t k, std::size_t l) {
    return values[((i * shape[1] + j) * shape[2] + k) * shape[3] + l];
  }
  const T& at(std::size_t i, std::size_t j, std::size_t k,
              std::size_t l) const {
    return values[((i * shape[1] + j) * shape[2] + k) * shape[3] + l];
  }

  bool same_shape(const Tensor& o) const { return shape == o.shape; }

  void require_shape(const std::vector<std::size_t>& s,
                     const char* what) const {
    if (shape != s)
      throw ShapeError(std::string(what) + ": got " + shape_str(shape) +
                       ", expected " + shape_str(s));
  }

  void check_finite(const char* what) const {
    for (const T& v : values)
      if (!std::isfinite(static_cast<double>(v)))
        throw Error(std::string(what) + ": non-finite value");
  }

  static std::string shape_str(const std::vector<std::size_t>& s) {
    std::string out = "(";
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (i) out += ",";
      out += std::to_string(s[i]);
    }
    return out + ")";
  }
};

}  // namespace gprwi
