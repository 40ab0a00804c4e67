#pragma once

#include <cmath>
#include <initializer_list>
#include <string>
#include <vector>

#include "fairmil/errors.hpp"

namespace fairmil {

/// Dense row-major matrix of doubles, rank <= 2. Vectors are 1xN or Nx1.
struct Tensor {
  int rows = 0;
  int cols = 0;
  std::vector<double> v;

  Tensor() = default;
  Tensor(int r, int c, double fill = 0.0)
      : rows(r), cols(c), v(static_cast<std::size_t>(r) * static_cast<std::size_t>(c), fill) {
    if (r < 0 || c < 0) throw ShapeError("Tensor: negative dimension");
  }

  static Tensor row(std::initializer_list<double> xs) {
    Tensor t(1, static_cast<int>(xs.size()));
    int j = 0;
    for (double x : xs) t.v[static_cast<std::size_t>(j++)] = x;
    return t;
  }

  static Tensor scalar(double x) {
    Tensor t(1, 1);
    t.v[0] = x;
    return t;
  }

  int size() const { return rows * cols; }

  double& at(int i, int j) { return v[static_cast<std::size_t>(i) * static_cast<std::size_t>(cols) + static_cast<std::size_t>(j)]; }
  double at(int i, int j) const { return v[static_cast<std::size_t>(i) * static_cast<std::size_t>(cols) + static_cast<std::size_t>(j)]; }

  bool same_shape(const Tensor& o) const { return rows == o.rows && cols == o.cols; }

  bool is_vector() const { return rows == 1 || cols == 1; }

  bool all_finite() const {
    for (double x : v)
      if (!std::isfinite(x)) return false;
    return true;
  }

  void fill(double x) { std::fill(v.begin(), v.end(), x); }

  std::string shape_str() const {
    return std::to_string(rows) + "x" + std::to_string(cols);
  }
};

inline Tensor zeros_like(const Tensor& t) { return Tensor(t.rows, t.cols); }

}  // namespace fairmil
