#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <unordered_map>
#include <vector>

#include "constel/errors.hpp"
#include "constel/multipoly.hpp"
#include "constel/xseries.hpp"

namespace constel {

/// Dense row-major matrix over a commutative ring without division
/// (MultiPoly, XSeries, Integer, ...). Scalar must be constructible from 0/1.
template <class Scalar>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, Scalar(0)) {}
  Matrix(std::initializer_list<std::initializer_list<Scalar>> init) {
    rows_ = init.size();
    cols_ = rows_ == 0 ? 0 : init.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_) throw std::invalid_argument("Matrix: ragged initializer");
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  bool operator==(const Matrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

using PolyMatrix = Matrix<MultiPoly>;
using SeriesMatrix = Matrix<XSeries>;

namespace detail {

template <class Scalar>
bool is_zero_scalar(const Scalar& s) {
  if constexpr (requires { s.is_zero(); }) {
    return s.is_zero();
  } else if constexpr (requires { s.poly(); }) {
    return s.poly().is_zero();
  } else {
    return s == Scalar(0);
  }
}

template <class Scalar>
void require_square(const Matrix<Scalar>& m) {
  if (!m.is_square())
    throw NonSquare("determinant of a " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                    " matrix");
}

}  // namespace detail

/// Laplace expansion along the rows, memoizing every minor by the set of
/// columns it uses. Exponential in n; meant for n <= 6 or so.
template <class Scalar>
Scalar det_cofactor(const Matrix<Scalar>& m) {
  detail::require_square(m);
  const std::size_t n = m.rows();
  if (n == 0) return Scalar(1);
  if (n > 20) throw std::invalid_argument("det_cofactor: matrix too large for subset memoization");

  // level[mask] = det of the top popcount(mask) rows restricted to the
  // columns in mask. Each row is folded in once.
  std::unordered_map<std::uint32_t, Scalar> level{{0u, Scalar(1)}};
  for (std::size_t row = 0; row < n; ++row) {
    std::unordered_map<std::uint32_t, Scalar> next;
    for (const auto& [mask, minor] : level) {
      if (detail::is_zero_scalar(minor)) continue;
      // Expanding along the last row of the bigger minor: the sign depends on
      // how many chosen columns lie to the right of the new one.
      for (std::size_t col = 0; col < n; ++col) {
        const std::uint32_t bit = 1u << col;
        if (mask & bit) continue;
        const Scalar& entry = m(row, col);
        if (detail::is_zero_scalar(entry)) continue;
        const int right = std::popcount(mask >> (col + 1));
        Scalar term = minor * entry;
        auto it = next.try_emplace(mask | bit, Scalar(0)).first;
        if (right % 2 == 0) {
          it->second += term;
        } else {
          it->second -= term;
        }
      }
    }
    level = std::move(next);
  }
  auto it = level.find((1u << n) - 1u);
  return it == level.end() ? Scalar(0) : it->second;
}

/// Berkowitz's division-free characteristic polynomial. Returns the
/// coefficients c_0 = 1, c_1, ..., c_n of det(t*I - m).
template <class Scalar>
std::vector<Scalar> charpoly_berkowitz(const Matrix<Scalar>& m) {
  detail::require_square(m);
  const std::size_t n = m.rows();
  if (n == 0) return {Scalar(1)};

  // Leading k x k block is grown one row/column at a time; each step applies a
  // lower-triangular Toeplitz matrix to the previous coefficient vector.
  std::vector<Scalar> poly{Scalar(1), -m(0, 0)};
  for (std::size_t k = 1; k < n; ++k) {
    // Row R = -m(k, 0..k-1), column C = m(0..k-1, k), block A = m(0..k-1, 0..k-1).
    std::vector<Scalar> toeplitz{Scalar(1), -m(k, k)};
    std::vector<Scalar> vec(k);
    for (std::size_t i = 0; i < k; ++i) vec[i] = m(i, k);
    for (std::size_t power = 0; power < k; ++power) {
      Scalar dot(0);
      for (std::size_t i = 0; i < k; ++i) dot += m(k, i) * vec[i];
      toeplitz.push_back(-dot);
      if (power + 1 < k) {
        std::vector<Scalar> next(k, Scalar(0));
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) next[i] += m(i, j) * vec[j];
        vec = std::move(next);
      }
    }
    std::vector<Scalar> grown(k + 2, Scalar(0));
    for (std::size_t i = 0; i < k + 2; ++i)
      for (std::size_t j = 0; j <= std::min(i, k); ++j) grown[i] += toeplitz[i - j] * poly[j];
    poly = std::move(grown);
  }
  return poly;
}

template <class Scalar>
Scalar det_berkowitz(const Matrix<Scalar>& m) {
  auto poly = charpoly_berkowitz(m);
  Scalar out = poly.back();
  return m.rows() % 2 == 0 ? out : -out;
}

/// Exact determinant using only ring operations: memoized cofactor expansion
/// up to size 6, Berkowitz beyond.
template <class Scalar>
Scalar det_division_free(const Matrix<Scalar>& m) {
  detail::require_square(m);
  return m.rows() <= 6 ? det_cofactor(m) : det_berkowitz(m);
}

}  // namespace constel
