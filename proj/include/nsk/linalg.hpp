#pragma once

#include "errors.hpp"
#include "field.hpp"

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

namespace nsk {

/// Dense row-major matrix over a prime field.
class DenseMatrix {
public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols)
      : mRows(rows), mCols(cols), mData(rows * cols, 0) {}

  std::size_t rows() const { return mRows; }
  std::size_t cols() const { return mCols; }

  Scalar& at(std::size_t r, std::size_t c) { return mData[r * mCols + c]; }
  Scalar at(std::size_t r, std::size_t c) const { return mData[r * mCols + c]; }

private:
  std::size_t mRows = 0;
  std::size_t mCols = 0;
  std::vector<Scalar> mData;
};

/// Rank by Gaussian elimination; the matrix is consumed.
inline std::size_t rank(DenseMatrix m, const PrimeField& k) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t pivot = r;
    while (pivot < m.rows() && m.at(pivot, c) == 0)
      ++pivot;
    if (pivot == m.rows())
      continue;
    if (pivot != r)
      for (std::size_t j = c; j < m.cols(); ++j)
        std::swap(m.at(pivot, j), m.at(r, j));
    Scalar inv = k.inv(m.at(r, c));
    for (std::size_t j = c; j < m.cols(); ++j)
      m.at(r, j) = k.mul(m.at(r, j), inv);
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      Scalar f = m.at(i, c);
      if (f == 0)
        continue;
      for (std::size_t j = c; j < m.cols(); ++j)
        if (m.at(r, j) != 0)
          m.at(i, j) = k.sub(m.at(i, j), k.mul(f, m.at(r, j)));
    }
    ++r;
  }
  return r;
}

/// Sparse column: (row, nonzero value) pairs.
using SparseColumn = std::vector<std::pair<std::size_t, Scalar>>;

/// Sparse matrix stored by columns.
struct SparseMatrix {
  std::size_t rows = 0;
  std::vector<SparseColumn> columns;

  std::size_t cols() const { return columns.size(); }

  DenseMatrix to_dense() const {
    DenseMatrix d(rows, columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c)
      for (auto [r, v] : columns[c])
        d.at(r, c) = v;
    return d;
  }

  bool operator==(const SparseMatrix&) const = default;
};

/// B·A for sparse matrices (apply A first, then B).
inline SparseMatrix compose(const SparseMatrix& b, const SparseMatrix& a,
                            const PrimeField& k) {
  if (b.cols() != a.rows)
    throw DimensionError("compose: inner dimensions differ");
  SparseMatrix out;
  out.rows = b.rows;
  out.columns.resize(a.cols());
  std::vector<Scalar> acc(b.rows, 0);
  for (std::size_t c = 0; c < a.cols(); ++c) {
    std::vector<std::size_t> touched;
    for (auto [mid, v] : a.columns[c])
      for (auto [r, w] : b.columns[mid]) {
        if (acc[r] == 0)
          touched.push_back(r);
        acc[r] = k.add(acc[r], k.mul(v, w));
      }
    std::sort(touched.begin(), touched.end());
    touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
    for (std::size_t r : touched) {
      if (acc[r] != 0)
        out.columns[c].push_back({r, acc[r]});
      acc[r] = 0;
    }
  }
  return out;
}

} // namespace nsk
