#pragma once

#include "l2rank/bigint.hpp"

#include <Eigen/Core>
#include <boost/multiprecision/eigen.hpp>

#include <algorithm>
#include <utility>
#include <vector>

namespace l2rank {

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using IntegerMatrix = DenseMatrix<BigInt>;
using RationalMatrix = DenseMatrix<Rational>;

/// Diagonal d_1 | d_2 | ... | d_m (m = min(rows, cols)) of the Smith normal form.
struct SNFResult {
  std::vector<BigInt> diagonal;
  int rank = 0;
  /// Invariant factors greater than one.
  std::vector<BigInt> torsion;
};

namespace detail {

template <typename Scalar>
Scalar abs_value(const Scalar& x) {
  return x < 0 ? Scalar(-x) : x;
}

// Position of the nonzero entry of least absolute value in the trailing
// block starting at (t, t), or (-1, -1) if the block is zero.
template <typename Scalar>
std::pair<Eigen::Index, Eigen::Index> smallest_entry(const DenseMatrix<Scalar>& a,
                                                     Eigen::Index t) {
  std::pair<Eigen::Index, Eigen::Index> best{-1, -1};
  Scalar best_value = 0;
  for (Eigen::Index j = t; j < a.cols(); ++j)
    for (Eigen::Index i = t; i < a.rows(); ++i) {
      if (a(i, j) == 0) continue;
      Scalar v = abs_value(a(i, j));
      if (best.first < 0 || v < best_value) {
        best = {i, j};
        best_value = std::move(v);
        if (best_value == 1) return best;
      }
    }
  return best;
}

}  // namespace detail

/// Smith normal form by unimodular row and column operations, always
/// pivoting on the smallest nonzero entry of the remaining block.
template <typename Scalar>
std::vector<Scalar> smith_diagonal(DenseMatrix<Scalar> a) {
  const Eigen::Index steps = std::min(a.rows(), a.cols());
  std::vector<Scalar> diagonal(static_cast<std::size_t>(steps), Scalar(0));
  for (Eigen::Index t = 0; t < steps; ++t) {
    for (;;) {
      auto [pi, pj] = detail::smallest_entry(a, t);
      if (pi < 0) return diagonal;
      a.row(t).swap(a.row(pi));
      a.col(t).swap(a.col(pj));
      const Scalar pivot = a(t, t);

      bool clean = true;
      for (Eigen::Index i = t + 1; i < a.rows(); ++i) {
        if (a(i, t) == 0) continue;
        const Scalar q = a(i, t) / pivot;
        if (q != 0) a.row(i) -= q * a.row(t);
        clean = clean && a(i, t) == 0;
      }
      for (Eigen::Index j = t + 1; j < a.cols(); ++j) {
        if (a(t, j) == 0) continue;
        const Scalar q = a(t, j) / pivot;
        if (q != 0) a.col(j) -= q * a.col(t);
        clean = clean && a(t, j) == 0;
      }
      if (!clean) continue;

      // Enforce the divisibility chain: fold an offending row into row t.
      Eigen::Index offender = -1;
      for (Eigen::Index i = t + 1; i < a.rows() && offender < 0; ++i)
        for (Eigen::Index j = t + 1; j < a.cols(); ++j)
          if (a(i, j) % pivot != 0) {
            offender = i;
            break;
          }
      if (offender < 0) break;
      a.row(t) += a.row(offender);
    }
    diagonal[static_cast<std::size_t>(t)] = detail::abs_value(a(t, t));
  }
  return diagonal;
}

SNFResult smith_normal_form(const IntegerMatrix& m);

/// Rank over the rationals by fraction-free (Bareiss) elimination.
template <typename Scalar>
int fraction_free_rank(DenseMatrix<Scalar> a) {
  int rank = 0;
  Scalar previous = 1;
  for (Eigen::Index c = 0; c < a.cols() && rank < a.rows(); ++c) {
    Eigen::Index pivot = -1;
    for (Eigen::Index i = rank; i < a.rows(); ++i)
      if (a(i, c) != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    a.row(rank).swap(a.row(pivot));
    for (Eigen::Index i = rank + 1; i < a.rows(); ++i) {
      for (Eigen::Index j = c + 1; j < a.cols(); ++j)
        a(i, j) = (a(rank, c) * a(i, j) - a(i, c) * a(rank, j)) / previous;
      a(i, c) = 0;
    }
    previous = a(rank, c);
    ++rank;
  }
  return rank;
}

/// Row-sparse integer matrix; each row holds (column, nonzero value) sorted
/// by column.
struct SparseIntegerMatrix {
  using Row = std::vector<std::pair<int, BigInt>>;

  int cols = 0;
  std::vector<Row> rows;

  static SparseIntegerMatrix from_dense(const IntegerMatrix& m);
  IntegerMatrix to_dense() const;
};

/// Exact rank over the rationals. Eliminates on unit pivots while they last
/// (keeping entries integral and rows sparse), then finishes the remaining
/// block with fraction-free elimination.
int exact_rank(SparseIntegerMatrix m);

inline int exact_rank(const IntegerMatrix& m) {
  return exact_rank(SparseIntegerMatrix::from_dense(m));
}

}  // namespace l2rank
