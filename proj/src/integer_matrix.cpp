#include "l2rank/integer_matrix.hpp"

#include <set>
#include <unordered_set>

namespace l2rank {

SNFResult smith_normal_form(const IntegerMatrix& m) {
  SNFResult out;
  out.diagonal = smith_diagonal<BigInt>(m);
  for (const BigInt& d : out.diagonal) {
    if (d != 0) ++out.rank;
    if (d > 1) out.torsion.push_back(d);
  }
  return out;
}

SparseIntegerMatrix SparseIntegerMatrix::from_dense(const IntegerMatrix& m) {
  SparseIntegerMatrix out;
  out.cols = static_cast<int>(m.cols());
  out.rows.resize(static_cast<std::size_t>(m.rows()));
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (m(i, j) != 0) out.rows[static_cast<std::size_t>(i)].emplace_back(static_cast<int>(j), m(i, j));
  return out;
}

IntegerMatrix SparseIntegerMatrix::to_dense() const {
  IntegerMatrix out = IntegerMatrix::Zero(static_cast<Eigen::Index>(rows.size()), cols);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (const auto& [c, v] : rows[i]) out(static_cast<Eigen::Index>(i), c) = v;
  return out;
}

namespace {

using Row = SparseIntegerMatrix::Row;

// target - factor * pivot, merged by column.
Row combine(const Row& target, const BigInt& factor, const Row& pivot) {
  Row out;
  out.reserve(target.size() + pivot.size());
  std::size_t a = 0, b = 0;
  while (a < target.size() || b < pivot.size()) {
    if (b == pivot.size() || (a < target.size() && target[a].first < pivot[b].first)) {
      out.push_back(target[a++]);
    } else if (a == target.size() || pivot[b].first < target[a].first) {
      out.emplace_back(pivot[b].first, -factor * pivot[b].second);
      ++b;
    } else {
      BigInt v = target[a].second - factor * pivot[b].second;
      if (v != 0) out.emplace_back(target[a].first, std::move(v));
      ++a;
      ++b;
    }
  }
  return out;
}

bool has_unit(const Row& row) {
  for (const auto& [c, v] : row)
    if (v == 1 || v == -1) return true;
  return false;
}

}  // namespace

int exact_rank(SparseIntegerMatrix m) {
  auto& rows = m.rows;
  std::vector<std::unordered_set<int>> column_rows(static_cast<std::size_t>(m.cols));
  std::set<std::pair<std::size_t, int>> queue;  // (length, row)
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (const auto& [c, v] : rows[i]) column_rows[static_cast<std::size_t>(c)].insert(static_cast<int>(i));
    if (!rows[i].empty()) queue.emplace(rows[i].size(), static_cast<int>(i));
  }

  int rank = 0;
  std::vector<int> stuck;
  while (!queue.empty()) {
    const int p = queue.begin()->second;
    queue.erase(queue.begin());
    Row& prow = rows[static_cast<std::size_t>(p)];
    if (!has_unit(prow)) {
      stuck.push_back(p);
      continue;
    }
    // Unit entry in the sparsest column limits fill-in.
    int pivot_col = -1;
    std::size_t best = 0;
    BigInt pivot_value;
    for (const auto& [c, v] : prow) {
      if (v != 1 && v != -1) continue;
      const std::size_t count = column_rows[static_cast<std::size_t>(c)].size();
      if (pivot_col < 0 || count < best) {
        pivot_col = c;
        best = count;
        pivot_value = v;
      }
    }
    for (const auto& [c, v] : prow) column_rows[static_cast<std::size_t>(c)].erase(p);
    const std::vector<int> targets(column_rows[static_cast<std::size_t>(pivot_col)].begin(),
                                   column_rows[static_cast<std::size_t>(pivot_col)].end());
    for (int t : targets) {
      Row& trow = rows[static_cast<std::size_t>(t)];
      BigInt factor;
      for (const auto& [c, v] : trow)
        if (c == pivot_col) factor = v * pivot_value;  // pivot_value is its own inverse
      queue.erase({trow.size(), t});
      for (const auto& [c, v] : trow) column_rows[static_cast<std::size_t>(c)].erase(t);
      trow = combine(trow, factor, prow);
      for (const auto& [c, v] : trow) column_rows[static_cast<std::size_t>(c)].insert(t);
      if (!trow.empty()) queue.emplace(trow.size(), t);
    }
    // Rows parked as stuck may have been rewritten; requeue any that gained a unit.
    std::erase_if(stuck, [&](int s) {
      const Row& srow = rows[static_cast<std::size_t>(s)];
      if (srow.empty()) return true;
      if (queue.contains({srow.size(), s})) return true;
      if (!has_unit(srow)) return false;
      queue.emplace(srow.size(), s);
      return true;
    });
    prow.clear();
    ++rank;
  }

  // Remaining rows have no unit entries: finish densely.
  std::vector<int> rest;
  std::set<int> used_cols;
  for (int s : stuck) {
    if (rows[static_cast<std::size_t>(s)].empty()) continue;
    rest.push_back(s);
    for (const auto& [c, v] : rows[static_cast<std::size_t>(s)]) used_cols.insert(c);
  }
  if (rest.empty()) return rank;
  std::vector<int> col_index(static_cast<std::size_t>(m.cols), -1);
  int next = 0;
  for (int c : used_cols) col_index[static_cast<std::size_t>(c)] = next++;
  IntegerMatrix block = IntegerMatrix::Zero(static_cast<Eigen::Index>(rest.size()), next);
  for (std::size_t i = 0; i < rest.size(); ++i)
    for (const auto& [c, v] : rows[static_cast<std::size_t>(rest[i])])
      block(static_cast<Eigen::Index>(i), col_index[static_cast<std::size_t>(c)]) = v;
  return rank + fraction_free_rank<BigInt>(std::move(block));
}

}  // namespace l2rank
