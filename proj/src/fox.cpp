#include "l2rank/fox.hpp"

#include "l2rank/errors.hpp"

#include <set>

namespace l2rank {

GroupRingElement fox_derivative(const Word& w, int j) {
  if (j < 0 || j >= w.rank())
    throw InvalidArgument("fox_derivative: generator index " + std::to_string(j) +
                          " out of range for rank " + std::to_string(w.rank()));
  // d(u x)/dx = du/dx + u, d(u x^-1)/dx = du/dx - u x^-1. Prefixes of a reduced
  // word are reduced, so the running prefix never needs re-reduction.
  GroupRingElement out(w.rank());
  for (std::size_t i = 0; i < w.length(); ++i) {
    if (w[i].generator != j) continue;
    if (w[i].inverse)
      out.add_term(w.slice(0, i + 1), BigInt(-1));
    else
      out.add_term(w.slice(0, i), BigInt(1));
  }
  return out;
}

GroupRingMatrix fox_jacobian(const Presentation& p) {
  GroupRingMatrix m(p.num_relators(), p.num_generators(), p.num_generators());
  for (int i = 0; i < p.num_relators(); ++i)
    for (int j = 0; j < p.num_generators(); ++j)
      m(i, j) = fox_derivative(p.relators()[static_cast<std::size_t>(i)], j);
  return m;
}

JacobianBundle extend_jacobian(const Presentation& p, const std::vector<Word>& extra) {
  JacobianBundle bundle{p, fox_jacobian(p), extra, {}};
  bundle.extended = bundle.jacobian;
  for (const Word& w : extra) {
    if (w.rank() != p.num_generators())
      throw InvalidArgument("extend_jacobian: extension word over the wrong alphabet");
    std::vector<GroupRingElement> row;
    for (int j = 0; j < p.num_generators(); ++j) row.push_back(fox_derivative(w, j));
    bundle.extended.append_row(row);
  }
  return bundle;
}

IntegerMatrix augment_matrix(const GroupRingMatrix& m) {
  IntegerMatrix out(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out(i, j) = augmentation(m(i, j));
  return out;
}

SparseIntegerMatrix augmented_jacobian(const Presentation& p) {
  SparseIntegerMatrix out;
  out.cols = p.num_generators();
  for (const Word& r : p.relators()) {
    std::set<int> present;
    for (const Letter& l : r.letters()) present.insert(l.generator);
    SparseIntegerMatrix::Row row;
    for (int j : present) {
      BigInt value = augmentation(fox_derivative(r, j));
      if (value != 0) row.emplace_back(j, std::move(value));
    }
    out.rows.push_back(std::move(row));
  }
  return out;
}

}  // namespace l2rank
