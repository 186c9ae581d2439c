#include "l2rank/group_ring.hpp"

#include "l2rank/errors.hpp"

namespace l2rank {

namespace {

void require_same_rank(int a, int b, const char* what) {
  if (a != b)
    throw InvalidArgument(std::string(what) + ": alphabet sizes " + std::to_string(a) +
                          " and " + std::to_string(b) + " differ");
}

std::vector<std::string> default_names(int rank) {
  std::vector<std::string> names;
  for (int g = 0; g < rank; ++g) names.push_back("x" + std::to_string(g));
  return names;
}

}  // namespace

GroupRingElement::GroupRingElement(const Word& w, BigInt coefficient) : rank_(w.rank()) {
  add_term(w, coefficient);
}

GroupRingElement GroupRingElement::scalar(int rank, BigInt value) {
  return GroupRingElement(Word(rank), std::move(value));
}

BigInt GroupRingElement::coefficient(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? BigInt(0) : it->second;
}

void GroupRingElement::add_term(const Word& w, const BigInt& coefficient) {
  require_same_rank(rank_, w.rank(), "add_term");
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.try_emplace(w, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

GroupRingElement& GroupRingElement::operator+=(const GroupRingElement& other) {
  require_same_rank(rank_, other.rank_, "ring addition");
  for (const auto& [w, c] : other.terms_) add_term(w, c);
  return *this;
}

GroupRingElement& GroupRingElement::operator-=(const GroupRingElement& other) {
  require_same_rank(rank_, other.rank_, "ring subtraction");
  for (const auto& [w, c] : other.terms_) add_term(w, -c);
  return *this;
}

GroupRingElement& GroupRingElement::operator*=(const BigInt& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, c] : terms_) c *= scalar;
  return *this;
}

GroupRingElement GroupRingElement::left_translate(const Word& g) const {
  GroupRingElement out(rank_);
  for (const auto& [w, c] : terms_) out.add_term(multiply_words(g, w), c);
  return out;
}

std::string GroupRingElement::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [w, c] : terms_) {
    const bool negative = c < 0;
    const BigInt magnitude = negative ? BigInt(-c) : c;
    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    if (w.empty()) {
      out += magnitude.str();
    } else {
      if (magnitude != 1) out += magnitude.str() + "*";
      out += w.to_string(names);
    }
  }
  return out;
}

std::string GroupRingElement::to_string() const { return to_string(default_names(rank_)); }

GroupRingElement operator+(GroupRingElement a, const GroupRingElement& b) { return a += b; }
GroupRingElement operator-(GroupRingElement a, const GroupRingElement& b) { return a -= b; }
GroupRingElement operator-(GroupRingElement a) { return a *= BigInt(-1); }
GroupRingElement operator*(GroupRingElement a, const BigInt& s) { return a *= s; }

GroupRingElement ring_multiply(const GroupRingElement& x, const GroupRingElement& y) {
  require_same_rank(x.rank(), y.rank(), "ring_multiply");
  GroupRingElement out(x.rank());
  for (const auto& [u, a] : x.terms())
    for (const auto& [v, b] : y.terms()) out.add_term(multiply_words(u, v), a * b);
  return out;
}

GroupRingElement adjoint(const GroupRingElement& x) {
  GroupRingElement out(x.rank());
  for (const auto& [w, c] : x.terms()) out.add_term(w.inverse(), c);
  return out;
}

BigInt augmentation(const GroupRingElement& x) {
  BigInt sum = 0;
  for (const auto& [w, c] : x.terms()) sum += c;
  return sum;
}

GroupRingMatrix::GroupRingMatrix(int rows, int cols, int rank)
    : rows_(rows),
      cols_(cols),
      rank_(rank),
      entries_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols),
               GroupRingElement(rank)) {
  if (rows < 0 || cols < 0) throw InvalidArgument("negative matrix dimension");
}

GroupRingMatrix GroupRingMatrix::identity(int size, int rank) {
  GroupRingMatrix m(size, size, rank);
  for (int i = 0; i < size; ++i) m(i, i) = GroupRingElement::scalar(rank, 1);
  return m;
}

GroupRingMatrix GroupRingMatrix::adjoint() const {
  GroupRingMatrix out(cols_, rows_, rank_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) out(c, r) = l2rank::adjoint((*this)(r, c));
  return out;
}

bool GroupRingMatrix::is_self_adjoint() const { return rows_ == cols_ && adjoint() == *this; }

void GroupRingMatrix::append_row(const std::vector<GroupRingElement>& row) {
  if (static_cast<int>(row.size()) != cols_)
    throw InvalidArgument("append_row: row has " + std::to_string(row.size()) +
                          " entries, matrix has " + std::to_string(cols_) + " columns");
  for (const auto& e : row) {
    require_same_rank(rank_, e.rank(), "append_row");
    entries_.push_back(e);
  }
  ++rows_;
}

std::string GroupRingMatrix::to_string(const std::vector<std::string>& names) const {
  std::string out = "[";
  for (int r = 0; r < rows_; ++r) {
    out += r ? "; " : "";
    for (int c = 0; c < cols_; ++c) {
      out += c ? ", " : "";
      out += (*this)(r, c).to_string(names);
    }
  }
  return out + "]";
}

GroupRingMatrix operator*(const GroupRingMatrix& a, const GroupRingMatrix& b) {
  if (a.cols() != b.rows()) throw InvalidArgument("matrix product: inner dimensions differ");
  require_same_rank(a.rank(), b.rank(), "matrix product");
  GroupRingMatrix out(a.rows(), b.cols(), a.rank());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j)
      for (int k = 0; k < a.cols(); ++k) out(i, j) += ring_multiply(a(i, k), b(k, j));
  return out;
}

}  // namespace l2rank
