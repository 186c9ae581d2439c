#pragma once

#include "l2rank/bigint.hpp"
#include "l2rank/word.hpp"

#include <map>
#include <string>
#include <vector>

namespace l2rank {

/// Finite integer combination of free-group words, an element of Z[F_n].
/// Zero coefficients are never stored.
class GroupRingElement {
 public:
  using Terms = std::map<Word, BigInt>;

  GroupRingElement() = default;
  explicit GroupRingElement(int rank) : rank_(rank) {}
  GroupRingElement(const Word& w, BigInt coefficient = 1);

  static GroupRingElement scalar(int rank, BigInt value);

  int rank() const { return rank_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  BigInt coefficient(const Word& w) const;

  void add_term(const Word& w, const BigInt& coefficient);

  GroupRingElement& operator+=(const GroupRingElement& other);
  GroupRingElement& operator-=(const GroupRingElement& other);
  GroupRingElement& operator*=(const BigInt& scalar);

  /// Left multiplication by a group element.
  GroupRingElement left_translate(const Word& g) const;

  std::string to_string(const std::vector<std::string>& names) const;
  std::string to_string() const;

  bool operator==(const GroupRingElement&) const = default;

 private:
  int rank_ = 0;
  Terms terms_;
};

GroupRingElement operator+(GroupRingElement a, const GroupRingElement& b);
GroupRingElement operator-(GroupRingElement a, const GroupRingElement& b);
GroupRingElement operator-(GroupRingElement a);
GroupRingElement operator*(GroupRingElement a, const BigInt& s);

/// Convolution product; throws InvalidArgument on alphabet mismatch.
GroupRingElement ring_multiply(const GroupRingElement& x, const GroupRingElement& y);
inline GroupRingElement operator*(const GroupRingElement& x, const GroupRingElement& y) {
  return ring_multiply(x, y);
}

/// c*g -> c*g^-1.
GroupRingElement adjoint(const GroupRingElement& x);

/// Sum of coefficients.
BigInt augmentation(const GroupRingElement& x);

/// Dense rows x cols array of group ring elements over a common alphabet.
class GroupRingMatrix {
 public:
  GroupRingMatrix() = default;
  GroupRingMatrix(int rows, int cols, int rank);

  static GroupRingMatrix identity(int size, int rank);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int rank() const { return rank_; }

  GroupRingElement& operator()(int r, int c) { return entries_[index(r, c)]; }
  const GroupRingElement& operator()(int r, int c) const { return entries_[index(r, c)]; }

  /// Entrywise adjoint of the transpose.
  GroupRingMatrix adjoint() const;
  bool is_self_adjoint() const;

  void append_row(const std::vector<GroupRingElement>& row);

  std::string to_string(const std::vector<std::string>& names) const;

  bool operator==(const GroupRingMatrix&) const = default;

 private:
  std::size_t index(int r, int c) const {
    return static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) +
           static_cast<std::size_t>(c);
  }

  int rows_ = 0;
  int cols_ = 0;
  int rank_ = 0;
  std::vector<GroupRingElement> entries_;
};

GroupRingMatrix operator*(const GroupRingMatrix& a, const GroupRingMatrix& b);

}  // namespace l2rank
