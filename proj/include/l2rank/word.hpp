#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace l2rank {

/// A generator or its inverse.
struct Letter {
  int generator = 0;
  bool inverse = false;

  Letter inverted() const { return {generator, !inverse}; }
  int exponent() const { return inverse ? -1 : 1; }
  bool cancels(const Letter& other) const {
    return generator == other.generator && inverse != other.inverse;
  }

  auto operator<=>(const Letter&) const = default;
};

/// Freely reduced word in the free group on `rank` generators.
///
/// The empty word is the identity. Every constructor that accepts letters
/// reduces them, so a Word never holds a cancelling adjacent pair.
class Word {
 public:
  Word() = default;
  explicit Word(int rank) : rank_(rank) {}
  Word(int rank, std::span<const Letter> letters);

  static Word generator(int rank, int index, bool inverse = false);

  int rank() const { return rank_; }
  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  const std::vector<Letter>& letters() const { return letters_; }
  const Letter& operator[](std::size_t i) const { return letters_[i]; }

  Word inverse() const;
  Word power(int exponent) const;

  /// Removes cancelling first/last letter pairs.
  Word cyclically_reduced() const;
  bool is_cyclically_reduced() const;

  /// Cyclic rotation starting at position `offset`.
  Word rotated(std::size_t offset) const;

  /// Subword [begin, end); the result is reduced because the source is.
  Word slice(std::size_t begin, std::size_t end) const;

  /// Signed number of occurrences of generator `index`.
  int exponent_sum(int index) const;

  std::string to_string(const std::vector<std::string>& names) const;
  /// Uses x0, x1, ... as generator names.
  std::string to_string() const;

  auto operator<=>(const Word&) const = default;

 private:
  int rank_ = 0;
  std::vector<Letter> letters_;
};

/// Free reduction of an arbitrary letter sequence.
Word free_reduce(int rank, std::span<const Letter> letters);

/// Reduced product uv; throws InvalidArgument on alphabet-size mismatch.
Word multiply_words(const Word& u, const Word& v);

Word invert_word(const Word& u);

inline Word operator*(const Word& u, const Word& v) { return multiply_words(u, v); }

/// Writes `word` as S^k with k maximal; returns k and stores S in `root`.
int primitive_root(const Word& word, Word& root);

/// Every freely reduced word of length exactly `length` in shortlex order.
std::vector<Word> words_of_length(int rank, int length);

}  // namespace l2rank
