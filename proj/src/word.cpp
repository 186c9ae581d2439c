#include "l2rank/word.hpp"

#include "l2rank/errors.hpp"

#include <algorithm>

namespace l2rank {

Word free_reduce(int rank, std::span<const Letter> letters) {
  return Word(rank, letters);
}

Word::Word(int rank, std::span<const Letter> letters) : rank_(rank) {
  letters_.reserve(letters.size());
  for (const Letter& l : letters) {
    if (l.generator < 0 || l.generator >= rank)
      throw InvalidArgument("letter index " + std::to_string(l.generator) +
                            " outside alphabet of rank " + std::to_string(rank));
    if (!letters_.empty() && letters_.back().cancels(l))
      letters_.pop_back();
    else
      letters_.push_back(l);
  }
}

Word Word::generator(int rank, int index, bool inverse) {
  const Letter l{index, inverse};
  return Word(rank, std::span<const Letter>(&l, 1));
}

Word Word::inverse() const {
  Word out(rank_);
  out.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
    out.letters_.push_back(it->inverted());
  return out;
}

Word Word::power(int exponent) const {
  const Word base = exponent < 0 ? inverse() : *this;
  std::vector<Letter> raw;
  for (int i = 0; i < std::abs(exponent); ++i)
    raw.insert(raw.end(), base.letters_.begin(), base.letters_.end());
  return Word(rank_, raw);
}

Word Word::cyclically_reduced() const {
  std::size_t lo = 0;
  std::size_t hi = letters_.size();
  while (hi - lo >= 2 && letters_[lo].cancels(letters_[hi - 1])) {
    ++lo;
    --hi;
  }
  return slice(lo, hi);
}

bool Word::is_cyclically_reduced() const {
  return letters_.size() < 2 || !letters_.front().cancels(letters_.back());
}

Word Word::rotated(std::size_t offset) const {
  if (letters_.empty()) return *this;
  offset %= letters_.size();
  std::vector<Letter> raw(letters_.begin() + static_cast<std::ptrdiff_t>(offset),
                          letters_.end());
  raw.insert(raw.end(), letters_.begin(),
             letters_.begin() + static_cast<std::ptrdiff_t>(offset));
  return Word(rank_, raw);
}

Word Word::slice(std::size_t begin, std::size_t end) const {
  Word out(rank_);
  out.letters_.assign(letters_.begin() + static_cast<std::ptrdiff_t>(begin),
                      letters_.begin() + static_cast<std::ptrdiff_t>(end));
  return out;
}

int Word::exponent_sum(int index) const {
  int sum = 0;
  for (const Letter& l : letters_)
    if (l.generator == index) sum += l.exponent();
  return sum;
}

std::string Word::to_string(const std::vector<std::string>& names) const {
  if (letters_.empty()) return "1";
  std::string out;
  std::size_t i = 0;
  while (i < letters_.size()) {
    std::size_t j = i;
    while (j < letters_.size() && letters_[j] == letters_[i]) ++j;
    const int run = static_cast<int>(j - i) * letters_[i].exponent();
    if (!out.empty()) out += "*";
    out += names.at(static_cast<std::size_t>(letters_[i].generator));
    if (run != 1) out += "^" + std::to_string(run);
    i = j;
  }
  return out;
}

std::string Word::to_string() const {
  std::vector<std::string> names;
  for (int g = 0; g < rank_; ++g) names.push_back("x" + std::to_string(g));
  return to_string(names);
}

Word multiply_words(const Word& u, const Word& v) {
  if (u.rank() != v.rank())
    throw InvalidArgument("multiply_words: alphabet sizes " +
                          std::to_string(u.rank()) + " and " +
                          std::to_string(v.rank()) + " differ");
  std::vector<Letter> raw(u.letters());
  raw.insert(raw.end(), v.letters().begin(), v.letters().end());
  return Word(u.rank(), raw);
}

Word invert_word(const Word& u) { return u.inverse(); }

int primitive_root(const Word& word, Word& root) {
  const std::size_t n = word.length();
  for (std::size_t period = 1; period <= n / 2; ++period) {
    if (n % period != 0) continue;
    bool periodic = true;
    for (std::size_t i = period; i < n && periodic; ++i)
      periodic = word[i] == word[i - period];
    if (periodic) {
      root = word.slice(0, period);
      return static_cast<int>(n / period);
    }
  }
  root = word;
  return 1;
}

std::vector<Word> words_of_length(int rank, int length) {
  std::vector<std::vector<Letter>> layer{{}};
  for (int step = 0; step < length; ++step) {
    std::vector<std::vector<Letter>> next;
    for (const auto& prefix : layer) {
      for (int g = 0; g < rank; ++g) {
        for (bool inv : {false, true}) {
          const Letter l{g, inv};
          if (!prefix.empty() && prefix.back().cancels(l)) continue;
          auto extended = prefix;
          extended.push_back(l);
          next.push_back(std::move(extended));
        }
      }
    }
    layer = std::move(next);
  }
  std::vector<Word> out;
  out.reserve(layer.size());
  for (const auto& letters : layer) out.emplace_back(rank, letters);
  return out;
}

}  // namespace l2rank
