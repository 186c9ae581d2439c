#pragma once

#include "l2rank/word.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace l2rank {

/// Finite presentation <generators | relators>.
///
/// Relators are stored freely and cyclically reduced and nonempty; the
/// constructor enforces this and rejects relators over the wrong alphabet.
class Presentation {
 public:
  Presentation() = default;
  Presentation(std::vector<std::string> generator_names, std::vector<Word> relators);

  /// Generators named x1..xn.
  static Presentation free(int rank);

  int num_generators() const { return static_cast<int>(names_.size()); }
  int num_relators() const { return static_cast<int>(relators_.size()); }
  const std::vector<std::string>& generator_names() const { return names_; }
  const std::vector<Word>& relators() const { return relators_; }

  int generator_index(std::string_view name) const;  // -1 if absent
  Word generator(int index, bool inverse = false) const {
    return Word::generator(num_generators(), index, inverse);
  }

  /// Same generators with `extra` appended to the relators.
  Presentation with_relators(const std::vector<Word>& extra) const;

  std::string format(const Word& w) const { return w.to_string(names_); }
  /// Canonical text in the input grammar, e.g. "< a, b | a^2, b^3 >".
  std::string to_string() const;

 private:
  std::vector<std::string> names_;
  std::vector<Word> relators_;
};

/// A relator written as root^exponent.
struct TorsionRelator {
  Word root;
  int exponent = 1;
};

/// <X | R_1^{n_1}, ..., R_k^{n_k}>.
///
/// Roots are cyclically reduced and never proper powers: a root S^k is
/// stored as S with the exponent multiplied by k.
class TorsionPresentation {
 public:
  TorsionPresentation() = default;
  TorsionPresentation(std::vector<std::string> generator_names,
                      std::vector<TorsionRelator> relators);

  const Presentation& base() const { return base_; }
  const std::vector<TorsionRelator>& torsion_relators() const { return relators_; }
  int num_generators() const { return base_.num_generators(); }

 private:
  Presentation base_;
  std::vector<TorsionRelator> relators_;
};

/// Result of parsing. `torsion` is set iff every relator was written as
/// R^n with an explicit n >= 1 (vacuously true for no relators).
struct ParsedPresentation {
  Presentation presentation;
  std::optional<TorsionPresentation> torsion;
};

/// Parses `< gens | rels >`. '#' starts a comment running to end of line.
ParsedPresentation parse_presentation(std::string_view text);

/// Parses a word over the generators of `p`, e.g. "a*b^-1" or "(a*b)^3".
Word parse_word(const Presentation& p, std::string_view text);

}  // namespace l2rank
