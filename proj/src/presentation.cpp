#include "l2rank/presentation.hpp"

#include "l2rank/errors.hpp"

#include <cctype>
#include <set>

namespace l2rank {

Presentation::Presentation(std::vector<std::string> generator_names,
                           std::vector<Word> relators)
    : names_(std::move(generator_names)) {
  std::set<std::string> seen;
  for (const auto& name : names_)
    if (!seen.insert(name).second)
      throw InvalidArgument("duplicate generator name '" + name + "'");
  relators_.reserve(relators.size());
  for (const Word& r : relators) {
    if (r.rank() != num_generators())
      throw InvalidArgument("relator alphabet does not match generator count");
    Word reduced = r.cyclically_reduced();
    if (reduced.empty()) throw InvalidArgument("relator reduces to the empty word");
    relators_.push_back(std::move(reduced));
  }
}

Presentation Presentation::free(int rank) {
  std::vector<std::string> names;
  for (int i = 1; i <= rank; ++i) names.push_back("x" + std::to_string(i));
  return Presentation(std::move(names), {});
}

int Presentation::generator_index(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return static_cast<int>(i);
  return -1;
}

Presentation Presentation::with_relators(const std::vector<Word>& extra) const {
  std::vector<Word> all = relators_;
  for (const Word& w : extra)
    if (!w.cyclically_reduced().empty()) all.push_back(w);
  return Presentation(names_, std::move(all));
}

std::string Presentation::to_string() const {
  std::string out = "< ";
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (i) out += ", ";
    out += names_[i];
  }
  out += " |";
  for (std::size_t i = 0; i < relators_.size(); ++i) {
    out += i ? ", " : " ";
    out += format(relators_[i]);
  }
  out += " >";
  return out;
}

TorsionPresentation::TorsionPresentation(std::vector<std::string> generator_names,
                                         std::vector<TorsionRelator> relators) {
  std::vector<Word> words;
  for (TorsionRelator& r : relators) {
    if (r.exponent < 1) throw InvalidArgument("torsion exponent must be >= 1");
    Word root = r.root.cyclically_reduced();
    if (root.empty()) throw InvalidArgument("torsion relator has an empty root");
    Word primitive;
    r.exponent *= primitive_root(root, primitive);
    r.root = std::move(primitive);
    words.push_back(r.root.power(r.exponent));
  }
  base_ = Presentation(std::move(generator_names), std::move(words));
  relators_ = std::move(relators);
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  ParsedPresentation presentation() {
    expect('<');
    std::vector<std::string> names;
    std::set<std::string> seen;
    do {
      skip_space();
      const int line = line_, col = col_;
      std::string name = identifier();
      if (!seen.insert(name).second)
        throw ParseError("duplicate generator name '" + name + "'", line, col);
      names.push_back(std::move(name));
    } while (accept(','));
    expect('|');
    names_ = &names;

    std::vector<Word> relators;
    std::vector<TorsionRelator> torsion;
    bool all_torsion = true;
    if (!peek_is('>')) {
      do {
        skip_space();
        const int line = line_, col = col_;
        Relator rel = relator();
        Word word(static_cast<int>(names.size()), rel.letters);
        if (word.cyclically_reduced().empty())
          throw ParseError("relator reduces to the empty word", line, col);
        relators.push_back(word);
        if (rel.power_root && rel.exponent >= 1) {
          Word root(static_cast<int>(names.size()), *rel.power_root);
          if (root.cyclically_reduced().empty())
            throw ParseError("relator reduces to the empty word", line, col);
          torsion.push_back({std::move(root), rel.exponent});
        } else {
          all_torsion = false;
        }
      } while (accept(','));
    }
    expect('>');
    skip_space();
    if (pos_ != text_.size()) fail("unexpected trailing input");

    ParsedPresentation out{Presentation(names, relators), std::nullopt};
    if (all_torsion) out.torsion = TorsionPresentation(names, std::move(torsion));
    return out;
  }

  Word word(const Presentation& p) {
    std::vector<std::string> names = p.generator_names();
    names_ = &names;
    Relator rel = relator();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return Word(p.num_generators(), rel.letters);
  }

 private:
  struct Relator {
    std::vector<Letter> letters;
    // Set when the relator is a single term raised to an explicit exponent.
    std::optional<std::vector<Letter>> power_root;
    int exponent = 0;
  };

  Relator relator() {
    Relator out;
    int terms = 0;
    do {
      Relator t = term();
      ++terms;
      out.letters.insert(out.letters.end(), t.letters.begin(), t.letters.end());
      if (terms == 1) {
        out.power_root = std::move(t.power_root);
        out.exponent = t.exponent;
      }
    } while (accept('*'));
    if (terms > 1) out.power_root.reset();
    return out;
  }

  Relator term() {
    skip_space();
    std::vector<Letter> base;
    if (accept('(')) {
      base = relator().letters;
      expect(')');
    } else {
      const int line = line_, col = col_;
      const std::string name = identifier();
      int index = -1;
      for (std::size_t i = 0; i < names_->size(); ++i)
        if ((*names_)[i] == name) index = static_cast<int>(i);
      if (index < 0) throw ParseError("unknown generator '" + name + "'", line, col);
      base.push_back({index, false});
    }
    Relator out;
    if (!accept('^')) {
      out.letters = std::move(base);
      return out;
    }
    const int exponent = signed_int();
    for (int i = 0; i < std::abs(exponent); ++i) {
      if (exponent > 0) {
        out.letters.insert(out.letters.end(), base.begin(), base.end());
      } else {
        for (auto it = base.rbegin(); it != base.rend(); ++it)
          out.letters.push_back(it->inverted());
      }
    }
    out.power_root = std::move(base);
    out.exponent = exponent;
    return out;
  }

  std::string identifier() {
    skip_space();
    if (pos_ >= text_.size() ||
        !(std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      fail("expected identifier");
    std::string out;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      out += advance();
    return out;
  }

  int signed_int() {
    skip_space();
    int sign = 1;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+'))
      sign = advance() == '-' ? -1 : 1;
    skip_space();
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      fail("expected integer exponent");
    long long value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + (advance() - '0');
      if (value > 1'000'000) fail("exponent too large");
    }
    return sign * static_cast<int>(value);
  }

  void skip_space() {
    while (pos_ < text_.size()) {
      if (text_[pos_] == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(text_[pos_]))) {
        advance();
      } else {
        break;
      }
    }
  }

  bool peek_is(char c) {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool accept(char c) {
    if (!peek_is(c)) return false;
    advance();
    return true;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  char advance() {
    const char c = text_[pos_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return c;
  }

  [[noreturn]] void fail(const std::string& message) {
    throw ParseError(message, line_, col_);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
  const std::vector<std::string>* names_ = nullptr;
};

}  // namespace

ParsedPresentation parse_presentation(std::string_view text) {
  return Parser(text).presentation();
}

Word parse_word(const Presentation& p, std::string_view text) {
  return Parser(text).word(p);
}

}  // namespace l2rank
