#include "l2rank/bigint.hpp"

#include "l2rank/errors.hpp"

namespace l2rank {

Rational parse_fraction(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(BigInt(text));
    const BigInt den(text.substr(slash + 1));
    if (den == 0) throw InvalidArgument("zero denominator in '" + text + "'");
    return Rational(BigInt(text.substr(0, slash))) / Rational(den);
  } catch (const std::runtime_error&) {
    throw InvalidArgument("malformed fraction '" + text + "'");
  }
}

}  // namespace l2rank
