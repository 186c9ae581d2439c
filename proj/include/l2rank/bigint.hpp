#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace l2rank {

// Expression templates are disabled so that BigInt behaves as a plain value
// type inside Eigen matrices and standard containers.
using BigInt = boost::multiprecision::number<
    boost::multiprecision::cpp_int_backend<>, boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<
    boost::multiprecision::rational_adaptor<
        boost::multiprecision::cpp_int_backend<>>,
    boost::multiprecision::et_off>;

/// Lowest-terms "p/q" form; integers keep the "/1" so the format is uniform.
inline std::string to_fraction_string(const Rational& r) {
  return boost::multiprecision::numerator(r).str() + "/" +
         boost::multiprecision::denominator(r).str();
}

inline Rational make_rational(long long num, long long den) {
  return Rational(BigInt(num)) / Rational(BigInt(den));
}

/// Parses "p/q" or "p".
Rational parse_fraction(const std::string& text);

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

}  // namespace l2rank
