#ifndef FILTCOH_RATIONAL_HPP
#define FILTCOH_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <string>

namespace filtcoh {

// Exact coefficient arithmetic. cpp_rational keeps values in lowest terms
// with positive denominator, which is exactly the invariant we need.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer numerator(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer denominator(const Rational& q) { return boost::multiprecision::denominator(q); }

std::string to_string(const Rational& q);

// Accepts "7", "-3", "p/q" with q > 0 after normalization. Rejects anything else.
std::optional<Rational> parse_rational(const std::string& text);

}  // namespace filtcoh

#endif
