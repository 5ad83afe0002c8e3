#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <string_view>
#include <vector>

namespace homalt {

// All arithmetic in the toolkit is exact. Scalars are arbitrary-precision
// rationals kept in lowest terms with positive denominator, so equality is
// decidable and no tolerance parameter exists anywhere. Expression templates
// are off so every operation yields a plain value.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::number<
    boost::multiprecision::rational_adaptor<boost::multiprecision::cpp_int_backend<>>,
    boost::multiprecision::et_off>;

/// Coordinate vector over the scalars.
using Vec = std::vector<Rational>;

/// Accepts "p" or "p/q" with integer p and positive integer q ("-3/4", "7").
/// Throws RationalError on anything else.
Rational parse_rational(std::string_view text);

/// Lowest-terms rendering, "p" when the denominator is 1, else "p/q".
std::string format_rational(const Rational& value);

bool is_zero(const Vec& v);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const Rational& c, const Vec& v);
Vec zero_vec(std::size_t n);

}  // namespace homalt
