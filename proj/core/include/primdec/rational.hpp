#ifndef PRIMDEC_RATIONAL_HPP
#define PRIMDEC_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace primdec {

/// Exact rational number. GMP keeps the value canonical: the denominator is
/// positive and coprime to the numerator, and zero is 0/1.
using Rational = mpq_class;
using Integer = mpz_class;

/// Renders "n" or "n/d".
std::string to_string(const Rational& q);

/// Parses "n" or "n/d" (optional leading sign). Throws InvalidArgument.
Rational parse_rational(std::string_view text);

inline bool is_one(const Rational& q) { return q == 1; }

}  // namespace primdec

#endif  // PRIMDEC_RATIONAL_HPP
