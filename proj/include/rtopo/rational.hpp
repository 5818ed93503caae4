/* Apache License, Version 2.0 */
#ifndef RTOPO_RATIONAL_HPP
#define RTOPO_RATIONAL_HPP

#include <gmpxx.h>

#include <optional>
#include <string>

namespace rtopo {

// Exact arbitrary-precision rational. GMP keeps values canonical (lowest
// terms, positive denominator); every helper below preserves that.
using Rational = mpq_class;

// Parses "p", "-p" or "p/q" with integer p, q. Returns nullopt on malformed
// text or a zero denominator.
std::optional<Rational> parse_rational(const std::string& text);

// "p" when the denominator is 1, else "p/q".
std::string rational_str(const Rational& value);

inline int sign(const Rational& value) { return sgn(value); }

}  // namespace rtopo

#endif
