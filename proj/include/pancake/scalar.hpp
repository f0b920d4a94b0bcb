#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace pancake {

// Exact rational scalar.  mpq_class keeps values in canonical reduced form
// (gcd 1, positive denominator) as long as every construction path
// canonicalizes, which the helpers below guarantee.
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
  Rat q(num, den);
  q.canonicalize();
  return q;
}

inline int sgn(const Rat& q) { return mpq_sgn(q.get_mpq_t()); }

inline Rat rat_abs(const Rat& q) { return sgn(q) < 0 ? Rat(-q) : q; }

// Parses "p/q", integer, or decimal notation ("-3.25", ".5", "1e-3", "2.5e2")
// into an exact rational.  No binary floating point is involved.
std::optional<Rat> try_parse_rat(std::string_view s);

// Same, throwing ConfigParseError with the offending text on failure.
Rat parse_rat(std::string_view s);

double to_double(const Rat& q);

// Canonical form: "p" when the denominator is 1, else "p/q".
std::string to_string(const Rat& q);

// Deterministic fixed-point rendering of a double (snprintf "%.*f").
std::string format_fixed(double v, int decimals);

}  // namespace pancake
