#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace arithchar {

using Integer = mpz_class;
using Rational = mpq_class;
using RatVec = std::vector<Rational>;

/// Canonical text form: "p" for integers, "p/q" otherwise (q > 0, reduced).
std::string to_string(Rational const &q);
std::string to_string(Integer const &z);

/// Accepts "p", "-p", "p/q"; throws Error(ParseError) otherwise.
Rational parse_rational(std::string_view text);

inline bool is_integer(Rational const &q) { return q.get_den() == 1; }

/// Throws Error(NonIntegral) unless q is an integer that fits in int64.
std::int64_t to_int64(Rational const &q);
std::int64_t to_int64(Integer const &z);

Rational dot(RatVec const &u, RatVec const &v);

inline Rational abs(Rational const &q) { return q < 0 ? Rational(-q) : q; }

} // namespace arithchar
