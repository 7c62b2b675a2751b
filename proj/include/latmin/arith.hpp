#pragma once

// Exact scalars and small vectors. Every quantity in the library is an
// arbitrary-precision integer or a canonical rational; there is no
// floating point anywhere.

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace latmin {

using Int = mpz_class;
using Rat = mpq_class;

using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

/// Canonical text form: "p/q", or "p" when q = 1.
std::string format_rat(const Rat& value);

/// Parses "p", "-p", "p/q". Throws Error(ParseError) on malformed input or q = 0.
Rat parse_rat(std::string_view text);

Int floor_rat(const Rat& value);
Int ceil_rat(const Rat& value);

Int factorial(unsigned n);
Rat pow_rat(const Rat& base, unsigned exponent);

RatVec to_rat(const IntVec& v);

/// Returns the integer vector when every entry has denominator 1.
std::optional<IntVec> to_int(const RatVec& v);

Rat dot(const IntVec& a, const RatVec& x);
Rat dot(const RatVec& a, const RatVec& x);
Int dot(const IntVec& a, const IntVec& x);

RatVec sub(const RatVec& a, const RatVec& b);
IntVec sub(const IntVec& a, const IntVec& b);
RatVec scale(const RatVec& v, const Rat& c);
RatVec negate(const RatVec& v);
IntVec negate(const IntVec& v);

bool is_zero(const RatVec& v);
bool is_zero(const IntVec& v);

/// Lexicographic comparison on exact values.
bool lex_less(const RatVec& a, const RatVec& b);
bool lex_less(const IntVec& a, const IntVec& b);

/// Fits in a signed 64-bit integer.
bool fits_i64(const Int& v);

} // namespace latmin
