#pragma once

#include "latmin/arith.hpp"

#include <optional>
#include <span>

namespace latmin {

struct SpanResult {
    int rank_over_q = 0;
    bool generates_full_lattice = false;
};

/// Rank of the rational span and whether the integer span is all of Z^d.
/// Throws Error(DimensionMismatch) if a vector has length != d.
SpanResult lattice_span(std::span<const IntVec> vectors, int d);

/// Index [Z^d : L] of the lattice generated by the vectors, or 0 when they
/// do not have full rank. Computed from an integer echelon (Hermite) form.
Int lattice_index(std::span<const IntVec> vectors, int d);

/// v / gcd(v). With canonical_sign the first nonzero entry is made positive.
/// Throws Error(ZeroVector) on the zero vector.
IntVec primitive(const IntVec& v, bool canonical_sign = false);

/// Smallest positive integer multiple of a rational vector that is integral
/// and primitive. Throws Error(ZeroVector) on the zero vector.
IntVec primitive_direction(const RatVec& v);

int rank(std::span<const RatVec> vectors);
int rank(std::span<const IntVec> vectors);

/// Determinant of a square matrix given as rows.
Rat determinant(std::span<const RatVec> rows);

/// Solves columns * c = rhs for c, where `columns` are d linearly
/// independent vectors of length d. Returns nullopt when singular.
std::optional<RatVec> solve_in_basis(std::span<const RatVec> columns, const RatVec& rhs);

/// Indices of a maximal linearly independent subset, chosen greedily in order.
std::vector<std::size_t> independent_subset(std::span<const RatVec> vectors);

} // namespace latmin
