#pragma once

#include "latmin/arith.hpp"
#include "latmin/parallel.hpp"
#include "latmin/polytope.hpp"
#include "latmin/report.hpp"

#include <vector>

namespace latmin {

/// min{ t >= 0 : x in tK }, computed as the max over facets of max(<a,x>, 0) / b.
Rat gauge(const SymmetricBody& k, const RatVec& x);

struct SuccessiveMinima {
    int d = 0;
    std::vector<Rat> lambdas;     // nondecreasing, all > 0
    std::vector<IntVec> witnesses; // linearly independent, gauge(witnesses[i]) == lambdas[i]
};

/// Exact Minkowski successive minima of K with respect to Z^d. Ties between
/// lattice vectors of equal gauge go to the lexicographically greatest
/// representative whose first nonzero entry is positive.
SuccessiveMinima successive_minima(const SymmetricBody& k, Execution exec = default_execution());

struct WidthResult {
    Rat width;
    IntVec witness; // primitive functional attaining the width
};

/// max - min of <phi, .> over P.
Rat interval_length(const Polytope& p, const IntVec& functional);

/// Lattice width as the first minimum of (P - P)*. Throws DimensionDeficient.
WidthResult lattice_width(const Polytope& p, Execution exec = default_execution());

/// 1/d! <= vol(P) * prod lambda_i(P - P) <= 1.
TheoremReport verify_minkowski_second(const Polytope& p, Execution exec = default_execution());

/// 1 <= lambda_i(K) * lambda_{d-i+1}(K*) <= d for every i.
TheoremReport verify_transference(const SymmetricBody& k, Execution exec = default_execution());

/// 1 <= lambda_1(K) * lambda_2(K*) <= 3/2 in the plane. Throws DimensionMismatch if d != 2.
TheoremReport verify_sharp_2d(const SymmetricBody& k, Execution exec = default_execution());

/// Interior lattice points versus lattice width: the flatness items a-e and
/// the basis-of-differences statement, each checked exactly.
TheoremReport flatness_report(const Polytope& p, Execution exec = default_execution());

} // namespace latmin
