#pragma once

#include "latmin/arith.hpp"
#include "latmin/polytope.hpp"
#include "latmin/report.hpp"

#include <optional>
#include <vector>

namespace latmin {

/// The region { x >= 0 : x_i + ... + x_d <= t_i for all i }.
struct BoxSpec {
    std::vector<Rat> t;
};

/// Flag multiplicities p_1..p_d along a linear flag in P^d, forms of degree q.
struct FlagSpec {
    int d = 0;
    std::vector<long> p;
    long q = 0;
};

/// Lattice points of the box region. Throws NegativeParameter.
Int box_count(const BoxSpec& box);

/// Vertex description of the box region.
Polytope box_polytope(const BoxSpec& box);

/// Closed form for nonincreasing t with d <= 3, nullopt otherwise.
std::optional<Rat> box_volume_closed_form(const BoxSpec& box);

/// Exact volume from the triangulated vertex description.
Rat box_volume_triangulated(const BoxSpec& box);

/// Closed form when available, triangulated otherwise.
Rat box_volume(const BoxSpec& box);

/// vol <= prod t_i.
TheoremReport check_vol_bound(const BoxSpec& box);

/// Number of monomials of degree q in d+1 variables with
/// alpha_i + ... + alpha_d <= q - p_i for every i; 0 when q < 0.
/// Throws DimensionMismatch when p does not have d entries.
Int flag_h0(const FlagSpec& flag);

} // namespace latmin
