#include "latmin/postulation.hpp"

#include "latmin/error.hpp"
#include "latmin/lattice.hpp"

#include <algorithm>
#include <bit>

namespace latmin {

namespace {

void validate(const BoxSpec& box)
{
    if (box.t.empty())
        throw Error(ErrorKind::DimensionMismatch, "box needs at least one parameter");
    for (const auto& t : box.t)
        if (sgn(t) < 0)
            throw Error(ErrorKind::NegativeParameter, "box parameters must be nonnegative");
}

// Counts x_i..x_{d-1} >= 0 with suffix sums bounded, given the sum of the
// coordinates after the current one.
Int count_suffix(const std::vector<long>& bound, int i, long tail)
{
    if (i < 0)
        return 1;
    Int total = 0;
    for (long x = 0; x + tail <= bound[i]; ++x)
        total += count_suffix(bound, i - 1, tail + x);
    return total;
}

} // namespace

Int box_count(const BoxSpec& box)
{
    validate(box);
    std::vector<long> bound;
    for (const auto& t : box.t) {
        const Int f = floor_rat(t);
        if (!f.fits_slong_p())
            throw Error(ErrorKind::NegativeParameter, "box parameter too large to enumerate");
        bound.push_back(f.get_si());
    }
    return count_suffix(bound, static_cast<int>(bound.size()) - 1, 0);
}

Polytope box_polytope(const BoxSpec& box)
{
    validate(box);
    const int d = static_cast<int>(box.t.size());
    // Constraint r < d: x_r >= 0; r >= d: suffix sum from r-d is <= t.
    auto row = [d](int r) {
        RatVec a(d, Rat(0));
        if (r < d)
            a[r] = 1;
        else
            for (int j = r - d; j < d; ++j)
                a[j] = 1;
        return a;
    };
    auto rhs = [&](int r) { return r < d ? Rat(0) : box.t[r - d]; };

    std::vector<RatVec> verts;
    for (unsigned mask = 0; mask < (1u << (2 * d)); ++mask) {
        if (std::popcount(mask) != d)
            continue;
        std::vector<RatVec> rows;
        RatVec b;
        for (int r = 0; r < 2 * d; ++r)
            if (mask & (1u << r)) {
                rows.push_back(row(r));
                b.push_back(rhs(r));
            }
        // solve_in_basis takes columns; transpose the square system.
        std::vector<RatVec> columns(d, RatVec(d));
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j)
                columns[j][i] = rows[i][j];
        auto x = solve_in_basis(columns, b);
        if (!x)
            continue;
        bool feasible = true;
        for (int r = 0; r < 2 * d && feasible; ++r) {
            const Rat s = dot(row(r), *x);
            feasible = r < d ? sgn(s) >= 0 : s <= rhs(r);
        }
        if (feasible)
            verts.push_back(std::move(*x));
    }
    return Polytope::hull(verts, d);
}

std::optional<Rat> box_volume_closed_form(const BoxSpec& box)
{
    validate(box);
    const auto& t = box.t;
    for (std::size_t i = 1; i < t.size(); ++i)
        if (t[i] > t[i - 1])
            return std::nullopt;
    switch (t.size()) {
    case 1: return t[0];
    case 2: return (2 * t[0] * t[1] - t[1] * t[1]) / 2;
    case 3:
        return (6 * t[0] * t[1] * t[2] - 3 * t[2] * t[2] * t[0] - 3 * t[2] * t[1] * t[1] + t[2] * t[2] * t[2]) / 6;
    default: return std::nullopt;
    }
}

Rat box_volume_triangulated(const BoxSpec& box)
{
    return volume(box_polytope(box));
}

Rat box_volume(const BoxSpec& box)
{
    if (auto closed = box_volume_closed_form(box))
        return *closed;
    return box_volume_triangulated(box);
}

TheoremReport check_vol_bound(const BoxSpec& box)
{
    const Rat vol = box_volume(box);
    Rat product = 1;
    for (const auto& t : box.t)
        product *= t;
    TheoremReport r;
    r.theorem = "box_volume_bound";
    r.scalars["volume"] = vol;
    r.scalars["product"] = product;
    r.vectors["t"] = box.t;
    r.checks.push_back(make_check("upper", vol, Relation::LessEqual, product));
    return r;
}

namespace {

// alpha_1..alpha_d chosen from the back; `tail` is alpha_{i+1} + ... + alpha_d.
Int count_monomials(const FlagSpec& f, int i, long tail)
{
    if (i == 0)
        return tail <= f.q ? 1 : 0; // alpha_0 = q - tail
    Int total = 0;
    const long cap = std::min(f.q, f.q - f.p[i - 1]);
    for (long a = 0; tail + a <= cap; ++a)
        total += count_monomials(f, i - 1, tail + a);
    return total;
}

} // namespace

Int flag_h0(const FlagSpec& flag)
{
    if (flag.d < 0 || static_cast<int>(flag.p.size()) != flag.d)
        throw Error(ErrorKind::DimensionMismatch, "flag needs exactly d multiplicities");
    if (flag.q < 0)
        return 0;
    return count_monomials(flag, flag.d, 0);
}

} // namespace latmin
