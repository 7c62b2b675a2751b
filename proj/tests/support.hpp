#pragma once
// Shared fixtures and independent reference computations for the tests.
// The oracles here never call the code path they are used to check.

#include "latmin/arith.hpp"
#include "latmin/lattice.hpp"
#include "latmin/polytope.hpp"

#include <algorithm>
#include <functional>
#include <initializer_list>
#include <random>
#include <string>
#include <vector>

namespace latmin::test {

inline IntVec iv(std::initializer_list<long> xs)
{
    IntVec v;
    for (long x : xs)
        v.emplace_back(x);
    return v;
}

inline RatVec rv(std::initializer_list<const char*> xs)
{
    RatVec v;
    for (const char* x : xs)
        v.push_back(parse_rat(x));
    return v;
}

inline Rat R(const char* s) { return parse_rat(s); }

/// a/b in lowest terms (the two-argument mpq constructor does not reduce).
inline Rat Q(long a, long b)
{
    Rat r(a, b);
    r.canonicalize();
    return r;
}

inline Polytope poly(const std::vector<std::vector<long>>& pts)
{
    std::vector<IntVec> v;
    for (const auto& p : pts) {
        IntVec q;
        for (long x : p)
            q.emplace_back(x);
        v.push_back(q);
    }
    return Polytope::hull(v, static_cast<int>(pts.front().size()));
}

inline Polytope rpoly(const std::vector<RatVec>& pts)
{
    return Polytope::hull(pts, static_cast<int>(pts.front().size()));
}

inline std::vector<RatVec> rverts(const std::vector<std::vector<const char*>>& pts)
{
    std::vector<RatVec> out;
    for (const auto& p : pts) {
        RatVec q;
        for (const char* x : p)
            q.push_back(parse_rat(x));
        out.push_back(q);
    }
    return out;
}

/// Box [0, hi_1] x ... x [0, hi_d].
inline Polytope box(const std::vector<long>& hi)
{
    const int d = static_cast<int>(hi.size());
    std::vector<IntVec> pts;
    for (unsigned mask = 0; mask < (1u << d); ++mask) {
        IntVec p(d, Int(0));
        for (int i = 0; i < d; ++i)
            if (mask & (1u << i))
                p[i] = hi[i];
        pts.push_back(p);
    }
    return Polytope::hull(pts, d);
}

inline Polytope simplex(int d, long w)
{
    std::vector<IntVec> pts{IntVec(d, Int(0))};
    for (int i = 0; i < d; ++i) {
        IntVec e(d, Int(0));
        e[i] = w;
        pts.push_back(e);
    }
    return Polytope::hull(pts, d);
}

inline SymmetricBody cube(int d)
{
    std::vector<RatVec> pts;
    for (unsigned mask = 0; mask < (1u << d); ++mask) {
        RatVec p(d);
        for (int i = 0; i < d; ++i)
            p[i] = (mask & (1u << i)) ? 1 : -1;
        pts.push_back(p);
    }
    return SymmetricBody(Polytope::hull(pts, d));
}

inline SymmetricBody cross(int d)
{
    std::vector<RatVec> pts;
    for (int i = 0; i < d; ++i) {
        RatVec e(d, Rat(0));
        e[i] = 1;
        pts.push_back(e);
        pts.push_back(negate(e));
    }
    return SymmetricBody(Polytope::hull(pts, d));
}

/// conv{±(1,3/2), ±(1,-1/2)} = { |x| <= 1, |y - x/2| <= 1 }.
inline SymmetricBody extremal_planar_body()
{
    return SymmetricBody::symmetric_hull(rverts({{"1", "3/2"}, {"1", "-1/2"}}), 2);
}

using Rng = std::mt19937_64;

inline long draw(Rng& rng, long lo, long hi)
{
    return std::uniform_int_distribution<long>(lo, hi)(rng);
}

/// Full-dimensional lattice polytope with random vertices in [-b, b]^d.
inline Polytope random_polytope(Rng& rng, int d, long b, int extra = -1)
{
    for (;;) {
        const int n = d + 1 + (extra >= 0 ? extra : static_cast<int>(draw(rng, 0, d + 2)));
        std::vector<IntVec> pts;
        for (int i = 0; i < n; ++i) {
            IntVec p;
            for (int c = 0; c < d; ++c)
                p.emplace_back(draw(rng, -b, b));
            pts.push_back(p);
        }
        auto p = Polytope::hull(pts, d);
        if (p.full_dimensional())
            return p;
    }
}

inline SymmetricBody random_symmetric(Rng& rng, int d, long b)
{
    for (;;) {
        const int n = static_cast<int>(draw(rng, d, 2 * d));
        std::vector<RatVec> pts;
        for (int i = 0; i < n; ++i) {
            RatVec p;
            for (int c = 0; c < d; ++c)
                p.emplace_back(draw(rng, -b, b));
            pts.push_back(p);
        }
        if (rank(std::span<const RatVec>(pts)) == d)
            return SymmetricBody::symmetric_hull(pts, d);
    }
}

/// Random unimodular matrix as a product of elementary row operations.
inline std::vector<IntVec> random_unimodular(Rng& rng, int d, int steps = 6)
{
    std::vector<IntVec> m(d, IntVec(d, Int(0)));
    for (int i = 0; i < d; ++i)
        m[i][i] = 1;
    if (d == 1) {
        m[0][0] = draw(rng, 0, 1) ? 1 : -1;
        return m;
    }
    for (int s = 0; s < steps; ++s) {
        const int i = static_cast<int>(draw(rng, 0, d - 1));
        int j = static_cast<int>(draw(rng, 0, d - 2));
        if (j >= i)
            ++j;
        const long k = draw(rng, -2, 2);
        for (int c = 0; c < d; ++c)
            m[i][c] += k * m[j][c];
        if (draw(rng, 0, 3) == 0)
            std::swap(m[i], m[j]);
        if (draw(rng, 0, 3) == 0)
            for (auto& x : m[i])
                x = -x;
    }
    return m;
}

// ---- oracles ---------------------------------------------------------------

/// Membership of x in the convex hull of the vertices: x is in conv V iff
/// adding x does not change the vertex set.
inline bool oracle_member(const Polytope& p, const RatVec& x)
{
    auto pts = p.vertices();
    pts.push_back(x);
    return Polytope::hull(pts, p.ambient_dim()).vertices() == p.vertices();
}

/// Cofactor determinant.
inline Rat oracle_det(const std::vector<RatVec>& m)
{
    const std::size_t n = m.size();
    if (n == 1)
        return m[0][0];
    Rat s = 0;
    for (std::size_t c = 0; c < n; ++c) {
        std::vector<RatVec> minor;
        for (std::size_t r = 1; r < n; ++r) {
            RatVec row;
            for (std::size_t k = 0; k < n; ++k)
                if (k != c)
                    row.push_back(m[r][k]);
            minor.push_back(row);
        }
        const Rat t = m[0][c] * oracle_det(minor);
        s += (c % 2 == 0) ? t : Rat(-t);
    }
    return s;
}

struct GaugeBracket {
    Rat lo; // x is not in lo * K
    Rat hi; // x is in hi * K
};

/// Bisection on t -> [x in tK] using hull membership only.
inline GaugeBracket oracle_gauge(const SymmetricBody& k, const RatVec& x, int steps = 24)
{
    if (is_zero(x))
        return {Rat(0), Rat(0)};
    auto inside = [&](const Rat& t) { return oracle_member(k.body(), scale(x, 1 / t)); };
    Rat lo = 0, hi = 1;
    while (!inside(hi)) {
        lo = hi;
        hi *= 2;
    }
    for (int s = 0; s < steps; ++s) {
        const Rat mid = (lo + hi) / 2;
        if (inside(mid))
            hi = mid;
        else
            lo = mid;
    }
    return {lo, hi};
}

inline Rat oracle_interval(const Polytope& p, const IntVec& phi)
{
    Rat lo, hi;
    bool first = true;
    for (const auto& v : p.vertices()) {
        Rat s = 0;
        for (std::size_t i = 0; i < v.size(); ++i)
            s += phi[i] * v[i];
        if (first || s < lo)
            lo = s;
        if (first || s > hi)
            hi = s;
        first = false;
    }
    return hi - lo;
}

/// Inverse by Gauss-Jordan; empty when singular.
inline std::vector<RatVec> oracle_inverse(std::vector<RatVec> a)
{
    const std::size_t d = a.size();
    std::vector<RatVec> inv(d, RatVec(d, Rat(0)));
    for (std::size_t i = 0; i < d; ++i)
        inv[i][i] = 1;
    for (std::size_t c = 0; c < d; ++c) {
        std::size_t piv = c;
        while (piv < d && a[piv][c] == 0)
            ++piv;
        if (piv == d)
            return {};
        std::swap(a[piv], a[c]);
        std::swap(inv[piv], inv[c]);
        const Rat f = a[c][c];
        for (std::size_t k = 0; k < d; ++k) {
            a[c][k] /= f;
            inv[c][k] /= f;
        }
        for (std::size_t r = 0; r < d; ++r)
            if (r != c && a[r][c] != 0) {
                const Rat g = a[r][c];
                for (std::size_t k = 0; k < d; ++k) {
                    a[r][k] -= g * a[c][k];
                    inv[r][k] -= g * inv[c][k];
                }
            }
    }
    return inv;
}

/// Minimum of the interval length over all nonzero integer functionals in a
/// box that provably contains the optimum. Let w0 be the least width along a
/// coordinate axis. For independent vertex differences u_1..u_d (rows of U),
/// any phi of width <= w0 has |<phi, u_j>| <= w0, so phi = U^-1 y with
/// |y_j| <= w0 and |phi_c| <= w0 * sum_j |(U^-1)_{cj}|. Every d-subset of
/// differences is tried and the smallest box is enumerated.
inline Rat oracle_width(const Polytope& p)
{
    const int d = p.ambient_dim();
    const auto& vs = p.vertices();
    Rat w0;
    for (int c = 0; c < d; ++c) {
        IntVec e(d, Int(0));
        e[c] = 1;
        const Rat w = oracle_interval(p, e);
        if (c == 0 || w < w0)
            w0 = w;
    }
    std::vector<RatVec> diffs;
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
            diffs.push_back(sub(vs[j], vs[i]));

    std::vector<long> best_box;
    Int best_size = -1;
    std::vector<std::size_t> pick(d);
    std::function<void(int, std::size_t)> choose = [&](int depth, std::size_t from) {
        if (depth == d) {
            std::vector<RatVec> u;
            for (auto k : pick)
                u.push_back(diffs[k]);
            const auto inv = oracle_inverse(u);
            if (inv.empty())
                return;
            std::vector<long> box(d);
            Int size = 1;
            for (int c = 0; c < d; ++c) {
                Rat s = 0;
                for (int j = 0; j < d; ++j)
                    s += abs(inv[c][j]);
                box[c] = floor_rat(w0 * s).get_si();
                size *= 2 * box[c] + 1;
            }
            if (best_size < 0 || size < best_size) {
                best_size = size;
                best_box = box;
            }
            return;
        }
        for (std::size_t k = from; k < diffs.size(); ++k) {
            pick[depth] = k;
            choose(depth + 1, k + 1);
        }
    };
    choose(0, 0);

    Rat best = w0;
    IntVec phi(d);
    for (int c = 0; c < d; ++c)
        phi[c] = -best_box[c];
    for (;;) {
        if (!is_zero(phi)) {
            const Rat w = oracle_interval(p, phi);
            if (w < best)
                best = w;
        }
        int c = d - 1;
        while (c >= 0 && phi[c] == best_box[c]) {
            phi[c] = -best_box[c];
            --c;
        }
        if (c < 0)
            break;
        phi[c] += 1;
    }
    return best;
}

/// Lambdas by exhaustive enumeration of a box that contains r_max * K, where
/// r_max is the largest gauge of a standard basis vector. Gauge here is the
/// support function of the polar at x.
inline std::vector<Rat> oracle_minima(const SymmetricBody& k)
{
    const int d = k.dim();
    const auto pv = polar(k).body().vertices();
    auto g = [&](const IntVec& x) {
        Rat best = 0;
        for (const auto& y : pv) {
            Rat s = 0;
            for (int i = 0; i < d; ++i)
                s += x[i] * y[i];
            best = std::max(best, s);
        }
        return best;
    };
    Rat r_max = 0, ext = 0;
    for (int i = 0; i < d; ++i) {
        IntVec e(d, Int(0));
        e[i] = 1;
        r_max = std::max(r_max, g(e));
    }
    for (const auto& v : k.body().vertices())
        for (const auto& c : v)
            ext = std::max(ext, Rat(abs(c)));
    const long b = floor_rat(r_max * ext).get_si();
    std::vector<std::pair<Rat, IntVec>> pts;
    IntVec x(d, Int(-b));
    for (;;) {
        if (!is_zero(x)) {
            const Rat gx = g(x);
            if (gx <= r_max)
                pts.emplace_back(gx, x);
        }
        int c = d - 1;
        while (c >= 0 && x[c] == b) {
            x[c] = -b;
            --c;
        }
        if (c < 0)
            break;
        x[c] += 1;
    }
    std::stable_sort(pts.begin(), pts.end(),
                     [](const auto& a, const auto& b2) { return a.first < b2.first; });
    std::vector<Rat> lambdas;
    std::vector<RatVec> chosen;
    for (const auto& [gx, v] : pts) {
        auto cand = chosen;
        cand.push_back(to_rat(v));
        if (rank(std::span<const RatVec>(cand)) > static_cast<int>(chosen.size())) {
            chosen = cand;
            lambdas.push_back(gx);
            if (static_cast<int>(lambdas.size()) == d)
                break;
        }
    }
    return lambdas;
}

/// Brute force over [0, floor t_max]^d.
inline Int oracle_box_count(const std::vector<Rat>& t)
{
    const int d = static_cast<int>(t.size());
    Rat tmax = 0;
    for (const auto& x : t)
        tmax = std::max(tmax, x);
    const long b = floor_rat(tmax).get_si();
    std::vector<long> x(d, 0);
    Int count = 0;
    for (;;) {
        bool ok = true;
        long tail = 0;
        for (int i = d - 1; i >= 0 && ok; --i) {
            tail += x[i];
            ok = Rat(tail) <= t[i];
        }
        if (ok)
            ++count;
        int c = d - 1;
        while (c >= 0 && x[c] == b) {
            x[c] = 0;
            --c;
        }
        if (c < 0)
            break;
        ++x[c];
    }
    return count;
}

/// Counts nonincreasing tail sums q >= s_1 >= ... >= s_d >= 0 with
/// s_i <= q - p_i, by dynamic programming over i.
inline Int oracle_flag(int d, const std::vector<long>& p, long q)
{
    if (q < 0)
        return 0;
    // ways[s] = number of valid (s_1..s_i) ending with s_i = s
    std::vector<Int> ways(q + 1, Int(0));
    if (d == 0)
        return 1;
    for (long s = 0; s <= q; ++s)
        ways[s] = (s <= q - p[0]) ? 1 : 0;
    for (int i = 1; i < d; ++i) {
        std::vector<Int> next(q + 1, Int(0));
        Int suffix = 0;
        for (long s = q; s >= 0; --s) {
            suffix += ways[s];
            next[s] = (s <= q - p[i]) ? suffix : Int(0);
        }
        ways = next;
    }
    Int total = 0;
    for (const auto& w : ways)
        total += w;
    return total;
}

} // namespace latmin::test
