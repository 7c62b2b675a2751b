#include "latmin/gon.hpp"

#include "latmin/error.hpp"
#include "latmin/lattice.hpp"

#include <algorithm>
#include <numeric>

namespace latmin {

Rat gauge(const SymmetricBody& k, const RatVec& x)
{
    if (static_cast<int>(x.size()) != k.dim())
        throw Error(ErrorKind::DimensionMismatch, "gauge: point length differs from body dimension");
    Rat best = 0;
    for (const auto& f : k.body().facets()) {
        const Rat t = dot(f.normal, x) / f.offset;
        if (t > best)
            best = t;
    }
    return best;
}

namespace {

struct Candidate {
    Rat gauge;
    IntVec v;
};

bool canonical_sign(const IntVec& v)
{
    for (const auto& x : v) {
        const int s = sgn(x);
        if (s != 0)
            return s > 0;
    }
    return false;
}

} // namespace

SuccessiveMinima successive_minima(const SymmetricBody& k, Execution exec)
{
    const int d = k.dim();
    const auto& fs = k.body().facets();
    std::vector<Rat> inv_offset;
    inv_offset.reserve(fs.size());
    for (const auto& f : fs)
        inv_offset.push_back(Rat(1) / f.offset);

    auto lattice_gauge = [&](const IntVec& v) {
        Rat best = 0;
        for (std::size_t j = 0; j < fs.size(); ++j) {
            const Int s = dot(fs[j].normal, v);
            if (sgn(s) > 0) {
                const Rat t = s * inv_offset[j];
                if (t > best)
                    best = t;
            }
        }
        return best;
    };

    // The standard basis gives d independent vectors of gauge <= r_max, so
    // the radius never needs to exceed it.
    Rat radius, r_max;
    for (int i = 0; i < d; ++i) {
        IntVec e(d, Int(0));
        e[i] = 1;
        const Rat g = lattice_gauge(e);
        if (i == 0 || g < radius)
            radius = g;
        if (i == 0 || g > r_max)
            r_max = g;
    }

    std::vector<Rat> extent(d, Rat(0));
    for (const auto& v : k.body().vertices())
        for (int c = 0; c < d; ++c)
            if (abs(v[c]) > extent[c])
                extent[c] = abs(v[c]);

    while (true) {
        // Every lattice point of gauge <= radius lies in radius*K.
        IntHalfspaces system;
        for (const auto& f : fs) {
            system.normals.push_back(f.normal);
            system.bounds.push_back(floor_rat(radius * f.offset));
        }
        IntVec lo(d), hi(d);
        for (int c = 0; c < d; ++c) {
            hi[c] = floor_rat(radius * extent[c]);
            lo[c] = c == 0 ? Int(0) : Int(-hi[c]);
        }
        std::vector<Candidate> cands;
        for (auto& v : scan_box(lo, hi, system, exec)) {
            if (!canonical_sign(v))
                continue;
            Rat g = lattice_gauge(v);
            cands.push_back(Candidate{std::move(g), std::move(v)});
        }
        std::sort(cands.begin(), cands.end(), [](const Candidate& a, const Candidate& b) {
            const int c = cmp(a.gauge, b.gauge);
            if (c != 0)
                return c < 0;
            return lex_less(b.v, a.v);
        });

        SuccessiveMinima out;
        out.d = d;
        for (const auto& c : cands) {
            out.witnesses.push_back(c.v);
            if (rank(out.witnesses) == static_cast<int>(out.witnesses.size())) {
                out.lambdas.push_back(c.gauge);
                if (static_cast<int>(out.lambdas.size()) == d)
                    return out;
            } else {
                out.witnesses.pop_back();
            }
        }
        if (radius >= r_max)
            throw Error(ErrorKind::DimensionDeficient, "successive minima: body is not full-dimensional");
        radius *= 2;
        if (radius > r_max)
            radius = r_max;
    }
}

Rat interval_length(const Polytope& p, const IntVec& functional)
{
    const auto& vs = p.vertices();
    Rat lo = dot(functional, vs.front()), hi = lo;
    for (const auto& v : vs) {
        const Rat s = dot(functional, v);
        if (s < lo)
            lo = s;
        if (s > hi)
            hi = s;
    }
    return hi - lo;
}

WidthResult lattice_width(const Polytope& p, Execution exec)
{
    const SymmetricBody dual = polar(difference_body(p));
    SuccessiveMinima m = successive_minima(dual, exec);
    return WidthResult{m.lambdas.front(), std::move(m.witnesses.front())};
}

TheoremReport verify_minkowski_second(const Polytope& p, Execution exec)
{
    const int d = p.ambient_dim();
    const Rat vol = volume(p);
    if (!p.full_dimensional())
        throw Error(ErrorKind::DimensionDeficient, "Minkowski's second theorem needs a full-dimensional polytope");
    const SuccessiveMinima m = successive_minima(difference_body(p), exec);
    Rat product = vol;
    for (const auto& l : m.lambdas)
        product *= l;

    TheoremReport r;
    r.theorem = "minkowski_second";
    r.instance = p;
    r.scalars["volume"] = vol;
    r.scalars["product"] = product;
    r.vectors["lambda"] = m.lambdas;
    r.witnesses["lambda"] = m.witnesses;
    r.checks.push_back(make_check("lower", product, Relation::GreaterEqual, Rat(1) / Rat(factorial(d))));
    r.checks.push_back(make_check("upper", product, Relation::LessEqual, Rat(1)));
    return r;
}

TheoremReport verify_transference(const SymmetricBody& k, Execution exec)
{
    const int d = k.dim();
    const SuccessiveMinima m = successive_minima(k, exec);
    const SuccessiveMinima dual = successive_minima(polar(k), exec);

    TheoremReport r;
    r.theorem = "transference";
    r.instance = k.body();
    r.vectors["lambda"] = m.lambdas;
    r.vectors["lambda_dual"] = dual.lambdas;
    r.witnesses["lambda"] = m.witnesses;
    r.witnesses["lambda_dual"] = dual.witnesses;
    std::vector<Rat> products;
    for (int i = 0; i < d; ++i) {
        const Rat prod = m.lambdas[i] * dual.lambdas[d - 1 - i];
        products.push_back(prod);
        const std::string idx = std::to_string(i + 1);
        r.checks.push_back(make_check("lower_" + idx, prod, Relation::GreaterEqual, Rat(1)));
        r.checks.push_back(make_check("upper_" + idx, prod, Relation::LessEqual, Rat(d)));
    }
    r.vectors["products"] = products;
    return r;
}

TheoremReport verify_sharp_2d(const SymmetricBody& k, Execution exec)
{
    if (k.dim() != 2)
        throw Error(ErrorKind::DimensionMismatch, "sharp planar transference needs dimension 2");
    const SuccessiveMinima m = successive_minima(k, exec);
    const SuccessiveMinima dual = successive_minima(polar(k), exec);
    const Rat product = m.lambdas[0] * dual.lambdas[1];

    TheoremReport r;
    r.theorem = "sharp_2d";
    r.instance = k.body();
    r.scalars["lambda_1"] = m.lambdas[0];
    r.scalars["lambda_dual_2"] = dual.lambdas[1];
    r.scalars["product"] = product;
    r.witnesses["lambda"] = m.witnesses;
    r.witnesses["lambda_dual"] = dual.witnesses;
    r.checks.push_back(make_check("lower", product, Relation::GreaterEqual, Rat(1)));
    r.checks.push_back(make_check("upper", product, Relation::LessEqual, Rat(3, 2)));
    return r;
}

TheoremReport flatness_report(const Polytope& p, Execution exec)
{
    const int d = p.ambient_dim();
    const WidthResult width = lattice_width(p, exec);
    const Rat& w = width.width;
    const std::vector<IntVec> interior = lattice_points(p, LatticeMode::InteriorOnly, exec);
    const Rat vol = volume(p);
    const Rat dfact(factorial(d));

    // Differences a - a0 and a greedy independent tuple among them.
    std::vector<IntVec> diffs;
    for (std::size_t i = 1; i < interior.size(); ++i)
        diffs.push_back(sub(interior[i], interior[0]));
    const int dim_interior = interior.empty() ? -1 : rank(diffs);
    std::vector<IntVec> tuple;
    if (!interior.empty()) {
        tuple.push_back(interior[0]);
        std::vector<IntVec> basis;
        for (std::size_t i = 0; i < diffs.size() && static_cast<int>(basis.size()) < d; ++i) {
            basis.push_back(diffs[i]);
            if (rank(basis) == static_cast<int>(basis.size()))
                tuple.push_back(interior[i + 1]);
            else
                basis.pop_back();
        }
    }
    const Int index = interior.empty() ? Int(0) : lattice_index(diffs, d);
    // Greedy generating subset of the differences, kept only when it
    // strictly refines the lattice generated so far.
    std::vector<IntVec> generators;
    if (index == 1) {
        Int current = 0;
        int current_rank = 0;
        for (const auto& v : diffs) {
            generators.push_back(v);
            const int r = rank(generators);
            const Int idx = r == d ? lattice_index(generators, d) : Int(0);
            if (r > current_rank || (r == d && (current == 0 || idx < current))) {
                current_rank = r;
                current = idx;
                if (current == 1)
                    break;
            } else {
                generators.pop_back();
            }
        }
    }

    TheoremReport r;
    r.theorem = "flatness";
    r.instance = p;
    r.scalars["width"] = w;
    r.scalars["interior_count"] = Rat(static_cast<long>(interior.size()));
    r.scalars["interior_dim"] = Rat(dim_interior);
    r.scalars["span_index"] = Rat(index);
    r.scalars["volume"] = vol;
    r.witnesses["width"] = {width.witness};

    const Rat d2(d * d);
    r.checks.push_back(make_check("a_nonempty", Rat(static_cast<long>(interior.size())), Relation::GreaterEqual,
                                  Rat(1), w > d2));
    r.checks.push_back(make_check("b_full_dimension", Rat(dim_interior), Relation::GreaterEqual, Rat(d),
                                  w > Rat(d * (d + 1))));
    r.checks.push_back(make_check("c_spans_lattice", Rat(index), Relation::Equal, Rat(1), w > Rat(2 * d * d)));
    r.checks.push_back(make_check("intro_basis", Rat(static_cast<long>(tuple.size())), Relation::GreaterEqual,
                                  Rat(d + 1), w > Rat(d * d + d)));

    const Rat shifted = w / Rat(d) - Rat(d);
    Check count_bound = make_check("d_count", dfact * Rat(static_cast<long>(interior.size())),
                                   Relation::GreaterEqual, pow_rat(shifted, d));
    count_bound.vacuous = sgn(shifted) < 0;
    r.checks.push_back(std::move(count_bound));
    r.checks.push_back(make_check("e_volume", dfact * vol, Relation::GreaterEqual, pow_rat(w / Rat(d), d)));

    if (!interior.empty())
        r.witnesses["a_interior_point"] = {interior.front()};
    if (static_cast<int>(tuple.size()) == d + 1)
        r.witnesses["basis_tuple"] = tuple;
    if (!generators.empty())
        r.witnesses["c_generators"] = generators;
    return r;
}

} // namespace latmin
