#include "latmin/toric.hpp"

#include "latmin/error.hpp"
#include "latmin/lattice.hpp"

#include <algorithm>
#include <bit>
#include <optional>

namespace latmin {

MomentPolytope::MomentPolytope(Polytope polytope) : polytope_(std::move(polytope))
{
    if (!polytope_.full_dimensional())
        throw Error(ErrorKind::DimensionDeficient, "moment polytope must be full-dimensional");
    for (const auto& v : polytope_.vertices())
        if (!to_int(v))
            throw Error(ErrorKind::DimensionMismatch, "moment polytope vertices must be lattice points");
}

namespace {

std::size_t find_vertex(const Polytope& p, const IntVec& u)
{
    if (static_cast<int>(u.size()) != p.ambient_dim())
        throw Error(ErrorKind::DimensionMismatch, "vertex length differs from polytope dimension");
    const RatVec target = to_rat(u);
    const auto& vs = p.vertices();
    auto it = std::lower_bound(vs.begin(), vs.end(), target,
                               [](const RatVec& a, const RatVec& b) { return lex_less(a, b); });
    if (it == vs.end() || *it != target)
        throw Error(ErrorKind::NotAVertex, "point is not a vertex of the moment polytope");
    return static_cast<std::size_t>(it - vs.begin());
}

} // namespace

VertexCone vertex_cone(const MomentPolytope& mp, const IntVec& u)
{
    const Polytope& p = mp.polytope();
    const std::size_t index = find_vertex(p, u);
    VertexCone cone;
    cone.vertex = u;
    const RatVec base = to_rat(u);
    for (auto n : p.neighbors(index))
        cone.edge_generators.push_back(primitive_direction(sub(p.vertices()[n], base)));
    cone.simple = static_cast<int>(cone.edge_generators.size()) == mp.dim();
    if (cone.simple) {
        std::vector<RatVec> rows;
        for (const auto& g : cone.edge_generators)
            rows.push_back(to_rat(g));
        cone.smooth = abs(determinant(rows)) == 1;
    }
    return cone;
}

EpsProfile eps_at_invariant_point(const MomentPolytope& mp, const IntVec& u)
{
    const Polytope& p = mp.polytope();
    const int d = mp.dim();
    for (const auto& v : p.vertices()) {
        if (!vertex_cone(mp, *to_int(v)).simple)
            throw Error(ErrorKind::NotAmplePolytope, "some vertex cone is not simple");
    }
    const VertexCone cone = vertex_cone(mp, u);
    if (!cone.smooth)
        throw Error(ErrorKind::SingularVertex, "vertex cone is not unimodular");

    std::vector<RatVec> columns;
    for (const auto& g : cone.edge_generators)
        columns.push_back(to_rat(g));
    const RatVec base = to_rat(u);
    // Coordinates of every vertex of P - u in the edge basis; all are >= 0.
    std::vector<RatVec> coords;
    for (const auto& v : p.vertices())
        coords.push_back(*solve_in_basis(columns, sub(v, base)));

    EpsProfile out;
    for (int i = 1; i <= d; ++i) {
        // Subsets J of size i-1 as bitmasks.
        std::optional<Rat> best;
        for (unsigned mask = 0; mask < (1u << d); ++mask) {
            if (std::popcount(mask) != i - 1)
                continue;
            Rat face_max = 0;
            for (const auto& c : coords) {
                bool on_face = true;
                Rat s = 0;
                for (int j = 0; j < d; ++j) {
                    if (mask & (1u << j)) {
                        if (sgn(c[j]) != 0) {
                            on_face = false;
                            break;
                        }
                    } else {
                        s += c[j];
                    }
                }
                if (on_face && s > face_max)
                    face_max = s;
            }
            if (!best || face_max < *best)
                best = face_max;
        }
        out.entries.emplace_back(ExactEps{*best, EpsProvenance::InvariantPoint});
    }
    return out;
}

EpsProfile eps_bracket_general(const MomentPolytope& mp, Execution exec)
{
    const int d = mp.dim();
    const SymmetricBody diff = difference_body(mp.polytope());
    const SuccessiveMinima m = successive_minima(diff, exec);
    const SuccessiveMinima dual = successive_minima(polar(diff), exec);
    const Rat& w = dual.lambdas.front();

    EpsProfile out;
    for (int i = 1; i <= d; ++i) {
        Rat lo = Rat(1) / m.lambdas[i - 1];
        if (i == d && w / Rat(d) > lo)
            lo = w / Rat(d);
        const Rat hi = Rat(d - i + 1) * dual.lambdas[d - i];
        out.entries.emplace_back(BracketEps{lo, hi});
    }
    return out;
}

namespace {

void check_positive(const Int& w)
{
    if (w <= 0)
        throw Error(ErrorKind::InvalidWeights, "weights must be positive");
}

} // namespace

FamilyEps exact_eps_family(const ToricFamily& family)
{
    if (const auto* ps = std::get_if<ProjectiveSpace>(&family)) {
        if (ps->d < 1)
            throw Error(ErrorKind::InvalidWeights, "dimension must be positive");
        check_positive(ps->w);
        std::vector<IntVec> pts;
        pts.emplace_back(ps->d, Int(0));
        for (int i = 0; i < ps->d; ++i) {
            IntVec e(ps->d, Int(0));
            e[i] = ps->w;
            pts.push_back(std::move(e));
        }
        EpsProfile eps;
        for (int i = 0; i < ps->d; ++i)
            eps.entries.emplace_back(ExactEps{Rat(ps->w), EpsProvenance::FamilyFormula});
        return FamilyEps{std::move(eps), MomentPolytope(Polytope::hull(pts, ps->d))};
    }

    std::vector<Int> w = std::get<ProductOfP1>(family).weights;
    if (w.empty())
        throw Error(ErrorKind::InvalidWeights, "at least one weight is required");
    for (const auto& x : w)
        check_positive(x);
    std::sort(w.begin(), w.end(), [](const Int& a, const Int& b) { return a > b; });
    const int d = static_cast<int>(w.size());

    std::vector<IntVec> corners;
    for (unsigned mask = 0; mask < (1u << d); ++mask) {
        IntVec c(d, Int(0));
        for (int j = 0; j < d; ++j)
            if (mask & (1u << j))
                c[j] = w[j];
        corners.push_back(std::move(c));
    }
    EpsProfile eps;
    for (int i = 0; i < d; ++i) {
        Int tail = 0;
        for (int j = i; j < d; ++j)
            tail += w[j];
        eps.entries.emplace_back(ExactEps{Rat(tail), EpsProvenance::FamilyFormula});
    }
    return FamilyEps{std::move(eps), MomentPolytope(Polytope::hull(corners, d))};
}

Rat toric_volume(const MomentPolytope& mp)
{
    return Rat(factorial(static_cast<unsigned>(mp.dim()))) * volume(mp.polytope());
}

bool EpsProfile::all_exact() const
{
    return std::all_of(entries.begin(), entries.end(),
                       [](const EpsEntry& e) { return std::holds_alternative<ExactEps>(e); });
}

bool EpsProfile::all_bracket() const
{
    return std::all_of(entries.begin(), entries.end(),
                       [](const EpsEntry& e) { return std::holds_alternative<BracketEps>(e); });
}

std::vector<Rat> EpsProfile::exact_values() const
{
    std::vector<Rat> out;
    for (const auto& e : entries)
        out.push_back(std::get<ExactEps>(e).value);
    return out;
}

TheoremReport verify_m2m(const MomentPolytope& mp, const EpsProfile& eps)
{
    const int d = mp.dim();
    if (static_cast<int>(eps.entries.size()) != d)
        throw Error(ErrorKind::DimensionMismatch, "profile length differs from dimension");
    const Rat vol = toric_volume(mp);
    const Rat dfact(factorial(static_cast<unsigned>(d)));

    TheoremReport r;
    r.theorem = "volume_vs_minima";
    r.instance = mp.polytope();
    r.scalars["volume"] = vol;
    if (eps.all_exact()) {
        Rat product = 1;
        for (const auto& v : eps.exact_values())
            product *= v;
        const Rat ratio = vol / product;
        r.scalars["product"] = product;
        r.scalars["ratio"] = ratio;
        r.vectors["eps"] = eps.exact_values();
        r.checks.push_back(make_check("lower", ratio, Relation::GreaterEqual, Rat(1)));
        r.checks.push_back(make_check("upper", ratio, Relation::LessEqual, dfact));
        return r;
    }
    if (!eps.all_bracket())
        throw Error(ErrorKind::MixedProfile, "profile mixes exact values and brackets");
    Rat lo_product = 1, hi_product = 1;
    std::vector<Rat> los, his;
    for (const auto& e : eps.entries) {
        const auto& b = std::get<BracketEps>(e);
        lo_product *= b.lo;
        hi_product *= b.hi;
        los.push_back(b.lo);
        his.push_back(b.hi);
    }
    r.vectors["lo"] = los;
    r.vectors["hi"] = his;
    r.scalars["lo_product"] = lo_product;
    r.scalars["hi_product"] = hi_product;
    r.checks.push_back(make_check("lower", lo_product, Relation::LessEqual, vol));
    r.checks.push_back(make_check("upper", vol, Relation::LessEqual, dfact * hi_product));
    return r;
}

TheoremReport verify_width_sandwich(const MomentPolytope& mp, const EpsProfile& bracket, Execution exec)
{
    const int d = mp.dim();
    const WidthResult width = lattice_width(mp.polytope(), exec);
    const auto& last = std::get<BracketEps>(bracket.entries.at(d - 1));
    TheoremReport r;
    r.theorem = "width_sandwich";
    r.instance = mp.polytope();
    r.scalars["width"] = width.width;
    r.scalars["lo"] = last.lo;
    r.scalars["hi"] = last.hi;
    r.checks.push_back(make_check("lower", width.width / Rat(d), Relation::LessEqual, last.lo));
    r.checks.push_back(make_check("inner", last.lo, Relation::LessEqual, last.hi));
    r.checks.push_back(make_check("upper", last.hi, Relation::LessEqual, width.width));
    return r;
}

std::string_view to_string(EpsProvenance p)
{
    return p == EpsProvenance::InvariantPoint ? "invariant_point" : "family_formula";
}

} // namespace latmin
