#include "latmin/polytope.hpp"

#include "latmin/error.hpp"
#include "latmin/lattice.hpp"

#include <boost/dynamic_bitset.hpp>

#include <algorithm>
#include <map>
#include <set>
#include <utility>

namespace latmin {

namespace {

using Bits = boost::dynamic_bitset<>;

struct Ray {
    IntVec y;
    Bits zero;
};

struct HullResult {
    std::vector<std::size_t> vertex_ids; // indices into the input points
    std::vector<Facet> facets;
    std::vector<std::vector<std::size_t>> incidence; // facet -> input point ids
};

void make_primitive(IntVec& v)
{
    Int g = 0;
    for (const auto& x : v)
        g = gcd(g, x);
    if (g > 1)
        for (auto& x : v)
            x /= g;
}

// Double description on the cone { (a, b) : <a, q_i> <= b } whose extreme
// rays are the facets of conv(q). Requires the points to affinely span Q^k.
HullResult full_dimensional_hull(const std::vector<RatVec>& pts, int k)
{
    const std::size_t n = pts.size();
    const std::size_t width = static_cast<std::size_t>(k) + 1;

    Int denom = 1;
    for (const auto& p : pts)
        for (const auto& x : p)
            denom = lcm(denom, x.get_den());

    // Row i: (-D q_i, D) . (a, b) >= 0.
    std::vector<IntVec> rows(n, IntVec(width));
    for (std::size_t i = 0; i < n; ++i) {
        for (int j = 0; j < k; ++j)
            rows[i][j] = -Rat(pts[i][j] * denom).get_num();
        rows[i][k] = denom;
    }

    std::vector<RatVec> rat_rows;
    rat_rows.reserve(n);
    for (const auto& r : rows)
        rat_rows.push_back(to_rat(r));
    const std::vector<std::size_t> initial = independent_subset(rat_rows);

    // Initial simplicial cone: rays are the columns of the inverse.
    std::vector<Ray> rays;
    {
        std::vector<RatVec> columns(width, RatVec(width));
        for (std::size_t c = 0; c < width; ++c)
            for (std::size_t r = 0; r < width; ++r)
                columns[c][r] = rat_rows[initial[r]][c];
        for (std::size_t j = 0; j < width; ++j) {
            RatVec e(width, Rat(0));
            e[j] = 1;
            auto sol = solve_in_basis(columns, e);
            Ray ray{primitive_direction(*sol), Bits(n)};
            for (std::size_t r = 0; r < width; ++r)
                if (r != j)
                    ray.zero.set(initial[r]);
            rays.push_back(std::move(ray));
        }
    }

    std::vector<bool> done(n, false);
    for (auto i : initial)
        done[i] = true;

    for (std::size_t i = 0; i < n; ++i) {
        if (done[i])
            continue;
        done[i] = true;
        std::vector<Int> value(rays.size());
        std::vector<std::size_t> pos, neg;
        std::vector<Ray> next;
        for (std::size_t r = 0; r < rays.size(); ++r) {
            value[r] = dot(rows[i], rays[r].y);
            const int s = sgn(value[r]);
            if (s > 0)
                pos.push_back(r);
            else if (s < 0)
                neg.push_back(r);
            else
                rays[r].zero.set(i);
        }
        if (neg.empty())
            continue;

        for (std::size_t r = 0; r < rays.size(); ++r)
            if (sgn(value[r]) >= 0)
                next.push_back(rays[r]);

        for (auto p : pos) {
            for (auto q : neg) {
                Bits common = rays[p].zero & rays[q].zero;
                if (static_cast<int>(common.count()) < k - 1)
                    continue;
                bool adjacent = true;
                for (std::size_t t = 0; t < rays.size() && adjacent; ++t) {
                    if (t == p || t == q)
                        continue;
                    if (common.is_subset_of(rays[t].zero))
                        adjacent = false;
                }
                if (!adjacent)
                    continue;
                IntVec y(width);
                for (std::size_t c = 0; c < width; ++c)
                    y[c] = value[p] * rays[q].y[c] - value[q] * rays[p].y[c];
                make_primitive(y);
                common.set(i);
                next.push_back(Ray{std::move(y), std::move(common)});
            }
        }
        rays = std::move(next);
    }

    HullResult out;
    std::vector<std::vector<std::size_t>> point_facets(n);
    for (std::size_t f = 0; f < rays.size(); ++f) {
        IntVec a(rays[f].y.begin(), rays[f].y.begin() + k);
        Int g = 0;
        for (const auto& x : a)
            g = gcd(g, x);
        Facet facet;
        facet.offset = Rat(rays[f].y[k], g);
        facet.offset.canonicalize();
        for (auto& x : a)
            x /= g;
        facet.normal = std::move(a);
        out.facets.push_back(std::move(facet));
        std::vector<std::size_t> on;
        for (std::size_t i = 0; i < n; ++i)
            if (rays[f].zero.test(i)) {
                on.push_back(i);
                point_facets[i].push_back(f);
            }
        out.incidence.push_back(std::move(on));
    }
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<IntVec> normals;
        for (auto f : point_facets[i])
            normals.push_back(out.facets[f].normal);
        if (rank(normals) == k)
            out.vertex_ids.push_back(i);
    }
    return out;
}

std::vector<RatVec> sorted_unique(std::vector<RatVec> pts)
{
    std::sort(pts.begin(), pts.end(), [](const RatVec& a, const RatVec& b) { return lex_less(a, b); });
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
}

int affine_rank(const std::vector<RatVec>& pts, const std::vector<std::size_t>& ids)
{
    if (ids.size() <= 1)
        return 0;
    std::vector<RatVec> diffs;
    for (std::size_t i = 1; i < ids.size(); ++i)
        diffs.push_back(sub(pts[ids[i]], pts[ids[0]]));
    return rank(diffs);
}

} // namespace

Polytope Polytope::hull(std::span<const RatVec> points, int d)
{
    if (d <= 0 || points.empty())
        throw Error(ErrorKind::DimensionMismatch, "hull needs a positive dimension and at least one point");
    for (const auto& p : points)
        if (static_cast<int>(p.size()) != d)
            throw Error(ErrorKind::DimensionMismatch,
                        "point of length " + std::to_string(p.size()) + " in dimension " + std::to_string(d));

    std::vector<RatVec> input(points.begin(), points.end());
    for (auto& p : input)
        for (auto& x : p)
            x.canonicalize();
    const std::vector<RatVec> pts = sorted_unique(std::move(input));
    Polytope poly;
    poly.ambient_dim_ = d;

    std::vector<RatVec> diffs;
    for (std::size_t i = 1; i < pts.size(); ++i)
        diffs.push_back(sub(pts[i], pts[0]));
    const int k = rank(diffs);
    poly.affine_dim_ = k;

    if (k == 0) {
        poly.vertices_ = {pts[0]};
        return poly;
    }

    if (k < d) {
        // Project onto k coordinates on which the affine hull is a graph;
        // the projection is injective there and preserves extreme points.
        std::vector<int> coords;
        std::vector<RatVec> columns;
        for (int c = 0; c < d && static_cast<int>(coords.size()) < k; ++c) {
            RatVec col;
            for (const auto& v : diffs)
                col.push_back(v[c]);
            columns.push_back(col);
            if (rank(columns) == static_cast<int>(columns.size()))
                coords.push_back(c);
            else
                columns.pop_back();
        }
        std::vector<RatVec> projected;
        for (const auto& p : pts) {
            RatVec q;
            for (int c : coords)
                q.push_back(p[c]);
            projected.push_back(std::move(q));
        }
        const HullResult h = full_dimensional_hull(projected, k);
        for (auto id : h.vertex_ids)
            poly.vertices_.push_back(pts[id]);
        return poly;
    }

    HullResult h = full_dimensional_hull(pts, d);
    std::map<std::size_t, std::size_t> remap;
    for (auto id : h.vertex_ids) {
        remap[id] = poly.vertices_.size();
        poly.vertices_.push_back(pts[id]);
    }

    std::vector<std::size_t> order(h.facets.size());
    for (std::size_t i = 0; i < order.size(); ++i)
        order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (h.facets[a].normal != h.facets[b].normal)
            return lex_less(h.facets[a].normal, h.facets[b].normal);
        return h.facets[a].offset < h.facets[b].offset;
    });
    for (auto f : order) {
        poly.facets_.push_back(h.facets[f]);
        std::vector<std::size_t> on;
        for (auto id : h.incidence[f]) {
            auto it = remap.find(id);
            if (it != remap.end())
                on.push_back(it->second);
        }
        std::sort(on.begin(), on.end());
        poly.incidence_.push_back(std::move(on));
    }
    return poly;
}

Polytope Polytope::hull(std::span<const IntVec> points, int d)
{
    std::vector<RatVec> pts;
    pts.reserve(points.size());
    for (const auto& p : points)
        pts.push_back(to_rat(p));
    return hull(pts, d);
}

const std::vector<Facet>& Polytope::facets() const
{
    if (!full_dimensional())
        throw Error(ErrorKind::DimensionDeficient, "polytope of affine dimension " + std::to_string(affine_dim_) +
                                                       " in ambient dimension " + std::to_string(ambient_dim_));
    return facets_;
}

const std::vector<std::vector<std::size_t>>& Polytope::facet_vertices() const
{
    facets();
    return incidence_;
}

std::vector<std::size_t> Polytope::neighbors(std::size_t index) const
{
    const auto& fs = facets();
    std::vector<std::size_t> on_index;
    for (std::size_t f = 0; f < fs.size(); ++f)
        if (std::binary_search(incidence_[f].begin(), incidence_[f].end(), index))
            on_index.push_back(f);
    std::vector<std::size_t> out;
    for (std::size_t other = 0; other < vertices_.size(); ++other) {
        if (other == index)
            continue;
        std::vector<IntVec> normals;
        for (auto f : on_index)
            if (std::binary_search(incidence_[f].begin(), incidence_[f].end(), other))
                normals.push_back(fs[f].normal);
        if (rank(normals) == ambient_dim_ - 1)
            out.push_back(other);
    }
    return out;
}

SymmetricBody::SymmetricBody(Polytope body) : body_(std::move(body))
{
    if (!body_.full_dimensional())
        throw Error(ErrorKind::DimensionDeficient, "symmetric body must be full-dimensional");
    const auto& vs = body_.vertices();
    for (const auto& v : vs)
        if (!std::binary_search(vs.begin(), vs.end(), negate(v),
                                [](const RatVec& a, const RatVec& b) { return lex_less(a, b); }))
            throw Error(ErrorKind::NotSymmetric, "vertex set is not closed under negation");
}

SymmetricBody SymmetricBody::symmetric_hull(std::span<const RatVec> points, int d)
{
    std::vector<RatVec> all(points.begin(), points.end());
    for (const auto& p : points)
        all.push_back(negate(p));
    return SymmetricBody(Polytope::hull(all, d));
}

Polytope convex_hull(std::span<const RatVec> points, int d)
{
    return Polytope::hull(points, d);
}

const std::vector<Facet>& facets(const Polytope& p)
{
    return p.facets();
}

PointLocation locate(const Polytope& p, const RatVec& x)
{
    if (static_cast<int>(x.size()) != p.ambient_dim())
        throw Error(ErrorKind::DimensionMismatch, "point length differs from polytope dimension");
    bool boundary = false;
    for (const auto& f : p.facets()) {
        const int c = cmp(dot(f.normal, x), f.offset);
        if (c > 0)
            return PointLocation::Outside;
        if (c == 0)
            boundary = true;
    }
    return boundary ? PointLocation::Boundary : PointLocation::Interior;
}

namespace {

void integer_bounding_box(const Polytope& p, IntVec& lo, IntVec& hi)
{
    const int d = p.ambient_dim();
    lo.assign(d, Int(0));
    hi.assign(d, Int(0));
    for (int c = 0; c < d; ++c) {
        Rat mn = p.vertices().front()[c], mx = mn;
        for (const auto& v : p.vertices()) {
            if (v[c] < mn)
                mn = v[c];
            if (v[c] > mx)
                mx = v[c];
        }
        lo[c] = ceil_rat(mn);
        hi[c] = floor_rat(mx);
    }
}

bool in_lower_dimensional_hull(const Polytope& p, const IntVec& x)
{
    std::vector<RatVec> pts = p.vertices();
    pts.push_back(to_rat(x));
    const Polytope extended = Polytope::hull(pts, p.ambient_dim());
    return extended.vertices() == p.vertices();
}

} // namespace

std::vector<IntVec> lattice_points(const Polytope& p, LatticeMode mode, Execution exec)
{
    IntVec lo, hi;
    integer_bounding_box(p, lo, hi);
    if (!p.full_dimensional()) {
        if (mode == LatticeMode::InteriorOnly)
            throw Error(ErrorKind::DimensionDeficient, "interior lattice points need a full-dimensional polytope");
        std::vector<IntVec> candidates = scan_box(lo, hi, IntHalfspaces{}, exec);
        std::vector<IntVec> out;
        for (auto& c : candidates)
            if (in_lower_dimensional_hull(p, c))
                out.push_back(std::move(c));
        return out;
    }
    IntHalfspaces system;
    for (const auto& f : p.facets()) {
        system.normals.push_back(f.normal);
        // <n, x> is an integer, so <= b means <= floor(b) and < b means <= ceil(b) - 1.
        system.bounds.push_back(mode == LatticeMode::All ? floor_rat(f.offset) : Int(ceil_rat(f.offset) - 1));
    }
    return scan_box(lo, hi, system, exec);
}

namespace {

void triangulate_face(const Polytope& p, const std::vector<std::size_t>& face, int k,
                      std::vector<std::vector<std::size_t>>& out)
{
    if (k == 0) {
        out.push_back({face.front()});
        return;
    }
    const std::size_t apex = face.front();
    std::set<std::vector<std::size_t>> seen;
    for (const auto& on : p.facet_vertices()) {
        std::vector<std::size_t> sub_face;
        std::set_intersection(face.begin(), face.end(), on.begin(), on.end(), std::back_inserter(sub_face));
        if (sub_face.empty() || std::binary_search(sub_face.begin(), sub_face.end(), apex))
            continue;
        if (affine_rank(p.vertices(), sub_face) != k - 1 || !seen.insert(sub_face).second)
            continue;
        std::vector<std::vector<std::size_t>> part;
        triangulate_face(p, sub_face, k - 1, part);
        for (auto& s : part) {
            s.insert(s.begin(), apex);
            out.push_back(std::move(s));
        }
    }
}

} // namespace

std::vector<std::vector<std::size_t>> triangulate(const Polytope& p)
{
    if (!p.full_dimensional())
        throw Error(ErrorKind::DimensionDeficient, "triangulation needs a full-dimensional polytope");
    std::vector<std::size_t> all(p.vertices().size());
    for (std::size_t i = 0; i < all.size(); ++i)
        all[i] = i;
    std::vector<std::vector<std::size_t>> out;
    triangulate_face(p, all, p.ambient_dim(), out);
    return out;
}

Rat volume(const Polytope& p)
{
    if (!p.full_dimensional())
        return 0;
    const int d = p.ambient_dim();
    const auto& vs = p.vertices();
    Rat total = 0;
    for (const auto& simplex : triangulate(p)) {
        std::vector<RatVec> rows;
        for (int i = 1; i <= d; ++i)
            rows.push_back(sub(vs[simplex[i]], vs[simplex[0]]));
        total += abs(determinant(rows));
    }
    return total / Rat(factorial(static_cast<unsigned>(d)));
}

SymmetricBody difference_body(const Polytope& p)
{
    if (!p.full_dimensional())
        throw Error(ErrorKind::DimensionDeficient, "difference body needs a full-dimensional polytope");
    std::vector<RatVec> diffs;
    const auto& vs = p.vertices();
    diffs.reserve(vs.size() * vs.size());
    for (const auto& a : vs)
        for (const auto& b : vs)
            diffs.push_back(sub(a, b));
    return SymmetricBody(Polytope::hull(diffs, p.ambient_dim()));
}

SymmetricBody polar(const SymmetricBody& k)
{
    // The vertices of the polar are the facets of K scaled to offset 1.
    std::vector<RatVec> pts;
    for (const auto& f : k.body().facets())
        pts.push_back(scale(to_rat(f.normal), Rat(1) / f.offset));
    return SymmetricBody(Polytope::hull(pts, k.dim()));
}

Polytope affine_image(const Polytope& p, std::span<const IntVec> rows, const RatVec& shift)
{
    std::vector<RatVec> pts;
    for (const auto& v : p.vertices()) {
        RatVec w(rows.size());
        for (std::size_t i = 0; i < rows.size(); ++i)
            w[i] = dot(rows[i], v) + shift[i];
        pts.push_back(std::move(w));
    }
    return Polytope::hull(pts, static_cast<int>(rows.size()));
}

Polytope scaled(const Polytope& p, const Rat& factor)
{
    std::vector<RatVec> pts;
    for (const auto& v : p.vertices())
        pts.push_back(scale(v, factor));
    return Polytope::hull(pts, p.ambient_dim());
}

} // namespace latmin
