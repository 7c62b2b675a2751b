#pragma once

#include "latmin/arith.hpp"
#include "latmin/parallel.hpp"

#include <span>
#include <vector>

namespace latmin {

/// Halfspace { x : <normal, x> <= offset } with a primitive integer outward normal.
struct Facet {
    IntVec normal;
    Rat offset;

    bool operator==(const Facet&) const = default;
};

enum class PointLocation { Interior, Boundary, Outside };

enum class LatticeMode { All, InteriorOnly };

/// Convex hull of finitely many rational points. Immutable; the vertex list
/// holds exactly the extreme points in lexicographic order. Full-dimensional
/// polytopes also carry their facets and the vertex-facet incidence.
class Polytope {
public:
    /// Hull of `points` in dimension d. Throws DimensionMismatch on an empty
    /// set or a point of the wrong length.
    static Polytope hull(std::span<const RatVec> points, int d);
    static Polytope hull(std::span<const IntVec> points, int d);

    int ambient_dim() const { return ambient_dim_; }
    int affine_dim() const { return affine_dim_; }
    bool full_dimensional() const { return affine_dim_ == ambient_dim_; }

    const std::vector<RatVec>& vertices() const { return vertices_; }

    /// Sorted facets. Throws DimensionDeficient unless full-dimensional.
    const std::vector<Facet>& facets() const;

    /// For each facet, the sorted indices of the vertices lying on it.
    const std::vector<std::vector<std::size_t>>& facet_vertices() const;

    /// Indices of the vertices joined to vertex `index` by an edge.
    std::vector<std::size_t> neighbors(std::size_t index) const;

    bool operator==(const Polytope& other) const
    {
        return ambient_dim_ == other.ambient_dim_ && vertices_ == other.vertices_;
    }

private:
    Polytope() = default;

    int ambient_dim_ = 0;
    int affine_dim_ = 0;
    std::vector<RatVec> vertices_;
    std::vector<Facet> facets_;
    std::vector<std::vector<std::size_t>> incidence_;
};

/// Full-dimensional polytope whose vertex set is closed under negation, so
/// the origin is an interior point.
class SymmetricBody {
public:
    /// Throws NotSymmetric or DimensionDeficient when the invariants fail.
    explicit SymmetricBody(Polytope body);

    /// Hull of the points together with their negatives.
    static SymmetricBody symmetric_hull(std::span<const RatVec> points, int d);

    const Polytope& body() const { return body_; }
    int dim() const { return body_.ambient_dim(); }

    bool operator==(const SymmetricBody& other) const { return body_ == other.body_; }

private:
    Polytope body_;
};

Polytope convex_hull(std::span<const RatVec> points, int d);

/// Throws DimensionDeficient unless P is full-dimensional.
const std::vector<Facet>& facets(const Polytope& p);

/// Throws DimensionDeficient / DimensionMismatch.
PointLocation locate(const Polytope& p, const RatVec& x);

/// Lattice points in lexicographic order. InteriorOnly requires a
/// full-dimensional polytope.
std::vector<IntVec> lattice_points(const Polytope& p, LatticeMode mode, Execution exec = default_execution());

/// Lattice-normalized volume (unit cube = 1); 0 for lower-dimensional P.
Rat volume(const Polytope& p);

/// Simplices (as vertex index lists) of a triangulation of a full-dimensional P.
std::vector<std::vector<std::size_t>> triangulate(const Polytope& p);

/// P - P. Throws DimensionDeficient.
SymmetricBody difference_body(const Polytope& p);

/// { x : <x, v> <= 1 for every vertex v of K }.
SymmetricBody polar(const SymmetricBody& k);

/// Image of P under x -> A x + t for an integer matrix A (rows) and rational t.
Polytope affine_image(const Polytope& p, std::span<const IntVec> rows, const RatVec& shift);

Polytope scaled(const Polytope& p, const Rat& factor);

} // namespace latmin
