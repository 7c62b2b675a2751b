#pragma once

#include "latmin/arith.hpp"
#include "latmin/gon.hpp"
#include "latmin/polytope.hpp"
#include "latmin/report.hpp"

#include <variant>
#include <vector>

namespace latmin {

/// Full-dimensional lattice polytope, read as the moment polytope of an
/// invariant divisor on a toric variety.
class MomentPolytope {
public:
    /// Throws DimensionDeficient, or DimensionMismatch on a non-integral vertex.
    explicit MomentPolytope(Polytope polytope);

    const Polytope& polytope() const { return polytope_; }
    int dim() const { return polytope_.ambient_dim(); }

private:
    Polytope polytope_;
};

/// Tangent cone of the moment polytope at a vertex u.
struct VertexCone {
    IntVec vertex;
    std::vector<IntVec> edge_generators; // primitive edge directions, ordered by neighbouring vertex
    bool simple = false;                 // exactly d edges
    bool smooth = false;                 // simple and |det| = 1
};

/// Throws NotAVertex when u is not a vertex.
VertexCone vertex_cone(const MomentPolytope& mp, const IntVec& u);

enum class EpsProvenance { InvariantPoint, FamilyFormula };

struct ExactEps {
    Rat value;
    EpsProvenance provenance = EpsProvenance::InvariantPoint;
};

struct BracketEps {
    Rat lo;
    Rat hi;
};

using EpsEntry = std::variant<ExactEps, BracketEps>;

struct EpsProfile {
    std::vector<EpsEntry> entries; // index i-1 holds eps_i

    bool all_exact() const;
    bool all_bracket() const;
    std::vector<Rat> exact_values() const;
};

/// eps_i at the invariant point of a smooth vertex: the minimum, over
/// coordinate faces of codimension i-1 of the vertex cone, of the largest
/// simplex-coordinate sum reached by the polytope on that face.
/// Throws SingularVertex or NotAmplePolytope.
EpsProfile eps_at_invariant_point(const MomentPolytope& mp, const IntVec& u);

/// Rigorous brackets at a very general point from the minima of P - P and
/// its polar: lo_i = max(1/lambda_i [, w/d for i = d]), hi_i = (d-i+1) lambda*_{d-i+1}.
EpsProfile eps_bracket_general(const MomentPolytope& mp, Execution exec = default_execution());

struct ProjectiveSpace {
    int d = 1;
    Int w = 1;
};

struct ProductOfP1 {
    std::vector<Int> weights;
};

using ToricFamily = std::variant<ProjectiveSpace, ProductOfP1>;

struct FamilyEps {
    EpsProfile eps;
    MomentPolytope polytope;
};

/// Closed-form eps for P^d with O(w) and (P^1)^d with O(w_1, ..., w_d).
/// Throws InvalidWeights on nonpositive parameters.
FamilyEps exact_eps_family(const ToricFamily& family);

/// d! * vol_M(P).
Rat toric_volume(const MomentPolytope& mp);

/// Exact mode: 1 <= vol / prod eps <= d!. Bracket mode: prod lo <= vol <= d! prod hi.
/// Throws MixedProfile.
TheoremReport verify_m2m(const MomentPolytope& mp, const EpsProfile& eps);

/// w/d <= lo_d <= hi_d <= w for the bracket of eps_d.
TheoremReport verify_width_sandwich(const MomentPolytope& mp, const EpsProfile& bracket,
                                    Execution exec = default_execution());

std::string_view to_string(EpsProvenance p);

} // namespace latmin
