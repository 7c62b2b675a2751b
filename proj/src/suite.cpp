#include "latmin/suite.hpp"

#include "latmin/error.hpp"
#include "latmin/gon.hpp"
#include "latmin/postulation.hpp"
#include "latmin/toric.hpp"

#include <algorithm>

namespace latmin {

namespace {

constexpr int kMaxAttempts = 1000;

} // namespace

SuiteKind parse_suite(const std::string& name)
{
    if (name == "minkowski")
        return SuiteKind::Minkowski;
    if (name == "transference")
        return SuiteKind::Transference;
    if (name == "sharp2d")
        return SuiteKind::Sharp2d;
    if (name == "flatness")
        return SuiteKind::Flatness;
    if (name == "m2m")
        return SuiteKind::M2m;
    if (name == "postulation")
        return SuiteKind::Postulation;
    throw Error(ErrorKind::Usage, "unknown suite '" + name + "'");
}

std::string_view to_string(SuiteKind kind)
{
    switch (kind) {
    case SuiteKind::Minkowski: return "minkowski";
    case SuiteKind::Transference: return "transference";
    case SuiteKind::Sharp2d: return "sharp2d";
    case SuiteKind::Flatness: return "flatness";
    case SuiteKind::M2m: return "m2m";
    case SuiteKind::Postulation: return "postulation";
    }
    return "unknown";
}

std::uint64_t splitmix64(std::uint64_t x)
{
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

InstanceRng::InstanceRng(std::uint64_t seed, std::uint64_t index) : engine_(splitmix64(splitmix64(seed) + index)) {}

long InstanceRng::uniform(long lo, long hi)
{
    const std::uint64_t n = static_cast<std::uint64_t>(hi - lo) + 1;
    // 2^64 mod n, computed without 128-bit arithmetic.
    const std::uint64_t excess = (0 - n) % n;
    std::uint64_t x;
    do {
        x = engine_();
    } while (excess != 0 && x >= 0 - excess);
    return lo + static_cast<long>(x % n);
}

namespace {

RatVec random_point(InstanceRng& rng, int d, long bound)
{
    RatVec p;
    for (int c = 0; c < d; ++c)
        p.emplace_back(rng.uniform(-bound, bound));
    return p;
}

} // namespace

Polytope generate_polytope(const SuiteConfig& cfg, std::uint64_t index)
{
    InstanceRng rng(cfg.seed, index);
    const int d = cfg.dim;
    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
        const long n = d + 1 + rng.uniform(0, d + 1);
        std::vector<RatVec> pts;
        for (long i = 0; i < n; ++i)
            pts.push_back(random_point(rng, d, cfg.coord_bound));
        Polytope p = Polytope::hull(pts, d);
        if (p.full_dimensional())
            return p;
    }
    throw Error(ErrorKind::GenerationFailed, "no full-dimensional instance after retry cap");
}

SymmetricBody generate_symmetric(const SuiteConfig& cfg, std::uint64_t index)
{
    InstanceRng rng(cfg.seed, index);
    const int d = cfg.dim;
    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
        const long n = rng.uniform(d, 2 * d);
        std::vector<RatVec> pts;
        for (long i = 0; i < n; ++i) {
            RatVec p = random_point(rng, d, cfg.coord_bound);
            pts.push_back(negate(p));
            pts.push_back(std::move(p));
        }
        Polytope p = Polytope::hull(pts, d);
        if (p.full_dimensional())
            return SymmetricBody(std::move(p));
    }
    throw Error(ErrorKind::GenerationFailed, "no full-dimensional instance after retry cap");
}

std::vector<Rat> generate_box_parameters(const SuiteConfig& cfg, std::uint64_t index)
{
    InstanceRng rng(cfg.seed, index);
    std::vector<Rat> t;
    for (int i = 0; i < cfg.dim; ++i) {
        const long den = rng.uniform(1, 4);
        const long num = rng.uniform(0, cfg.coord_bound * den);
        Rat r(num, den);
        r.canonicalize();
        t.push_back(r);
    }
    return t;
}

namespace {

void fold(InstanceOutcome& out, const TheoremReport& r)
{
    out.holds = out.holds && r.holds();
}

InstanceOutcome minkowski_instance(const SuiteConfig& cfg, std::uint64_t index)
{
    const TheoremReport r = verify_minkowski_second(generate_polytope(cfg, index), Execution::Serial);
    InstanceOutcome out;
    fold(out, r);
    out.values["product"] = r.scalars.at("product");
    return out;
}

InstanceOutcome transference_instance(const SuiteConfig& cfg, std::uint64_t index)
{
    const TheoremReport r =
        verify_transference(difference_body(generate_polytope(cfg, index)), Execution::Serial);
    InstanceOutcome out;
    fold(out, r);
    const auto& products = r.vectors.at("products");
    out.values["product"] = *std::min_element(products.begin(), products.end());
    out.values["product_high"] = *std::max_element(products.begin(), products.end());
    return out;
}

InstanceOutcome sharp2d_instance(const SuiteConfig& cfg, std::uint64_t index)
{
    const TheoremReport r = verify_sharp_2d(generate_symmetric(cfg, index), Execution::Serial);
    InstanceOutcome out;
    fold(out, r);
    out.values["product"] = r.scalars.at("product");
    return out;
}

InstanceOutcome flatness_instance(const SuiteConfig& cfg, std::uint64_t index)
{
    const TheoremReport r = flatness_report(generate_polytope(cfg, index), Execution::Serial);
    InstanceOutcome out;
    fold(out, r);
    out.values["width"] = r.scalars.at("width");
    for (const auto& c : r.checks)
        if (c.applicable && !c.vacuous)
            ++out.counters["applicable_" + c.name];
    return out;
}

InstanceOutcome m2m_instance(const SuiteConfig& cfg, std::uint64_t index)
{
    InstanceRng rng(cfg.seed ^ 0x6D326D00ull, index);
    InstanceOutcome out;

    // Exact family: products of lines on even indices, projective space on odd.
    ToricFamily family;
    if (index % 2 == 0) {
        ProductOfP1 prod;
        for (int i = 0; i < cfg.dim; ++i)
            prod.weights.emplace_back(rng.uniform(1, cfg.coord_bound));
        family = prod;
    } else {
        family = ProjectiveSpace{cfg.dim, Int(rng.uniform(1, cfg.coord_bound))};
    }
    const FamilyEps fam = exact_eps_family(family);
    const TheoremReport exact = verify_m2m(fam.polytope, fam.eps);
    fold(out, exact);
    out.values["ratio"] = exact.scalars.at("ratio");

    // The family is homogeneous: the invariant-point value at the origin
    // must reproduce the closed form.
    const EpsProfile at_origin = eps_at_invariant_point(fam.polytope, IntVec(cfg.dim, Int(0)));
    if (at_origin.exact_values() != fam.eps.exact_values()) {
        out.holds = false;
        ++out.counters["family_mismatch"];
    }

    // Brackets on a random lattice polytope.
    const MomentPolytope mp(generate_polytope(cfg, index));
    const EpsProfile bracket = eps_bracket_general(mp, Execution::Serial);
    fold(out, verify_m2m(mp, bracket));
    fold(out, verify_width_sandwich(mp, bracket, Execution::Serial));
    return out;
}

InstanceOutcome postulation_instance(const SuiteConfig& cfg, std::uint64_t index)
{
    InstanceOutcome out;
    BoxSpec box{generate_box_parameters(cfg, index)};
    const TheoremReport bound = check_vol_bound(box);
    fold(out, bound);
    out.values["volume_ratio"] =
        sgn(bound.scalars.at("product")) == 0 ? Rat(0) : bound.scalars.at("volume") / bound.scalars.at("product");

    if (cfg.dim <= 3) {
        BoxSpec sorted = box;
        std::sort(sorted.t.begin(), sorted.t.end(), [](const Rat& a, const Rat& b) { return a > b; });
        if (*box_volume_closed_form(sorted) != box_volume_triangulated(sorted)) {
            out.holds = false;
            ++out.counters["closed_form_mismatch"];
        }
    }
    BoxSpec floored = box;
    for (auto& t : floored.t)
        t = Rat(floor_rat(t));
    if (box_count(box) != box_count(floored)) {
        out.holds = false;
        ++out.counters["floor_identity_mismatch"];
    }
    return out;
}

void validate(const SuiteConfig& cfg)
{
    if (cfg.dim < 1 || cfg.dim > 4)
        throw Error(ErrorKind::Usage, "suite dimension must be between 1 and 4");
    if (cfg.coord_bound < 1)
        throw Error(ErrorKind::Usage, "coordinate bound must be positive");
    if (cfg.count < 1)
        throw Error(ErrorKind::Usage, "instance count must be positive");
    if (cfg.suite == SuiteKind::Sharp2d && cfg.dim != 2)
        throw Error(ErrorKind::Usage, "the sharp2d suite is planar; use --dim 2");
}

} // namespace

InstanceOutcome run_instance(const SuiteConfig& cfg, std::uint64_t index)
{
    switch (cfg.suite) {
    case SuiteKind::Minkowski: return minkowski_instance(cfg, index);
    case SuiteKind::Transference: return transference_instance(cfg, index);
    case SuiteKind::Sharp2d: return sharp2d_instance(cfg, index);
    case SuiteKind::Flatness: return flatness_instance(cfg, index);
    case SuiteKind::M2m: return m2m_instance(cfg, index);
    case SuiteKind::Postulation: return postulation_instance(cfg, index);
    }
    throw Error(ErrorKind::Usage, "unknown suite");
}

SuiteResult run_suite(const SuiteConfig& cfg, Execution exec)
{
    validate(cfg);
    std::vector<InstanceOutcome> outcomes(cfg.count);
    for_each_index(cfg.count, [&](std::size_t i) { outcomes[i] = run_instance(cfg, i); }, exec);

    SuiteResult result;
    result.config = cfg;
    for (std::size_t i = 0; i < outcomes.size(); ++i) {
        const auto& o = outcomes[i];
        if (o.holds)
            ++result.holds;
        else {
            ++result.violated;
            result.violations.push_back(i);
        }
        for (const auto& [k, v] : o.values) {
            auto lo = result.minima.find(k);
            if (lo == result.minima.end() || v < lo->second)
                result.minima[k] = v;
            auto hi = result.maxima.find(k);
            if (hi == result.maxima.end() || v > hi->second)
                result.maxima[k] = v;
        }
        for (const auto& [k, v] : o.counters)
            result.counters[k] += v;
    }
    return result;
}

Json suite_to_json(const SuiteResult& r)
{
    Json out{{"suite", std::string(to_string(r.config.suite))},
             {"seed", r.config.seed},
             {"count", r.config.count},
             {"dim", r.config.dim},
             {"bound", r.config.coord_bound},
             {"holds", r.holds},
             {"violated", r.violated},
             {"violations", r.violations}};
    for (const auto& [k, v] : r.minima)
        out["min_" + k] = rat_to_json(v);
    for (const auto& [k, v] : r.maxima)
        out["max_" + k] = rat_to_json(v);
    Json counters = Json::object();
    for (const auto& [k, v] : r.counters)
        counters[k] = v;
    out["counters"] = counters;
    return out;
}

} // namespace latmin
