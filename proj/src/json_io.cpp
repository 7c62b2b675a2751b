#include "latmin/json_io.hpp"

#include "latmin/error.hpp"

namespace latmin {

Json rat_to_json(const Rat& r)
{
    return format_rat(r);
}

Rat rat_from_json(const Json& j)
{
    if (j.is_string())
        return parse_rat(j.get<std::string>());
    if (j.is_number_integer())
        return Rat(Int(std::to_string(j.get<long long>())));
    throw Error(ErrorKind::ParseError, "expected a rational string or an integer, got " + j.dump());
}

Json int_to_json(const Int& v)
{
    if (fits_i64(v))
        return static_cast<std::int64_t>(v.get_si());
    return v.get_str();
}

Json intvec_to_json(const IntVec& v)
{
    Json a = Json::array();
    for (const auto& x : v)
        a.push_back(int_to_json(x));
    return a;
}

Json ratvec_to_json(const RatVec& v)
{
    Json a = Json::array();
    for (const auto& x : v)
        a.push_back(rat_to_json(x));
    return a;
}

IntVec intvec_from_json(const Json& j)
{
    if (!j.is_array())
        throw Error(ErrorKind::ParseError, "expected an array of integers");
    IntVec v;
    for (const auto& x : j) {
        const Rat r = rat_from_json(x);
        if (r.get_den() != 1)
            throw Error(ErrorKind::ParseError, "expected an integer, got " + x.dump());
        v.push_back(r.get_num());
    }
    return v;
}

Json polytope_to_json(const Polytope& p)
{
    Json verts = Json::array();
    for (const auto& v : p.vertices())
        verts.push_back(ratvec_to_json(v));
    return Json{{"dim", p.ambient_dim()}, {"vertices", verts}};
}

Polytope polytope_from_json(const Json& j)
{
    if (!j.is_object() || !j.contains("dim") || !j.contains("vertices"))
        throw Error(ErrorKind::ParseError, "polytope needs \"dim\" and \"vertices\"");
    if (!j["dim"].is_number_integer() || j["dim"].get<int>() <= 0)
        throw Error(ErrorKind::ParseError, "\"dim\" must be a positive integer");
    const int d = j["dim"].get<int>();
    if (!j["vertices"].is_array() || j["vertices"].empty())
        throw Error(ErrorKind::ParseError, "\"vertices\" must be a nonempty array");
    std::vector<RatVec> pts;
    for (const auto& row : j["vertices"]) {
        if (!row.is_array())
            throw Error(ErrorKind::ParseError, "each vertex must be an array");
        RatVec v;
        for (const auto& x : row)
            v.push_back(rat_from_json(x));
        pts.push_back(std::move(v));
    }
    return Polytope::hull(pts, d);
}

Json minima_to_json(const SuccessiveMinima& m)
{
    Json w = Json::array();
    for (const auto& v : m.witnesses)
        w.push_back(intvec_to_json(v));
    return Json{{"lambda", ratvec_to_json(m.lambdas)}, {"witnesses", w}};
}

Json width_to_json(const WidthResult& w)
{
    return Json{{"width", rat_to_json(w.width)}, {"witness", intvec_to_json(w.witness)}};
}

Json report_to_json(const TheoremReport& r)
{
    Json quantities = Json::object();
    for (const auto& [k, v] : r.scalars)
        quantities[k] = rat_to_json(v);
    for (const auto& [k, v] : r.vectors)
        quantities[k] = ratvec_to_json(v);

    Json checks = Json::array();
    for (const auto& c : r.checks)
        checks.push_back(Json{{"name", c.name},
                              {"lhs", rat_to_json(c.lhs)},
                              {"relation", std::string(to_string(c.relation))},
                              {"rhs", rat_to_json(c.rhs)},
                              {"status", c.status()}});

    Json witnesses = Json::object();
    for (const auto& [k, vs] : r.witnesses) {
        Json a = Json::array();
        for (const auto& v : vs)
            a.push_back(intvec_to_json(v));
        witnesses[k] = a;
    }

    Json out{{"theorem", r.theorem},
             {"verdict", std::string(to_string(r.verdict()))},
             {"quantities", quantities},
             {"checks", checks},
             {"witnesses", witnesses}};
    if (r.instance)
        out["instance"] = polytope_to_json(*r.instance);
    return out;
}

Json eps_to_json(const EpsProfile& eps)
{
    Json a = Json::array();
    for (const auto& e : eps.entries) {
        if (const auto* x = std::get_if<ExactEps>(&e))
            a.push_back(Json{{"exact", rat_to_json(x->value)}, {"provenance", std::string(to_string(x->provenance))}});
        else {
            const auto& b = std::get<BracketEps>(e);
            a.push_back(Json{{"lo", rat_to_json(b.lo)}, {"hi", rat_to_json(b.hi)}});
        }
    }
    return Json{{"eps", a}};
}

BoxSpec box_from_json(const Json& j)
{
    if (!j.is_object() || !j.contains("t") || !j["t"].is_array())
        throw Error(ErrorKind::ParseError, "box needs a \"t\" array");
    BoxSpec box;
    for (const auto& x : j["t"])
        box.t.push_back(rat_from_json(x));
    return box;
}

FlagSpec flag_from_json(const Json& j)
{
    if (!j.is_object() || !j.contains("d") || !j.contains("p") || !j.contains("q"))
        throw Error(ErrorKind::ParseError, "flag needs \"d\", \"p\" and \"q\"");
    if (!j["d"].is_number_integer() || !j["q"].is_number_integer() || !j["p"].is_array())
        throw Error(ErrorKind::ParseError, "flag fields have the wrong types");
    FlagSpec f;
    f.d = j["d"].get<int>();
    f.q = j["q"].get<long>();
    for (const auto& x : j["p"]) {
        if (!x.is_number_integer())
            throw Error(ErrorKind::ParseError, "multiplicities must be integers");
        f.p.push_back(x.get<long>());
    }
    if (f.q < 0)
        throw Error(ErrorKind::NegativeParameter, "degree must be nonnegative");
    return f;
}

Json parse_json(const std::string& text)
{
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw Error(ErrorKind::ParseError, e.what());
    }
}

} // namespace latmin
