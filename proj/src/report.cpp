#include "latmin/report.hpp"

namespace latmin {

bool Check::compares() const
{
    switch (relation) {
    case Relation::LessEqual: return lhs <= rhs;
    case Relation::GreaterEqual: return lhs >= rhs;
    case Relation::Equal: return lhs == rhs;
    }
    return false;
}

std::string Check::status() const
{
    if (!applicable)
        return "not_applicable";
    if (vacuous)
        return "vacuous";
    return compares() ? "holds" : "violated";
}

Check make_check(std::string name, Rat lhs, Relation relation, Rat rhs, bool applicable)
{
    Check c;
    c.name = std::move(name);
    c.lhs = std::move(lhs);
    c.relation = relation;
    c.rhs = std::move(rhs);
    c.applicable = applicable;
    return c;
}

Verdict TheoremReport::verdict() const
{
    for (const auto& c : checks)
        if (!c.holds())
            return Verdict::Violated;
    return Verdict::Holds;
}

std::string_view to_string(Verdict v)
{
    return v == Verdict::Holds ? "holds" : "violated";
}

std::string_view to_string(Relation r)
{
    switch (r) {
    case Relation::LessEqual: return "<=";
    case Relation::GreaterEqual: return ">=";
    case Relation::Equal: return "==";
    }
    return "?";
}

} // namespace latmin
