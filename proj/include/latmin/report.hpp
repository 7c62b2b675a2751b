#pragma once

#include "latmin/arith.hpp"
#include "latmin/polytope.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace latmin {

enum class Relation { LessEqual, GreaterEqual, Equal };

enum class Verdict { Holds, Violated };

/// One exact comparison `lhs relation rhs`. A check whose hypothesis fails
/// is not applicable; one whose right-hand side is meaningless (negative
/// before a d-th root) is vacuous. Both count as holding.
struct Check {
    std::string name;
    Rat lhs;
    Relation relation = Relation::LessEqual;
    Rat rhs;
    bool applicable = true;
    bool vacuous = false;

    bool compares() const;
    bool holds() const { return !applicable || vacuous || compares(); }
    std::string status() const;
};

Check make_check(std::string name, Rat lhs, Relation relation, Rat rhs, bool applicable = true);

struct TheoremReport {
    std::string theorem;
    std::optional<Polytope> instance;
    std::map<std::string, Rat> scalars;
    std::map<std::string, std::vector<Rat>> vectors;
    std::vector<Check> checks;
    std::map<std::string, std::vector<IntVec>> witnesses;

    /// Derived from the checks alone.
    Verdict verdict() const;
    bool holds() const { return verdict() == Verdict::Holds; }
};

std::string_view to_string(Verdict v);
std::string_view to_string(Relation r);

} // namespace latmin
