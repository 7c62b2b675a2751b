#pragma once

// Seeded verification suites. Instance i of a suite is generated from
// (seed, i) alone:
//
//   stream seed = splitmix64(splitmix64(seed) + i)
//   engine      = std::mt19937_64(stream seed)
//   uniform(lo, hi) draws x from the engine, rejecting x >= 2^64 - (2^64 mod n)
//   with n = hi - lo + 1, and returns lo + x mod n.
//
// so any implementation of those two generators reproduces the corpus.

#include "latmin/json_io.hpp"
#include "latmin/parallel.hpp"
#include "latmin/polytope.hpp"

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

namespace latmin {

enum class SuiteKind { Minkowski, Transference, Sharp2d, Flatness, M2m, Postulation };

SuiteKind parse_suite(const std::string& name);
std::string_view to_string(SuiteKind kind);

struct SuiteConfig {
    SuiteKind suite = SuiteKind::Minkowski;
    std::uint64_t seed = 0;
    std::size_t count = 100;
    int dim = 2;
    long coord_bound = 4;
};

std::uint64_t splitmix64(std::uint64_t x);

class InstanceRng {
public:
    InstanceRng(std::uint64_t seed, std::uint64_t index);

    /// Uniform integer in [lo, hi].
    long uniform(long lo, long hi);

private:
    std::mt19937_64 engine_;
};

/// Full-dimensional lattice polytope with d+1..2d+2 random vertices in
/// [-B, B]^d, resampled until full-dimensional. Throws GenerationFailed
/// after 1000 attempts.
Polytope generate_polytope(const SuiteConfig& cfg, std::uint64_t index);

/// Symmetric hull of d..2d random lattice points in [-B, B]^d.
SymmetricBody generate_symmetric(const SuiteConfig& cfg, std::uint64_t index);

/// Random box parameters t_i = a/b with b in [1, 4] and a in [0, B b].
std::vector<Rat> generate_box_parameters(const SuiteConfig& cfg, std::uint64_t index);

struct InstanceOutcome {
    bool holds = true;
    std::map<std::string, Rat> values;   // aggregated into min_/max_ entries
    std::map<std::string, long> counters; // summed
};

struct SuiteResult {
    SuiteConfig config;
    std::size_t holds = 0;
    std::size_t violated = 0;
    std::vector<std::size_t> violations;
    std::map<std::string, Rat> minima;
    std::map<std::string, Rat> maxima;
    std::map<std::string, long> counters;
};

/// Evaluates one instance of a suite.
InstanceOutcome run_instance(const SuiteConfig& cfg, std::uint64_t index);

/// Runs every instance (in parallel under Execution::Parallel) and folds the
/// outcomes in index order, so the result does not depend on scheduling.
SuiteResult run_suite(const SuiteConfig& cfg, Execution exec = default_execution());

Json suite_to_json(const SuiteResult& r);

} // namespace latmin
