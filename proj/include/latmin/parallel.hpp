#pragma once

// Data-parallel kernels. Each kernel has a serial reference path and an
// OpenMP path; both return identical results (output order is fixed by the
// iteration space, never by scheduling).

#include "latmin/arith.hpp"

#include <cstddef>
#include <functional>
#include <vector>

namespace latmin {

enum class Execution { Serial, Parallel };

/// Parallel when built with OpenMP, serial otherwise.
Execution default_execution();

int max_threads();

/// Integer points x satisfying <normals[j], x> <= bounds[j] for every j.
struct IntHalfspaces {
    std::vector<IntVec> normals;
    IntVec bounds;
};

/// All integer points of the box [lo, hi] that satisfy `system`, in
/// lexicographic order. Uses 64-bit arithmetic when every partial sum
/// provably fits, arbitrary precision otherwise.
std::vector<IntVec> scan_box(const IntVec& lo, const IntVec& hi, const IntHalfspaces& system,
                             Execution exec);

inline std::vector<IntVec> scan_box_serial(const IntVec& lo, const IntVec& hi, const IntHalfspaces& system)
{
    return scan_box(lo, hi, system, Execution::Serial);
}

/// Number of integer points in the box (0 when some lo > hi).
Int box_size(const IntVec& lo, const IntVec& hi);

/// Calls fn(i) for i in [0, n). Under Parallel, iterations run on OpenMP
/// threads with dynamic scheduling; fn must only write to slot i of any
/// shared output.
void for_each_index(std::size_t n, const std::function<void(std::size_t)>& fn, Execution exec);

} // namespace latmin
