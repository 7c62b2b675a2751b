#include "latmin/parallel.hpp"

#include "latmin/error.hpp"

#include <cstdint>
#include <exception>
#include <mutex>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace latmin {

Execution default_execution()
{
#ifdef _OPENMP
    return Execution::Parallel;
#else
    return Execution::Serial;
#endif
}

int max_threads()
{
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

Int box_size(const IntVec& lo, const IntVec& hi)
{
    Int n = 1;
    for (std::size_t i = 0; i < lo.size(); ++i) {
        if (hi[i] < lo[i])
            return 0;
        n *= hi[i] - lo[i] + 1;
    }
    return n;
}

namespace {

constexpr std::int64_t kSafe = std::int64_t{1} << 62;

bool fits_fast_path(const IntVec& lo, const IntVec& hi, const IntHalfspaces& system)
{
    Int reach = 0;
    for (std::size_t i = 0; i < lo.size(); ++i) {
        const Int m = abs(lo[i]) > abs(hi[i]) ? Int(abs(lo[i])) : Int(abs(hi[i]));
        reach = reach > m ? reach : m;
    }
    for (std::size_t j = 0; j < system.normals.size(); ++j) {
        Int total = 0;
        for (const auto& a : system.normals[j])
            total += abs(a) * reach;
        if (total >= kSafe || abs(system.bounds[j]) >= kSafe)
            return false;
    }
    return reach < kSafe;
}

// Points with first coordinate fixed to x0, in lexicographic order.
template <typename Scalar, typename Check>
void scan_slab(const std::vector<Scalar>& lo, const std::vector<Scalar>& hi, Scalar x0, Check&& accept,
               std::vector<std::vector<Scalar>>& out)
{
    const std::size_t d = lo.size();
    std::vector<Scalar> x(lo);
    x[0] = x0;
    for (std::size_t i = 1; i < d; ++i)
        if (hi[i] < lo[i])
            return;
    while (true) {
        if (accept(x))
            out.push_back(x);
        std::size_t k = d;
        while (k > 1) {
            --k;
            if (x[k] < hi[k]) {
                ++x[k];
                break;
            }
            x[k] = lo[k];
            if (k == 1)
                return;
        }
        if (d == 1)
            return;
    }
}

std::vector<IntVec> scan_fast(const IntVec& lo_in, const IntVec& hi_in, const IntHalfspaces& system,
                              Execution exec)
{
    using I = std::int64_t;
    const std::size_t d = lo_in.size();
    std::vector<I> lo(d), hi(d);
    for (std::size_t i = 0; i < d; ++i) {
        lo[i] = lo_in[i].get_si();
        hi[i] = hi_in[i].get_si();
    }
    const std::size_t m = system.normals.size();
    std::vector<I> normals(m * d), bounds(m);
    for (std::size_t j = 0; j < m; ++j) {
        for (std::size_t i = 0; i < d; ++i)
            normals[j * d + i] = system.normals[j][i].get_si();
        bounds[j] = system.bounds[j].get_si();
    }
    auto accept = [&](const std::vector<I>& x) {
        for (std::size_t j = 0; j < m; ++j) {
            I s = 0;
            for (std::size_t i = 0; i < d; ++i)
                s += normals[j * d + i] * x[i];
            if (s > bounds[j])
                return false;
        }
        return true;
    };

    const std::size_t slabs = static_cast<std::size_t>(hi[0] - lo[0] + 1);
    std::vector<std::vector<std::vector<I>>> per_slab(slabs);
    for_each_index(
        slabs, [&](std::size_t s) { scan_slab<I>(lo, hi, lo[0] + static_cast<I>(s), accept, per_slab[s]); },
        exec);

    std::vector<IntVec> out;
    for (const auto& slab : per_slab)
        for (const auto& p : slab) {
            IntVec v(d);
            for (std::size_t i = 0; i < d; ++i)
                v[i] = static_cast<long>(p[i]);
            out.push_back(std::move(v));
        }
    return out;
}

std::vector<IntVec> scan_exact(const IntVec& lo, const IntVec& hi, const IntHalfspaces& system, Execution exec)
{
    auto accept = [&](const IntVec& x) {
        for (std::size_t j = 0; j < system.normals.size(); ++j)
            if (dot(system.normals[j], x) > system.bounds[j])
                return false;
        return true;
    };
    const Int span = hi[0] - lo[0] + 1;
    const std::size_t slabs = span.get_ui();
    std::vector<std::vector<IntVec>> per_slab(slabs);
    for_each_index(
        slabs, [&](std::size_t s) { scan_slab<Int>(lo, hi, Int(lo[0] + static_cast<unsigned long>(s)), accept, per_slab[s]); },
        exec);
    std::vector<IntVec> out;
    for (auto& slab : per_slab)
        for (auto& p : slab)
            out.push_back(std::move(p));
    return out;
}

} // namespace

std::vector<IntVec> scan_box(const IntVec& lo, const IntVec& hi, const IntHalfspaces& system, Execution exec)
{
    if (lo.size() != hi.size() || lo.empty())
        throw Error(ErrorKind::DimensionMismatch, "scan_box: bad box");
    for (const auto& n : system.normals)
        if (n.size() != lo.size())
            throw Error(ErrorKind::DimensionMismatch, "scan_box: normal length differs from box dimension");
    if (box_size(lo, hi) == 0)
        return {};
    if (fits_fast_path(lo, hi, system))
        return scan_fast(lo, hi, system, exec);
    return scan_exact(lo, hi, system, exec);
}

void for_each_index(std::size_t n, const std::function<void(std::size_t)>& fn, Execution exec)
{
#ifdef _OPENMP
    if (exec == Execution::Parallel && n > 1 && !omp_in_parallel()) {
        std::exception_ptr failure;
        std::mutex guard;
        const auto count = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(dynamic)
        for (std::int64_t i = 0; i < count; ++i) {
            try {
                fn(static_cast<std::size_t>(i));
            } catch (...) {
                std::lock_guard<std::mutex> lock(guard);
                if (!failure)
                    failure = std::current_exception();
            }
        }
        if (failure)
            std::rethrow_exception(failure);
        return;
    }
#endif
    (void)exec;
    for (std::size_t i = 0; i < n; ++i)
        fn(i);
}

} // namespace latmin
