#include "support.hpp"

#include "latmin/parallel.hpp"

#include <gtest/gtest.h>

#include <atomic>
#include <stdexcept>

using namespace latmin;
using namespace latmin::test;

namespace {

std::vector<IntVec> brute(const IntVec& lo, const IntVec& hi, const IntHalfspaces& sys)
{
    const int d = static_cast<int>(lo.size());
    std::vector<IntVec> out;
    IntVec x = lo;
    for (;;) {
        bool ok = true;
        for (std::size_t j = 0; j < sys.normals.size() && ok; ++j) {
            Int s = 0;
            for (int c = 0; c < d; ++c)
                s += sys.normals[j][c] * x[c];
            ok = s <= sys.bounds[j];
        }
        if (ok)
            out.push_back(x);
        int c = d - 1;
        while (c >= 0 && x[c] == hi[c]) {
            x[c] = lo[c];
            --c;
        }
        if (c < 0)
            break;
        x[c] += 1;
    }
    return out;
}

IntHalfspaces random_system(Rng& rng, int d, long coef, long bound)
{
    IntHalfspaces sys;
    const int m = static_cast<int>(draw(rng, 0, 6));
    for (int j = 0; j < m; ++j) {
        IntVec n;
        for (int c = 0; c < d; ++c)
            n.emplace_back(draw(rng, -coef, coef));
        sys.normals.push_back(n);
        sys.bounds.emplace_back(draw(rng, -bound, bound));
    }
    return sys;
}

} // namespace

TEST(ScanBox, SerialMatchesParallelAndBruteForce)
{
    Rng rng(41);
    for (int trial = 0; trial < 150; ++trial) {
        const int d = static_cast<int>(draw(rng, 1, 4));
        IntVec lo, hi;
        for (int c = 0; c < d; ++c) {
            const long a = draw(rng, -6, 3);
            lo.emplace_back(a);
            hi.emplace_back(a + draw(rng, 0, 7));
        }
        auto sys = random_system(rng, d, 5, 20);
        const auto serial = scan_box(lo, hi, sys, Execution::Serial);
        EXPECT_EQ(serial, scan_box(lo, hi, sys, Execution::Parallel));
        EXPECT_EQ(serial, brute(lo, hi, sys));
    }
}

TEST(ScanBox, ArbitraryPrecisionPath)
{
    // Coefficients near 2^62 force the exact path.
    const Int big("4611686018427387904");
    IntHalfspaces sys;
    sys.normals = {IntVec{big, Int(1)}, IntVec{-big, Int(0)}};
    sys.bounds = {big * 2 + 1, Int(0)};
    const IntVec lo{Int(-3), Int(-3)}, hi{Int(3), Int(3)};
    const auto got = scan_box(lo, hi, sys, Execution::Parallel);
    EXPECT_EQ(got, brute(lo, hi, sys));
    EXPECT_EQ(got, scan_box_serial(lo, hi, sys));
    // x in {0, 1, 2}; x = 2 needs y <= 1
    EXPECT_EQ(got.size(), 7u + 7u + 5u);
}

TEST(ScanBox, HugeBoxCoordinates)
{
    const Int far("100000000000000000000");
    const IntVec lo{far, Int(0)}, hi{far + 2, Int(1)};
    IntHalfspaces none;
    const auto got = scan_box(lo, hi, none, Execution::Parallel);
    ASSERT_EQ(got.size(), 6u);
    EXPECT_EQ(got.front(), (IntVec{far, Int(0)}));
    EXPECT_EQ(got.back(), (IntVec{far + 2, Int(1)}));
}

TEST(ScanBox, EmptyBox)
{
    const IntVec lo{Int(2), Int(0)}, hi{Int(1), Int(5)};
    EXPECT_TRUE(scan_box(lo, hi, {}, Execution::Parallel).empty());
    EXPECT_EQ(box_size(lo, hi), 0);
    EXPECT_EQ(box_size(IntVec{Int(-1), Int(0)}, IntVec{Int(1), Int(3)}), 12);
}

TEST(ForEachIndex, VisitsEveryIndexOnce)
{
    for (auto exec : {Execution::Serial, Execution::Parallel}) {
        std::vector<int> hits(1000, 0);
        for_each_index(hits.size(), [&](std::size_t i) { hits[i] += 1; }, exec);
        for (int h : hits)
            EXPECT_EQ(h, 1);
    }
}

TEST(ForEachIndex, PropagatesExceptions)
{
    for (auto exec : {Execution::Serial, Execution::Parallel}) {
        EXPECT_THROW(for_each_index(
                         64,
                         [](std::size_t i) {
                             if (i == 17)
                                 throw std::runtime_error("boom");
                         },
                         exec),
                     std::runtime_error);
    }
}

TEST(ForEachIndex, NestedCallsComplete)
{
    std::vector<std::size_t> sums(16, 0);
    for_each_index(
        sums.size(),
        [&](std::size_t i) {
            std::vector<std::size_t> inner(50, 0);
            for_each_index(inner.size(), [&](std::size_t j) { inner[j] = i * j; }, Execution::Parallel);
            for (auto v : inner)
                sums[i] += v;
        },
        Execution::Parallel);
    for (std::size_t i = 0; i < sums.size(); ++i)
        EXPECT_EQ(sums[i], i * 49 * 50 / 2);
}
