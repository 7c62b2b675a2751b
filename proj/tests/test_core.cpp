#include "support.hpp"

#include "latmin/error.hpp"

#include <gtest/gtest.h>

#include <numeric>

using namespace latmin;
using namespace latmin::test;

TEST(Rational, FormatIsCanonical)
{
    EXPECT_EQ(format_rat(Rat(6, 4)), "3/2");
    EXPECT_EQ(format_rat(Rat(-6, 4)), "-3/2");
    EXPECT_EQ(format_rat(Rat(4, 2)), "2");
    EXPECT_EQ(format_rat(Rat(0)), "0");
}

TEST(Rational, ParseRoundTrip)
{
    for (const char* s : {"0", "7", "-7", "3/2", "-1/3", "12345678901234567890123/7"})
        EXPECT_EQ(format_rat(parse_rat(s)), s);
    EXPECT_EQ(parse_rat("4/6"), Rat(2, 3));
}

TEST(Rational, ParseRejectsMalformed)
{
    for (const char* s : {"", "1/0", "a", "1/", "/2", "1.5", "1/2/3", "--1", " 1"}) {
        try {
            parse_rat(s);
            ADD_FAILURE() << "accepted " << s;
        } catch (const Error& e) {
            EXPECT_EQ(e.kind(), ErrorKind::ParseError) << s;
        }
    }
}

TEST(Rational, FloorCeil)
{
    EXPECT_EQ(floor_rat(R("5/2")), 2);
    EXPECT_EQ(ceil_rat(R("5/2")), 3);
    EXPECT_EQ(floor_rat(R("-5/2")), -3);
    EXPECT_EQ(ceil_rat(R("-5/2")), -2);
    EXPECT_EQ(floor_rat(R("4")), 4);
    EXPECT_EQ(ceil_rat(R("4")), 4);
}

TEST(Rational, FactorialAndPower)
{
    EXPECT_EQ(factorial(0), 1);
    EXPECT_EQ(factorial(5), 120);
    EXPECT_EQ(pow_rat(R("2/3"), 3), R("8/27"));
    EXPECT_EQ(pow_rat(R("-1/2"), 0), 1);
}

TEST(Rational, Fits64)
{
    EXPECT_TRUE(fits_i64(Int("9223372036854775807")));
    EXPECT_FALSE(fits_i64(Int("9223372036854775808")));
    EXPECT_TRUE(fits_i64(Int("-9223372036854775808")));
}

TEST(LatticeSpan, Examples)
{
    auto span_of = [](std::vector<IntVec> v, int d) { return lattice_span(v, d); };
    auto a = span_of({iv({1, 0}), iv({0, 1})}, 2);
    EXPECT_EQ(a.rank_over_q, 2);
    EXPECT_TRUE(a.generates_full_lattice);
    auto b = span_of({iv({2, 0}), iv({0, 1})}, 2);
    EXPECT_EQ(b.rank_over_q, 2);
    EXPECT_FALSE(b.generates_full_lattice);
    auto c = span_of({iv({1, 2}), iv({2, 3})}, 2);
    EXPECT_EQ(c.rank_over_q, 2);
    EXPECT_TRUE(c.generates_full_lattice);
    EXPECT_EQ(oracle_det({to_rat(iv({1, 2})), to_rat(iv({2, 3}))}), -1);
}

TEST(LatticeSpan, RedundantGeneratorsAndEdgeCases)
{
    std::vector<IntVec> v{iv({2, 0}), iv({3, 0}), iv({0, 5}), iv({0, 7})};
    auto r = lattice_span(v, 2);
    EXPECT_EQ(r.rank_over_q, 2);
    EXPECT_TRUE(r.generates_full_lattice);

    std::vector<IntVec> empty;
    auto e = lattice_span(empty, 3);
    EXPECT_EQ(e.rank_over_q, 0);
    EXPECT_FALSE(e.generates_full_lattice);

    std::vector<IntVec> line{iv({1, 1, 0}), iv({2, 2, 0})};
    EXPECT_EQ(lattice_span(line, 3).rank_over_q, 1);
    EXPECT_EQ(lattice_index(line, 3), 0);
}

TEST(LatticeSpan, DimensionMismatch)
{
    std::vector<IntVec> v{iv({1, 0}), iv({0, 1, 0})};
    try {
        lattice_span(v, 2);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::DimensionMismatch);
    }
}

TEST(LatticeSpan, IndexMatchesDeterminant)
{
    Rng rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const int d = static_cast<int>(draw(rng, 1, 4));
        std::vector<IntVec> v;
        std::vector<RatVec> m;
        for (int i = 0; i < d; ++i) {
            IntVec x;
            for (int c = 0; c < d; ++c)
                x.emplace_back(draw(rng, -5, 5));
            v.push_back(x);
            m.push_back(to_rat(x));
        }
        const Rat det = oracle_det(m);
        EXPECT_EQ(Rat(lattice_index(v, d)), abs(det));
        EXPECT_EQ(determinant(m), det);
        EXPECT_EQ(lattice_span(v, d).generates_full_lattice, abs(det) == 1);
    }
}

TEST(LatticeSpan, InvariantUnderPermutationNegationAndUnimodularMaps)
{
    Rng rng(12);
    for (int trial = 0; trial < 200; ++trial) {
        const int d = static_cast<int>(draw(rng, 1, 4));
        const int n = static_cast<int>(draw(rng, 1, d + 2));
        std::vector<IntVec> v;
        for (int i = 0; i < n; ++i) {
            IntVec x;
            for (int c = 0; c < d; ++c)
                x.emplace_back(draw(rng, -3, 3));
            v.push_back(x);
        }
        const auto base = lattice_span(v, d);
        const Int idx = lattice_index(v, d);

        auto w = v;
        std::shuffle(w.begin(), w.end(), rng);
        for (auto& x : w)
            if (draw(rng, 0, 1))
                x = negate(x);
        const auto perm = lattice_span(w, d);
        EXPECT_EQ(perm.rank_over_q, base.rank_over_q);
        EXPECT_EQ(perm.generates_full_lattice, base.generates_full_lattice);
        EXPECT_EQ(lattice_index(w, d), idx);

        const auto u = random_unimodular(rng, d);
        std::vector<IntVec> img;
        for (const auto& x : v) {
            IntVec y(d, Int(0));
            for (int r = 0; r < d; ++r)
                y[r] = dot(u[r], x);
            img.push_back(y);
        }
        EXPECT_EQ(lattice_index(img, d), idx);
        if (base.generates_full_lattice)
            EXPECT_EQ(base.rank_over_q, d);
    }
}

TEST(Primitive, Examples)
{
    EXPECT_EQ(primitive(iv({4, -6})), iv({2, -3}));
    EXPECT_EQ(primitive(iv({0, 5})), iv({0, 1}));
    EXPECT_EQ(primitive(iv({3, 7})), iv({3, 7}));
    EXPECT_EQ(primitive(iv({-4, 6}), true), iv({2, -3}));
    EXPECT_EQ(primitive(iv({0, -5}), true), iv({0, 1}));
}

TEST(Primitive, ZeroVector)
{
    try {
        primitive(iv({0, 0}));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::ZeroVector);
    }
    EXPECT_THROW(primitive_direction(rv({"0", "0"})), Error);
}

TEST(Primitive, ScalingInvariance)
{
    Rng rng(13);
    for (int trial = 0; trial < 300; ++trial) {
        IntVec v;
        for (int c = 0; c < 3; ++c)
            v.emplace_back(draw(rng, -20, 20));
        if (is_zero(v))
            continue;
        const long k = draw(rng, 1, 9);
        IntVec kv;
        for (const auto& x : v)
            kv.push_back(k * x);
        EXPECT_EQ(primitive(kv), primitive(v));
        const auto p = primitive(v);
        Int g = 0;
        for (const auto& x : p)
            g = gcd(g, x);
        EXPECT_EQ(g, 1);
    }
}

TEST(Primitive, RationalDirection)
{
    EXPECT_EQ(primitive_direction(rv({"1/2", "-1/3"})), iv({3, -2}));
    EXPECT_EQ(primitive_direction(rv({"0", "-7/4"})), iv({0, -1}));
}

TEST(LinearAlgebra, RankAndSolve)
{
    std::vector<RatVec> v{rv({"1", "2", "3"}), rv({"2", "4", "6"}), rv({"0", "1", "1/2"})};
    EXPECT_EQ(rank(std::span<const RatVec>(v)), 2);
    EXPECT_EQ(independent_subset(v), (std::vector<std::size_t>{0, 2}));

    std::vector<RatVec> cols{rv({"1", "0"}), rv({"1", "2"})};
    auto c = solve_in_basis(cols, rv({"3", "4"}));
    ASSERT_TRUE(c.has_value());
    EXPECT_EQ(*c, rv({"1", "2"}));
    std::vector<RatVec> sing{rv({"1", "2"}), rv({"2", "4"})};
    EXPECT_FALSE(solve_in_basis(sing, rv({"1", "1"})).has_value());
}
