#include "latmin/lattice.hpp"

#include "latmin/error.hpp"

#include <algorithm>
#include <utility>

namespace latmin {

namespace {

void check_lengths(std::span<const IntVec> vectors, int d)
{
    for (const auto& v : vectors)
        if (static_cast<int>(v.size()) != d)
            throw Error(ErrorKind::DimensionMismatch,
                        "vector of length " + std::to_string(v.size()) + " in dimension " + std::to_string(d));
}

// Row echelon form over Q; returns the rank. Rows are modified in place.
int echelon(std::vector<RatVec>& rows)
{
    if (rows.empty())
        return 0;
    const std::size_t cols = rows.front().size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        std::size_t pivot = r;
        while (pivot < rows.size() && sgn(rows[pivot][c]) == 0)
            ++pivot;
        if (pivot == rows.size())
            continue;
        std::swap(rows[r], rows[pivot]);
        for (std::size_t i = r + 1; i < rows.size(); ++i) {
            if (sgn(rows[i][c]) == 0)
                continue;
            const Rat f = rows[i][c] / rows[r][c];
            for (std::size_t j = c; j < cols; ++j)
                rows[i][j] -= f * rows[r][j];
        }
        ++r;
    }
    return static_cast<int>(r);
}

} // namespace

Int lattice_index(std::span<const IntVec> vectors, int d)
{
    check_lengths(vectors, d);
    std::vector<IntVec> rows(vectors.begin(), vectors.end());
    std::size_t r = 0;
    Int index = 1;
    for (int c = 0; c < d; ++c) {
        // Euclid on column c among rows r..end until a single nonzero remains.
        while (true) {
            std::size_t best = rows.size();
            for (std::size_t i = r; i < rows.size(); ++i) {
                if (sgn(rows[i][c]) == 0)
                    continue;
                if (best == rows.size() || mpz_cmpabs(rows[i][c].get_mpz_t(), rows[best][c].get_mpz_t()) < 0)
                    best = i;
            }
            if (best == rows.size())
                return 0; // column has no pivot: rank < d
            std::swap(rows[r], rows[best]);
            bool reduced = true;
            for (std::size_t i = r + 1; i < rows.size(); ++i) {
                if (sgn(rows[i][c]) == 0)
                    continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), rows[i][c].get_mpz_t(), rows[r][c].get_mpz_t());
                for (int j = c; j < d; ++j)
                    rows[i][j] -= q * rows[r][j];
                if (sgn(rows[i][c]) != 0)
                    reduced = false;
            }
            if (reduced)
                break;
        }
        index *= abs(rows[r][c]);
        ++r;
    }
    return index;
}

SpanResult lattice_span(std::span<const IntVec> vectors, int d)
{
    check_lengths(vectors, d);
    SpanResult result;
    result.rank_over_q = rank(vectors);
    if (result.rank_over_q == d)
        result.generates_full_lattice = lattice_index(vectors, d) == 1;
    return result;
}

IntVec primitive(const IntVec& v, bool canonical_sign)
{
    Int g = 0;
    for (const auto& x : v)
        g = gcd(g, x);
    if (g == 0)
        throw Error(ErrorKind::ZeroVector, "primitive of the zero vector");
    IntVec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        out[i] = v[i] / g;
    if (canonical_sign) {
        auto first = std::find_if(out.begin(), out.end(), [](const Int& x) { return sgn(x) != 0; });
        if (sgn(*first) < 0)
            for (auto& x : out)
                x = -x;
    }
    return out;
}

IntVec primitive_direction(const RatVec& v)
{
    Int l = 1;
    for (const auto& x : v)
        l = lcm(l, x.get_den());
    IntVec scaled(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        scaled[i] = v[i].get_num() * (l / v[i].get_den());
    return primitive(scaled);
}

int rank(std::span<const RatVec> vectors)
{
    std::vector<RatVec> rows(vectors.begin(), vectors.end());
    return echelon(rows);
}

int rank(std::span<const IntVec> vectors)
{
    std::vector<RatVec> rows;
    rows.reserve(vectors.size());
    for (const auto& v : vectors)
        rows.push_back(to_rat(v));
    return echelon(rows);
}

Rat determinant(std::span<const RatVec> rows_in)
{
    std::vector<RatVec> rows(rows_in.begin(), rows_in.end());
    const std::size_t n = rows.size();
    Rat det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t pivot = c;
        while (pivot < n && sgn(rows[pivot][c]) == 0)
            ++pivot;
        if (pivot == n)
            return 0;
        if (pivot != c) {
            std::swap(rows[c], rows[pivot]);
            det = -det;
        }
        det *= rows[c][c];
        for (std::size_t i = c + 1; i < n; ++i) {
            if (sgn(rows[i][c]) == 0)
                continue;
            const Rat f = rows[i][c] / rows[c][c];
            for (std::size_t j = c; j < n; ++j)
                rows[i][j] -= f * rows[c][j];
        }
    }
    return det;
}

std::optional<RatVec> solve_in_basis(std::span<const RatVec> columns, const RatVec& rhs)
{
    const std::size_t n = rhs.size();
    if (columns.size() != n)
        return std::nullopt;
    // Augmented matrix [A | b] with A's columns given.
    std::vector<RatVec> m(n, RatVec(n + 1));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            m[i][j] = columns[j][i];
        m[i][n] = rhs[i];
    }
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t pivot = c;
        while (pivot < n && sgn(m[pivot][c]) == 0)
            ++pivot;
        if (pivot == n)
            return std::nullopt;
        std::swap(m[c], m[pivot]);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || sgn(m[i][c]) == 0)
                continue;
            const Rat f = m[i][c] / m[c][c];
            for (std::size_t j = c; j <= n; ++j)
                m[i][j] -= f * m[c][j];
        }
    }
    RatVec x(n);
    for (std::size_t i = 0; i < n; ++i)
        x[i] = m[i][n] / m[i][i];
    return x;
}

std::vector<std::size_t> independent_subset(std::span<const RatVec> vectors)
{
    std::vector<std::size_t> chosen;
    std::vector<RatVec> basis;
    for (std::size_t i = 0; i < vectors.size(); ++i) {
        basis.push_back(vectors[i]);
        if (rank(basis) == static_cast<int>(basis.size()))
            chosen.push_back(i);
        else
            basis.pop_back();
    }
    return chosen;
}

} // namespace latmin
