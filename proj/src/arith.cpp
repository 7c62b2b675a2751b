#include "latmin/arith.hpp"

#include "latmin/error.hpp"

#include <cctype>
#include <limits>

namespace latmin {

std::string format_rat(const Rat& value)
{
    Rat r = value;
    r.canonicalize();
    return r.get_str(10);
}

namespace {

bool all_digits(std::string_view s)
{
    if (s.empty())
        return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            return false;
    return true;
}

} // namespace

Rat parse_rat(std::string_view text)
{
    std::string_view body = text;
    if (!body.empty() && (body.front() == '-' || body.front() == '+'))
        body.remove_prefix(1);
    const auto slash = body.find('/');
    const std::string_view num = body.substr(0, slash);
    const std::string_view den = slash == std::string_view::npos ? std::string_view{} : body.substr(slash + 1);
    if (!all_digits(num) || (slash != std::string_view::npos && !all_digits(den)))
        throw Error(ErrorKind::ParseError, "malformed rational '" + std::string(text) + "'");

    std::string normalized(text);
    if (normalized.front() == '+')
        normalized.erase(0, 1);
    Rat r;
    if (r.set_str(normalized, 10) != 0)
        throw Error(ErrorKind::ParseError, "malformed rational '" + std::string(text) + "'");
    if (r.get_den() == 0)
        throw Error(ErrorKind::ParseError, "zero denominator in '" + std::string(text) + "'");
    r.canonicalize();
    return r;
}

Int floor_rat(const Rat& value)
{
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
    return q;
}

Int ceil_rat(const Rat& value)
{
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
    return q;
}

Int factorial(unsigned n)
{
    Int f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return f;
}

Rat pow_rat(const Rat& base, unsigned exponent)
{
    Rat r = 1;
    for (unsigned i = 0; i < exponent; ++i)
        r *= base;
    return r;
}

RatVec to_rat(const IntVec& v)
{
    RatVec out;
    out.reserve(v.size());
    for (const auto& x : v)
        out.emplace_back(x);
    return out;
}

std::optional<IntVec> to_int(const RatVec& v)
{
    IntVec out;
    out.reserve(v.size());
    for (const auto& x : v) {
        if (x.get_den() != 1)
            return std::nullopt;
        out.push_back(x.get_num());
    }
    return out;
}

Rat dot(const IntVec& a, const RatVec& x)
{
    Rat s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        s += a[i] * x[i];
    return s;
}

Rat dot(const RatVec& a, const RatVec& x)
{
    Rat s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        s += a[i] * x[i];
    return s;
}

Int dot(const IntVec& a, const IntVec& x)
{
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        s += a[i] * x[i];
    return s;
}

RatVec sub(const RatVec& a, const RatVec& b)
{
    RatVec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] = a[i] - b[i];
    return out;
}

IntVec sub(const IntVec& a, const IntVec& b)
{
    IntVec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] = a[i] - b[i];
    return out;
}

RatVec scale(const RatVec& v, const Rat& c)
{
    RatVec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        out[i] = v[i] * c;
    return out;
}

RatVec negate(const RatVec& v)
{
    RatVec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        out[i] = -v[i];
    return out;
}

IntVec negate(const IntVec& v)
{
    IntVec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        out[i] = -v[i];
    return out;
}

bool is_zero(const RatVec& v)
{
    for (const auto& x : v)
        if (sgn(x) != 0)
            return false;
    return true;
}

bool is_zero(const IntVec& v)
{
    for (const auto& x : v)
        if (sgn(x) != 0)
            return false;
    return true;
}

bool lex_less(const RatVec& a, const RatVec& b)
{
    for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
        const int c = cmp(a[i], b[i]);
        if (c != 0)
            return c < 0;
    }
    return a.size() < b.size();
}

bool lex_less(const IntVec& a, const IntVec& b)
{
    for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
        const int c = cmp(a[i], b[i]);
        if (c != 0)
            return c < 0;
    }
    return a.size() < b.size();
}

bool fits_i64(const Int& v)
{
    return mpz_fits_slong_p(v.get_mpz_t()) != 0 && sizeof(long) == 8;
}

} // namespace latmin
