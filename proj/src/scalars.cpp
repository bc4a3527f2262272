#include "partint/scalars.hpp"

#include <cassert>
#include <ostream>

namespace partint {

bool is_prime(std::uint64_t v)
{
    if (v < 2)
        return false;
    if (v % 2 == 0)
        return v == 2;
    for (std::uint64_t f = 3; f * f <= v; f += 2)
        if (v % f == 0)
            return false;
    return true;
}

PrimeModulus::PrimeModulus(std::uint32_t p) : p_(p)
{
    if (p < 3 || p >= (1u << 31) || !is_prime(p))
        throw std::invalid_argument("modulus must be an odd prime below 2^31, got " +
                                    std::to_string(p));
}

Fp::Fp(std::int64_t v, PrimeModulus p) : p_(p.value())
{
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    if (r < 0)
        r += p_;
    v_ = static_cast<std::uint32_t>(r);
}

Fp Fp::inverse() const
{
    if (v_ == 0)
        throw ZeroInverse();
    // extended Euclid on (v, p)
    std::int64_t a = v_, b = p_, x0 = 1, x1 = 0;
    while (b != 0) {
        std::int64_t q = a / b;
        std::int64_t t = a - q * b;
        a = b;
        b = t;
        t = x0 - q * x1;
        x0 = x1;
        x1 = t;
    }
    assert(a == 1);
    return Fp(x0, PrimeModulus(p_));
}

Fp Fp::pow(std::uint64_t e) const
{
    Fp base = *this, acc(1u, p_, Raw{});
    while (e) {
        if (e & 1)
            acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

Fp Fp::operator-() const { return Fp(v_ == 0 ? 0 : p_ - v_, p_, Raw{}); }

Fp& Fp::operator+=(const Fp& o)
{
    assert(p_ == o.p_);
    std::uint32_t s = v_ + o.v_;
    v_ = s >= p_ ? s - p_ : s;
    return *this;
}

Fp& Fp::operator-=(const Fp& o)
{
    assert(p_ == o.p_);
    v_ = v_ >= o.v_ ? v_ - o.v_ : v_ + p_ - o.v_;
    return *this;
}

Fp& Fp::operator*=(const Fp& o)
{
    assert(p_ == o.p_);
    v_ = static_cast<std::uint32_t>(static_cast<std::uint64_t>(v_) * o.v_ % p_);
    return *this;
}

Fp& Fp::operator/=(const Fp& o) { return *this *= o.inverse(); }

std::ostream& operator<<(std::ostream& os, const Fp& x) { return os << x.residue(); }

Fp inverse(const Fp& x) { return x.inverse(); }

namespace {

BigInt parse_integer(std::string_view s)
{
    std::size_t i = 0;
    if (i < s.size() && (s[i] == '-' || s[i] == '+'))
        ++i;
    if (i == s.size())
        throw std::invalid_argument("empty integer");
    for (std::size_t j = i; j < s.size(); ++j)
        if (s[j] < '0' || s[j] > '9')
            throw std::invalid_argument("malformed integer '" + std::string(s) + "'");
    BigInt v(std::string(s.substr(s[0] == '+' ? 1 : 0)));
    return v;
}

std::string_view trim(std::string_view s)
{
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t'))
        s.remove_suffix(1);
    return s;
}

} // namespace

Rational parse_rational(std::string_view text)
{
    text = trim(text);
    auto slash = text.find('/');
    if (slash == std::string_view::npos)
        return Rational(parse_integer(text));
    BigInt num = parse_integer(trim(text.substr(0, slash)));
    BigInt den = parse_integer(trim(text.substr(slash + 1)));
    if (den == 0)
        throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return Rational(num, den);
}

std::string to_string(const Rational& q) { return q.str(); }

Rational inverse(const Rational& x)
{
    if (x.is_zero())
        throw ZeroInverse();
    return 1 / x;
}

Fp reduce(const Rational& q, PrimeModulus p)
{
    auto residue = [p](const BigInt& v) {
        BigInt r = v % p.value();
        return Fp(static_cast<std::int64_t>(r), p);
    };
    Fp den = residue(boost::multiprecision::denominator(q));
    return residue(boost::multiprecision::numerator(q)) * den.inverse();
}

} // namespace partint
