#ifndef PARTINT_SCALARS_HPP
#define PARTINT_SCALARS_HPP

// Exact scalars: residues modulo a runtime odd prime, and arbitrary
// precision rationals.  Generic code (matrices, bases) is written against
// the small set of free functions at the bottom of this header.

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace partint {

inline constexpr std::uint32_t kDefaultPrime = 31991;

class ZeroInverse : public std::domain_error
{
  public:
    ZeroInverse() : std::domain_error("inverse of zero") {}
};

bool is_prime(std::uint64_t v);

// An odd prime below 2^31, so products of two residues fit in 64 bits.
class PrimeModulus
{
  public:
    PrimeModulus() = default;
    explicit PrimeModulus(std::uint32_t p);

    std::uint32_t value() const { return p_; }

    friend bool operator==(PrimeModulus, PrimeModulus) = default;

  private:
    std::uint32_t p_ = kDefaultPrime;
};

// Element of GF(p).  The residue is kept canonical in [0, p).
class Fp
{
  public:
    Fp() = default;
    Fp(std::int64_t v, PrimeModulus p);

    std::uint32_t residue() const { return v_; }
    PrimeModulus modulus() const { return PrimeModulus(p_); }
    bool is_zero() const { return v_ == 0; }

    Fp inverse() const;
    Fp pow(std::uint64_t e) const;

    Fp operator-() const;
    Fp& operator+=(const Fp& o);
    Fp& operator-=(const Fp& o);
    Fp& operator*=(const Fp& o);
    Fp& operator/=(const Fp& o);

    friend Fp operator+(Fp a, const Fp& b) { return a += b; }
    friend Fp operator-(Fp a, const Fp& b) { return a -= b; }
    friend Fp operator*(Fp a, const Fp& b) { return a *= b; }
    friend Fp operator/(Fp a, const Fp& b) { return a /= b; }
    friend bool operator==(const Fp& a, const Fp& b)
    {
        return a.v_ == b.v_ && a.p_ == b.p_;
    }

  private:
    struct Raw
    {
    };
    Fp(std::uint32_t v, std::uint32_t p, Raw) : v_(v), p_(p) {}

    std::uint32_t v_ = 0;
    std::uint32_t p_ = kDefaultPrime;
};

std::ostream& operator<<(std::ostream& os, const Fp& x);

// Throws ZeroInverse when x == 0.
Fp inverse(const Fp& x);

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// Accepts "a", "-a", "a/b".  Throws std::invalid_argument on malformed text
// or a zero denominator.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);

// Throws ZeroInverse when x == 0.
Rational inverse(const Rational& x);

// Field-generic helpers.  `like` builds the integer v in the same field as
// the prototype (same modulus for Fp).
inline bool is_zero(const Fp& x) { return x.is_zero(); }
inline bool is_zero(const Rational& x) { return x.is_zero(); }
inline Fp like(const Fp& proto, std::int64_t v) { return Fp(v, proto.modulus()); }
inline Rational like(const Rational&, std::int64_t v) { return Rational(v); }

// Reduce a rational into GF(p).  Throws ZeroInverse if p divides the
// denominator.
Fp reduce(const Rational& q, PrimeModulus p);

} // namespace partint

#endif
