#ifndef PARTINT_RNG_HPP
#define PARTINT_RNG_HPP

// Seeded randomness.  Every random draw in the library flows from a root
// seed through derive_seed, so a case replays identically no matter which
// thread runs it or in what order:
//
//   child = splitmix64(root ^ splitmix64(fnv1a64(label) + trial))
//
// Residues are drawn by rejection from mt19937_64 output, which is fully
// specified by the standard (unlike std::uniform_int_distribution).

#include <cstdint>
#include <random>
#include <string_view>

#include "partint/scalars.hpp"

namespace partint {

inline constexpr std::uint64_t kDefaultSeed = 0x5eedf00dcafe2014ull;

constexpr std::uint64_t fnv1a64(std::string_view s)
{
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

constexpr std::uint64_t splitmix64(std::uint64_t x)
{
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

constexpr std::uint64_t derive_seed(std::uint64_t root, std::string_view label,
                                    std::uint64_t trial)
{
    return splitmix64(root ^ splitmix64(fnv1a64(label) + trial));
}

class Rng
{
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    // Uniform on [0, bound).
    std::uint64_t below(std::uint64_t bound)
    {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        std::uint64_t v;
        do {
            v = engine_();
        } while (v >= limit);
        return v % bound;
    }

    Fp residue(PrimeModulus p)
    {
        return Fp(static_cast<std::int64_t>(below(p.value())), p);
    }

  private:
    std::mt19937_64 engine_;
};

} // namespace partint

#endif
