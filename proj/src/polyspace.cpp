#include "partint/polyspace.hpp"

#include <algorithm>
#include <functional>

namespace partint {

std::uint64_t binomial(int n, int k)
{
    if (k < 0 || n < 0 || k > n)
        return 0;
    k = std::min(k, n - k);
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i)
        r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    return r;
}

MonomialBasis::MonomialBasis(BasisMode mode, int n, int d, std::vector<Exponents> monomials)
    : mode_(mode), n_(n), d_(d), monomials_(std::move(monomials))
{
}

namespace {

// All exponent vectors of `vars` variables with total degree exactly `deg`,
// descending lexicographic order.
void append_degree(int vars, int deg, std::vector<Exponents>& out)
{
    Exponents e(vars, 0);
    std::function<void(int, int)> rec = [&](int k, int left) {
        if (k == vars - 1) {
            e[k] = left;
            out.push_back(e);
            return;
        }
        for (int v = left; v >= 0; --v) {
            e[k] = v;
            rec(k + 1, left - v);
        }
    };
    rec(0, deg);
}

} // namespace

MonomialBasis build_basis(BasisMode mode, int n, int d)
{
    if (n < 1 || d < 0)
        throw std::invalid_argument("build_basis requires n >= 1 and d >= 0");
    std::vector<Exponents> monos;
    if (mode == BasisMode::Affine) {
        for (int deg = 0; deg <= d; ++deg)
            append_degree(n, deg, monos);
    } else {
        append_degree(n + 1, d, monos);
    }
    return MonomialBasis(mode, n, d, std::move(monos));
}

namespace {

void check_subspaces(int n, std::span<const CoordinateSubspace> subspaces)
{
    std::vector<bool> used(n + 1, false);
    for (const auto& s : subspaces) {
        if (s.zeroed.empty())
            throw std::invalid_argument("subspace with no zeroed coordinates");
        for (int c : s.zeroed) {
            if (c < 0 || c > n)
                throw std::invalid_argument("zeroed coordinate " + std::to_string(c) +
                                            " out of range");
            if (used[c])
                throw std::invalid_argument("zeroed coordinate sets overlap at " +
                                            std::to_string(c));
            used[c] = true;
        }
    }
}

bool involves(const Exponents& mono, const CoordinateSubspace& s)
{
    return std::any_of(s.zeroed.begin(), s.zeroed.end(), [&](int c) { return mono[c] > 0; });
}

} // namespace

bool vanishes_on(const MonomialBasis& basis, const CoordinateSubspace& s)
{
    if (basis.mode() != BasisMode::Homogeneous)
        return false;
    return std::all_of(basis.monomials().begin(), basis.monomials().end(),
                       [&](const Exponents& m) { return involves(m, s); });
}

MonomialBasis vanishing_basis(int n, int d, std::span<const CoordinateSubspace> subspaces)
{
    check_subspaces(n, subspaces);
    auto full = build_basis(BasisMode::Homogeneous, n, d);
    std::vector<Exponents> keep;
    for (const auto& m : full.monomials())
        if (std::all_of(subspaces.begin(), subspaces.end(),
                        [&](const CoordinateSubspace& s) { return involves(m, s); }))
            keep.push_back(m);
    return MonomialBasis(BasisMode::Homogeneous, n, d, std::move(keep));
}

std::uint64_t vanishing_dimension(int n, int d, std::span<const CoordinateSubspace> subspaces)
{
    check_subspaces(n, subspaces);
    // Monomials avoiding every coordinate of the subsets in S live in
    // n+1-|zeroed(S)| variables.
    const std::size_t k = subspaces.size();
    std::int64_t total = 0;
    for (std::uint64_t mask = 0; mask < (1ull << k); ++mask) {
        int removed = 0;
        int bits = 0;
        for (std::size_t i = 0; i < k; ++i)
            if (mask >> i & 1) {
                removed += subspaces[i].codim();
                ++bits;
            }
        const int vars = n + 1 - removed;
        const std::int64_t count =
            vars <= 0 ? (d == 0 ? 1 : 0)
                      : static_cast<std::int64_t>(binomial(vars - 1 + d, d));
        total += (bits % 2 ? -1 : 1) * count;
    }
    return static_cast<std::uint64_t>(total);
}

} // namespace partint
