#ifndef PARTINT_POLYSPACE_HPP
#define PARTINT_POLYSPACE_HPP

// Monomial bases of polynomial spaces and the rows they contribute to
// condition matrices: point evaluation, directional derivatives, jacobians.
//
// Affine mode: monomials in x_1..x_n of total degree <= d.
// Homogeneous mode: monomials in e_0..e_n of total degree exactly d.
// Both have C(n+d, d) elements.  Order is graded lexicographic: ascending
// total degree, then descending exponent of the first variable, then the
// second, and so on.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "partint/linalg.hpp"
#include "partint/scalars.hpp"

namespace partint {

enum class BasisMode { Affine, Homogeneous };

using Exponents = std::vector<int>;

std::uint64_t binomial(int n, int k);

class MonomialBasis
{
  public:
    MonomialBasis(BasisMode mode, int n, int d, std::vector<Exponents> monomials);

    BasisMode mode() const { return mode_; }
    int n() const { return n_; }
    int degree() const { return d_; }
    int variables() const { return mode_ == BasisMode::Affine ? n_ : n_ + 1; }
    std::size_t size() const { return monomials_.size(); }
    const Exponents& operator[](std::size_t i) const { return monomials_[i]; }
    const std::vector<Exponents>& monomials() const { return monomials_; }

  private:
    BasisMode mode_;
    int n_;
    int d_;
    std::vector<Exponents> monomials_;
};

// Throws std::invalid_argument unless n >= 1 and d >= 0.
MonomialBasis build_basis(BasisMode mode, int n, int d);

// The linear space where the listed homogeneous coordinates vanish.
struct CoordinateSubspace
{
    std::vector<int> zeroed;

    int codim() const { return static_cast<int>(zeroed.size()); }
};

// Degree-d monomials in e_0..e_n that involve at least one zeroed coordinate
// of every subspace: a basis of the forms containing their union.  Throws
// std::invalid_argument if two zeroed sets overlap or an index is out of
// range.
MonomialBasis vanishing_basis(int n, int d, std::span<const CoordinateSubspace> subspaces);

// Independent count of the same space by inclusion-exclusion over subsets.
std::uint64_t vanishing_dimension(int n, int d, std::span<const CoordinateSubspace> subspaces);

// True iff every basis monomial involves a zeroed coordinate of `s`, so that
// every form in the span vanishes on s.
bool vanishes_on(const MonomialBasis& basis, const CoordinateSubspace& s);

namespace detail {

template <class T>
std::vector<std::vector<T>> power_table(std::span<const T> point, int d)
{
    std::vector<std::vector<T>> pw(point.size());
    for (std::size_t k = 0; k < point.size(); ++k) {
        pw[k].reserve(d + 1);
        pw[k].push_back(like(point[k], 1));
        for (int e = 1; e <= d; ++e)
            pw[k].push_back(pw[k].back() * point[k]);
    }
    return pw;
}

inline void check_point(const MonomialBasis& basis, std::size_t len)
{
    if (len != static_cast<std::size_t>(basis.variables()) || len == 0)
        throw std::invalid_argument("point has " + std::to_string(len) +
                                    " coordinates, basis expects " +
                                    std::to_string(basis.variables()));
}

} // namespace detail

template <class T>
std::vector<T> eval_row(const MonomialBasis& basis, std::span<const T> point)
{
    detail::check_point(basis, point.size());
    const auto pw = detail::power_table(point, basis.degree());
    std::vector<T> row;
    row.reserve(basis.size());
    for (const auto& mono : basis.monomials()) {
        T v = pw[0][mono[0]];
        for (std::size_t k = 1; k < mono.size(); ++k)
            v *= pw[k][mono[k]];
        row.push_back(v);
    }
    return row;
}

// Entry j is the derivative of monomial j along `direction`, at `point`.
template <class T>
std::vector<T> derivative_row(const MonomialBasis& basis, std::span<const T> point,
                              std::span<const T> direction)
{
    detail::check_point(basis, point.size());
    if (direction.size() != point.size())
        throw std::invalid_argument("direction length differs from point length");
    bool nonzero = false;
    for (const auto& v : direction)
        nonzero = nonzero || !is_zero(v);
    if (!nonzero)
        throw std::invalid_argument("zero direction");

    const auto pw = detail::power_table(point, basis.degree());
    std::vector<T> row;
    row.reserve(basis.size());
    const T zero = like(point[0], 0);
    for (const auto& mono : basis.monomials()) {
        T acc = zero;
        for (std::size_t k = 0; k < mono.size(); ++k) {
            if (mono[k] == 0 || is_zero(direction[k]))
                continue;
            T term = direction[k] * like(point[0], mono[k]);
            for (std::size_t j = 0; j < mono.size(); ++j)
                term *= pw[j][j == k ? mono[j] - 1 : mono[j]];
            acc += term;
        }
        row.push_back(acc);
    }
    return row;
}

// Row k is the partial derivative along the k-th coordinate.
template <class T>
Matrix<T> jacobian_block(const MonomialBasis& basis, std::span<const T> point)
{
    detail::check_point(basis, point.size());
    const T zero = like(point[0], 0);
    Matrix<T> jac(point.size(), basis.size(), zero);
    std::vector<T> e(point.size(), zero);
    for (std::size_t k = 0; k < point.size(); ++k) {
        e[k] = like(point[0], 1);
        auto row = derivative_row<T>(basis, point, e);
        std::copy(row.begin(), row.end(), jac.row(k).begin());
        e[k] = zero;
    }
    return jac;
}

} // namespace partint

#endif
