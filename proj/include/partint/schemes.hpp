#ifndef PARTINT_SCHEMES_HPP
#define PARTINT_SCHEMES_HPP

// Zero-dimensional schemes contained in unions of double points, and the
// condition matrices they impose on polynomial spaces.
//
// A component of length l at a point p is the value at p together with l-1
// independent first-order directional conditions.  Projectively these are
// realised as in the classical Monte Carlo approach: the value row plus l-1
// random combinations of the jacobian rows at p (the full jacobian for a
// double point, where the Euler identity makes the value row redundant).
//
// A component supported on a coordinate subspace L, against a basis of forms
// containing L, only sees its residual: `residual` random combinations of
// the jacobian rows, since the trace conditions hold identically.

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "partint/linalg.hpp"
#include "partint/polyspace.hpp"
#include "partint/rng.hpp"
#include "partint/scalars.hpp"

namespace partint {

class InvalidScheme : public std::invalid_argument
{
  public:
    using std::invalid_argument::invalid_argument;
};

// Counts of components by length: m[i-1] components of length i.
struct SchemeType
{
    int n = 0;
    std::vector<int> m;

    int degree() const;
    int components() const;
    // Component lengths, non-increasing.
    std::vector<int> lengths() const;

    // Throws InvalidScheme for lengths outside [1, n+1].
    static SchemeType from_lengths(int n, std::span<const int> lengths);

    friend bool operator==(const SchemeType&, const SchemeType&) = default;
};

struct ComponentSpec
{
    int length = 1;
    // Index into the owning scheme's subspace list; empty means general
    // support.
    std::optional<int> subspace;
    // deg(xi : L) for on-subspace components.
    std::optional<int> residual;

    friend bool operator==(const ComponentSpec&, const ComponentSpec&) = default;
};

// Residuals a component of the given length can have on a codimension-c
// coordinate subspace of P^n: its trace lies in a double point of
// P^{n-c}, so length - (n-c+1) <= residual <= min(c, length).  For c = 3
// this is n+1 -> {3}, n -> {2,3}, n-1 -> {1,2,3}, shorter -> {0..3}.
std::vector<int> allowed_residuals(int n, int codim, int length);

// The longest component with residual r on a codimension-c subspace.
ComponentSpec component_with_residual(int n, int codim, int subspace, int residual);

// Throws InvalidScheme if the spec is inconsistent.
void validate(int n, std::span<const CoordinateSubspace> subspaces, const ComponentSpec& spec);

// Serialisable description of a scheme:
//   {n, d, prime, seed, subspaces:[{zeroed:[...]}],
//    components:[{length, support: "general" | <subspace index>, residual}]}
struct SchemeSpec
{
    int n = 0;
    int d = 0;
    PrimeModulus prime;
    std::uint64_t seed = kDefaultSeed;
    std::vector<CoordinateSubspace> subspaces;
    std::vector<ComponentSpec> components;
};

nlohmann::json to_json(const SchemeSpec& spec);
// Throws InvalidScheme on schema violations.
SchemeSpec scheme_spec_from_json(const nlohmann::json& j);

struct Component
{
    ComponentSpec spec;
    std::vector<Fp> point;
    // Rows combine the n+1 jacobian rows at `point`.
    Matrix<Fp> combination;
    // Whether an evaluation row precedes the jacobian combinations.
    bool value_row = false;
};

struct SchemeInstance
{
    int n = 0;
    PrimeModulus prime;
    std::uint64_t seed = 0;
    std::vector<CoordinateSubspace> subspaces;
    std::vector<Component> components;
};

// Number of rows the component contributes to a condition matrix built on
// a basis of forms containing its support subspace.
int condition_rows(const ComponentSpec& spec);

// Throws InvalidScheme on invalid specs, or when 16 consecutive draws for a
// component are degenerate.
SchemeInstance random_instance(int n, std::span<const CoordinateSubspace> subspaces,
                               std::span<const ComponentSpec> specs, PrimeModulus prime,
                               std::uint64_t seed);
SchemeInstance random_instance(const SchemeSpec& spec);

// Basis of degree-d forms containing every subspace of the instance (all
// forms when there are none).
MonomialBasis scheme_basis(int n, int d, std::span<const CoordinateSubspace> subspaces);

// Throws std::invalid_argument if an on-subspace component meets a basis
// that does not vanish on its subspace.
Matrix<Fp> condition_matrix_projective(const SchemeInstance& x, const MonomialBasis& basis);

// Rank of the condition matrix against scheme_basis(n, d, subspaces).
int hilbert_function(const SchemeInstance& x, int d);

struct DegreeCount
{
    int degree = 0;   // deg X
    int trace = 0;    // deg(X cap (union of the chosen subspaces))
    int residual = 0; // deg(X : union) = deg X - trace
};

// Components are supported on at most one subspace and are general with
// respect to the others, so pairwise intersection terms of the
// inclusion-exclusion vanish and the trace on a union is the sum of traces.
DegreeCount degree_bookkeeping(std::span<const ComponentSpec> specs,
                               std::span<const int> subspace_ids);

// Affine interpolation problem: value plus directional derivative data at
// points of K^n.  `values[i]` holds f(p_i) followed by one derivative per
// direction; it may be empty when only the matrix is needed.
template <class T>
struct InterpolationProblem
{
    int n = 0;
    int d = 0;
    std::vector<std::vector<T>> points;
    std::vector<std::vector<std::vector<T>>> directions;
    std::vector<std::vector<T>> values;

    std::vector<int> profile() const
    {
        std::vector<int> a;
        for (const auto& dirs : directions)
            a.push_back(static_cast<int>(dirs.size()));
        return a;
    }
    int condition_count() const
    {
        int c = 0;
        for (const auto& dirs : directions)
            c += 1 + static_cast<int>(dirs.size());
        return c;
    }
};

template <class T>
Matrix<T> condition_matrix_affine(const InterpolationProblem<T>& prob, const MonomialBasis& basis)
{
    if (basis.mode() != BasisMode::Affine || basis.n() != prob.n)
        throw std::invalid_argument("condition_matrix_affine needs an affine basis in n variables");
    if (prob.points.size() != prob.directions.size())
        throw std::invalid_argument("points and direction sets differ in number");
    Matrix<T> m;
    for (std::size_t i = 0; i < prob.points.size(); ++i) {
        const auto& p = prob.points[i];
        if (prob.directions[i].size() > static_cast<std::size_t>(prob.n))
            throw std::invalid_argument("point " + std::to_string(i) + " has more than n directions");
        m.append_row(eval_row<T>(basis, p));
        for (const auto& v : prob.directions[i])
            m.append_row(derivative_row<T>(basis, p, v));
    }
    return m;
}

// Flattened assigned values in row order of condition_matrix_affine.
template <class T>
std::vector<T> condition_values(const InterpolationProblem<T>& prob)
{
    if (prob.values.size() != prob.points.size())
        throw std::invalid_argument("values missing for some points");
    std::vector<T> rhs;
    for (std::size_t i = 0; i < prob.points.size(); ++i) {
        if (prob.values[i].size() != prob.directions[i].size() + 1)
            throw std::invalid_argument("point " + std::to_string(i) +
                                        " needs one value plus one per direction");
        rhs.insert(rhs.end(), prob.values[i].begin(), prob.values[i].end());
    }
    return rhs;
}

// Random points, directions and values over GF(p) with the given profile.
InterpolationProblem<Fp> random_affine_problem(int n, int d, std::span<const int> profile,
                                               PrimeModulus prime, std::uint64_t seed);

} // namespace partint

#endif
