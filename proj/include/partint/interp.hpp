#ifndef PARTINT_INTERP_HPP
#define PARTINT_INTERP_HPP

// Exact solver for affine partial interpolation: a polynomial of degree <= d
// in n variables with prescribed values and directional derivatives at
// given points.  Rationals are the default field; GF(p) has to be asked for.

#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "partint/linalg.hpp"
#include "partint/polyspace.hpp"
#include "partint/scalars.hpp"
#include "partint/schemes.hpp"
#include "partint/theory.hpp"

namespace partint {

enum class SolveMode {
    Unique, // square system, unique solution or SingularSystem
    Any,    // any solution of a consistent system, else InconsistentSystem
};

enum class FieldMode { Rational, Prime };

template <class T>
struct Interpolant
{
    int n = 0;
    int d = 0;
    // Indexed by build_basis(Affine, n, d).
    std::vector<T> coefficients;
};

struct Diagnosis
{
    enum class Kind { SingularSystem, InconsistentSystem };
    Kind kind = Kind::SingularSystem;
    // Matching exception pattern, None for plain degenerate data.
    ExceptionId exception_id = ExceptionId::None;
    int rank = 0;
    int conditions = 0;
    int space_dim = 0;
    std::string message;
};

std::string_view to_string(Diagnosis::Kind k);

template <class T>
using SolveResult = std::variant<Interpolant<T>, Diagnosis>;

namespace detail {

inline Diagnosis diagnose(Diagnosis::Kind kind, int n, int d, const std::vector<int>& profile,
                          int rank, int conditions, int space_dim)
{
    Diagnosis g;
    g.kind = kind;
    g.rank = rank;
    g.conditions = conditions;
    g.space_dim = space_dim;
    const Prediction p = predict_affine(n, d, profile);
    g.exception_id = p.exception_id;
    g.message = p.exceptional
                    ? "configuration matches exception " + std::string(to_string(p.exception_id))
                    : std::string("degenerate data");
    return g;
}

} // namespace detail

// Unique mode requires sum(a_i + 1) = C(n+d, d) (std::invalid_argument
// otherwise).  The problem must carry values.
template <class T>
SolveResult<T> solve(const InterpolationProblem<T>& prob, SolveMode mode, const T& zero)
{
    const MonomialBasis basis = build_basis(BasisMode::Affine, prob.n, prob.d);
    const int space = static_cast<int>(basis.size());
    const int conditions = prob.condition_count();
    if (mode == SolveMode::Unique && conditions != space)
        throw std::invalid_argument("unique mode needs " + std::to_string(space) +
                                    " conditions, got " + std::to_string(conditions));
    const auto m = condition_matrix_affine(prob, basis);
    const auto rhs = condition_values(prob);

    Interpolant<T> f{prob.n, prob.d, std::vector<T>(basis.size(), zero)};
    if (conditions == 0)
        return f;
    if (mode == SolveMode::Unique) {
        try {
            f.coefficients = solve_square<T>(m, rhs);
            return f;
        } catch (const SingularSystem& e) {
            return detail::diagnose(Diagnosis::Kind::SingularSystem, prob.n, prob.d,
                                    prob.profile(), static_cast<int>(e.rank()), conditions, space);
        }
    }
    auto x = solve_any<T>(m, rhs);
    if (!x)
        return detail::diagnose(Diagnosis::Kind::InconsistentSystem, prob.n, prob.d,
                                prob.profile(), static_cast<int>(rank(m)), conditions, space);
    f.coefficients = std::move(*x);
    return f;
}

// Evaluates every condition row against f; true iff all assigned values
// are reproduced exactly.
template <class T>
bool satisfies(const InterpolationProblem<T>& prob, const Interpolant<T>& f)
{
    const MonomialBasis basis = build_basis(BasisMode::Affine, prob.n, prob.d);
    if (f.coefficients.size() != basis.size())
        return false;
    if (prob.condition_count() == 0)
        return true;
    const auto m = condition_matrix_affine(prob, basis);
    return multiply(m, std::span<const T>(f.coefficients)) == condition_values(prob);
}

template <class T>
struct PredictAndSolve
{
    Prediction prediction;
    std::optional<SolveResult<T>> result;
};

// Runs the predictor, then the solver: unique mode when the system is
// square, any-solution mode otherwise.
template <class T>
PredictAndSolve<T> predict_then_solve(const InterpolationProblem<T>& prob, const T& zero)
{
    PredictAndSolve<T> out;
    out.prediction = predict_affine(prob.n, prob.d, prob.profile());
    const bool square = out.prediction.conditions == out.prediction.space_dim;
    out.result = solve(prob, square ? SolveMode::Unique : SolveMode::Any, zero);
    return out;
}

// Problem file: {n, d, mode: "rational" | "prime", prime?, solve?:
// "unique" | "any", points, directions, values}.  Numbers are JSON
// integers or strings "a" / "a/b".
struct ProblemFile
{
    FieldMode field = FieldMode::Rational;
    PrimeModulus prime;
    std::optional<SolveMode> solve_mode;
    InterpolationProblem<Rational> problem;
};

// Throws std::invalid_argument on schema violations.
ProblemFile problem_from_json(const nlohmann::json& j);
nlohmann::json to_json(const ProblemFile& p);

InterpolationProblem<Fp> reduce(const InterpolationProblem<Rational>& prob, PrimeModulus p);

// Output document: prediction, status and coefficients in graded-lex order
// (with their exponent vectors) or the diagnosis.
nlohmann::json solve_problem_file(const ProblemFile& file);

} // namespace partint

#endif
