#ifndef PARTINT_THEORY_HPP
#define PARTINT_THEORY_HPP

// Closed-form predictions for partial interpolation problems and schemes
// contained in unions of double points, plus the combinatorial enumerators
// that drive the verification harness.

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "partint/schemes.hpp"

namespace partint {

// The five deficient configurations for d != 2 (labelled a, b, b', c, d),
// and the quadric failure of the delta criterion.
enum class ExceptionId { None, A, B, BPrime, C, D, QuadricDelta };

std::string_view to_string(ExceptionId id);

// delta(i) = max{0, sum_{j<=i} a_j - sum_{j<=i} (n+1-j)}, with a_j = -1
// beyond the profile.  `a` must be non-increasing and 1 <= i <= n; throws
// std::invalid_argument otherwise.
int delta_affine(int n, std::span<const int> a, int i);

// delta_X(i) = max{0, sum_{j<=i} l_j - sum_{j<=i} (n+2-j)}, with l_j = 0
// beyond the profile.  Same preconditions as delta_affine.
int delta_scheme(int n, std::span<const int> lengths, int i);

struct QuadricVerdict
{
    bool independent = false;
    // 1 when every delta vanishes, 2 when the degree condition holds, 0 when
    // neither does.
    int which_condition = 0;
    int max_delta = 0;
    int degree = 0;
    std::vector<int> delta; // delta(1..n)
};

// Independence of a general scheme on quadrics.  `lengths` non-increasing,
// entries in [1, n+1].
QuadricVerdict predict_quadric_scheme(int n, std::span<const int> lengths);

// Affine form for an a-profile in any order; equivalent to the scheme form
// with lengths a_i + 1.
QuadricVerdict predict_quadric_affine(int n, std::span<const int> a);

// With exactly C(n+2, 2) conditions: is there a unique interpolating
// quadric?  True iff every partial sum of the sorted profile satisfies
// sum_{j<=i} a_j <= sum_{j<=i} (n+1-j).  Throws if the count differs.
bool quadric_unique_solution(int n, std::span<const int> a);

// C(n-i+2, 2) - deg X + sum_{j<=i} l_j: quadric cones with vertex through
// the first i support points give this many forms through X.
int cone_lower_bound(int n, std::span<const int> lengths, int i);

// max of the expected dimension and every cone bound with delta(i) > 0.
int quadric_dim_lower_bound(int n, std::span<const int> lengths);

struct Prediction
{
    int n = 0;
    int d = 0;
    int conditions = 0;     // sum (a_i + 1)
    int space_dim = 0;      // C(n+d, d)
    int expected_codim = 0; // min(conditions, space_dim)
    bool exceptional = false;
    ExceptionId exception_id = ExceptionId::None;
    // conditions == space_dim and not exceptional
    bool unique_solution = false;
    std::optional<QuadricVerdict> quadric;
};

nlohmann::json to_json(const Prediction& p);

// d != 2, d >= 1, 0 <= a_i <= n.  Throws std::invalid_argument otherwise;
// d = 2 belongs to predict_affine / predict_quadric_affine.
Prediction predict_general(int n, int d, std::span<const int> a);

// Any d >= 0: routes d = 2 to the quadric criterion, d = 0 to the trivial
// constant space, everything else to predict_general.
Prediction predict_affine(int n, int d, std::span<const int> a);

// Matching exception pattern for (n, d, profile) when d != 2, or None.
ExceptionId match_exception(int n, int d, std::span<const int> a);

struct QuadricException
{
    std::vector<int> lengths;
    int degree = 0;
    int max_delta = 0;
    SchemeType type;
};

// Every non-increasing length profile in P^n (entries <= n+1) of degree at
// most C(n+2,2) + max_extra_degree that fails both quadric conditions.
// Ordered by descending lengths lexicographically.  Since delta(i) <=
// i(i-1)/2, max_extra_degree >= n(n-1)/2 makes the list complete.
std::vector<QuadricException> enumerate_quadric_exceptions(int n, int max_extra_degree);

// Partition families used by the subspace verification runs.
//   TripleLM rows are (t, d, u): t components of residual 3, d of residual
//   2 and u <= 1 of residual 1, with 3t + 2d + u = total.
//   XO rows are multiplicities of component lengths n+1, n, ..., 1 (that
//   column order).
struct PartitionFamily
{
    enum class Kind { TripleLM, XO };
    Kind kind = Kind::TripleLM;
    int total = 0;
    int n = 0;
    std::vector<std::vector<int>> rows;
};

PartitionFamily enumerate_triple_partitions(int total);

// Default: the four families of the P^8 leftover search generalised to
// P^n: lengths n+1 down to max(n-3, 4) with at most one extra component of
// length 1 (only n+1 present), 2 (n+1 and n present) or 3 (n+1, n and n-1
// present).  `exhaustive` instead lists every partition with parts <= n+1
// and at most one part <= 3.  Requires n >= 5.
PartitionFamily enumerate_xo_partitions(int total, int n, bool exhaustive = false);

// Lengths of an XO row, non-increasing.
std::vector<int> xo_lengths(int n, std::span<const int> row);

} // namespace partint

#endif
