#ifndef PARTINT_VERIFY_HPP
#define PARTINT_VERIFY_HPP

// Monte Carlo rank verification over GF(p).
//
// A random instance bounds the generic rank from below.  A full-rank claim
// therefore passes as soon as one trial reaches the predicted rank.  A
// deficiency claim passes only when every trial measures the claimed
// dimension and, where a theoretical lower bound on dim I_X exists, that
// bound reaches the claimed value; such verdicts are confirmations at k
// random instances, not proofs.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "partint/linalg.hpp"
#include "partint/reference.hpp"
#include "partint/rng.hpp"
#include "partint/scalars.hpp"
#include "partint/schemes.hpp"
#include "partint/theory.hpp"

namespace partint {

inline constexpr int kReportSchemaVersion = 1;

struct TrialPolicy
{
    int trials = 3;
    PrimeModulus prime;
    std::uint64_t root_seed = kDefaultSeed;
    // Check at most this many partition combos per degree triple, chosen
    // by a seeded shuffle; empty means all of them.
    std::optional<int> sample_combos;
    bool exhaustive_xo = false;
    // Enables n = 6, 7 in the subspace base-case suites.
    bool deep = false;
    // 0 means std::thread::hardware_concurrency().
    unsigned threads = 0;
};

nlohmann::json to_json(const TrialPolicy& p);

enum class Claim {
    FullRank,  // rank reaches predicted_rank
    Deficient, // rank stays below full in every trial
};

enum class Verdict { Pass, Suspect };

std::string_view to_string(Claim c);
std::string_view to_string(Verdict v);

// A single rank experiment: `build` maps a trial seed to a condition matrix.
struct RankCase
{
    std::string label;
    Claim claim = Claim::FullRank;
    int predicted_rank = 0;
    // Deficient claims: the exact nullspace dimension expected in every
    // trial, if known.
    std::optional<int> claimed_dim;
    // A certified lower bound on the nullspace dimension (cone bound).
    std::optional<int> dim_lower_bound;
    std::function<Matrix<Fp>(std::uint64_t seed)> build;
    std::string note;
};

struct CaseReport
{
    std::string label;
    Claim claim = Claim::FullRank;
    int predicted_rank = 0;
    std::optional<int> claimed_dim;
    std::optional<int> dim_lower_bound;
    int rows = 0;
    int cols = 0;
    std::vector<int> measured; // rank per trial run
    std::vector<std::uint64_t> seeds;
    Verdict verdict = Verdict::Suspect;
    int prime = 0;
    double millis = 0;
    std::string note;

    int measured_dim(std::size_t trial) const { return cols - measured.at(trial); }
};

struct VerificationReport
{
    std::string suite;
    std::vector<CaseReport> cases; // sorted by label
    // Suite-level checks beyond the rank cases (e.g. set equality of an
    // enumeration against a reference list).
    bool extra_ok = true;
    std::vector<std::string> findings;

    bool passed() const;
    int suspect_count() const;
};

// Trial seed k of a case: derive_seed(root, label, k).
CaseReport run_case(const RankCase& c, const TrialPolicy& policy);

// Runs cases concurrently; the result is sorted by label and does not
// depend on scheduling.  Labels must be unique (std::invalid_argument).
std::vector<CaseReport> run_cases(const std::vector<RankCase>& cases, const TrialPolicy& policy);

// A general scheme, or one with components on coordinate subspaces, as a
// rank case against scheme_basis(n, d, subspaces).
RankCase scheme_case(std::string label, int n, int d, std::vector<CoordinateSubspace> subspaces,
                     std::vector<ComponentSpec> specs, PrimeModulus prime);

// Cubics in P^8 through three disjoint codimension-3 coordinate subspaces
// (27 of them): the five residual-degree triples, every residual partition
// combination, each expected to impose 27 independent conditions.
VerificationReport verify_three_subspace_cubics(const TrialPolicy& policy);

// The triple (0,6,21) realised by 2 double points on M and 7 on N leaves
// exactly 2 cubics; 9 double points on N leave none; 2 on M and 6 on N
// are independent.
VerificationReport verify_three_subspace_defect(const TrialPolicy& policy);

// Cubics in P^8 through two codimension-3 subspaces (63 of them): the nine
// hard degree triples (deg(X_L:L), deg(X_M:M), deg X_O).
VerificationReport verify_two_subspace_leftovers(const TrialPolicy& policy);

struct DegreeTriple
{
    int l = 0;
    int m = 0;
    int o = 0;
};

// Degree triples of the base-case ranges in P^n, n >= 5.
std::vector<DegreeTriple> two_subspace_triples_narrow(int n); // 3n+3 <= deg X_O <= 3n+6
std::vector<DegreeTriple> two_subspace_triples_wide(int n);   // 3n+7 <= deg X_O <= 5n+2
// One subspace: (deg(X_L:L), deg X_O) with deg X_O = (n+1)^2 + alpha,
// 0 <= alpha <= n-1; m is unused.
std::vector<DegreeTriple> one_subspace_pairs(int n);

// All base-case ranges in P^n for n in {5, 6, 7}; n > 5 requires
// policy.deep (std::invalid_argument otherwise).
VerificationReport verify_subspace_base_cases(const TrialPolicy& policy, int n);

// Regenerates the quadric exception list in P^n (n = 3, 4) from the
// classification, compares it with the reference table and measures
// dim I_X(2) for every row of either list.
VerificationReport verify_quadric_table(const TrialPolicy& policy, int n);

// The five double-point configurations failing to impose independent
// conditions, each expected to leave exactly one form.
VerificationReport verify_double_point_exceptions(const TrialPolicy& policy);

// Affine interpolation data (n, d, a): predicted codimension against
// measured rank.
RankCase affine_case(std::string label, int n, int d, std::vector<int> a, PrimeModulus prime);
VerificationReport verify_generic(const TrialPolicy& policy, int n, int d, std::vector<int> a);

// A general scheme in P^n of the given length profile against degree-d
// forms, with the quadric classification as prediction when d = 2.
RankCase general_scheme_case(std::string label, int n, int d, std::vector<int> lengths,
                             PrimeModulus prime);
VerificationReport verify_generic_scheme(const TrialPolicy& policy, int n, int d,
                                         std::vector<int> lengths);

// `count` seeded random affine configurations with n <= 4, 3 <= d <= 5,
// sum(a_i + 1) <= C(n+d, d), avoiding the exception patterns.
VerificationReport verify_random_sweep(const TrialPolicy& policy, int count);

// Every length profile in P^n, 1 <= n <= max_n, of degree at most
// C(n+2,2) + extra: the quadric classification against measurement.
VerificationReport verify_quadric_equivalence(const TrialPolicy& policy, int max_n, int extra);

// Arbitrary serialised scheme; full rank min(rows, cols) is the claim.
VerificationReport verify_scheme(const TrialPolicy& policy, const SchemeSpec& spec);

// Report serialisation.  Wall time appears only when `timing` is set, so
// that replays are byte-identical.
nlohmann::json to_json(const VerificationReport& r, const TrialPolicy& policy, bool timing);
std::string to_csv(const VerificationReport& r, bool timing);

} // namespace partint

#endif
