#include <doctest.h>

#include <algorithm>
#include <set>

#include "oracles.hpp"
#include "partint/verify.hpp"

using namespace partint;

namespace {

TrialPolicy quick(unsigned threads = 1)
{
    TrialPolicy p;
    p.threads = threads;
    return p;
}

// a rank case whose matrix is the k x k identity padded with zero rows
RankCase fixed_rank(std::string label, int k, Claim claim, int predicted)
{
    RankCase c;
    c.label = std::move(label);
    c.claim = claim;
    c.predicted_rank = predicted;
    c.build = [k](std::uint64_t) {
        Matrix<Fp> m(k + 2, 6, Fp(0, PrimeModulus()));
        for (int i = 0; i < k; ++i)
            m(i, i) = Fp(1, PrimeModulus());
        return m;
    };
    return c;
}

} // namespace

TEST_CASE("verdict logic of single cases")
{
    const auto p = quick();
    auto r = run_case(fixed_rank("full", 6, Claim::FullRank, 6), p);
    CHECK(r.verdict == Verdict::Pass);
    CHECK(r.measured.size() == 1); // stops at the first success
    r = run_case(fixed_rank("short", 5, Claim::FullRank, 6), p);
    CHECK(r.verdict == Verdict::Suspect);
    CHECK(r.measured.size() == 3);

    auto d = fixed_rank("deficient", 5, Claim::Deficient, 5);
    d.claimed_dim = 1;
    r = run_case(d, p);
    CHECK(r.verdict == Verdict::Pass);
    CHECK(r.measured_dim(0) == 1);
    d.claimed_dim = 2;
    CHECK(run_case(d, p).verdict == Verdict::Suspect);
    d.claimed_dim.reset();
    d.dim_lower_bound = 2;
    CHECK(run_case(d, p).verdict == Verdict::Suspect);
    d.dim_lower_bound = 1;
    CHECK(run_case(d, p).verdict == Verdict::Pass);
    CHECK(run_case(fixed_rank("not deficient", 6, Claim::Deficient, 5), p).verdict ==
          Verdict::Suspect);

    const std::vector<RankCase> dup{fixed_rank("x", 1, Claim::FullRank, 1),
                                    fixed_rank("x", 2, Claim::FullRank, 2)};
    CHECK_THROWS_AS(run_cases(dup, p), std::invalid_argument);
}

TEST_CASE("trial seeds follow the derivation")
{
    CHECK(oracle::mix(0) == 0xe220a8397b1dcdafull);
    CHECK(oracle::fnv("") == 0xcbf29ce484222325ull);
    CHECK(oracle::fnv("a") == 0xaf63dc4c8601ec8cull);
    auto p = quick();
    p.trials = 4;
    const auto r = run_case(fixed_rank("seeded", 3, Claim::FullRank, 6), p);
    REQUIRE(r.seeds.size() == 4);
    for (std::uint64_t t = 0; t < 4; ++t) {
        const auto inner = oracle::mix(oracle::fnv(r.label) + t);
        CHECK(r.seeds[t] == oracle::mix(p.root_seed ^ inner));
    }
}

TEST_CASE("reports do not depend on the thread count")
{
    std::vector<std::string> dumps;
    for (unsigned threads : {1u, 2u, 4u}) {
        const auto p = quick(threads);
        const auto r = verify_double_point_exceptions(p);
        dumps.push_back(to_json(r, p, false).dump());
        auto no_threads = to_json(r, p, false);
        no_threads["config"].erase("threads");
        dumps.back() = no_threads.dump();
    }
    CHECK(dumps[0] == dumps[1]);
    CHECK(dumps[0] == dumps[2]);
}

TEST_CASE("replays are byte-identical")
{
    const auto p = quick(2);
    const auto a = to_json(verify_random_sweep(p, 30), p, false).dump();
    const auto b = to_json(verify_random_sweep(p, 30), p, false).dump();
    CHECK(a == b);
    CHECK(a.find("millis") == std::string::npos);
    const auto t = to_json(verify_three_subspace_defect(p), p, true);
    CHECK(t["cases"][0].contains("millis"));
    auto other = p;
    other.root_seed ^= 1;
    CHECK(to_json(verify_random_sweep(other, 30), other, false).dump() != a);
}

TEST_CASE("more trials never lose a full-rank pass")
{
    for (int trials = 1; trials <= 4; ++trials) {
        auto p = quick();
        p.trials = trials;
        const auto r = verify_random_sweep(p, 40);
        CHECK(r.passed());
        for (const auto& c : r.cases)
            CHECK(c.measured.size() <= static_cast<std::size_t>(trials));
    }
}

TEST_CASE("double point exceptions leave one form")
{
    const auto r = verify_double_point_exceptions(quick());
    CHECK(r.cases.size() == 5);
    CHECK(r.passed());
    for (const auto& c : r.cases) {
        CHECK(c.claim == Claim::Deficient);
        for (std::size_t t = 0; t < c.measured.size(); ++t)
            CHECK(c.measured_dim(t) == 1);
    }
}

TEST_CASE("generic examples")
{
    const auto p = quick();
    CHECK(verify_generic(p, 2, 3, {2, 2, 1}).passed());
    CHECK(verify_generic(p, 3, 5, {3, 3, 3, 2, 0}).passed());
    const auto a = verify_generic(p, 2, 4, {2, 2, 2, 2, 2});
    CHECK(a.passed());
    CHECK(a.cases[0].claim == Claim::Deficient);
    const auto q = verify_generic(p, 2, 2, {2, 2});
    CHECK(q.passed());
    CHECK(q.cases[0].claim == Claim::Deficient);
    CHECK(verify_generic_scheme(p, 3, 2, {4, 4, 4}).passed());
    CHECK(verify_generic_scheme(p, 4, 3, {5, 5, 5, 5, 5, 5, 5}).passed());
    CHECK(verify_generic_scheme(p, 3, 3, {4, 4, 4, 4, 4}).passed());
}

TEST_CASE("quadric tables")
{
    const auto p = quick(2);
    const auto three = verify_quadric_table(p, 3);
    CHECK(three.passed());
    CHECK(three.cases.size() == 7);
    const auto four = verify_quadric_table(p, 4);
    CHECK(four.suspect_count() == 0);
    CHECK_FALSE(four.extra_ok);
    CHECK(four.findings.size() == 3);
    CHECK(four.cases.size() == 39);
    CHECK_THROWS_AS(verify_quadric_table(p, 5), std::invalid_argument);
}

TEST_CASE("quadric classification against measurement")
{
    const auto r = verify_quadric_equivalence(quick(2), 3, 2);
    CHECK(r.passed());
    CHECK(r.cases.size() > 100);
}

TEST_CASE("subspace suites, sampled")
{
    auto p = quick(2);
    p.sample_combos = 2;
    const auto three = verify_three_subspace_cubics(p);
    CHECK(three.passed());
    CHECK(three.cases.size() <= 10);
    for (const auto& c : three.cases)
        CHECK(c.cols == 27);
    const auto two = verify_two_subspace_leftovers(p);
    CHECK(two.passed());
    CHECK(two.cases.size() <= 18);
    for (const auto& c : two.cases)
        CHECK(c.cols == 63);
    const auto base = verify_subspace_base_cases(p, 5);
    CHECK(base.passed());
    CHECK_THROWS_AS(verify_subspace_base_cases(p, 6), std::invalid_argument);
}

TEST_CASE("the defect configuration")
{
    const auto r = verify_three_subspace_defect(quick());
    CHECK(r.passed());
    REQUIRE(r.cases.size() == 3);
    std::set<int> dims;
    for (const auto& c : r.cases)
        dims.insert(c.measured_dim(0));
    CHECK(dims == std::set<int>{0, 2, 3});
}

TEST_CASE("another prime")
{
    auto p = quick(2);
    p.prime = PrimeModulus(65521);
    CHECK(verify_double_point_exceptions(p).passed());
    CHECK(verify_quadric_table(p, 3).passed());
    CHECK(verify_random_sweep(p, 20).passed());
    CHECK(verify_three_subspace_defect(p).passed());
    for (const auto& c : verify_random_sweep(p, 5).cases)
        CHECK(c.prime == 65521);
}

TEST_CASE("base-case degree ranges")
{
    for (int n = 5; n <= 7; ++n) {
        for (const auto& t : two_subspace_triples_narrow(n)) {
            CHECK(t.o >= 3 * n + 3);
            CHECK(t.o <= 3 * n + 6);
        }
        for (const auto& t : two_subspace_triples_wide(n)) {
            CHECK(t.o >= 3 * n + 7);
            CHECK(t.o <= 5 * n + 2);
        }
        const auto pairs = one_subspace_pairs(n);
        CHECK_FALSE(pairs.empty());
        for (const auto& t : pairs) {
            CHECK(t.o >= (n + 1) * (n + 1));
            CHECK(t.o <= (n + 1) * (n + 1) + n - 1);
        }
    }
}

TEST_CASE("report formats")
{
    const auto p = quick();
    const auto r = verify_generic(p, 2, 3, {2, 1});
    const auto j = to_json(r, p, false);
    CHECK(j["schema_version"] == 1);
    CHECK(j["passed"] == true);
    CHECK(j["summary"]["cases"] == 1);
    CHECK(j["config"]["prime"] == 31991);
    const auto csv = to_csv(r, false);
    CHECK(csv.rfind("case,claim,rows,cols", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 2);
    CHECK(to_csv(r, true).find(",millis") != std::string::npos);
}

TEST_CASE("arbitrary scheme specs")
{
    SchemeSpec s;
    s.n = 3;
    s.d = 2;
    s.components = {{4, std::nullopt, std::nullopt}, {2, std::nullopt, std::nullopt}};
    const auto r = verify_scheme(quick(), s);
    CHECK(r.passed());
    CHECK(r.cases[0].predicted_rank == 6);
}
