#include <doctest.h>

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "oracles.hpp"
#include "partint/reference.hpp"
#include "partint/theory.hpp"

using namespace partint;

namespace {

using Profile = std::vector<int>;

// all non-increasing profiles with parts in [lo, hi], at most max_len of
// them, and total weight <= max_weight, weight of a part being part + offset
std::vector<Profile> profiles(int lo, int hi, int offset, int max_weight, std::size_t max_len = 64)
{
    std::vector<Profile> out;
    Profile cur;
    std::function<void(int, int)> rec = [&](int top, int w) {
        out.push_back(cur);
        if (cur.size() == max_len)
            return;
        for (int v = top; v >= lo; --v)
            if (w + v + offset <= max_weight) {
                cur.push_back(v);
                rec(v, w + v + offset);
                cur.pop_back();
            }
    };
    rec(hi, 0);
    return out;
}

// rank of a random scheme of the given lengths on quadrics, best of three draws
int measured_rank(int n, const Profile& lengths)
{
    std::vector<ComponentSpec> specs;
    for (int l : lengths)
        specs.push_back({l, std::nullopt, std::nullopt});
    const auto basis = build_basis(BasisMode::Homogeneous, n, 2);
    const PrimeModulus p;
    int best = 0;
    for (std::uint64_t s = 0; s < 3; ++s) {
        const auto m = condition_matrix_projective(random_instance(n, {}, specs, p, 1000 + s), basis);
        std::vector<std::vector<std::uint64_t>> raw(m.rows(), std::vector<std::uint64_t>(m.cols()));
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j)
                raw[i][j] = m(i, j).residue();
        best = std::max(best, oracle::rank_mod(raw, p.value()));
    }
    return best;
}

std::set<Profile> lengths_of(const std::vector<QuadricException>& v)
{
    std::set<Profile> out;
    for (const auto& e : v)
        out.insert(e.lengths);
    return out;
}

} // namespace

TEST_CASE("predictions for simple problems")
{
    const Profile lagrange(10, 0);
    auto p = predict_affine(2, 3, lagrange);
    CHECK(p.conditions == 10);
    CHECK(p.space_dim == 10);
    CHECK(p.unique_solution);
    CHECK_FALSE(p.exceptional);

    p = predict_affine(2, 4, Profile(5, 2));
    CHECK(p.exceptional);
    CHECK(p.exception_id == ExceptionId::A);
    CHECK_FALSE(p.unique_solution);

    p = predict_affine(3, 3, Profile(5, 3));
    CHECK(p.conditions == 20);
    CHECK(p.unique_solution);

    p = predict_affine(1, 3, Profile{1, 1});
    CHECK(p.unique_solution); // two-point Hermite on a line

    p = predict_affine(2, 2, Profile{2, 2});
    CHECK(p.exception_id == ExceptionId::QuadricDelta);
    REQUIRE(p.quadric);
    CHECK(p.quadric->delta == std::vector<int>{0, 1});
    CHECK_FALSE(p.unique_solution);

    p = predict_affine(2, 5, Profile{2, 2, 1, 0});
    CHECK(p.expected_codim == 9);
    CHECK(p.space_dim == 21);

    p = predict_affine(3, 0, Profile{2});
    CHECK(p.expected_codim == 1);
    CHECK_FALSE(p.unique_solution);
    CHECK(predict_affine(3, 0, Profile{0}).unique_solution);
    CHECK(predict_affine(3, 0, Profile{}).expected_codim == 0);

    CHECK_THROWS_AS(predict_general(3, 2, Profile{1}), std::invalid_argument);
    CHECK_THROWS_AS(predict_affine(3, 3, Profile{4}), std::invalid_argument);
    CHECK_THROWS_AS(predict_affine(0, 3, Profile{}), std::invalid_argument);

    const auto j = to_json(predict_affine(2, 2, Profile{2, 2}));
    CHECK(j["exception_id"] == "quadric-delta");
    CHECK(j["max_delta"] == 1);
}

TEST_CASE("predictions ignore the order of the profile")
{
    std::mt19937 gen(7);
    for (int t = 0; t < 300; ++t) {
        const int n = 1 + static_cast<int>(gen() % 4);
        const int d = static_cast<int>(gen() % 6);
        Profile a(gen() % 9);
        for (auto& x : a)
            x = static_cast<int>(gen() % (n + 1));
        auto b = a;
        std::shuffle(b.begin(), b.end(), gen);
        CHECK(to_json(predict_affine(n, d, a)) == to_json(predict_affine(n, d, b)));
    }
}

TEST_CASE("exactly five deficient patterns outside quadrics")
{
    const std::map<ExceptionId, std::tuple<int, int, Profile>> expected{
        {ExceptionId::A, {2, 4, Profile(5, 2)}},
        {ExceptionId::B, {3, 4, Profile(9, 3)}},
        {ExceptionId::BPrime, {3, 4, Profile{3, 3, 3, 3, 3, 3, 3, 3, 2}}},
        {ExceptionId::C, {4, 3, Profile(7, 4)}},
        {ExceptionId::D, {4, 4, Profile(14, 4)}},
    };
    for (const auto& [id, case_] : expected) {
        auto [n, d, a] = case_;
        CHECK(match_exception(n, d, a) == id);
        std::reverse(a.begin(), a.end());
        CHECK(match_exception(n, d, a) == id);
    }
    // every profile with at most one value-poorer point than the maximal
    // one, in the small range, matches only these
    std::set<ExceptionId> seen;
    int matches = 0;
    for (int n = 1; n <= 4; ++n)
        for (int d = 1; d <= 6; ++d) {
            if (d == 2)
                continue;
            const int space = static_cast<int>(oracle::choose(n + d, d));
            for (int k = 1; k * (n + 1) <= space + n + 1; ++k)
                for (int last = 0; last <= n; ++last) {
                    Profile a(k, n);
                    a.back() = last;
                    const auto id = match_exception(n, d, a);
                    if (id != ExceptionId::None) {
                        seen.insert(id);
                        ++matches;
                    }
                }
        }
    CHECK(seen.size() == 5);
    CHECK(matches == 5);
    CHECK(match_exception(3, 4, Profile{3, 3, 3, 3, 3, 3, 3, 2, 2}) == ExceptionId::None);
    CHECK(match_exception(2, 4, Profile(6, 2)) == ExceptionId::None);
}

TEST_CASE("delta examples and preconditions")
{
    for (int n = 1; n <= 8; ++n) {
        const Profile pair{n, n};
        CHECK(delta_affine(n, pair, 1) == 0);
        if (n >= 2)
            CHECK(delta_affine(n, pair, 2) == 1);
    }
    CHECK(delta_affine(3, Profile{3, 3, 3}, 3) == 3);
    CHECK(delta_scheme(3, Profile{4, 4, 4}, 3) == 3);
    CHECK(delta_scheme(3, Profile{4, 4}, 3) == 0);
    CHECK(delta_affine(3, Profile{3}, 3) == 0);
    CHECK_THROWS_AS(delta_affine(3, Profile{1, 2}, 1), std::invalid_argument);
    CHECK_THROWS_AS(delta_affine(3, Profile{2}, 0), std::invalid_argument);
    CHECK_THROWS_AS(delta_scheme(3, Profile{2}, 4), std::invalid_argument);
}

TEST_CASE("affine and scheme deltas agree under a -> a + 1")
{
    for (int n = 1; n <= 6; ++n)
        for (const auto& a : profiles(0, n, 0, 8 * n, 8)) {
            Profile l;
            for (int x : a)
                l.push_back(x + 1);
            for (int i = 1; i <= n; ++i) {
                const int da = delta_affine(n, a, i);
                CHECK(da == delta_scheme(n, l, i));
                CHECK(da == oracle::delta(n, a, i, -1, 1));
            }
        }
}

TEST_CASE("quadric verdicts")
{
    auto v = predict_quadric_scheme(3, Profile{4, 4, 2});
    CHECK_FALSE(v.independent);
    CHECK(v.max_delta == 1);
    CHECK(v.degree == 10);
    v = predict_quadric_scheme(3, Profile{4, 4, 2, 1, 1, 1});
    CHECK(v.independent);
    CHECK(v.which_condition == 2);
    v = predict_quadric_scheme(3, Profile{4, 3, 2});
    CHECK(v.which_condition == 1);
    CHECK(predict_quadric_affine(3, Profile{1, 3, 3}).max_delta == v.max_delta + 1);

    CHECK(quadric_unique_solution(2, Profile{2, 1, 0}));
    CHECK_FALSE(quadric_unique_solution(2, Profile{2, 2}));
    CHECK_THROWS_AS(quadric_unique_solution(2, Profile{2}), std::invalid_argument);
}

TEST_CASE("quadric cone bounds")
{
    CHECK(cone_lower_bound(3, Profile{4, 4, 4}, 3) == 1);
    CHECK(cone_lower_bound(3, Profile{4, 4}, 2) == 3);
    CHECK(quadric_dim_lower_bound(3, Profile{4, 4, 4}) == 1);
    CHECK(quadric_dim_lower_bound(3, Profile{4, 4}) == 3);
    CHECK(quadric_dim_lower_bound(3, Profile{4, 4, 2}) == 1);
    CHECK(quadric_dim_lower_bound(2, Profile{3, 3}) == 1);
    CHECK(quadric_dim_lower_bound(3, Profile{1}) == 9);
}

TEST_CASE("quadric exceptions on lines and planes")
{
    const auto one = enumerate_quadric_exceptions(1, 4);
    CHECK(one.empty());
    const auto two = enumerate_quadric_exceptions(2, 4);
    REQUIRE(two.size() == 1);
    CHECK(two[0].lengths == Profile{3, 3});
    CHECK(two[0].type.m == std::vector<int>{0, 0, 2});
}

TEST_CASE("quadric exceptions match the reference lists")
{
    for (int n = 3; n <= 4; ++n) {
        const auto found = lengths_of(enumerate_quadric_exceptions(n, n * (n - 1) / 2));
        std::set<Profile> ref;
        for (const auto& row : quadric_reference_table(n)) {
            ref.insert(row.lengths);
            const auto v = predict_quadric_scheme(n, row.lengths);
            CHECK_FALSE(v.independent);
            CHECK(v.degree == row.degree);
            CHECK(v.max_delta == row.max_delta);
            CHECK(SchemeType::from_lengths(n, row.lengths).m == row.m);
        }
        std::set<Profile> extra;
        std::set_difference(found.begin(), found.end(), ref.begin(), ref.end(),
                            std::inserter(extra, extra.end()));
        CHECK(std::includes(found.begin(), found.end(), ref.begin(), ref.end()));
        if (n == 3)
            CHECK(extra.empty());
        else
            CHECK(extra == std::set<Profile>{{5, 4, 4, 4}, {5, 4, 4, 3}, {5, 4, 3, 3}});
    }
    CHECK(quadric_reference_table(3).size() == 7);
    CHECK(quadric_reference_table(4).size() == 36);
    CHECK_THROWS_AS(quadric_reference_table(5), std::invalid_argument);
}

TEST_CASE("quadric exceptions agree with measured ranks")
{
    for (int n = 2; n <= 4; ++n) {
        const int space = static_cast<int>(oracle::choose(n + 2, 2));
        const int extra = n == 4 ? 3 : n * (n - 1) / 2;
        const auto found = lengths_of(enumerate_quadric_exceptions(n, extra));
        std::set<Profile> deficient;
        for (const auto& l : profiles(1, n + 1, 0, space + extra)) {
            if (l.empty())
                continue;
            const int deg = std::accumulate(l.begin(), l.end(), 0);
            if (measured_rank(n, l) < std::min(deg, space))
                deficient.insert(l);
        }
        CHECK_MESSAGE(found == deficient, "n=" << n);
    }
}

TEST_CASE("quadric exception lists are complete and nested")
{
    for (int n = 2; n <= 5; ++n) {
        const int full = n * (n - 1) / 2;
        const auto complete = lengths_of(enumerate_quadric_exceptions(n, full));
        CHECK(lengths_of(enumerate_quadric_exceptions(n, full + 3)) == complete);
        const auto small = lengths_of(enumerate_quadric_exceptions(n, 0));
        CHECK(std::includes(complete.begin(), complete.end(), small.begin(), small.end()));
        const auto list = enumerate_quadric_exceptions(n, full);
        CHECK(std::is_sorted(list.begin(), list.end(), [](const auto& x, const auto& y) {
            return x.lengths > y.lengths;
        }));
    }
}

TEST_CASE("a point added to a deficient scheme stays deficient below the degree threshold")
{
    for (int n = 2; n <= 5; ++n) {
        const int space = static_cast<int>(oracle::choose(n + 2, 2));
        for (const auto& e : enumerate_quadric_exceptions(n, n * (n - 1) / 2)) {
            auto l = e.lengths;
            l.push_back(1);
            const auto v = predict_quadric_scheme(n, l);
            if (e.degree + 1 < space + e.max_delta)
                CHECK_FALSE(v.independent);
            CHECK(v.max_delta >= e.max_delta);
        }
    }
}

TEST_CASE("triple partitions")
{
    const auto six = enumerate_triple_partitions(6);
    CHECK(six.rows == std::vector<std::vector<int>>{{0, 3, 0}, {1, 1, 1}, {2, 0, 0}});
    CHECK(enumerate_triple_partitions(0).rows == std::vector<std::vector<int>>{{0, 0, 0}});
    CHECK(enumerate_triple_partitions(1).rows == std::vector<std::vector<int>>{{0, 0, 1}});
    for (int total = 0; total <= 30; ++total) {
        const auto fam = enumerate_triple_partitions(total);
        std::set<std::vector<int>> distinct(fam.rows.begin(), fam.rows.end());
        CHECK(distinct.size() == fam.rows.size());
        int expected = 0;
        for (int t = 0; 3 * t <= total; ++t)
            for (int u = 0; u <= 1; ++u)
                if ((total - 3 * t - u) >= 0 && (total - 3 * t - u) % 2 == 0)
                    ++expected;
        CHECK(static_cast<int>(fam.rows.size()) == expected);
        for (const auto& r : fam.rows) {
            CHECK(3 * r[0] + 2 * r[1] + r[2] == total);
            CHECK(r[2] <= 1);
        }
    }
    CHECK_THROWS_AS(enumerate_triple_partitions(-1), std::invalid_argument);
}

TEST_CASE("XO partitions")
{
    for (int n = 5; n <= 9; ++n)
        for (int total = 0; total <= 3 * n; ++total) {
            const auto fam = enumerate_xo_partitions(total, n);
            const auto all = enumerate_xo_partitions(total, n, true);
            const std::set<std::vector<int>> every(all.rows.begin(), all.rows.end());
            CHECK(every.size() == all.rows.size());
            std::set<std::vector<int>> distinct;
            for (const auto& r : fam.rows) {
                CHECK(r.size() == static_cast<std::size_t>(n + 1));
                const auto l = xo_lengths(n, r);
                CHECK(std::accumulate(l.begin(), l.end(), 0) == total);
                CHECK(std::count_if(l.begin(), l.end(), [](int x) { return x <= 3; }) <= 1);
                CHECK(std::is_sorted(l.begin(), l.end(), std::greater<>()));
                CHECK(every.count(r) == 1);
                distinct.insert(r);
            }
            CHECK(distinct.size() == fam.rows.size());
        }
    // nine in P^8: a double point; 5 + 4 and 8 + 1 only in the exhaustive list
    const auto nine = enumerate_xo_partitions(9, 8);
    const auto every = enumerate_xo_partitions(9, 8, true);
    std::set<std::vector<int>> rows(nine.rows.begin(), nine.rows.end());
    std::set<std::vector<int>> all(every.rows.begin(), every.rows.end());
    CHECK(rows.size() == 1);
    CHECK(rows.count({1, 0, 0, 0, 0, 0, 0, 0, 0}) == 1);
    CHECK(all.count({0, 0, 0, 0, 1, 1, 0, 0, 0}) == 1);
    CHECK(all.count({0, 1, 0, 0, 0, 0, 0, 0, 1}) == 1);
    CHECK(all.count({0, 0, 0, 0, 0, 1, 0, 1, 1}) == 0); // two short parts
    CHECK(xo_lengths(5, std::vector<int>{1, 0, 2, 0, 0, 1}) == Profile{6, 4, 4, 1});
    CHECK_THROWS_AS(enumerate_xo_partitions(9, 4), std::invalid_argument);
    CHECK_THROWS_AS(xo_lengths(5, std::vector<int>{1}), std::invalid_argument);
}
