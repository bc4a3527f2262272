#include "partint/theory.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>

namespace partint {

std::string_view to_string(ExceptionId id)
{
    switch (id) {
    case ExceptionId::None: return "none";
    case ExceptionId::A: return "a";
    case ExceptionId::B: return "b";
    case ExceptionId::BPrime: return "b'";
    case ExceptionId::C: return "c";
    case ExceptionId::D: return "d";
    case ExceptionId::QuadricDelta: return "quadric-delta";
    }
    return "none";
}

namespace {

void require_sorted(std::span<const int> v)
{
    if (!std::is_sorted(v.begin(), v.end(), std::greater<>()))
        throw std::invalid_argument("profile must be non-increasing");
}

void require_index(int n, int i)
{
    if (i < 1 || i > n)
        throw std::invalid_argument("delta index " + std::to_string(i) + " outside [1, n]");
}

std::vector<int> sorted_desc(std::span<const int> v)
{
    std::vector<int> s(v.begin(), v.end());
    std::sort(s.begin(), s.end(), std::greater<>());
    return s;
}

int choose(int n, int k) { return static_cast<int>(binomial(n, k)); }

} // namespace

int delta_affine(int n, std::span<const int> a, int i)
{
    require_sorted(a);
    require_index(n, i);
    int excess = 0;
    for (int j = 1; j <= i; ++j) {
        const int aj = j <= static_cast<int>(a.size()) ? a[j - 1] : -1;
        excess += aj - (n + 1 - j);
    }
    return std::max(0, excess);
}

int delta_scheme(int n, std::span<const int> lengths, int i)
{
    require_sorted(lengths);
    require_index(n, i);
    int excess = 0;
    for (int j = 1; j <= i; ++j) {
        const int lj = j <= static_cast<int>(lengths.size()) ? lengths[j - 1] : 0;
        excess += lj - (n + 2 - j);
    }
    return std::max(0, excess);
}

QuadricVerdict predict_quadric_scheme(int n, std::span<const int> lengths)
{
    require_sorted(lengths);
    for (int l : lengths)
        if (l < 1 || l > n + 1)
            throw std::invalid_argument("component length outside [1, n+1]");
    QuadricVerdict v;
    v.degree = std::accumulate(lengths.begin(), lengths.end(), 0);
    for (int i = 1; i <= n; ++i) {
        v.delta.push_back(delta_scheme(n, lengths, i));
        v.max_delta = std::max(v.max_delta, v.delta.back());
    }
    if (v.max_delta == 0)
        v.which_condition = 1;
    else if (v.degree >= choose(n + 2, 2) + v.max_delta)
        v.which_condition = 2;
    v.independent = v.which_condition != 0;
    return v;
}

QuadricVerdict predict_quadric_affine(int n, std::span<const int> a)
{
    std::vector<int> lengths;
    for (int ai : sorted_desc(a)) {
        if (ai < 0 || ai > n)
            throw std::invalid_argument("profile entry outside [0, n]");
        lengths.push_back(ai + 1);
    }
    return predict_quadric_scheme(n, lengths);
}

bool quadric_unique_solution(int n, std::span<const int> a)
{
    int conditions = 0;
    for (int ai : a)
        conditions += ai + 1;
    if (conditions != choose(n + 2, 2))
        throw std::invalid_argument("uniqueness needs exactly C(n+2,2) conditions");
    return predict_quadric_affine(n, a).which_condition == 1;
}

int cone_lower_bound(int n, std::span<const int> lengths, int i)
{
    require_sorted(lengths);
    require_index(n, i);
    const int deg = std::accumulate(lengths.begin(), lengths.end(), 0);
    int head = 0;
    for (int j = 0; j < i && j < static_cast<int>(lengths.size()); ++j)
        head += lengths[j];
    return choose(n - i + 2, 2) - deg + head;
}

int quadric_dim_lower_bound(int n, std::span<const int> lengths)
{
    const int deg = std::accumulate(lengths.begin(), lengths.end(), 0);
    int bound = std::max(0, choose(n + 2, 2) - deg);
    for (int i = 1; i <= n; ++i)
        if (delta_scheme(n, lengths, i) > 0)
            bound = std::max(bound, cone_lower_bound(n, lengths, i));
    return bound;
}

nlohmann::json to_json(const Prediction& p)
{
    nlohmann::json j;
    j["n"] = p.n;
    j["d"] = p.d;
    j["conditions"] = p.conditions;
    j["space_dim"] = p.space_dim;
    j["expected_codim"] = p.expected_codim;
    j["exceptional"] = p.exceptional;
    j["exception_id"] = std::string(to_string(p.exception_id));
    j["unique_solution"] = p.unique_solution;
    if (p.quadric) {
        j["independent"] = p.quadric->independent;
        j["max_delta"] = p.quadric->max_delta;
        j["which_condition"] = p.quadric->which_condition;
        j["delta"] = p.quadric->delta;
    }
    return j;
}

ExceptionId match_exception(int n, int d, std::span<const int> a)
{
    const auto s = sorted_desc(a);
    auto all = [&](int value, std::size_t count) {
        return s.size() == count && std::all_of(s.begin(), s.end(), [&](int x) { return x == value; });
    };
    if (n == 2 && d == 4 && all(2, 5))
        return ExceptionId::A;
    if (n == 3 && d == 4 && all(3, 9))
        return ExceptionId::B;
    if (n == 3 && d == 4 && s.size() == 9 && s.back() == 2 &&
        std::all_of(s.begin(), s.end() - 1, [](int x) { return x == 3; }))
        return ExceptionId::BPrime;
    if (n == 4 && d == 3 && all(4, 7))
        return ExceptionId::C;
    if (n == 4 && d == 4 && all(4, 14))
        return ExceptionId::D;
    return ExceptionId::None;
}

namespace {

Prediction base_prediction(int n, int d, std::span<const int> a)
{
    if (n < 1)
        throw std::invalid_argument("n must be at least 1");
    if (d < 0)
        throw std::invalid_argument("d must be non-negative");
    Prediction p;
    p.n = n;
    p.d = d;
    for (int ai : a) {
        if (ai < 0 || ai > n)
            throw std::invalid_argument("profile entry " + std::to_string(ai) + " outside [0, n]");
        p.conditions += ai + 1;
    }
    p.space_dim = choose(n + d, d);
    p.expected_codim = std::min(p.conditions, p.space_dim);
    return p;
}

} // namespace

Prediction predict_general(int n, int d, std::span<const int> a)
{
    if (d == 2)
        throw std::invalid_argument("d = 2 is governed by the quadric criterion");
    if (d < 1)
        throw std::invalid_argument("predict_general needs d >= 1");
    Prediction p = base_prediction(n, d, a);
    p.exception_id = match_exception(n, d, a);
    p.exceptional = p.exception_id != ExceptionId::None;
    p.unique_solution = p.conditions == p.space_dim && !p.exceptional;
    return p;
}

Prediction predict_affine(int n, int d, std::span<const int> a)
{
    if (d == 2) {
        Prediction p = base_prediction(n, d, a);
        p.quadric = predict_quadric_affine(n, a);
        p.exceptional = !p.quadric->independent;
        p.exception_id = p.exceptional ? ExceptionId::QuadricDelta : ExceptionId::None;
        p.unique_solution = p.conditions == p.space_dim && !p.exceptional;
        return p;
    }
    if (d == 0) {
        // constants: every derivative condition is vacuous
        Prediction p = base_prediction(n, d, a);
        p.expected_codim = a.empty() ? 0 : 1;
        p.unique_solution = a.size() == 1 && p.conditions == 1;
        return p;
    }
    return predict_general(n, d, a);
}

std::vector<QuadricException> enumerate_quadric_exceptions(int n, int max_extra_degree)
{
    if (n < 1)
        throw std::invalid_argument("n must be at least 1");
    const int max_deg = choose(n + 2, 2) + max_extra_degree;
    std::vector<QuadricException> out;
    std::vector<int> current;
    std::function<void(int, int)> rec = [&](int max_part, int deg) {
        if (!current.empty()) {
            const auto v = predict_quadric_scheme(n, current);
            if (!v.independent)
                out.push_back({current, deg, v.max_delta, SchemeType::from_lengths(n, current)});
        }
        for (int l = std::min(max_part, max_deg - deg); l >= 1; --l) {
            current.push_back(l);
            rec(l, deg + l);
            current.pop_back();
        }
    };
    rec(n + 1, 0);
    std::sort(out.begin(), out.end(), [](const QuadricException& x, const QuadricException& y) {
        return x.lengths > y.lengths;
    });
    return out;
}

PartitionFamily enumerate_triple_partitions(int total)
{
    if (total < 0)
        throw std::invalid_argument("partition total must be non-negative");
    PartitionFamily fam{PartitionFamily::Kind::TripleLM, total, 0, {}};
    auto ceil_div = [](int a, int b) { return (a + b - 1) / b; };
    for (int t = 0; t <= ceil_div(total, 3); ++t)
        for (int d = 0; d <= ceil_div(total, 2); ++d)
            for (int u = 0; u <= 1; ++u)
                if (3 * t + 2 * d + u == total)
                    fam.rows.push_back({t, d, u});
    return fam;
}

PartitionFamily enumerate_xo_partitions(int total, int n, bool exhaustive)
{
    if (total < 0)
        throw std::invalid_argument("partition total must be non-negative");
    if (n < 5)
        throw std::invalid_argument("XO partitions are defined for n >= 5");
    PartitionFamily fam{PartitionFamily::Kind::XO, total, n, {}};
    std::set<std::vector<int>> seen;
    // row index of length l is n+1-l
    auto emit = [&](const std::vector<int>& counts_by_length) {
        std::vector<int> row(n + 1, 0);
        for (int l = 1; l <= n + 1; ++l)
            row[n + 1 - l] = counts_by_length[l];
        if (seen.insert(row).second)
            fam.rows.push_back(std::move(row));
    };

    std::vector<int> counts(n + 2, 0);
    if (exhaustive) {
        std::function<void(int, int, bool)> rec = [&](int max_part, int left, bool short_used) {
            if (left == 0) {
                emit(counts);
                return;
            }
            for (int l = std::min(max_part, left); l >= 1; --l) {
                if (l <= 3 && short_used)
                    break;
                ++counts[l];
                rec(l, left - l, short_used || l <= 3);
                --counts[l];
            }
        };
        rec(n + 1, total, false);
        return fam;
    }

    // Nonnegative combinations of `lengths` summing to `target`, in nested
    // loop order (first length outermost, ascending counts).
    std::function<void(const std::vector<int>&, std::size_t, int, int)> combos =
        [&](const std::vector<int>& lengths, std::size_t k, int left, int short_len) {
            if (k == lengths.size()) {
                if (left == 0) {
                    if (short_len > 0)
                        ++counts[short_len];
                    emit(counts);
                    if (short_len > 0)
                        --counts[short_len];
                }
                return;
            }
            const int l = lengths[k];
            for (int c = 0; c * l <= left; ++c) {
                counts[l] += c;
                combos(lengths, k + 1, left - c * l, short_len);
                counts[l] -= c;
            }
        };
    if (total >= 1)
        combos({n + 1}, 0, total - 1, 1);
    if (total >= 2)
        combos({n + 1, n}, 0, total - 2, 2);
    if (total >= 3)
        combos({n + 1, n, n - 1}, 0, total - 3, 3);
    std::vector<int> main;
    for (int l = n + 1; l >= std::max(n - 3, 4); --l)
        main.push_back(l);
    combos(main, 0, total, 0);
    return fam;
}

std::vector<int> xo_lengths(int n, std::span<const int> row)
{
    if (row.size() != static_cast<std::size_t>(n + 1))
        throw std::invalid_argument("XO row must have n+1 entries");
    std::vector<int> out;
    for (int k = 0; k <= n; ++k)
        out.insert(out.end(), row[k], n + 1 - k);
    return out;
}

} // namespace partint
