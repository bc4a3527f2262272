#include "partint/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <memory>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace partint {

std::string_view to_string(Claim c)
{
    return c == Claim::FullRank ? "full-rank" : "deficient";
}

std::string_view to_string(Verdict v) { return v == Verdict::Pass ? "PASS" : "SUSPECT"; }

nlohmann::json to_json(const TrialPolicy& p)
{
    nlohmann::json j;
    j["trials"] = p.trials;
    j["prime"] = p.prime.value();
    j["seed"] = p.root_seed;
    j["deep"] = p.deep;
    j["exhaustive_xo"] = p.exhaustive_xo;
    if (p.sample_combos)
        j["sample_combos"] = *p.sample_combos;
    else
        j["sample_combos"] = nullptr;
    return j;
}

bool VerificationReport::passed() const { return extra_ok && suspect_count() == 0; }

int VerificationReport::suspect_count() const
{
    return static_cast<int>(std::count_if(cases.begin(), cases.end(), [](const CaseReport& c) {
        return c.verdict != Verdict::Pass;
    }));
}

namespace {

std::string join(const std::vector<int>& v, const char* sep = ",")
{
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i)
            s += sep;
        s += std::to_string(v[i]);
    }
    return s;
}

void judge(CaseReport& r)
{
    const int full = std::min(r.rows, r.cols);
    const auto trials = r.measured.size();
    if (trials == 0) {
        r.verdict = Verdict::Suspect;
        return;
    }
    for (int m : r.measured)
        if (m > full) {
            r.verdict = Verdict::Suspect;
            r.note = "measured rank exceeds matrix size";
            return;
        }

    if (r.claim == Claim::FullRank) {
        const bool hit = std::find(r.measured.begin(), r.measured.end(), r.predicted_rank) !=
                         r.measured.end();
        const bool over = std::any_of(r.measured.begin(), r.measured.end(),
                                      [&](int m) { return m > r.predicted_rank; });
        r.verdict = hit && !over ? Verdict::Pass : Verdict::Suspect;
        if (over)
            r.note = "measured rank above prediction";
        return;
    }

    bool ok = true;
    for (std::size_t t = 0; t < trials; ++t) {
        const int dim = r.measured_dim(t);
        if (r.measured[t] >= full)
            ok = false;
        if (r.claimed_dim && dim != *r.claimed_dim)
            ok = false;
        if (r.dim_lower_bound && dim < *r.dim_lower_bound) {
            ok = false;
            r.note = "measured dimension below the certified lower bound";
        }
    }
    if (r.claimed_dim && r.dim_lower_bound && *r.dim_lower_bound < *r.claimed_dim)
        ok = false;
    r.verdict = ok ? Verdict::Pass : Verdict::Suspect;
    if (ok && r.note.empty())
        r.note = "confirmed at " + std::to_string(trials) + " random instances";
}

} // namespace

CaseReport run_case(const RankCase& c, const TrialPolicy& policy)
{
    if (policy.trials < 1)
        throw std::invalid_argument("trials must be at least 1");
    CaseReport r;
    r.label = c.label;
    r.claim = c.claim;
    r.predicted_rank = c.predicted_rank;
    r.claimed_dim = c.claimed_dim;
    r.dim_lower_bound = c.dim_lower_bound;
    r.prime = static_cast<int>(policy.prime.value());
    r.note = c.note;

    const auto start = std::chrono::steady_clock::now();
    try {
        for (int t = 0; t < policy.trials; ++t) {
            const auto seed = derive_seed(policy.root_seed, c.label, static_cast<std::uint64_t>(t));
            const Matrix<Fp> m = c.build(seed);
            r.rows = static_cast<int>(m.rows());
            r.cols = static_cast<int>(m.cols());
            r.seeds.push_back(seed);
            r.measured.push_back(static_cast<int>(rank(m)));
            if (c.claim == Claim::FullRank && r.measured.back() == c.predicted_rank)
                break;
        }
        judge(r);
    } catch (const std::exception& e) {
        r.verdict = Verdict::Suspect;
        r.note = e.what();
    }
    r.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                   .count();
    return r;
}

std::vector<CaseReport> run_cases(const std::vector<RankCase>& cases, const TrialPolicy& policy)
{
    std::set<std::string> labels;
    for (const auto& c : cases)
        if (!labels.insert(c.label).second)
            throw std::invalid_argument("duplicate case label " + c.label);

    std::vector<CaseReport> out(cases.size());
    unsigned workers = policy.threads ? policy.threads : std::thread::hardware_concurrency();
    workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(cases.size())));
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next++; i < cases.size(); i = next++)
            out[i] = run_case(cases[i], policy);
    };
    if (workers <= 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w)
            pool.emplace_back(work);
    }
    std::sort(out.begin(), out.end(),
              [](const CaseReport& a, const CaseReport& b) { return a.label < b.label; });
    return out;
}

RankCase scheme_case(std::string label, int n, int d, std::vector<CoordinateSubspace> subspaces,
                     std::vector<ComponentSpec> specs, PrimeModulus prime)
{
    auto basis = std::make_shared<const MonomialBasis>(scheme_basis(n, d, subspaces));
    int rows = 0;
    for (const auto& s : specs)
        rows += condition_rows(s);
    RankCase c;
    c.label = std::move(label);
    c.claim = Claim::FullRank;
    c.predicted_rank = std::min(rows, static_cast<int>(basis->size()));
    c.build = [=, subspaces = std::move(subspaces), specs = std::move(specs)](std::uint64_t seed) {
        const auto x = random_instance(n, subspaces, specs, prime, seed);
        auto m = condition_matrix_projective(x, *basis);
        if (m.rows() == 0)
            m = Matrix<Fp>(0, basis->size(), Fp(0, prime));
        return m;
    };
    return c;
}

namespace {

std::vector<CoordinateSubspace> coordinate_triples(int count)
{
    std::vector<CoordinateSubspace> out;
    for (int s = 0; s < count; ++s)
        out.push_back({{3 * s, 3 * s + 1, 3 * s + 2}});
    return out;
}

// (t, d, u) row: t components of residual 3, d of residual 2, u of 1.
void append_residual_row(std::vector<ComponentSpec>& specs, int n, int subspace,
                         const std::vector<int>& row)
{
    for (int r = 3; r >= 1; --r)
        for (int i = 0; i < row[3 - r]; ++i)
            specs.push_back(component_with_residual(n, 3, subspace, r));
}

void append_general(std::vector<ComponentSpec>& specs, const std::vector<int>& lengths)
{
    for (int l : lengths)
        specs.push_back({l, std::nullopt, std::nullopt});
}

std::string tdu(const std::vector<int>& row) { return "(" + join(row) + ")"; }

// Mixed-radix indices of the cartesian product of families of the given
// sizes, optionally thinned to `sample` entries by a seeded shuffle.
std::vector<std::vector<std::size_t>> product_indices(const std::vector<std::size_t>& sizes,
                                                      std::optional<int> sample,
                                                      std::uint64_t seed)
{
    std::vector<std::vector<std::size_t>> out;
    std::size_t total = 1;
    for (auto s : sizes)
        total *= s;
    if (total == 0)
        return out;
    std::vector<std::size_t> picks(total);
    for (std::size_t i = 0; i < total; ++i)
        picks[i] = i;
    if (sample && static_cast<std::size_t>(*sample) < total) {
        Rng rng(seed);
        for (std::size_t i = total - 1; i > 0; --i)
            std::swap(picks[i], picks[rng.below(i + 1)]);
        picks.resize(static_cast<std::size_t>(std::max(0, *sample)));
        std::sort(picks.begin(), picks.end());
    }
    for (auto flat : picks) {
        std::vector<std::size_t> idx(sizes.size());
        for (std::size_t k = sizes.size(); k-- > 0;) {
            idx[k] = flat % sizes[k];
            flat /= sizes[k];
        }
        out.push_back(std::move(idx));
    }
    return out;
}

// Cases for subspaces 0..residual_totals.size()-1 each carrying the given
// residual degree, plus general components of total degree o.
void subspace_cases(std::vector<RankCase>& out, const std::string& prefix, int n,
                    const std::vector<int>& residual_totals, int o, const TrialPolicy& policy,
                    const std::function<bool(const std::vector<int>&)>& keep_first = {})
{
    const auto subspaces = coordinate_triples(static_cast<int>(residual_totals.size()));
    std::vector<std::vector<std::vector<int>>> families;
    for (std::size_t s = 0; s < residual_totals.size(); ++s) {
        auto rows = enumerate_triple_partitions(residual_totals[s]).rows;
        if (s == 0 && keep_first)
            std::erase_if(rows, [&](const std::vector<int>& r) { return !keep_first(r); });
        families.push_back(std::move(rows));
    }
    const bool with_o = o > 0;
    if (with_o)
        families.push_back(enumerate_xo_partitions(o, n, policy.exhaustive_xo).rows);

    std::vector<std::size_t> sizes;
    for (const auto& f : families)
        sizes.push_back(f.size());
    static const char* names[] = {"L", "M", "N"};
    for (const auto& idx :
         product_indices(sizes, policy.sample_combos, derive_seed(policy.root_seed, prefix, 0))) {
        std::vector<ComponentSpec> specs;
        std::string label = prefix;
        for (std::size_t s = 0; s < residual_totals.size(); ++s) {
            const auto& row = families[s][idx[s]];
            append_residual_row(specs, n, static_cast<int>(s), row);
            label += std::string("/") + names[s] + tdu(row);
        }
        if (with_o) {
            const auto& row = families.back()[idx.back()];
            append_general(specs, xo_lengths(n, row));
            label += "/O[" + join(row) + "]";
        }
        out.push_back(scheme_case(label, n, 3, subspaces, std::move(specs), policy.prime));
    }
}

std::string triple_tag(const std::vector<int>& t) { return "(" + join(t) + ")"; }

VerificationReport finish(std::string suite, const std::vector<RankCase>& cases,
                          const TrialPolicy& policy)
{
    VerificationReport r;
    r.suite = std::move(suite);
    r.cases = run_cases(cases, policy);
    return r;
}

} // namespace

VerificationReport verify_three_subspace_cubics(const TrialPolicy& policy)
{
    const std::vector<std::vector<int>> triples = {
        {6, 9, 12}, {3, 12, 12}, {0, 12, 15}, {6, 6, 15}, {0, 9, 18}};
    std::vector<RankCase> cases;
    for (const auto& t : triples)
        subspace_cases(cases, "cubics-LMN/P8/" + triple_tag(t), 8, t, 0, policy);
    return finish("three-subspace-cubics", cases, policy);
}

VerificationReport verify_three_subspace_defect(const TrialPolicy& policy)
{
    const int n = 8;
    const auto subspaces = coordinate_triples(3);
    auto double_points = [&](int on_m, int on_n) {
        std::vector<ComponentSpec> specs;
        for (int i = 0; i < on_m; ++i)
            specs.push_back(component_with_residual(n, 3, 1, 3));
        for (int i = 0; i < on_n; ++i)
            specs.push_back(component_with_residual(n, 3, 2, 3));
        return specs;
    };
    std::vector<RankCase> cases;
    cases.push_back(scheme_case("cubics-LMN-defect/P8/(0,0,27)/N9", n, 3, subspaces,
                                double_points(0, 9), policy.prime));
    auto defect = scheme_case("cubics-LMN-defect/P8/(0,6,21)/M2-N7", n, 3, subspaces,
                              double_points(2, 7), policy.prime);
    defect.claim = Claim::Deficient;
    defect.claimed_dim = 2;
    defect.predicted_rank = 25;
    cases.push_back(std::move(defect));
    cases.push_back(scheme_case("cubics-LMN-defect/P8/(0,6,18)/M2-N6", n, 3, subspaces,
                                double_points(2, 6), policy.prime));
    return finish("three-subspace-defect", cases, policy);
}

VerificationReport verify_two_subspace_leftovers(const TrialPolicy& policy)
{
    const std::vector<DegreeTriple> triples = {
        {10, 14, 39}, {11, 13, 39}, {11, 14, 38}, {7, 17, 39}, {8, 16, 39},
        {8, 17, 38},  {7, 14, 42},  {8, 13, 42},  {8, 14, 41}};
    std::vector<RankCase> cases;
    for (const auto& t : triples)
        subspace_cases(cases, "cubics-LM/P8/" + triple_tag({t.l, t.m, t.o}), 8, {t.l, t.m}, t.o,
                       policy);
    return finish("two-subspace-leftovers", cases, policy);
}

namespace {

std::vector<DegreeTriple> two_subspace_triples(int n, int o_lo, int o_hi)
{
    if (n < 5)
        throw std::invalid_argument("subspace base cases need n >= 5");
    std::vector<DegreeTriple> out;
    const int total = 9 * (n - 1);
    for (int o = o_lo; o <= o_hi; ++o)
        for (int l = n - 2; l <= 4 * n - 6; ++l) {
            const int m = total - o - l;
            if (l <= m && m <= 4 * n - 6)
                out.push_back({l, m, o});
        }
    return out;
}

} // namespace

std::vector<DegreeTriple> two_subspace_triples_narrow(int n)
{
    return two_subspace_triples(n, 3 * n + 3, 3 * n + 6);
}

std::vector<DegreeTriple> two_subspace_triples_wide(int n)
{
    return two_subspace_triples(n, 3 * n + 7, 5 * n + 2);
}

std::vector<DegreeTriple> one_subspace_pairs(int n)
{
    if (n < 5)
        throw std::invalid_argument("subspace base cases need n >= 5");
    const int total = static_cast<int>(binomial(n + 3, 3) - binomial(n, 3));
    std::vector<DegreeTriple> out;
    for (int alpha = 0; alpha <= n - 1; ++alpha) {
        const int o = (n + 1) * (n + 1) + alpha;
        if (o <= total)
            out.push_back({total - o, 0, o});
    }
    return out;
}

VerificationReport verify_subspace_base_cases(const TrialPolicy& policy, int n)
{
    if (n < 5 || n > 7)
        throw std::invalid_argument("base cases are defined for n = 5, 6, 7");
    if (n > 5 && !policy.deep)
        throw std::invalid_argument("n = 6, 7 base cases need the deep flag");
    const std::string pn = "/P" + std::to_string(n) + "/";
    std::vector<RankCase> cases;
    for (const auto& t : two_subspace_triples_narrow(n))
        subspace_cases(cases, "cubics-LM-narrow" + pn + triple_tag({t.l, t.m, t.o}), n,
                       {t.l, t.m}, t.o, policy);
    for (const auto& t : two_subspace_triples_wide(n))
        subspace_cases(cases, "cubics-LM-wide" + pn + triple_tag({t.l, t.m, t.o}), n,
                       {t.l, t.m}, t.o, policy);
    // enough components of residual 1 or 3 on L
    auto enough_odd = [n](const std::vector<int>& row) { return 3 * (row[0] + row[2]) >= n; };
    for (const auto& t : one_subspace_pairs(n))
        subspace_cases(cases, "cubics-L" + pn + triple_tag({t.l, t.o}), n, {t.l}, t.o, policy,
                       enough_odd);
    return finish("subspace-base-cases-P" + std::to_string(n), cases, policy);
}

RankCase general_scheme_case(std::string label, int n, int d, std::vector<int> lengths,
                             PrimeModulus prime)
{
    std::sort(lengths.begin(), lengths.end(), std::greater<>());
    std::vector<ComponentSpec> specs;
    append_general(specs, lengths);
    RankCase c = scheme_case(std::move(label), n, d, {}, std::move(specs), prime);
    const int space = static_cast<int>(binomial(n + d, d));
    if (d == 2) {
        const auto v = predict_quadric_scheme(n, lengths);
        if (!v.independent) {
            c.claim = Claim::Deficient;
            c.dim_lower_bound = quadric_dim_lower_bound(n, lengths);
            c.predicted_rank = space - *c.dim_lower_bound;
        }
        return c;
    }
    std::vector<int> a;
    for (int l : lengths)
        a.push_back(l - 1);
    if (d >= 1 && match_exception(n, d, a) != ExceptionId::None) {
        c.claim = Claim::Deficient;
        c.predicted_rank -= 1;
        c.claimed_dim = space - c.predicted_rank;
        c.note = "exception " + std::string(to_string(match_exception(n, d, a)));
    }
    return c;
}

VerificationReport verify_quadric_table(const TrialPolicy& policy, int n)
{
    const auto& table = quadric_reference_table(n);
    const auto found = enumerate_quadric_exceptions(n, n * (n - 1) / 2);

    VerificationReport r;
    r.suite = "quadric-table-P" + std::to_string(n);
    std::set<std::vector<int>> in_table;
    std::set<std::vector<int>> in_enum;
    for (const auto& row : table)
        in_table.insert(row.lengths);
    for (const auto& e : found)
        in_enum.insert(e.lengths);

    std::vector<RankCase> cases;
    const std::string prefix = "quadric-table/P" + std::to_string(n) + "/";
    for (const auto& row : table) {
        const auto v = predict_quadric_scheme(n, row.lengths);
        if (v.degree != row.degree || v.max_delta != row.max_delta ||
            SchemeType::from_lengths(n, row.lengths).m != row.m) {
            r.extra_ok = false;
            r.findings.push_back("row " + join(row.lengths) + ": degree, max delta or type differs");
        }
        if (!in_enum.count(row.lengths)) {
            r.extra_ok = false;
            r.findings.push_back("row " + join(row.lengths) + " is not produced by the classification");
        }
        auto c = general_scheme_case(prefix + join(row.lengths), n, 2, row.lengths, policy.prime);
        c.claim = Claim::Deficient;
        c.claimed_dim = row.dim;
        c.note = "reference row";
        cases.push_back(std::move(c));
    }
    for (const auto& e : found) {
        if (in_table.count(e.lengths))
            continue;
        r.extra_ok = false;
        const int bound = quadric_dim_lower_bound(n, e.lengths);
        r.findings.push_back("classification lists " + join(e.lengths) + " (degree " +
                             std::to_string(e.degree) + ", max delta " +
                             std::to_string(e.max_delta) + ", cone bound " +
                             std::to_string(bound) + ") which the reference table omits");
        auto c = general_scheme_case(prefix + join(e.lengths), n, 2, e.lengths, policy.prime);
        c.claim = Claim::Deficient;
        c.claimed_dim = bound;
        c.note = "not in reference table";
        cases.push_back(std::move(c));
    }
    r.cases = run_cases(cases, policy);
    return r;
}

VerificationReport verify_double_point_exceptions(const TrialPolicy& policy)
{
    struct Config
    {
        const char* name;
        int n;
        int d;
        std::vector<int> lengths;
    };
    std::vector<int> b_prime(8, 4);
    b_prime.push_back(3);
    const std::vector<Config> configs = {
        {"a", 2, 4, std::vector<int>(5, 3)},  {"b", 3, 4, std::vector<int>(9, 4)},
        {"b'", 3, 4, b_prime},                {"c", 4, 3, std::vector<int>(7, 5)},
        {"d", 4, 4, std::vector<int>(14, 5)},
    };
    std::vector<RankCase> cases;
    for (const auto& cfg : configs) {
        const std::string label = "double-points/" + std::string(cfg.name) + "/P" +
                                  std::to_string(cfg.n) + "-d" + std::to_string(cfg.d) + "/" +
                                  join(cfg.lengths);
        cases.push_back(general_scheme_case(label, cfg.n, cfg.d, cfg.lengths, policy.prime));
    }
    return finish("double-point-exceptions", cases, policy);
}

RankCase affine_case(std::string label, int n, int d, std::vector<int> a, PrimeModulus prime)
{
    const Prediction p = predict_affine(n, d, a);
    auto basis = std::make_shared<const MonomialBasis>(build_basis(BasisMode::Affine, n, d));
    RankCase c;
    c.label = std::move(label);
    c.claim = Claim::FullRank;
    c.predicted_rank = p.expected_codim;
    if (p.exceptional && p.quadric) {
        std::vector<int> lengths;
        for (int ai : a)
            lengths.push_back(ai + 1);
        std::sort(lengths.begin(), lengths.end(), std::greater<>());
        c.claim = Claim::Deficient;
        c.dim_lower_bound = quadric_dim_lower_bound(n, lengths);
        c.predicted_rank = p.space_dim - *c.dim_lower_bound;
    } else if (p.exceptional) {
        c.claim = Claim::Deficient;
        c.predicted_rank = p.expected_codim - 1;
        c.claimed_dim = p.space_dim - c.predicted_rank;
        c.note = "exception " + std::string(to_string(p.exception_id));
    }
    c.build = [=](std::uint64_t seed) {
        const auto prob = random_affine_problem(n, d, a, prime, seed);
        auto m = condition_matrix_affine(prob, *basis);
        if (m.rows() == 0)
            m = Matrix<Fp>(0, basis->size(), Fp(0, prime));
        return m;
    };
    return c;
}

VerificationReport verify_generic(const TrialPolicy& policy, int n, int d, std::vector<int> a)
{
    std::sort(a.begin(), a.end(), std::greater<>());
    const std::string label = "affine/n" + std::to_string(n) + "-d" + std::to_string(d) + "/" +
                              (a.empty() ? std::string("-") : join(a));
    return finish("generic", {affine_case(label, n, d, a, policy.prime)}, policy);
}

VerificationReport verify_generic_scheme(const TrialPolicy& policy, int n, int d,
                                         std::vector<int> lengths)
{
    const std::string label = "scheme/P" + std::to_string(n) + "-d" + std::to_string(d) + "/" +
                              join(lengths);
    return finish("generic-scheme", {general_scheme_case(label, n, d, lengths, policy.prime)},
                  policy);
}

VerificationReport verify_random_sweep(const TrialPolicy& policy, int count)
{
    std::vector<RankCase> cases;
    char idx[16];
    for (int i = 0; i < count; ++i) {
        Rng rng(derive_seed(policy.root_seed, "sweep-draw", static_cast<std::uint64_t>(i)));
        int n = 0;
        int d = 0;
        std::vector<int> a;
        do {
            n = 1 + static_cast<int>(rng.below(4));
            d = 3 + static_cast<int>(rng.below(3));
            const int space = static_cast<int>(binomial(n + d, d));
            const int target = 1 + static_cast<int>(rng.below(space));
            a.clear();
            int used = 0;
            for (;;) {
                const int ai = static_cast<int>(rng.below(n + 1));
                if (used + ai + 1 > target)
                    break;
                used += ai + 1;
                a.push_back(ai);
            }
            std::sort(a.begin(), a.end(), std::greater<>());
        } while (match_exception(n, d, a) != ExceptionId::None);
        std::snprintf(idx, sizeof idx, "%03d", i);
        cases.push_back(affine_case("sweep/" + std::string(idx) + "/n" + std::to_string(n) +
                                        "-d" + std::to_string(d) + "/" +
                                        (a.empty() ? std::string("-") : join(a)),
                                    n, d, a, policy.prime));
    }
    return finish("random-sweep", cases, policy);
}

VerificationReport verify_quadric_equivalence(const TrialPolicy& policy, int max_n, int extra)
{
    std::vector<RankCase> cases;
    for (int n = 1; n <= max_n; ++n) {
        const int max_deg = static_cast<int>(binomial(n + 2, 2)) + extra;
        std::vector<int> current;
        std::function<void(int, int)> rec = [&](int max_part, int deg) {
            if (!current.empty())
                cases.push_back(general_scheme_case("quadric-equivalence/P" + std::to_string(n) +
                                                        "/" + join(current),
                                                    n, 2, current, policy.prime));
            for (int l = std::min(max_part, max_deg - deg); l >= 1; --l) {
                current.push_back(l);
                rec(l, deg + l);
                current.pop_back();
            }
        };
        rec(n + 1, 0);
    }
    return finish("quadric-equivalence", cases, policy);
}

VerificationReport verify_scheme(const TrialPolicy& policy, const SchemeSpec& spec)
{
    TrialPolicy p = policy;
    p.prime = spec.prime;
    p.root_seed = spec.seed;
    RankCase c;
    if (spec.subspaces.empty()) {
        std::vector<int> lengths;
        for (const auto& s : spec.components)
            lengths.push_back(s.length);
        c = general_scheme_case("scheme", spec.n, spec.d, lengths, spec.prime);
    } else {
        c = scheme_case("scheme", spec.n, spec.d, spec.subspaces, spec.components, spec.prime);
    }
    return finish("scheme", {c}, p);
}

nlohmann::json to_json(const VerificationReport& r, const TrialPolicy& policy, bool timing)
{
    nlohmann::json j;
    j["schema_version"] = kReportSchemaVersion;
    j["suite"] = r.suite;
    j["config"] = to_json(policy);
    j["passed"] = r.passed();
    j["summary"] = {{"cases", r.cases.size()},
                    {"pass", static_cast<int>(r.cases.size()) - r.suspect_count()},
                    {"suspect", r.suspect_count()}};
    j["findings"] = r.findings;
    j["cases"] = nlohmann::json::array();
    for (const auto& c : r.cases) {
        nlohmann::json cj;
        cj["case"] = c.label;
        cj["claim"] = std::string(to_string(c.claim));
        cj["predicted_rank"] = c.predicted_rank;
        cj["claimed_dim"] = c.claimed_dim ? nlohmann::json(*c.claimed_dim) : nlohmann::json();
        cj["dim_lower_bound"] =
            c.dim_lower_bound ? nlohmann::json(*c.dim_lower_bound) : nlohmann::json();
        cj["rows"] = c.rows;
        cj["cols"] = c.cols;
        cj["measured"] = c.measured;
        std::vector<int> dims;
        for (std::size_t t = 0; t < c.measured.size(); ++t)
            dims.push_back(c.measured_dim(t));
        cj["measured_dim"] = dims;
        cj["verdict"] = std::string(to_string(c.verdict));
        cj["seed"] = c.seeds.empty() ? nlohmann::json() : nlohmann::json(c.seeds.front());
        cj["seeds"] = c.seeds;
        cj["prime"] = c.prime;
        cj["note"] = c.note;
        if (timing)
            cj["millis"] = c.millis;
        j["cases"].push_back(std::move(cj));
    }
    return j;
}

namespace {

std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"')
            out += '"';
        out += ch;
    }
    return out + "\"";
}

} // namespace

std::string to_csv(const VerificationReport& r, bool timing)
{
    std::ostringstream os;
    os << "case,claim,rows,cols,predicted_rank,claimed_dim,measured,verdict,seed,prime";
    if (timing)
        os << ",millis";
    os << "\n";
    for (const auto& c : r.cases) {
        os << csv_field(c.label) << ',' << to_string(c.claim) << ',' << c.rows << ',' << c.cols
           << ',' << c.predicted_rank << ',' << (c.claimed_dim ? std::to_string(*c.claimed_dim) : "")
           << ',' << join(c.measured, ";") << ',' << to_string(c.verdict) << ','
           << (c.seeds.empty() ? std::string() : std::to_string(c.seeds.front())) << ',' << c.prime;
        if (timing)
            os << ',' << c.millis;
        os << "\n";
    }
    return os.str();
}

} // namespace partint
