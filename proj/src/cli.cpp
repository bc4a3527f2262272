#include "partint/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "partint/interp.hpp"
#include "partint/verify.hpp"

namespace partint {

namespace {

struct Common
{
    std::int64_t prime = kDefaultPrime;
    std::string seed = "0x5eedf00dcafe2014";
    int trials = 3;
    bool deep = false;
    std::string format = "json";
    std::string out;
    bool timing = false;
    unsigned threads = 0;
    int sample = 0;
    bool exhaustive_xo = false;
};

void add_common(CLI::App* cmd, Common& c)
{
    cmd->add_option("--prime", c.prime, "Odd prime for the Monte Carlo field")->capture_default_str();
    cmd->add_option("--seed", c.seed, "Root seed (decimal or 0x hex)")->capture_default_str();
    cmd->add_option("--trials", c.trials, "Random instances per case")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_flag("--deep", c.deep, "Include the n = 6, 7 base cases");
    cmd->add_option("--format", c.format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    cmd->add_option("--out", c.out, "Write the report here instead of stdout");
    cmd->add_flag("--timing", c.timing, "Include wall time per case");
    cmd->add_option("--threads", c.threads, "Worker threads (0: all cores)");
    cmd->add_option("--sample", c.sample, "Check at most this many combos per degree triple")
        ->check(CLI::NonNegativeNumber);
    cmd->add_flag("--exhaustive-xo", c.exhaustive_xo,
                  "Use every general-part partition instead of the script families");
}

TrialPolicy policy_of(const Common& c)
{
    TrialPolicy p;
    p.trials = c.trials;
    if (c.prime < 3 || c.prime >= (std::int64_t{1} << 31))
        throw std::invalid_argument("prime must be an odd prime below 2^31");
    p.prime = PrimeModulus(static_cast<std::uint32_t>(c.prime));
    std::size_t used = 0;
    p.root_seed = std::stoull(c.seed, &used, 0);
    if (used != c.seed.size())
        throw std::invalid_argument("malformed seed " + c.seed);
    p.deep = c.deep;
    p.threads = c.threads;
    if (c.sample > 0)
        p.sample_combos = c.sample;
    p.exhaustive_xo = c.exhaustive_xo;
    return p;
}

std::vector<int> parse_list(const std::string& text)
{
    std::vector<int> out;
    if (text.empty() || text == "-")
        return out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        const int v = std::stoi(item, &used);
        if (used != item.size())
            throw std::invalid_argument("malformed list entry '" + item + "'");
        out.push_back(v);
    }
    return out;
}

void emit(const Common& c, const std::string& text, std::ostream& out)
{
    if (c.out.empty()) {
        out << text;
        return;
    }
    std::ofstream f(c.out);
    if (!f)
        throw std::invalid_argument("cannot write " + c.out);
    f << text;
}

std::string render(const std::vector<VerificationReport>& reports, const TrialPolicy& p,
                   const Common& c)
{
    if (c.format == "csv") {
        std::string s;
        for (std::size_t i = 0; i < reports.size(); ++i) {
            auto part = to_csv(reports[i], c.timing);
            if (i > 0)
                part = part.substr(part.find('\n') + 1);
            s += part;
        }
        return s;
    }
    if (reports.size() == 1)
        return to_json(reports.front(), p, c.timing).dump(2) + "\n";
    nlohmann::json j;
    j["schema_version"] = kReportSchemaVersion;
    j["config"] = to_json(p);
    bool ok = true;
    j["reports"] = nlohmann::json::array();
    for (const auto& r : reports) {
        j["reports"].push_back(to_json(r, p, c.timing));
        ok = ok && r.passed();
    }
    j["passed"] = ok;
    return j.dump(2) + "\n";
}

int status_of(const std::vector<VerificationReport>& reports, std::ostream& err)
{
    int code = 0;
    for (const auto& r : reports) {
        for (const auto& f : r.findings)
            err << r.suite << ": " << f << "\n";
        if (!r.passed()) {
            err << r.suite << ": " << r.suspect_count() << " of " << r.cases.size()
                << " cases SUSPECT" << (r.extra_ok ? "" : ", reference mismatch") << "\n";
            code = 1;
        }
    }
    return code;
}

std::string csv_quote(const std::string& s)
{
    return s.find(',') == std::string::npos ? s : "\"" + s + "\"";
}

std::string joined(const std::vector<int>& v)
{
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? "," : "") + std::to_string(v[i]);
    return s;
}

// Reference-table layout: type, deg, max delta, m-vector, dim.
std::string table_csv(int n, const VerificationReport& r, bool timing)
{
    std::ostringstream os;
    os << "type,deg,max_delta,m,dim,measured_dim,in_reference,verdict";
    if (timing)
        os << ",millis";
    os << "\n";
    const auto& table = quadric_reference_table(n);
    for (const auto& c : r.cases) {
        const auto lengths = parse_list(c.label.substr(c.label.rfind('/') + 1));
        const auto v = predict_quadric_scheme(n, lengths);
        const auto type = SchemeType::from_lengths(n, lengths);
        const bool in_ref = std::any_of(table.begin(), table.end(),
                                        [&](const QuadricTableRow& t) { return t.lengths == lengths; });
        std::vector<int> dims;
        for (std::size_t t = 0; t < c.measured.size(); ++t)
            dims.push_back(c.measured_dim(t));
        std::string dim_list;
        for (std::size_t t = 0; t < dims.size(); ++t)
            dim_list += (t ? ";" : "") + std::to_string(dims[t]);
        os << csv_quote(joined(lengths)) << ',' << v.degree << ',' << v.max_delta << ','
           << csv_quote("(" + joined(type.m) + ")") << ','
           << (c.claimed_dim ? std::to_string(*c.claimed_dim) : "") << ',' << dim_list << ','
           << (in_ref ? "yes" : "no") << ',' << to_string(c.verdict);
        if (timing)
            os << ',' << c.millis;
        os << "\n";
    }
    return os.str();
}

} // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Partial interpolation: predict, solve and verify"};
    app.require_subcommand(1);

    Common common;

    auto* predict = app.add_subcommand("predict", "Expected codimension and exception test");
    int p_n = 0, p_d = 0;
    std::string p_a, p_lengths;
    predict->add_option("-n", p_n, "Ambient dimension")->required()->check(CLI::PositiveNumber);
    predict->add_option("-d", p_d, "Degree")->required()->check(CLI::NonNegativeNumber);
    auto* a_opt = predict->add_option("-a", p_a, "Profile a_1,...,a_k (directions per point)");
    auto* l_opt = predict->add_option("--lengths", p_lengths, "Scheme component lengths");
    a_opt->excludes(l_opt);
    predict->add_option("--format", common.format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    predict->add_option("--out", common.out, "Output file");

    auto* verify = app.add_subcommand("verify", "Monte Carlo check of one configuration or a sweep");
    add_common(verify, common);
    int v_n = 0, v_d = 0, v_sweep = 0, v_max_n = 4, v_extra = 3;
    std::string v_a, v_lengths, v_scheme;
    bool v_exceptions = false, v_equivalence = false;
    verify->add_option("-n", v_n, "Ambient dimension");
    verify->add_option("-d", v_d, "Degree");
    verify->add_option("-a", v_a, "Affine profile");
    verify->add_option("--lengths", v_lengths, "General scheme lengths");
    verify->add_option("--scheme", v_scheme, "Scheme spec JSON file");
    verify->add_option("--sweep", v_sweep, "Random non-exceptional configurations");
    verify->add_flag("--exceptions", v_exceptions, "The five double-point exceptions");
    verify->add_flag("--equivalence", v_equivalence, "Quadric classification vs measurement");
    verify->add_option("--max-n", v_max_n, "Largest n for --equivalence")->capture_default_str();
    verify->add_option("--extra", v_extra, "Degree excess for --equivalence")->capture_default_str();

    auto* tables = app.add_subcommand("tables", "Regenerate and measure the quadric exception tables");
    add_common(tables, common);
    int t_n = 3;
    tables->add_option("-n", t_n, "3 or 4")->required()->check(CLI::IsMember({3, 4}));

    auto* props = app.add_subcommand("props", "Cubics through coordinate subspaces");
    add_common(props, common);
    std::string suite = "all";
    int b_n = 0;
    props->add_option("--suite", suite,
                      "three-subspace, three-subspace-defect, two-subspace-leftovers, base, all")
        ->check(CLI::IsMember(
            {"three-subspace", "three-subspace-defect", "two-subspace-leftovers", "base", "all"}))
        ->capture_default_str();
    props->add_option("-n", b_n, "Base-case dimension (5, 6, 7); default 5, plus 6, 7 with --deep");

    auto* solve_cmd = app.add_subcommand("solve", "Solve an interpolation problem file exactly");
    std::string problem_path;
    bool s_any = false, s_unique = false;
    solve_cmd->add_option("problem", problem_path, "Problem JSON")->required();
    auto* any_flag = solve_cmd->add_flag("--any", s_any, "Any solution of a consistent system");
    auto* unique_flag = solve_cmd->add_flag("--unique", s_unique, "Require a square system");
    any_flag->excludes(unique_flag);
    solve_cmd->add_option("--out", common.out, "Output file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*predict) {
            Prediction pr;
            if (!p_lengths.empty()) {
                // a component of length l is a point with l - 1 directions
                std::vector<int> a;
                for (int l : parse_list(p_lengths))
                    a.push_back(l - 1);
                pr = predict_affine(p_n, p_d, a);
            } else {
                pr = predict_affine(p_n, p_d, parse_list(p_a));
            }
            auto j = to_json(pr);
            j["schema_version"] = kReportSchemaVersion;
            if (common.format == "csv") {
                std::ostringstream os;
                os << "n,d,conditions,space_dim,expected_codim,exceptional,exception_id,"
                      "unique_solution,max_delta\n"
                   << pr.n << ',' << pr.d << ',' << pr.conditions << ',' << pr.space_dim << ','
                   << pr.expected_codim << ',' << pr.exceptional << ','
                   << to_string(pr.exception_id) << ',' << pr.unique_solution << ','
                   << (pr.quadric ? std::to_string(pr.quadric->max_delta) : "") << "\n";
                emit(common, os.str(), out);
            } else {
                emit(common, j.dump(2) + "\n", out);
            }
            return 0;
        }

        if (*solve_cmd) {
            std::ifstream in(problem_path);
            if (!in)
                throw std::invalid_argument("cannot read " + problem_path);
            nlohmann::json pj;
            try {
                pj = nlohmann::json::parse(in);
            } catch (const nlohmann::json::exception& e) {
                throw std::invalid_argument(std::string("problem file: ") + e.what());
            }
            auto file = problem_from_json(pj);
            if (s_any)
                file.solve_mode = SolveMode::Any;
            if (s_unique)
                file.solve_mode = SolveMode::Unique;
            auto j = solve_problem_file(file);
            j["schema_version"] = kReportSchemaVersion;
            emit(common, j.dump(2) + "\n", out);
            return j.at("status") == "solved" ? 0 : 1;
        }

        const TrialPolicy policy = policy_of(common);
        std::vector<VerificationReport> reports;

        if (*verify) {
            if (!v_scheme.empty()) {
                std::ifstream in(v_scheme);
                if (!in)
                    throw std::invalid_argument("cannot read " + v_scheme);
                nlohmann::json sj;
                try {
                    sj = nlohmann::json::parse(in);
                } catch (const nlohmann::json::exception& e) {
                    throw std::invalid_argument(std::string("scheme file: ") + e.what());
                }
                reports.push_back(verify_scheme(policy, scheme_spec_from_json(sj)));
            } else if (v_sweep > 0) {
                reports.push_back(verify_random_sweep(policy, v_sweep));
            } else if (v_exceptions) {
                reports.push_back(verify_double_point_exceptions(policy));
            } else if (v_equivalence) {
                reports.push_back(verify_quadric_equivalence(policy, v_max_n, v_extra));
            } else if (!v_lengths.empty()) {
                if (v_n < 1 || v_d < 0)
                    throw std::invalid_argument("verify --lengths needs -n >= 1 and -d >= 0");
                reports.push_back(verify_generic_scheme(policy, v_n, v_d, parse_list(v_lengths)));
            } else {
                if (v_n < 1 || v_d < 0)
                    throw std::invalid_argument("verify needs -n >= 1 and -d >= 0 with -a");
                reports.push_back(verify_generic(policy, v_n, v_d, parse_list(v_a)));
            }
        } else if (*tables) {
            reports.push_back(verify_quadric_table(policy, t_n));
            if (common.format == "csv") {
                emit(common, table_csv(t_n, reports.front(), common.timing), out);
                return status_of(reports, err);
            }
        } else if (*props) {
            if (suite == "three-subspace" || suite == "all")
                reports.push_back(verify_three_subspace_cubics(policy));
            if (suite == "three-subspace-defect" || suite == "all")
                reports.push_back(verify_three_subspace_defect(policy));
            if (suite == "two-subspace-leftovers" || suite == "all")
                reports.push_back(verify_two_subspace_leftovers(policy));
            if (suite == "base" || suite == "all") {
                std::vector<int> dims;
                if (b_n != 0)
                    dims = {b_n};
                else if (policy.deep)
                    dims = {5, 6, 7};
                else
                    dims = {5};
                for (int n : dims)
                    reports.push_back(verify_subspace_base_cases(policy, n));
            }
        }
        emit(common, render(reports, policy, common), out);
        return status_of(reports, err);
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

} // namespace partint
