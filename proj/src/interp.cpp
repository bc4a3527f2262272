#include "partint/interp.hpp"

namespace partint {

std::string_view to_string(Diagnosis::Kind k)
{
    return k == Diagnosis::Kind::SingularSystem ? "SingularSystem" : "InconsistentSystem";
}

namespace {

Rational number(const nlohmann::json& v)
{
    if (v.is_number_integer())
        return Rational(v.get<std::int64_t>());
    if (v.is_string())
        return parse_rational(v.get<std::string>());
    throw std::invalid_argument("numbers must be integers or strings \"a/b\"");
}

std::vector<Rational> numbers(const nlohmann::json& v)
{
    if (!v.is_array())
        throw std::invalid_argument("expected an array of numbers");
    std::vector<Rational> out;
    for (const auto& x : v)
        out.push_back(number(x));
    return out;
}

nlohmann::json number_json(const Rational& q) { return to_string(q); }
nlohmann::json number_json(const Fp& x) { return x.residue(); }

template <class T>
nlohmann::json result_json(const SolveResult<T>& r, const MonomialBasis& basis)
{
    nlohmann::json j;
    if (const auto* f = std::get_if<Interpolant<T>>(&r)) {
        j["status"] = "solved";
        j["coefficients"] = nlohmann::json::array();
        for (const auto& c : f->coefficients)
            j["coefficients"].push_back(number_json(c));
        j["monomials"] = basis.monomials();
        return j;
    }
    const auto& g = std::get<Diagnosis>(r);
    j["status"] = g.kind == Diagnosis::Kind::SingularSystem ? "singular" : "inconsistent";
    j["diagnosis"] = {{"kind", std::string(to_string(g.kind))},
                      {"exception_id", std::string(to_string(g.exception_id))},
                      {"rank", g.rank},
                      {"conditions", g.conditions},
                      {"space_dim", g.space_dim},
                      {"message", g.message}};
    return j;
}

template <class T>
nlohmann::json run(const InterpolationProblem<T>& prob, std::optional<SolveMode> mode,
                   const T& zero)
{
    nlohmann::json j;
    const Prediction p = predict_affine(prob.n, prob.d, prob.profile());
    j["prediction"] = to_json(p);
    const auto basis = build_basis(BasisMode::Affine, prob.n, prob.d);
    if (mode) {
        j.update(result_json(solve(prob, *mode, zero), basis));
    } else {
        const auto both = predict_then_solve(prob, zero);
        j.update(result_json(*both.result, basis));
    }
    return j;
}

} // namespace

ProblemFile problem_from_json(const nlohmann::json& j)
{
    try {
        ProblemFile f;
        auto& prob = f.problem;
        prob.n = j.at("n").get<int>();
        prob.d = j.at("d").get<int>();
        if (prob.n < 1 || prob.d < 0)
            throw std::invalid_argument("problem needs n >= 1 and d >= 0");
        const auto mode = j.value("mode", std::string("rational"));
        if (mode == "rational")
            f.field = FieldMode::Rational;
        else if (mode == "prime")
            f.field = FieldMode::Prime;
        else
            throw std::invalid_argument("mode must be \"rational\" or \"prime\"");
        if (j.contains("prime")) {
            if (f.field != FieldMode::Prime)
                throw std::invalid_argument("prime given for a rational problem");
            const auto v = j.at("prime").get<std::int64_t>();
            if (v < 3 || v >= (std::int64_t{1} << 31))
                throw std::invalid_argument("prime must be an odd prime below 2^31");
            f.prime = PrimeModulus(static_cast<std::uint32_t>(v));
        }
        if (j.contains("solve")) {
            const auto s = j.at("solve").get<std::string>();
            if (s == "unique")
                f.solve_mode = SolveMode::Unique;
            else if (s == "any")
                f.solve_mode = SolveMode::Any;
            else
                throw std::invalid_argument("solve must be \"unique\" or \"any\"");
        }
        const auto& pts = j.at("points");
        const auto& dirs = j.at("directions");
        if (!pts.is_array() || !dirs.is_array() || pts.size() != dirs.size())
            throw std::invalid_argument("points and directions must be arrays of equal length");
        for (std::size_t i = 0; i < pts.size(); ++i) {
            auto p = numbers(pts[i]);
            if (p.size() != static_cast<std::size_t>(prob.n))
                throw std::invalid_argument("point " + std::to_string(i) + " needs n coordinates");
            std::vector<std::vector<Rational>> ds;
            for (const auto& v : dirs[i]) {
                ds.push_back(numbers(v));
                if (ds.back().size() != static_cast<std::size_t>(prob.n))
                    throw std::invalid_argument("direction at point " + std::to_string(i) +
                                                " needs n coordinates");
            }
            prob.points.push_back(std::move(p));
            prob.directions.push_back(std::move(ds));
        }
        if (j.contains("values")) {
            const auto& vals = j.at("values");
            if (!vals.is_array() || vals.size() != pts.size())
                throw std::invalid_argument("values must list one entry per point");
            for (const auto& v : vals)
                prob.values.push_back(numbers(v));
        }
        return f;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("problem file: ") + e.what());
    }
}

nlohmann::json to_json(const ProblemFile& f)
{
    nlohmann::json j;
    const auto& prob = f.problem;
    j["n"] = prob.n;
    j["d"] = prob.d;
    j["mode"] = f.field == FieldMode::Rational ? "rational" : "prime";
    if (f.field == FieldMode::Prime)
        j["prime"] = f.prime.value();
    if (f.solve_mode)
        j["solve"] = *f.solve_mode == SolveMode::Unique ? "unique" : "any";
    auto list = [](const std::vector<Rational>& v) {
        nlohmann::json a = nlohmann::json::array();
        for (const auto& q : v)
            a.push_back(to_string(q));
        return a;
    };
    j["points"] = nlohmann::json::array();
    j["directions"] = nlohmann::json::array();
    for (std::size_t i = 0; i < prob.points.size(); ++i) {
        j["points"].push_back(list(prob.points[i]));
        nlohmann::json ds = nlohmann::json::array();
        for (const auto& v : prob.directions[i])
            ds.push_back(list(v));
        j["directions"].push_back(ds);
    }
    j["values"] = nlohmann::json::array();
    for (const auto& v : prob.values)
        j["values"].push_back(list(v));
    return j;
}

InterpolationProblem<Fp> reduce(const InterpolationProblem<Rational>& prob, PrimeModulus p)
{
    InterpolationProblem<Fp> out;
    out.n = prob.n;
    out.d = prob.d;
    auto red = [p](const std::vector<Rational>& v) {
        std::vector<Fp> r;
        for (const auto& q : v)
            r.push_back(reduce(q, p));
        return r;
    };
    for (const auto& pt : prob.points)
        out.points.push_back(red(pt));
    for (const auto& ds : prob.directions) {
        std::vector<std::vector<Fp>> rd;
        for (const auto& v : ds)
            rd.push_back(red(v));
        out.directions.push_back(std::move(rd));
    }
    for (const auto& v : prob.values)
        out.values.push_back(red(v));
    return out;
}

nlohmann::json solve_problem_file(const ProblemFile& file)
{
    nlohmann::json j;
    j["n"] = file.problem.n;
    j["d"] = file.problem.d;
    if (file.field == FieldMode::Rational) {
        j["mode"] = "rational";
        j.update(run(file.problem, file.solve_mode, Rational(0)));
    } else {
        j["mode"] = "prime";
        j["prime"] = file.prime.value();
        j.update(run(reduce(file.problem, file.prime), file.solve_mode, Fp(0, file.prime)));
    }
    return j;
}

} // namespace partint
