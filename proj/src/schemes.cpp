#include "partint/schemes.hpp"

#include <algorithm>
#include <numeric>

namespace partint {

int SchemeType::degree() const
{
    int deg = 0;
    for (std::size_t i = 0; i < m.size(); ++i)
        deg += static_cast<int>(i + 1) * m[i];
    return deg;
}

int SchemeType::components() const { return std::accumulate(m.begin(), m.end(), 0); }

std::vector<int> SchemeType::lengths() const
{
    std::vector<int> out;
    for (std::size_t i = m.size(); i-- > 0;)
        out.insert(out.end(), m[i], static_cast<int>(i + 1));
    return out;
}

SchemeType SchemeType::from_lengths(int n, std::span<const int> lengths)
{
    SchemeType t{n, std::vector<int>(n + 1, 0)};
    for (int l : lengths) {
        if (l < 1 || l > n + 1)
            throw InvalidScheme("component length " + std::to_string(l) + " outside [1, " +
                                std::to_string(n + 1) + "]");
        ++t.m[l - 1];
    }
    return t;
}

std::vector<int> allowed_residuals(int n, int codim, int length)
{
    std::vector<int> out;
    const int lo = std::max(0, length - (n - codim + 1));
    const int hi = std::min(codim, length);
    for (int r = lo; r <= hi; ++r)
        out.push_back(r);
    return out;
}

ComponentSpec component_with_residual(int n, int codim, int subspace, int residual)
{
    if (residual < 0 || residual > codim)
        throw InvalidScheme("residual " + std::to_string(residual) + " outside [0, codim]");
    return ComponentSpec{n - codim + 1 + residual, subspace, residual};
}

void validate(int n, std::span<const CoordinateSubspace> subspaces, const ComponentSpec& spec)
{
    if (spec.length < 1 || spec.length > n + 1)
        throw InvalidScheme("component length " + std::to_string(spec.length) +
                            " outside [1, " + std::to_string(n + 1) + "]");
    if (!spec.subspace) {
        if (spec.residual)
            throw InvalidScheme("residual given for a generally supported component");
        return;
    }
    const int s = *spec.subspace;
    if (s < 0 || s >= static_cast<int>(subspaces.size()))
        throw InvalidScheme("support refers to missing subspace " + std::to_string(s));
    if (!spec.residual)
        throw InvalidScheme("on-subspace component needs a residual");
    const auto ok = allowed_residuals(n, subspaces[s].codim(), spec.length);
    if (std::find(ok.begin(), ok.end(), *spec.residual) == ok.end())
        throw InvalidScheme("residual " + std::to_string(*spec.residual) +
                            " impossible for length " + std::to_string(spec.length) +
                            " on a codimension " + std::to_string(subspaces[s].codim()) +
                            " subspace of P^" + std::to_string(n));
}

int condition_rows(const ComponentSpec& spec)
{
    return spec.subspace ? *spec.residual : spec.length;
}

nlohmann::json to_json(const SchemeSpec& spec)
{
    nlohmann::json j;
    j["n"] = spec.n;
    j["d"] = spec.d;
    j["prime"] = spec.prime.value();
    j["seed"] = spec.seed;
    j["subspaces"] = nlohmann::json::array();
    for (const auto& s : spec.subspaces)
        j["subspaces"].push_back({{"zeroed", s.zeroed}});
    j["components"] = nlohmann::json::array();
    for (const auto& c : spec.components) {
        nlohmann::json cj;
        cj["length"] = c.length;
        if (c.subspace)
            cj["support"] = *c.subspace;
        else
            cj["support"] = "general";
        if (c.residual)
            cj["residual"] = *c.residual;
        j["components"].push_back(cj);
    }
    return j;
}

SchemeSpec scheme_spec_from_json(const nlohmann::json& j)
{
    try {
        SchemeSpec spec;
        spec.n = j.at("n").get<int>();
        spec.d = j.at("d").get<int>();
        if (spec.n < 1 || spec.d < 0)
            throw InvalidScheme("scheme spec needs n >= 1 and d >= 0");
        spec.prime = PrimeModulus(j.value("prime", kDefaultPrime));
        spec.seed = j.value("seed", kDefaultSeed);
        for (const auto& s : j.value("subspaces", nlohmann::json::array()))
            spec.subspaces.push_back({s.at("zeroed").get<std::vector<int>>()});
        for (const auto& c : j.at("components")) {
            ComponentSpec cs;
            cs.length = c.at("length").get<int>();
            const auto& support = c.value("support", nlohmann::json("general"));
            if (support.is_number_integer())
                cs.subspace = support.get<int>();
            else if (!(support.is_string() && support.get<std::string>() == "general"))
                throw InvalidScheme("support must be \"general\" or a subspace index");
            if (c.contains("residual") && !c.at("residual").is_null())
                cs.residual = c.at("residual").get<int>();
            spec.components.push_back(cs);
        }
        // checks zeroed sets are in range and disjoint
        (void)vanishing_dimension(spec.n, 0, spec.subspaces);
        for (const auto& c : spec.components)
            validate(spec.n, spec.subspaces, c);
        return spec;
    } catch (const nlohmann::json::exception& e) {
        throw InvalidScheme(std::string("scheme spec: ") + e.what());
    } catch (const InvalidScheme&) {
        throw;
    } catch (const std::invalid_argument& e) {
        throw InvalidScheme(std::string("scheme spec: ") + e.what());
    }
}

namespace {

constexpr int kMaxRetries = 16;

std::vector<Fp> random_vector(Rng& rng, std::size_t len, PrimeModulus p)
{
    std::vector<Fp> v;
    v.reserve(len);
    for (std::size_t i = 0; i < len; ++i)
        v.push_back(rng.residue(p));
    return v;
}

Matrix<Fp> random_matrix(Rng& rng, std::size_t rows, std::size_t cols, PrimeModulus p)
{
    Matrix<Fp> m(rows, cols, Fp(0, p));
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            m(r, c) = rng.residue(p);
    return m;
}

bool lies_on(std::span<const Fp> point, const CoordinateSubspace& s)
{
    return std::all_of(s.zeroed.begin(), s.zeroed.end(),
                       [&](int c) { return point[c].is_zero(); });
}

bool proportional(std::span<const Fp> a, std::span<const Fp> b)
{
    Matrix<Fp> m;
    m.append_row(a);
    m.append_row(b);
    return rank(m) < 2;
}

// One attempt at drawing a component; nullopt if the draw is degenerate.
std::optional<Component> draw_component(Rng& rng, int n,
                                        std::span<const CoordinateSubspace> subspaces,
                                        const ComponentSpec& spec, PrimeModulus p,
                                        std::span<const Component> earlier)
{
    const std::size_t vars = static_cast<std::size_t>(n) + 1;
    Component c;
    c.spec = spec;
    c.point = random_vector(rng, vars, p);
    if (spec.subspace)
        for (int z : subspaces[*spec.subspace].zeroed)
            c.point[z] = Fp(0, p);

    if (std::all_of(c.point.begin(), c.point.end(), [](const Fp& x) { return x.is_zero(); }))
        return std::nullopt;
    for (std::size_t s = 0; s < subspaces.size(); ++s)
        if ((!spec.subspace || static_cast<int>(s) != *spec.subspace) && lies_on(c.point, subspaces[s]))
            return std::nullopt;
    for (const auto& e : earlier)
        if (proportional(c.point, e.point))
            return std::nullopt;

    if (spec.subspace) {
        const auto& zeroed = subspaces[*spec.subspace].zeroed;
        const int r = *spec.residual;
        c.combination = random_matrix(rng, r, vars, p);
        if (r > 0) {
            // transverse parts must be independent
            Matrix<Fp> transverse(r, zeroed.size(), Fp(0, p));
            for (int i = 0; i < r; ++i)
                for (std::size_t k = 0; k < zeroed.size(); ++k)
                    transverse(i, k) = c.combination(i, zeroed[k]);
            if (rank(transverse) != static_cast<std::size_t>(r))
                return std::nullopt;
        }
        return c;
    }

    if (spec.length == n + 1) {
        c.combination = Matrix<Fp>::identity(vars, Fp(0, p));
        return c;
    }
    c.value_row = true;
    c.combination = random_matrix(rng, spec.length - 1, vars, p);
    Matrix<Fp> check;
    check.append_row(c.point);
    check.append_rows(c.combination);
    if (rank(check) != static_cast<std::size_t>(spec.length))
        return std::nullopt;
    return c;
}

} // namespace

SchemeInstance random_instance(int n, std::span<const CoordinateSubspace> subspaces,
                               std::span<const ComponentSpec> specs, PrimeModulus prime,
                               std::uint64_t seed)
{
    (void)vanishing_dimension(n, 0, subspaces);
    for (const auto& s : specs)
        validate(n, subspaces, s);

    SchemeInstance x;
    x.n = n;
    x.prime = prime;
    x.seed = seed;
    x.subspaces.assign(subspaces.begin(), subspaces.end());
    Rng rng(seed);
    for (const auto& spec : specs) {
        std::optional<Component> c;
        for (int attempt = 0; attempt < kMaxRetries && !c; ++attempt)
            c = draw_component(rng, n, subspaces, spec, prime, x.components);
        if (!c)
            throw InvalidScheme("could not draw a non-degenerate component in " +
                                std::to_string(kMaxRetries) + " attempts");
        x.components.push_back(std::move(*c));
    }
    return x;
}

SchemeInstance random_instance(const SchemeSpec& spec)
{
    return random_instance(spec.n, spec.subspaces, spec.components, spec.prime, spec.seed);
}

MonomialBasis scheme_basis(int n, int d, std::span<const CoordinateSubspace> subspaces)
{
    if (subspaces.empty())
        return build_basis(BasisMode::Homogeneous, n, d);
    return vanishing_basis(n, d, subspaces);
}

Matrix<Fp> condition_matrix_projective(const SchemeInstance& x, const MonomialBasis& basis)
{
    if (basis.mode() != BasisMode::Homogeneous || basis.n() != x.n)
        throw std::invalid_argument("projective condition matrix needs a homogeneous basis on P^n");
    Matrix<Fp> m;
    for (const auto& c : x.components) {
        if (c.spec.subspace && !vanishes_on(basis, x.subspaces[*c.spec.subspace]))
            throw std::invalid_argument("basis does not vanish on the support subspace");
        if (basis.size() == 0)
            continue;
        if (c.value_row)
            m.append_row(eval_row<Fp>(basis, c.point));
        if (c.combination.rows() == 0)
            continue;
        m.append_rows(multiply(c.combination, jacobian_block<Fp>(basis, c.point)));
    }
    return m;
}

int hilbert_function(const SchemeInstance& x, int d)
{
    const auto basis = scheme_basis(x.n, d, x.subspaces);
    return static_cast<int>(rank(condition_matrix_projective(x, basis)));
}

DegreeCount degree_bookkeeping(std::span<const ComponentSpec> specs,
                               std::span<const int> subspace_ids)
{
    DegreeCount out;
    for (const auto& c : specs) {
        out.degree += c.length;
        const bool on_union =
            c.subspace && std::find(subspace_ids.begin(), subspace_ids.end(), *c.subspace) !=
                              subspace_ids.end();
        if (on_union)
            out.trace += c.length - *c.residual;
    }
    out.residual = out.degree - out.trace;
    return out;
}

InterpolationProblem<Fp> random_affine_problem(int n, int d, std::span<const int> profile,
                                               PrimeModulus prime, std::uint64_t seed)
{
    Rng rng(seed);
    InterpolationProblem<Fp> prob;
    prob.n = n;
    prob.d = d;
    for (int a : profile) {
        if (a < 0 || a > n)
            throw std::invalid_argument("profile entry " + std::to_string(a) + " outside [0, n]");
        bool done = false;
        for (int attempt = 0; attempt < kMaxRetries && !done; ++attempt) {
            auto p = random_vector(rng, n, prime);
            if (std::find(prob.points.begin(), prob.points.end(), p) != prob.points.end())
                continue;
            auto dirs = random_matrix(rng, a, n, prime);
            if (a > 0 && rank(dirs) != static_cast<std::size_t>(a))
                continue;
            std::vector<std::vector<Fp>> dv;
            for (int r = 0; r < a; ++r)
                dv.emplace_back(dirs.row(r).begin(), dirs.row(r).end());
            prob.points.push_back(std::move(p));
            prob.directions.push_back(std::move(dv));
            prob.values.push_back(random_vector(rng, a + 1, prime));
            done = true;
        }
        if (!done)
            throw InvalidScheme("could not draw a non-degenerate affine point");
    }
    return prob;
}

} // namespace partint
