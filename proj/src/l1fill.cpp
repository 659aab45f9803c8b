#include "cubevol/l1fill.hpp"

#include <algorithm>
#include <map>

#include "cubevol/cube2simplex.hpp"

namespace cubevol::l1fill {

using chains::CellKind;

namespace {

struct PointLess
{
    bool operator()(const RationalPoint& a, const RationalPoint& b) const { return compare_points(a, b) < 0; }
};

/** Oriented faces of `simplex` with their boundary signs. */
std::vector<std::pair<Generator, int>> oriented_faces(const Generator& simplex)
{
    std::vector<std::pair<Generator, int>> out;
    const auto& v = simplex.vertices();
    for (std::size_t i = 0; i < v.size(); ++i)
    {
        std::vector<RationalPoint> face;
        for (std::size_t k = 0; k < v.size(); ++k)
            if (k != i)
                face.push_back(v[k]);
        auto [g, s] = orient(Generator::simplex(std::move(face)));
        if (s != 0)
            out.emplace_back(std::move(g), i % 2 == 0 ? s : -s);
    }
    return out;
}

}   // namespace

std::pair<Generator, int> orient(const Generator& simplex)
{
    require(simplex.kind() == CellKind::simplex, "orient expects a simplex");
    std::vector<RationalPoint> v = simplex.vertices();
    int sign = 1;
    // insertion sort, counting transpositions
    for (std::size_t i = 1; i < v.size(); ++i)
        for (std::size_t k = i; k > 0; --k)
        {
            const int c = compare_points(v[k - 1], v[k]);
            if (c == 0)
                return {simplex, 0};
            if (c < 0)
                break;
            std::swap(v[k - 1], v[k]);
            sign = -sign;
        }
    return {Generator::simplex(std::move(v)), sign};
}

FormalChain orient(const FormalChain& z)
{
    FormalChain out(z.dim());
    for (const auto& [g, c] : z)
    {
        auto [rep, s] = orient(g);
        if (s != 0)
            out.add(rep, s > 0 ? c : Rational(-c));
    }
    return out;
}

bool affinely_independent(const std::vector<RationalPoint>& points)
{
    if (points.size() <= 1)
        return true;
    const std::size_t rows = points.size() - 1;
    const std::size_t cols = points.front().size();
    if (rows > cols)
        return false;
    std::vector<RationalPoint> m(rows, RationalPoint(cols));
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t k = 0; k < cols; ++k)
            m[r][k] = points[r + 1][k] - points[0][k];

    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col)
    {
        std::size_t pivot = rank;
        while (pivot < rows && m[pivot][col] == 0)
            ++pivot;
        if (pivot == rows)
            continue;
        std::swap(m[pivot], m[rank]);
        for (std::size_t r = rank + 1; r < rows; ++r)
        {
            if (m[r][col] == 0)
                continue;
            const Rational f = m[r][col] / m[rank][col];
            for (std::size_t k = col; k < cols; ++k)
                m[r][k] -= f * m[rank][k];
        }
        ++rank;
    }
    return rank == rows;
}

std::vector<Generator> enumerate_generators(const std::vector<RationalPoint>& vertices, int n)
{
    require(n >= 0, "simplex dimension must be non-negative");
    require(static_cast<int>(vertices.size()) >= n + 1, "need at least n+1 vertices");
    std::vector<RationalPoint> sorted = vertices;
    std::sort(sorted.begin(), sorted.end(), PointLess{});
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

    std::vector<Generator> out;
    const std::size_t k = static_cast<std::size_t>(n) + 1;
    if (sorted.size() < k)
        return out;
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i)
        idx[i] = i;
    for (;;)
    {
        std::vector<RationalPoint> pts;
        for (std::size_t i : idx)
            pts.push_back(sorted[i]);
        if (affinely_independent(pts))
            out.push_back(Generator::simplex(std::move(pts)));

        std::size_t i = k;
        while (i > 0 && idx[i - 1] == sorted.size() - k + (i - 1))
            --i;
        if (i == 0)
            break;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j)
            idx[j] = idx[j - 1] + 1;
    }
    return out;
}

FormalChain L1Solution::chain(const L1Problem& problem) const
{
    FormalChain z(problem.dim);
    if (status != lp::LpStatus::optimal)
        return z;
    for (std::size_t i = 0; i < problem.generators.size(); ++i)
        z.add(problem.generators[i], coefficients[i]);
    return z;
}

namespace {

struct Assembled
{
    lp::RationalMatrix A;
    std::vector<Rational> b;
    std::vector<Rational> c;
    std::vector<Generator> rows;
};

Assembled assemble(const L1Problem& problem)
{
    require(problem.dim >= 1, "filling dimension must be at least 1");
    for (const auto& g : problem.generators)
        require(g.kind() == CellKind::simplex && g.dim() == problem.dim, "generators must be simplices of the filling dimension");
    require(problem.target.is_zero() || problem.target.dim() == problem.dim - 1, "target must have dimension dim-1");

    std::map<Generator, std::size_t> row_of;
    std::vector<Generator> rows;
    auto row = [&](const Generator& face) {
        auto [it, inserted] = row_of.try_emplace(face, rows.size());
        if (inserted)
            rows.push_back(face);
        return it->second;
    };

    const std::size_t N = problem.generators.size();
    std::vector<std::vector<std::pair<std::size_t, int>>> columns(N);
    for (std::size_t i = 0; i < N; ++i)
        for (const auto& [face, s] : oriented_faces(problem.generators[i]))
            columns[i].emplace_back(row(face), s);
    const FormalChain target = orient(problem.target);
    std::vector<std::pair<std::size_t, Rational>> rhs;
    for (const auto& [face, c] : target)
        rhs.emplace_back(row(face), c);

    Assembled out;
    out.A.assign(rows.size(), std::vector<Rational>(2 * N, Rational(0)));
    out.b.assign(rows.size(), Rational(0));
    out.c.assign(2 * N, Rational(1));
    for (std::size_t i = 0; i < N; ++i)
        for (const auto& [r, s] : columns[i])
        {
            out.A[r][i] += s;
            out.A[r][N + i] -= s;
        }
    for (const auto& [r, c] : rhs)
        out.b[r] = c;
    out.rows = std::move(rows);
    return out;
}

}   // namespace

L1Solution min_l1_fill(const L1Problem& problem)
{
    const Assembled lp_data = assemble(problem);
    const std::size_t N = problem.generators.size();
    const lp::LpResult r = lp::minimize(lp_data.A, lp_data.b, lp_data.c);

    L1Solution s;
    s.status = r.status;
    s.pivots = r.pivots;
    s.rows = lp_data.rows;
    if (r.status == lp::LpStatus::optimal)
    {
        s.coefficients.resize(N);
        for (std::size_t i = 0; i < N; ++i)
            s.coefficients[i] = r.x[i] - r.x[N + i];
        s.objective = r.objective;
        s.certificate = r.dual;
    }
    else if (r.status == lp::LpStatus::infeasible)
        s.certificate = r.farkas;
    return s;
}

bool verify_solution(const L1Problem& problem, const L1Solution& solution, std::string* why)
{
    auto fail = [&](const std::string& reason) {
        if (why)
            *why = reason;
        return false;
    };
    const Assembled lp_data = assemble(problem);
    const std::size_t N = problem.generators.size();
    if (lp_data.rows != solution.rows)
        return fail("row basis does not match the problem");

    lp::LpResult r;
    r.status = solution.status;
    if (solution.status == lp::LpStatus::optimal)
    {
        if (solution.coefficients.size() != N)
            return fail("coefficient vector has wrong length");
        const FormalChain boundary = orient(chains::boundary_simplex(solution.chain(problem)));
        if (boundary != orient(problem.target))
            return fail("boundary of the filling differs from the target");
        Rational norm = 0;
        for (const auto& a : solution.coefficients)
            norm += abs(a);
        if (norm != solution.objective)
            return fail("objective is not the l1 norm of the coefficients");

        r.x.assign(2 * N, Rational(0));
        for (std::size_t i = 0; i < N; ++i)
            (solution.coefficients[i] >= 0 ? r.x[i] : r.x[N + i]) = abs(solution.coefficients[i]);
        r.objective = solution.objective;
        r.dual = solution.certificate;
    }
    else if (solution.status == lp::LpStatus::infeasible)
        r.farkas = solution.certificate;
    else
        return fail("an l1 filling problem cannot be unbounded");
    return lp::check_certificate(lp_data.A, lp_data.b, lp_data.c, r, why);
}

L1Problem cube_filling_problem(int n, bool with_centre)
{
    require(n == 2 || n == 3, "cube filling problems are provided for n = 2 and n = 3");
    const Generator id = Generator::standard_cube(n);
    std::vector<RationalPoint> vertices = id.vertices();
    if (with_centre)
        vertices.push_back(cube2simplex::cube_centre(n));

    L1Problem p;
    p.dim = n;
    p.generators = enumerate_generators(vertices, n);
    p.target = cube2simplex::phi(n - 1, chains::boundary_cube(FormalChain(n, id)));
    return p;
}

nlohmann::json problem_to_json(const L1Problem& problem)
{
    nlohmann::json list = nlohmann::json::array();
    for (const auto& g : problem.generators)
        list.push_back(chains::chain_to_json(FormalChain(problem.dim, g)).at("terms").at(0));
    return {{"dim", problem.dim}, {"generators", std::move(list)}, {"target", chains::chain_to_json(problem.target)}};
}

L1Problem problem_from_json(const nlohmann::json& j)
{
    if (!j.is_object() || !j.contains("dim") || !j.contains("generators") || !j.contains("target"))
        throw InputError("problem JSON needs 'dim', 'generators' and 'target'");
    L1Problem p;
    p.dim = j.at("dim").get<int>();
    if (p.dim < 1 || p.dim > 30)
        throw InputError("problem dimension out of range");
    const FormalChain gens = chains::chain_from_json({{"dim", p.dim}, {"terms", j.at("generators")}});
    for (const auto& [g, c] : gens)
        p.generators.push_back(g);
    p.target = chains::chain_from_json(j.at("target"));
    return p;
}

nlohmann::json solution_to_json(const L1Problem& problem, const L1Solution& solution)
{
    nlohmann::json out = {{"status", lp::to_string(solution.status)}, {"pivots", solution.pivots}};
    nlohmann::json cert = nlohmann::json::array();
    for (const auto& y : solution.certificate)
        cert.push_back(rational_to_json(y));
    out["certificate"] = std::move(cert);
    if (solution.status == lp::LpStatus::optimal)
    {
        out["objective"] = rational_to_json(solution.objective);
        out["objective_decimal"] = to_double(solution.objective);
        out["filling"] = chains::chain_to_json(solution.chain(problem));
    }
    return out;
}

}   // namespace cubevol::l1fill
