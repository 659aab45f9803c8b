#include "cubevol/volume.hpp"

#include <cmath>
#include <numbers>

#include <boost/math/special_functions/bernoulli.hpp>
#include <boost/math/special_functions/legendre.hpp>

#include "cubevol/cube2simplex.hpp"
#include "cubevol/dual.hpp"

namespace cubevol::hyp {

GaussRule gauss_legendre(int order)
{
    require(order >= 1 && order <= 64, "quadrature order must be in 1..64");
    const std::vector<double> zeros = boost::math::legendre_p_zeros<double>(order);
    GaussRule rule;
    auto push = [&](double x) {
        const double dp = boost::math::legendre_p_prime<double>(order, x);
        rule.nodes.push_back(0.5 * (1.0 + x));
        rule.weights.push_back(1.0 / ((1.0 - x * x) * dp * dp));
    };
    for (auto it = zeros.rbegin(); it != zeros.rend(); ++it)
        if (*it != 0.0)
            push(-*it);
    for (double x : zeros)
        push(x);
    return rule;
}

double pairwise_sum(const std::vector<double>& values)
{
    if (values.empty())
        return 0.0;
    std::vector<double> level = values;
    while (level.size() > 1)
    {
        std::vector<double> next((level.size() + 1) / 2);
        for (std::size_t i = 0; i < next.size(); ++i)
            next[i] = 2 * i + 1 < level.size() ? level[2 * i] + level[2 * i + 1] : level[2 * i];
        level = std::move(next);
    }
    return level.front();
}

namespace {

template <int N>
double density(const StraightCube& c, const double* t)
{
    std::vector<Dual<N>> params(N);
    for (int i = 0; i < N; ++i)
        params[i] = Dual<N>::variable(t[i], i);
    const std::vector<Dual<N>> x = c.evaluate_as(params);
    Eigen::Matrix<double, N + 1, N + 1> m;
    for (int k = 0; k <= N; ++k)
    {
        for (int j = 0; j < N; ++j)
            m(k, j) = x[k].d[j];
        m(k, N) = x[k].v;
    }
    return m.determinant();
}

double density_dispatch(const StraightCube& c, const double* t)
{
    switch (c.dim())
    {
        case 1: return density<1>(c, t);
        case 2: return density<2>(c, t);
        case 3: return density<3>(c, t);
        case 4: return density<4>(c, t);
        case 5: return density<5>(c, t);
        case 6: return density<6>(c, t);
    }
    throw ContractViolation("signed volume supports cube dimensions 1..6");
}

/** Tensor rule over the 2^(depth n) dyadic subcubes; one partial sum per subcube. */
double integrate(const StraightCube& c, const GaussRule& rule, int depth)
{
    const int n = c.dim();
    const long cells_per_axis = 1L << depth;
    const double h = 1.0 / static_cast<double>(cells_per_axis);
    long cell_count = 1;
    long node_count = 1;
    for (int i = 0; i < n; ++i)
    {
        cell_count *= cells_per_axis;
        node_count *= static_cast<long>(rule.nodes.size());
    }
    const double scale = std::pow(h, n);

    std::vector<double> partial(cell_count);
    std::vector<double> node_values(node_count);
    std::vector<double> t(n);
    for (long cell = 0; cell < cell_count; ++cell)
    {
        for (long node = 0; node < node_count; ++node)
        {
            long cr = cell;
            long nr = node;
            double w = scale;
            for (int i = 0; i < n; ++i)
            {
                const long ci = cr % cells_per_axis;
                const long ni = nr % static_cast<long>(rule.nodes.size());
                cr /= cells_per_axis;
                nr /= static_cast<long>(rule.nodes.size());
                t[i] = (static_cast<double>(ci) + rule.nodes[ni]) * h;
                w *= rule.weights[ni];
            }
            node_values[node] = w * density_dispatch(c, t.data());
        }
        partial[cell] = pairwise_sum(node_values);
    }
    return pairwise_sum(partial);
}

}   // namespace

double volume_density(const StraightCube& c, const std::vector<double>& t)
{
    require(static_cast<int>(t.size()) == c.dim(), "parameter length must equal cube dimension");
    return density_dispatch(c, t.data());
}

VolumeResult signed_volume(const StraightCube& c, int order, int depth)
{
    require(!c.is_ideal(), "signed volume needs finite vertices; truncate ideal cubes first");
    require(c.dim() == c.ambient_dim(), "signed volume is defined for n-cubes in H^n");
    require(depth >= 0 && depth <= 8, "subdivision depth must be in 0..8");
    const GaussRule rule = gauss_legendre(order);
    VolumeResult r;
    r.order = order;
    r.depth = depth;
    r.value = integrate(c, rule, depth);
    r.error_estimate = std::abs(r.value - integrate(c, rule, depth == 0 ? 1 : depth - 1));
    return r;
}

VolumeResult signed_volume_adaptive(const StraightCube& c, double tol, int order, int min_depth, int max_depth)
{
    require(!c.is_ideal(), "signed volume needs finite vertices; truncate ideal cubes first");
    require(c.dim() == c.ambient_dim(), "signed volume is defined for n-cubes in H^n");
    require(min_depth >= 1 && min_depth <= max_depth && max_depth <= 8, "invalid depth range");
    const GaussRule rule = gauss_legendre(order);
    double previous = integrate(c, rule, min_depth - 1);
    VolumeResult r;
    r.order = order;
    for (int depth = min_depth; depth <= max_depth; ++depth)
    {
        r.depth = depth;
        r.value = integrate(c, rule, depth);
        r.error_estimate = std::abs(r.value - previous);
        if (r.error_estimate < tol)
            return r;
        previous = r.value;
    }
    r.tolerance_missed = true;
    return r;
}

double lobachevsky(double theta)
{
    constexpr double pi = std::numbers::pi;
    const double reduced = theta - pi * std::round(theta / pi);
    const double x = 2.0 * reduced;
    if (x == 0.0)
        return 0.0;
    // Clausen function Cl_2(x) = x - x log|x| + sum_k |B_2k| x^(2k+1) / (2k (2k+1)!), |x| <= pi
    double sum = x - x * std::log(std::abs(x));
    const double x2 = x * x;
    double power = x;
    for (int k = 1; k <= 60; ++k)
    {
        power *= x2;
        const double b = std::abs(boost::math::bernoulli_b2n<double>(k));
        const double term = b * power / (2.0 * k * std::tgamma(2.0 * k + 2.0));
        sum += term;
        if (std::abs(term) < 1e-18 * std::abs(sum))
            break;
    }
    return 0.5 * sum;
}

double ideal_tetra_volume(double alpha, double beta, double gamma)
{
    require(alpha >= 0 && beta >= 0 && gamma >= 0, "dihedral angles must be non-negative");
    require(std::abs(alpha + beta + gamma - std::numbers::pi) <= 1e-9, "dihedral angles must sum to pi");
    return lobachevsky(alpha) + lobachevsky(beta) + lobachevsky(gamma);
}

double v3_simplex()
{
    return 3.0 * lobachevsky(std::numbers::pi / 3.0);
}

std::array<double, 3> ideal_tetra_angles(const std::array<Vec, 4>& vertices)
{
    const Vec& apex = vertices[0];
    std::array<Vec, 3> image;
    for (int k = 0; k < 3; ++k)
    {
        const Vec d = vertices[k + 1] - apex;
        const double r2 = d.squaredNorm();
        require(r2 > 1e-24, "ideal vertices must be distinct");
        image[k] = apex + d / r2;
    }
    std::array<double, 3> angles{};
    for (int k = 0; k < 3; ++k)
    {
        const Vec u = image[(k + 1) % 3] - image[k];
        const Vec v = image[(k + 2) % 3] - image[k];
        const double cross = std::sqrt(std::max(0.0, u.squaredNorm() * v.squaredNorm() - u.dot(v) * u.dot(v)));
        angles[k] = std::atan2(cross, u.dot(v));
    }
    return angles;
}

CoxeterReport coxeter_check()
{
    const StraightCube cube = regular_ideal_cube(3);
    const chains::FormalChain pattern = cube2simplex::t_map(3);
    CoxeterReport report;
    int slot = 0;
    for (const auto& [tetra, coeff] : pattern)
    {
        std::array<Vec, 4> vertices;
        for (int k = 0; k < 4; ++k)
        {
            std::uint32_t index = 0;
            const RationalPoint& p = tetra.vertex(k);
            for (int i = 0; i < 3; ++i)
                if (p[i] == 1)
                    index |= 1u << i;
            vertices[k] = cube.vertex(index).to_ball();
        }
        report.angles[slot] = ideal_tetra_angles(vertices);
        const auto& a = report.angles[slot];
        report.volumes[slot] = ideal_tetra_volume(a[0], a[1], a[2]);
        ++slot;
    }
    report.sum = report.volumes[0] + report.volumes[1] + report.volumes[2] + report.volumes[3] + report.volumes[4];
    return report;
}

double geodesic_simplex_volume(const std::vector<Vec>& klein, int order, int depth)
{
    require(!klein.empty(), "simplex needs vertices");
    const int n = static_cast<int>(klein.size()) - 1;
    for (const auto& p : klein)
    {
        require(p.size() == n, "an n-simplex in H^n needs n+1 points in R^n");
        require(p.squaredNorm() < 1.0, "geodesic_simplex_volume expects finite vertices");
    }
    if (n == 0)
        return 0.0;
    Mat edges(n, n);
    for (int k = 0; k < n; ++k)
        edges.col(k) = klein[k] - klein[n];
    const double euclidean = std::abs(edges.determinant());
    if (euclidean == 0.0)
        return 0.0;

    const GaussRule rule = gauss_legendre(order);
    const long cells_per_axis = 1L << depth;
    const double h = 1.0 / static_cast<double>(cells_per_axis);
    long cell_count = 1;
    long node_count = 1;
    for (int i = 0; i < n; ++i)
    {
        cell_count *= cells_per_axis;
        node_count *= static_cast<long>(rule.nodes.size());
    }
    std::vector<double> partial(cell_count);
    std::vector<double> values(node_count);
    std::vector<double> u(n);
    for (long cell = 0; cell < cell_count; ++cell)
    {
        for (long node = 0; node < node_count; ++node)
        {
            long cr = cell;
            long nr = node;
            double w = std::pow(h, n);
            for (int i = 0; i < n; ++i)
            {
                const long ni = nr % static_cast<long>(rule.nodes.size());
                u[i] = (static_cast<double>(cr % cells_per_axis) + rule.nodes[ni]) * h;
                w *= rule.weights[ni];
                cr /= cells_per_axis;
                nr /= static_cast<long>(rule.nodes.size());
            }
            // Duffy map: weights u_1, (1-u_1) u_2, ..., remainder on the last vertex
            Vec p = Vec::Zero(n);
            double rest = 1.0;
            double jac = 1.0;
            for (int i = 0; i < n; ++i)
            {
                p += rest * u[i] * klein[i];
                jac *= std::pow(1.0 - u[i], n - 1 - i);
                rest *= 1.0 - u[i];
            }
            p += rest * klein[n];
            values[node] = w * jac * std::pow(1.0 - p.squaredNorm(), -0.5 * (n + 1));
        }
        partial[cell] = pairwise_sum(values);
    }
    return euclidean * pairwise_sum(partial);
}

}   // namespace cubevol::hyp
