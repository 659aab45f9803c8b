#include "cubevol/smear/net.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace cubevol::smear {

Vec3 uniform_disk_point(std::mt19937_64& rng, double r0)
{
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const double r = std::acosh(1.0 + unit(rng) * (std::cosh(r0) - 1.0));
    const double theta = 2.0 * std::numbers::pi * unit(rng);
    return lift(std::sinh(r) * std::cos(theta), std::sinh(r) * std::sin(theta));
}

Vec3 uniform_polygon_point(const SurfaceGroup& surface, std::mt19937_64& rng)
{
    for (;;)
    {
        const Vec3 p = uniform_disk_point(rng, surface.circumradius());
        if (surface.contains(p))
            return p;
    }
}

namespace {

using Klein = Eigen::Vector2d;

Vec3 from_klein(const Klein& k)
{
    const double s = 1.0 / std::sqrt(1.0 - k.squaredNorm());
    return Vec3(k[0] * s, k[1] * s, s);
}

/** Keeps the part of a convex Klein polygon with a k_0 + b k_1 <= c. */
std::vector<Klein> clip(const std::vector<Klein>& poly, double a, double b, double c)
{
    std::vector<Klein> out;
    const std::size_t n = poly.size();
    for (std::size_t i = 0; i < n; ++i)
    {
        const Klein& p = poly[i];
        const Klein& q = poly[(i + 1) % n];
        const double fp = a * p[0] + b * p[1] - c;
        const double fq = a * q[0] + b * q[1] - c;
        if (fp <= 0)
            out.push_back(p);
        if ((fp < 0 && fq > 0) || (fp > 0 && fq < 0))
            out.push_back(p + (q - p) * (fp / (fp - fq)));
    }
    return out;
}

}   // namespace

GammaNet::GammaNet(const SurfaceGroup& surface, double mesh, std::uint64_t seed) : surface_(&surface), mesh_(mesh)
{
    require(mesh > 0.0, "net mesh must be positive");
    if (surface.diameter() <= mesh)
    {
        base_ = {Vec3(0.0, 0.0, 1.0)};
        cells_ = {surface.polygon()};
        elements_ = {{Mat3::Identity(), {}}};
        candidates_ = {{0, 0, base_.front()}};
    }
    else
    {
        double spacing = 0.45 * mesh;
        int count = 20000;
        bool ok = false;
        for (int attempt = 0; attempt < 6 && !ok; ++attempt)
        {
            ok = build(spacing, count, seed + attempt);
            spacing *= 0.85;
            count *= 2;
        }
        require(ok, "could not build a net with the requested mesh");
    }
    candidate_rows_.resize(static_cast<Eigen::Index>(candidates_.size()), 3);
    for (std::size_t c = 0; c < candidates_.size(); ++c)
    {
        // rows hold J c so that a product with y gives <y, c>
        const Vec3& p = candidates_[c].point;
        candidate_rows_.row(static_cast<Eigen::Index>(c)) << p[0], p[1], -p[2];
    }
    check_conditions(seed);
}

bool GammaNet::build(double spacing, int candidate_count, std::uint64_t seed)
{
    const SurfaceGroup& s = *surface_;
    std::mt19937_64 rng(seed);
    const auto near = s.ball(2.0 * s.circumradius() + spacing + 0.1);

    base_.clear();
    std::vector<Vec3> translates;
    for (int c = 0; c < candidate_count; ++c)
    {
        const Vec3 p = uniform_polygon_point(s, rng);
        bool far = true;
        for (const Vec3& t : translates)
            if (distance(p, t) < spacing)
            {
                far = false;
                break;
            }
        if (!far)
            continue;
        base_.push_back(p);
        for (const auto& [h, word] : near)
            translates.push_back(h * p);
    }

    elements_ = s.ball(2.0 * s.circumradius() + 2.0 * mesh_ + 0.1);
    cells_.assign(base_.size(), {});
    for (std::size_t i = 0; i < base_.size(); ++i)
    {
        const double lim = 0.999999;
        std::vector<Klein> poly = {Klein(-lim, -lim), Klein(lim, -lim), Klein(lim, lim), Klein(-lim, lim)};
        for (const auto& [h, word] : elements_)
            for (std::size_t j = 0; j < base_.size(); ++j)
            {
                if (word.empty() && j == i)
                    continue;
                const Vec3 c = h * base_[j];
                if (distance(base_[i], c) > 2.0 * mesh_ + 0.1)
                    continue;
                // d(x, b) <= d(x, c)  <=>  <x, c - b> <= 0
                const Vec3 d = c - base_[i];
                poly = clip(poly, d[0], d[1], d[2]);
            }
        std::vector<Vec3> cell;
        for (const Klein& k : poly)
        {
            if (k.norm() >= 0.9999)
                return false;
            cell.push_back(from_klein(k));
        }
        cells_[i] = std::move(cell);
        if (cell_diameter(i) > mesh_)
            return false;
    }

    candidates_.clear();
    const Vec3 origin(0.0, 0.0, 1.0);
    for (std::size_t e = 0; e < elements_.size(); ++e)
        for (std::size_t j = 0; j < base_.size(); ++j)
        {
            const Vec3 c = elements_[e].first * base_[j];
            if (distance(origin, c) <= s.circumradius() + mesh_ + 0.1)
                candidates_.push_back({static_cast<int>(j), static_cast<int>(e), c});
        }
    return true;
}

double GammaNet::cell_diameter(std::size_t i) const
{
    const auto& c = cells_.at(i);
    double best = 0.0;
    for (std::size_t a = 0; a < c.size(); ++a)
        for (std::size_t b = a + 1; b < c.size(); ++b)
            best = std::max(best, distance(c[a], c[b]));
    return best;
}

NetPoint GammaNet::locate(const Vec3& y) const
{
    const SurfaceGroup& s = *surface_;
    const Reduction r = s.reduce(y);
    Eigen::Index best = 0;
    // nearest orbit point maximizes <y', c> (= -cosh d)
    (candidate_rows_ * r.point).maxCoeff(&best);
    const Candidate& c = candidates_[static_cast<std::size_t>(best)];
    NetPoint out;
    out.index = c.index;
    const Mat3 gamma = s.element(r.word) * elements_[static_cast<std::size_t>(c.element)].first;
    out.word = s.canonical_word(gamma);
    out.gamma = s.element(out.word);
    out.point = out.gamma * base_[static_cast<std::size_t>(c.index)];
    return out;
}

void GammaNet::check_conditions(std::uint64_t seed)
{
    const SurfaceGroup& s = *surface_;
    conditions_ = {};
    conditions_.local_count = static_cast<long>(s.ball(1.0 + s.diameter()).size() * base_.size());

    double total = 0.0;
    for (std::size_t i = 0; i < cells_.size(); ++i)
    {
        total += polygon_area(cells_[i]);
        conditions_.max_cell_diameter = std::max(conditions_.max_cell_diameter, cell_diameter(i));
    }
    conditions_.partition_defect = std::abs(total - s.area());
    conditions_.diameter_ok = conditions_.max_cell_diameter <= mesh_;

    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
    const auto group = s.ball(4.0);
    std::uniform_int_distribution<std::size_t> pick(0, group.size() - 1);
    for (int probe = 0; probe < 100; ++probe)
    {
        const Vec3 x = uniform_disk_point(rng, 3.0);
        const auto& [g, word] = group[pick(rng)];
        const NetPoint px = locate(x);
        const NetPoint pgx = locate(g * x);
        if (pgx.index != px.index || pgx.word != s.canonical_word(g * px.gamma))
            ++conditions_.equivariance_failures;
    }
}

}   // namespace cubevol::smear
