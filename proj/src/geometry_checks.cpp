#include "cubevol/geometry_checks.hpp"

#include <algorithm>
#include <map>

#include "cubevol/volume.hpp"

namespace cubevol::hyp {

double diameter(const StraightCube& c)
{
    require(!c.is_ideal(), "diameter is defined for finite cubes");
    double best = 0.0;
    const auto& v = c.vertices();
    for (std::size_t a = 0; a < v.size(); ++a)
        for (std::size_t b = a + 1; b < v.size(); ++b)
            best = std::max(best, distance(v[a], v[b]));
    return best;
}

namespace {

/** Hyperboloid coordinates of the grid^k parameter grid, in index order. */
std::vector<Vec> grid_points(const StraightCube& c, int grid)
{
    require(grid >= 2, "grid needs at least two points per axis");
    const int k = c.dim();
    long count = 1;
    for (int i = 0; i < k; ++i)
        count *= grid;
    std::vector<Vec> out;
    out.reserve(count);
    std::vector<double> t(k);
    for (long idx = 0; idx < count; ++idx)
    {
        long r = idx;
        for (int i = 0; i < k; ++i)
        {
            t[i] = static_cast<double>(r % grid) / (grid - 1);
            r /= grid;
        }
        out.push_back(c.evaluate(t).coords());
    }
    return out;
}

/** Orthonormal basis (columns) of the span of the rows of `centered`, with rank decided by tol. */
Mat span_basis(const Mat& centered, double tol)
{
    Eigen::JacobiSVD<Mat> svd(centered, Eigen::ComputeThinV);
    const auto& s = svd.singularValues();
    int rank = 0;
    const double scale = s.size() > 0 ? std::max(1.0, s[0]) : 1.0;
    while (rank < s.size() && s[rank] > tol * scale)
        ++rank;
    return svd.matrixV().leftCols(rank);
}

struct Facet
{
    Vec normal;
    double offset;
    std::vector<std::size_t> members;
};

/** Supporting hyperplanes of a full-dimensional point set in R^d, one per facet. */
std::vector<Facet> facets(const std::vector<Vec>& points, double tol)
{
    const std::size_t m = points.size();
    const int d = static_cast<int>(points.front().size());
    std::vector<Facet> out;
    std::vector<std::size_t> idx(d);
    for (int i = 0; i < d; ++i)
        idx[i] = i;
    auto same_plane = [&](const Facet& f, const Vec& n, double off) {
        return (f.normal - n).norm() < 1e-9 && std::abs(f.offset - off) < 1e-9;
    };
    if (m < static_cast<std::size_t>(d))
        return out;
    for (;;)
    {
        Mat e(d - 1, d);
        for (int r = 0; r + 1 < d; ++r)
            e.row(r) = (points[idx[r + 1]] - points[idx[0]]).transpose();
        Vec n;
        if (d == 1)
            n = Vec::Ones(1);
        else
        {
            Eigen::FullPivLU<Mat> lu(e);
            const Mat kernel = lu.kernel();
            if (kernel.cols() == 1 && lu.rank() == d - 1)
                n = kernel.col(0).normalized();
        }
        if (n.size() == d)
        {
            double off = n.dot(points[idx[0]]);
            double lo = 0.0;
            double hi = 0.0;
            for (const auto& p : points)
            {
                const double s = n.dot(p) - off;
                lo = std::min(lo, s);
                hi = std::max(hi, s);
            }
            const double scale = std::max(1.0, hi - lo);
            bool supporting = true;
            if (hi > tol * scale)
            {
                if (lo < -tol * scale)
                    supporting = false;
                else
                {
                    n = -n;
                    off = -off;
                }
            }
            if (supporting && std::none_of(out.begin(), out.end(), [&](const Facet& f) { return same_plane(f, n, off); }))
            {
                Facet f{n, off, {}};
                for (std::size_t k = 0; k < m; ++k)
                    if (std::abs(n.dot(points[k]) - off) <= tol * scale)
                        f.members.push_back(k);
                out.push_back(std::move(f));
            }
        }

        int i = d;
        while (i > 0 && idx[i - 1] == m - d + (i - 1))
            --i;
        if (i == 0)
            break;
        ++idx[i - 1];
        for (int j = i; j < d; ++j)
            idx[j] = idx[j - 1] + 1;
    }
    return out;
}

}   // namespace

DiameterCheck check_diameter(const StraightCube& c, int grid, double tol)
{
    DiameterCheck r;
    r.vertex_diameter = diameter(c);
    const std::vector<Vec> pts = grid_points(c, grid);
    // -<x,y> = cosh d, so compare the Minkowski products and convert once
    double worst = 1.0;
    const Eigen::Index n = pts.front().size() - 1;
    for (std::size_t a = 0; a < pts.size(); ++a)
        for (std::size_t b = a + 1; b < pts.size(); ++b)
        {
            const double ch = pts[a][n] * pts[b][n] - pts[a].head(n).dot(pts[b].head(n));
            worst = std::max(worst, ch);
        }
    r.grid_diameter = std::acosh(worst);
    r.ok = r.grid_diameter <= r.vertex_diameter + tol;
    return r;
}

bool in_convex_hull(const std::vector<Vec>& points, const Vec& q, double tol)
{
    require(!points.empty(), "hull of an empty set");
    const Eigen::Index d = q.size();
    Vec centroid = Vec::Zero(d);
    for (const auto& p : points)
        centroid += p;
    centroid /= static_cast<double>(points.size());

    Mat centered(points.size(), d);
    for (std::size_t k = 0; k < points.size(); ++k)
        centered.row(k) = (points[k] - centroid).transpose();
    const Mat basis = span_basis(centered, 1e-12);
    const Eigen::Index r = basis.cols();
    const Vec rel = q - centroid;
    if ((rel - basis * (basis.transpose() * rel)).norm() > tol)
        return false;
    if (r == 0)
        return true;

    std::vector<Vec> projected;
    for (const auto& p : points)
        projected.push_back(basis.transpose() * (p - centroid));
    const Vec qp = basis.transpose() * rel;
    if (r == 1)
    {
        double lo = projected.front()[0];
        double hi = lo;
        for (const auto& p : projected)
        {
            lo = std::min(lo, p[0]);
            hi = std::max(hi, p[0]);
        }
        return qp[0] >= lo - tol && qp[0] <= hi + tol;
    }
    for (const auto& f : facets(projected, 1e-12))
        if (f.normal.dot(qp) - f.offset > tol)
            return false;
    return true;
}

bool hull_containment(const StraightCube& c, int grid, double tol)
{
    require(!c.is_ideal(), "hull containment is checked on finite cubes");
    std::vector<Vec> hull;
    for (const auto& v : c.vertices())
        hull.push_back(v.to_klein());
    for (const Vec& x : grid_points(c, grid))
    {
        const Eigen::Index n = x.size() - 1;
        if (!in_convex_hull(hull, Vec(x.head(n) / x[n]), tol))
            return false;
    }
    return true;
}

std::vector<std::vector<Vec>> triangulate_hull(const std::vector<Vec>& points)
{
    require(!points.empty(), "hull of an empty set");
    const Eigen::Index d = points.front().size();
    Vec centroid = Vec::Zero(d);
    for (const auto& p : points)
        centroid += p;
    centroid /= static_cast<double>(points.size());
    if (d == 1)
    {
        double lo = points.front()[0];
        double hi = lo;
        for (const auto& p : points)
        {
            lo = std::min(lo, p[0]);
            hi = std::max(hi, p[0]);
        }
        return {{Vec::Constant(1, lo), Vec::Constant(1, hi)}};
    }

    std::vector<std::vector<Vec>> out;
    for (const auto& f : facets(points, 1e-12))
    {
        // triangulate the facet inside its own (d-1)-dimensional plane, then cone from the centroid
        std::vector<Vec> members;
        for (std::size_t k : f.members)
            members.push_back(points[k]);
        Vec fc = Vec::Zero(d);
        for (const auto& p : members)
            fc += p;
        fc /= static_cast<double>(members.size());
        Mat centered(members.size(), d);
        for (std::size_t k = 0; k < members.size(); ++k)
            centered.row(k) = (members[k] - fc).transpose();
        const Mat basis = span_basis(centered, 1e-12);
        if (basis.cols() != d - 1)
            continue;
        std::vector<Vec> local;
        for (const auto& p : members)
            local.push_back(basis.transpose() * (p - fc));
        for (const auto& simplex : triangulate_hull(local))
        {
            std::vector<Vec> lifted;
            for (const auto& p : simplex)
                lifted.push_back(fc + basis * p);
            lifted.push_back(centroid);
            out.push_back(std::move(lifted));
        }
    }
    return out;
}

HullVolume hull_volume(const StraightCube& c, int order, int depth)
{
    require(!c.is_ideal(), "hull volume is computed for finite cubes");
    require(c.dim() == c.ambient_dim(), "hull volume expects an n-cube in H^n");
    std::vector<Vec> klein;
    for (const auto& v : c.vertices())
        klein.push_back(v.to_klein());
    HullVolume r;
    for (const auto& simplex : triangulate_hull(klein))
    {
        const double vol = geodesic_simplex_volume(simplex, order, depth);
        r.volume += vol;
        r.max_simplex_volume = std::max(r.max_simplex_volume, vol);
        ++r.simplex_count;
    }
    return r;
}

GeodesicTestReport geodesic_test(const StraightCube& c, double tol)
{
    const int n = c.dim();
    require(n >= 2, "geodesic test needs n >= 2");
    require(c.ambient_dim() == n, "geodesic test expects an n-cube in H^n");
    GeodesicTestReport r;
    for (int j = 1; j <= n; ++j)
        for (int i = 0; i <= 1; ++i)
        {
            const StraightCube f = c.face(j, i);
            const auto& v = f.vertices();
            if (static_cast<int>(v.size()) < n + 1)
            {
                r.residuals.push_back(0.0);
                continue;
            }
            Mat rows(v.size(), n + 1);
            for (std::size_t k = 0; k < v.size(); ++k)
                rows.row(k) = v[k].coords().normalized().transpose();
            Eigen::JacobiSVD<Mat> svd(rows);
            r.residuals.push_back(svd.singularValues()[n]);
        }
    r.is_geodesic = std::all_of(r.residuals.begin(), r.residuals.end(), [&](double x) { return x < tol; });
    return r;
}

}   // namespace cubevol::hyp
