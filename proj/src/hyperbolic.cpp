#include "cubevol/hyperbolic.hpp"

namespace cubevol::hyp {

double minkowski(const Vec& x, const Vec& y)
{
    const Eigen::Index n = x.size() - 1;
    return x.head(n).dot(y.head(n)) - x[n] * y[n];
}

HPoint HPoint::finite(Vec coords)
{
    require(coords.size() >= 2, "hyperboloid points need at least two coordinates");
    const double last = coords[coords.size() - 1];
    require(last > 0, "hyperboloid point must have positive last coordinate");
    require(std::abs(minkowski(coords, coords) + 1.0) <= 1e-12 * std::max(1.0, last * last),
            "point is not on the hyperboloid");
    return HPoint(std::move(coords), false);
}

HPoint HPoint::ideal(Vec direction)
{
    require(direction.size() >= 2, "ideal points need at least two coordinates");
    const double last = direction[direction.size() - 1];
    require(last > 0, "ideal direction must be future pointing");
    direction /= last;
    require(std::abs(minkowski(direction, direction)) <= 1e-12, "ideal direction is not null");
    return HPoint(std::move(direction), true);
}

HPoint HPoint::from_spatial(const Vec& y)
{
    Vec x(y.size() + 1);
    x.head(y.size()) = y;
    x[y.size()] = std::sqrt(1.0 + y.squaredNorm());
    return HPoint(std::move(x), false);
}

HPoint HPoint::origin(int n)
{
    return from_spatial(Vec::Zero(n));
}

HPoint HPoint::from_klein(const Vec& k)
{
    const double r2 = k.squaredNorm();
    require(r2 <= 1.0 + 1e-12, "Klein point outside the closed unit ball");
    Vec x(k.size() + 1);
    if (r2 >= 1.0 - 1e-15)
    {
        x.head(k.size()) = k / std::sqrt(r2);
        x[k.size()] = 1.0;
        return HPoint(std::move(x), true);
    }
    const double s = 1.0 / std::sqrt(1.0 - r2);
    x.head(k.size()) = k * s;
    x[k.size()] = s;
    return HPoint(std::move(x), false);
}

HPoint HPoint::from_ball(const Vec& b)
{
    const double r2 = b.squaredNorm();
    require(r2 <= 1.0 + 1e-12, "ball point outside the closed unit ball");
    Vec x(b.size() + 1);
    if (r2 >= 1.0 - 1e-15)
    {
        x.head(b.size()) = b / std::sqrt(r2);
        x[b.size()] = 1.0;
        return HPoint(std::move(x), true);
    }
    const double s = 1.0 / (1.0 - r2);
    x.head(b.size()) = 2.0 * s * b;
    x[b.size()] = (1.0 + r2) * s;
    return HPoint(std::move(x), false);
}

Vec HPoint::to_klein() const
{
    const int n = dim();
    return coords_.head(n) / coords_[n];
}

Vec HPoint::to_ball() const
{
    const int n = dim();
    return ideal_ ? Vec(coords_.head(n)) : Vec(coords_.head(n) / (1.0 + coords_[n]));
}

double distance(const HPoint& x, const HPoint& y)
{
    require(!x.is_ideal() && !y.is_ideal(), "distance is defined between finite points");
    const Vec diff = x.coords() - y.coords();
    const double s = std::max(0.0, minkowski(diff, diff));
    return 2.0 * std::asinh(0.5 * std::sqrt(s));
}

HPoint geodesic(const HPoint& x, const HPoint& y, double t)
{
    require(!x.is_ideal() && !y.is_ideal(), "geodesic endpoints must be finite");
    const double q = std::max(0.0, -1.0 - minkowski(x.coords(), y.coords()));
    double a = 0.0;
    double b = 0.0;
    geodesic_weights(q, t, a, b);
    return HPoint::from_spatial((a * x.coords() + b * y.coords()).head(x.dim()));
}

HIsometry::HIsometry(Mat m) : m_(std::move(m))
{
    require(m_.rows() == m_.cols() && m_.rows() >= 2, "isometry must be a square matrix of size >= 2");
    const Eigen::Index n = m_.rows() - 1;
    Mat J = Mat::Identity(n + 1, n + 1);
    J(n, n) = -1.0;
    const double scale = std::max(1.0, m_.cwiseAbs().maxCoeff());
    require((m_.transpose() * J * m_ - J).cwiseAbs().maxCoeff() <= 1e-9 * scale * scale,
            "matrix does not preserve the Minkowski form");
    require(m_(n, n) > 0, "isometry must preserve the upper sheet");
}

HIsometry HIsometry::identity(int n)
{
    return HIsometry(Mat::Identity(n + 1, n + 1));
}

HIsometry HIsometry::translation(int n, int axis, double dist)
{
    require(axis >= 0 && axis < n, "translation axis out of range");
    Mat m = Mat::Identity(n + 1, n + 1);
    m(axis, axis) = std::cosh(dist);
    m(axis, n) = std::sinh(dist);
    m(n, axis) = std::sinh(dist);
    m(n, n) = std::cosh(dist);
    return HIsometry(std::move(m));
}

HIsometry HIsometry::rotation(int n, int i, int j, double angle)
{
    require(i >= 0 && j >= 0 && i < n && j < n && i != j, "rotation plane out of range");
    Mat m = Mat::Identity(n + 1, n + 1);
    m(i, i) = std::cos(angle);
    m(i, j) = -std::sin(angle);
    m(j, i) = std::sin(angle);
    m(j, j) = std::cos(angle);
    return HIsometry(std::move(m));
}

HIsometry HIsometry::reflection(int n, int axis)
{
    require(axis >= 0 && axis < n, "reflection axis out of range");
    Mat m = Mat::Identity(n + 1, n + 1);
    m(axis, axis) = -1.0;
    return HIsometry(std::move(m));
}

HIsometry HIsometry::random(int n, std::mt19937_64& rng, double max_translation, bool reverse)
{
    std::normal_distribution<double> gauss;
    auto random_rotation = [&]() {
        Mat g(n, n);
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c)
                g(r, c) = gauss(rng);
        Eigen::HouseholderQR<Mat> qr(g);
        Mat q = qr.householderQ();
        if (q.determinant() < 0)
            q.col(0) *= -1.0;
        Mat m = Mat::Identity(n + 1, n + 1);
        m.topLeftCorner(n, n) = q;
        return HIsometry(std::move(m));
    };
    std::uniform_real_distribution<double> uniform(0.0, max_translation);
    HIsometry g = random_rotation() * translation(n, 0, uniform(rng)) * random_rotation();
    return reverse ? g * reflection(n, 0) : g;
}

HPoint HIsometry::apply(const HPoint& x) const
{
    require(x.dim() == dim(), "isometry and point dimensions differ");
    Vec y = m_ * x.coords();
    return x.is_ideal() ? HPoint::ideal(std::move(y)) : HPoint::from_spatial(y.head(dim()));
}

HIsometry HIsometry::inverse() const
{
    const Eigen::Index n = m_.rows() - 1;
    Mat J = Mat::Identity(n + 1, n + 1);
    J(n, n) = -1.0;
    return HIsometry(J * m_.transpose() * J);
}

}   // namespace cubevol::hyp
