#include "cubevol/smear/surface.hpp"

#include <cmath>
#include <deque>
#include <map>
#include <numbers>

#include <boost/container_hash/hash.hpp>

namespace cubevol::smear {

double minkowski(const Vec3& x, const Vec3& y)
{
    return x[0] * y[0] + x[1] * y[1] - x[2] * y[2];
}

Vec3 lift(double x, double y)
{
    return Vec3(x, y, std::sqrt(1.0 + x * x + y * y));
}

double distance(const Vec3& a, const Vec3& b)
{
    const Vec3 d = a - b;
    return 2.0 * std::asinh(0.5 * std::sqrt(std::max(0.0, minkowski(d, d))));
}

Mat3 boost_x(double r)
{
    Mat3 m = Mat3::Identity();
    m(0, 0) = std::cosh(r);
    m(0, 2) = std::sinh(r);
    m(2, 0) = std::sinh(r);
    m(2, 2) = std::cosh(r);
    return m;
}

Mat3 rotation(double angle)
{
    Mat3 m = Mat3::Identity();
    m(0, 0) = std::cos(angle);
    m(0, 1) = -std::sin(angle);
    m(1, 0) = std::sin(angle);
    m(1, 1) = std::cos(angle);
    return m;
}

Mat3 reflection()
{
    Mat3 m = Mat3::Identity();
    m(1, 1) = -1.0;
    return m;
}

Mat3 lorentz_inverse(const Mat3& m)
{
    const Eigen::Vector3d j(1.0, 1.0, -1.0);
    return j.asDiagonal() * m.transpose() * j.asDiagonal();
}

double signed_triangle_area(const Vec3& a, const Vec3& b, const Vec3& c)
{
    Mat3 m;
    m << a, b, c;
    return 2.0 * std::atan2(m.determinant(), 1.0 - minkowski(a, b) - minkowski(b, c) - minkowski(c, a));
}

double polygon_area(const std::vector<Vec3>& vertices)
{
    double area = 0.0;
    for (std::size_t k = 1; k + 1 < vertices.size(); ++k)
        area += signed_triangle_area(vertices[0], vertices[k], vertices[k + 1]);
    return area;
}

namespace {

template <typename T>
using Mat3T = Eigen::Matrix<T, 3, 3>;

/** Reflection in the geodesic with Minkowski unit normal u: x -> x - 2 <x,u> u. */
template <typename T>
Mat3T<T> reflection_in(const Eigen::Matrix<T, 3, 1>& u)
{
    const Eigen::Matrix<T, 3, 1> j(1, 1, -1);
    return Mat3T<T>::Identity() - T(2) * u * (j.asDiagonal() * u).transpose();
}

/**
 * Side pairing for side k of the regular n-gon with inradius acosh(cot(pi/n)):
 * reflect across the bisector of sides k and partner, then across side k.
 * Built in extended precision, since the relator multiplies 4g of them.
 */
template <typename T>
Mat3T<T> side_pairing(int k, int partner, int n)
{
    using std::cos;
    using std::sin;
    using std::tan;
    using std::sqrt;
    const T pi = std::numbers::pi_v<T>;
    const T cosh_r = T(1) / tan(pi / T(n));
    const T sinh_r = sqrt(cosh_r * cosh_r - T(1));
    const T phi = T(2) * pi * T(k) / T(n);
    const Eigen::Matrix<T, 3, 1> normal(cosh_r * cos(phi), cosh_r * sin(phi), sinh_r);
    const T bisector = pi * T(k + partner) / T(n);
    const Eigen::Matrix<T, 3, 1> line_normal(-sin(bisector), cos(bisector), T(0));
    return reflection_in<T>(normal) * reflection_in<T>(line_normal);
}

}   // namespace

SurfaceGroup::SurfaceGroup(int genus) : genus_(genus)
{
    require(genus >= 2, "surface genus must be at least 2");
    const int n = sides();
    const double pi = std::numbers::pi;
    const double cot = 1.0 / std::tan(pi / n);
    inradius_ = std::acosh(cot);
    circumradius_ = std::acosh(cot * cot);
    area_ = 2.0 * pi * (2.0 * genus - 2.0);

    for (int k = 0; k < n; ++k)
    {
        const double phi = 2.0 * pi * k / n;
        normals_.emplace_back(std::cosh(inradius_) * std::cos(phi), std::cosh(inradius_) * std::sin(phi),
                              std::sinh(inradius_));
        const double vertex_angle = phi + pi / n;
        polygon_.push_back(lift(std::sinh(circumradius_) * std::cos(vertex_angle),
                                std::sinh(circumradius_) * std::sin(vertex_angle)));
    }
    for (int k = 0; k < n; ++k)
    {
        generators_.push_back(side_pairing<long double>(k, partner(k), n).cast<double>());
        inverses_.push_back(lorentz_inverse(generators_.back()));
    }
}

int SurfaceGroup::partner(int k) const
{
    require(k >= 0 && k < sides(), "side index out of range");
    return (k % 4 < 2) ? k + 2 : k - 2;
}

bool SurfaceGroup::contains(const Vec3& p, double tol) const
{
    for (int k = 0; k < sides(); ++k)
        if (side_value(p, k) > tol * p[2])
            return false;
    return true;
}

Mat3 SurfaceGroup::relator() const
{
    const int n = sides();
    auto g = [&](int k) { return side_pairing<long double>(k, partner(k), n); };
    Mat3T<long double> m = Mat3T<long double>::Identity();
    for (int i = 0; i < genus_; ++i)
        m = m * g(4 * i) * g(4 * i + 3) * g(4 * i + 2) * g(4 * i + 1);
    return m.cast<double>();
}

Mat3 SurfaceGroup::element(const std::vector<int>& word) const
{
    Mat3 m = Mat3::Identity();
    for (int k : word)
        m = m * generators_.at(k);
    return m;
}

Reduction SurfaceGroup::reduce(const Vec3& p) const
{
    Reduction r{p, {}};
    const int n = sides();
    for (int step = 0; step < 100000; ++step)
    {
        const double scale = r.point[2];
        double worst = 1e-12 * scale;
        for (int k = 0; k < n; ++k)
            worst = std::max(worst, side_value(r.point, k));
        if (worst <= 1e-12 * scale)
            return r;
        int chosen = 0;
        for (int k = 0; k < n; ++k)
            if (side_value(r.point, k) >= worst - 1e-9 * scale)
            {
                chosen = k;
                break;
            }
        const Vec3 q = inverses_[chosen] * r.point;
        r.point = lift(q[0], q[1]);
        r.word.push_back(chosen);
    }
    throw ContractViolation("reduction into the fundamental polygon did not terminate");
}

std::vector<int> SurfaceGroup::canonical_word(const Mat3& gamma) const
{
    return reduce(gamma.col(2)).word;
}

std::vector<std::pair<Mat3, std::vector<int>>> SurfaceGroup::ball(double radius) const
{
    const Vec3 origin(0.0, 0.0, 1.0);
    const double expand = radius + diameter();
    std::map<std::vector<int>, Mat3> seen;
    std::deque<Mat3> queue;
    seen.emplace(std::vector<int>{}, Mat3::Identity());
    queue.push_back(Mat3::Identity());
    while (!queue.empty())
    {
        const Mat3 h = queue.front();
        queue.pop_front();
        for (const auto& g : generators_)
        {
            const Mat3 next = h * g;
            if (distance(origin, next.col(2)) > expand)
                continue;
            auto word = canonical_word(next);
            if (seen.emplace(word, element(word)).second)
                queue.push_back(element(word));
        }
    }
    std::vector<std::pair<Mat3, std::vector<int>>> out;
    for (const auto& [word, m] : seen)
        if (distance(origin, m.col(2)) <= radius)
            out.emplace_back(m, word);
    return out;
}

std::uint64_t hash_word(const std::vector<int>& word, std::uint64_t seed)
{
    std::size_t h = static_cast<std::size_t>(seed);
    boost::hash_combine(h, word.size());
    for (int k : word)
        boost::hash_combine(h, k);
    return h;
}

}   // namespace cubevol::smear
