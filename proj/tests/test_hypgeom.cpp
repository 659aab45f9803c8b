#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

#include "cubevol/dual.hpp"
#include "cubevol/geometry_checks.hpp"
#include "cubevol/hyperbolic.hpp"
#include "cubevol/lp.hpp"
#include "cubevol/straight_cube.hpp"
#include "cubevol/volume.hpp"

using namespace cubevol;
using namespace cubevol::hyp;
using Catch::Approx;

namespace {

constexpr double pi = std::numbers::pi;

/** Fourier series L(theta) = 1/2 sum sin(2 k theta) / k^2, truncated. */
double lobachevsky_fourier(double theta, int terms)
{
    double s = 0.0;
    for (int k = terms; k >= 1; --k)
        s += std::sin(2.0 * k * theta) / (static_cast<double>(k) * k);
    return 0.5 * s;
}

/** Exact point-in-hull test: LP feasibility of sum l_i p_i = q, sum l_i = 1, l >= 0. */
bool lp_in_hull(const std::vector<Vec>& points, const Vec& q)
{
    const std::size_t n = static_cast<std::size_t>(q.size());
    lp::RationalMatrix A(n + 1, std::vector<Rational>(points.size()));
    std::vector<Rational> b(n + 1);
    for (std::size_t i = 0; i < points.size(); ++i)
    {
        for (std::size_t k = 0; k < n; ++k)
            A[k][i] = Rational(points[i][static_cast<int>(k)]);
        A[n][i] = 1;
    }
    for (std::size_t k = 0; k < n; ++k)
        b[k] = Rational(q[static_cast<int>(k)]);
    b[n] = 1;
    return lp::minimize(A, b, std::vector<Rational>(points.size(), Rational(0))).status == lp::LpStatus::optimal;
}

HPoint point3(double x, double y, double z)
{
    Vec v(3);
    v << x, y, z;
    return HPoint::from_spatial(v);
}

/** The straight cube restricted to t1 in [0,1/2] (lower = true) or [1/2,1]. */
StraightCube half_cube(const StraightCube& c, bool lower)
{
    std::vector<HPoint> vs(c.vertices().size());
    for (std::size_t b = 0; b < vs.size(); b += 2)
    {
        const HPoint mid = geodesic(c.vertex(b), c.vertex(b + 1), 0.5);
        vs[b] = lower ? c.vertex(b) : mid;
        vs[b + 1] = lower ? mid : c.vertex(b + 1);
    }
    return StraightCube(c.dim(), vs);
}

}   // namespace

TEST_CASE("geodesics on the hyperboloid", "[hyperbolic]")
{
    const HPoint x = point3(0.3, -0.2, 0.5);
    const HPoint y = point3(-1.1, 0.7, 0.2);
    for (double t : {0.0, 0.25, 0.8, 1.0})
        CHECK(distance(geodesic(x, x, t), x) < 1e-12);
    const HPoint m = geodesic(x, y, 0.5);
    CHECK(distance(x, m) == Approx(distance(m, y)).margin(1e-10));
    for (int k = 0; k <= 100; ++k)
    {
        const HPoint p = geodesic(x, y, k / 100.0);
        CHECK(minkowski(p.coords(), p.coords()) == Approx(-1.0).margin(1e-12));
        CHECK(distance(x, p) == Approx(k / 100.0 * distance(x, y)).margin(1e-10));
    }
}

TEST_CASE("geodesic weight series matches the closed form", "[hyperbolic]")
{
    for (double q : {1e-6, 1e-4, 5e-3, 9.9e-3})
        for (double t : {0.1, 0.5, 0.9})
        {
            double a, b;
            geodesic_weights(q, t, a, b);
            const double d = std::acosh(1.0 + q);
            CHECK(a == Approx(std::sinh((1 - t) * d) / std::sinh(d)).epsilon(1e-13));
            CHECK(b == Approx(std::sinh(t * d) / std::sinh(d)).epsilon(1e-13));
        }
}

TEST_CASE("dual numbers differentiate geodesic weights", "[hyperbolic]")
{
    for (double q : {3e-3, 0.7})
    {
        const double t = 0.3;
        const auto tq = Dual<2>::variable(q, 0);
        const auto tt = Dual<2>::variable(t, 1);
        Dual<2> a, b;
        geodesic_weights(tq, tt, a, b);
        const double h = 1e-6;
        double ap, bp, am, bm;
        geodesic_weights(q, t + h, ap, bp);
        geodesic_weights(q, t - h, am, bm);
        CHECK(b.d[1] == Approx((bp - bm) / (2 * h)).epsilon(1e-7));
        geodesic_weights(q + h * q, t, ap, bp);
        geodesic_weights(q - h * q, t, am, bm);
        CHECK(a.d[0] == Approx((ap - am) / (2 * h * q)).epsilon(1e-6));
    }
}

TEST_CASE("model conversions and isometries", "[hyperbolic]")
{
    std::mt19937_64 rng(8);
    const HPoint x = point3(0.4, 1.2, -0.3);
    const HPoint y = point3(-0.9, 0.1, 0.6);
    const HPoint xk = HPoint::from_klein(x.to_klein());
    const HPoint xb = HPoint::from_ball(x.to_ball());
    CHECK((xk.coords() - x.coords()).norm() < 1e-12);
    CHECK((xb.coords() - x.coords()).norm() < 1e-12);
    for (int k = 0; k < 20; ++k)
    {
        const HIsometry g = HIsometry::random(3, rng, 2.0, k % 2 == 1);
        CHECK(distance(g.apply(x), g.apply(y)) == Approx(distance(x, y)).epsilon(1e-10));
        CHECK(g.preserves_orientation() == (k % 2 == 0));
        CHECK(distance(g.inverse().apply(g.apply(x)), x) < 1e-9);
    }
    CHECK(distance(HIsometry::translation(3, 0, 1.5).apply(HPoint::origin(3)), HPoint::origin(3)) == Approx(1.5));
}

TEST_CASE("straight cube evaluation", "[hyperbolic]")
{
    std::mt19937_64 rng(4);
    const StraightCube c = random_cube(2, rng, 1.5);
    for (std::size_t b = 0; b < 4; ++b)
        CHECK(c.evaluate({double(b & 1), double((b >> 1) & 1)}) == c.vertex(b));
    const HPoint centre = c.evaluate({0.5, 0.5});
    const HPoint m = geodesic(geodesic(c.vertex(0), c.vertex(1), 0.5), geodesic(c.vertex(2), c.vertex(3), 0.5), 0.5);
    CHECK(distance(centre, m) < 1e-12);

    const StraightCube p(0, {point3(0.1, 0.2, 0.3)});
    CHECK(p.evaluate({}) == p.vertex(0));

    CHECK(cube_from_json(cube_to_json(c)) == c);
    CHECK_THROWS_AS(cube_from_json(nlohmann::json::parse(R"({"dim": 1, "vertices": [[0, 0, 1]]})")), InputError);
}

TEST_CASE("Gauss-Legendre rule is exact on polynomials", "[volume]")
{
    const GaussRule r = gauss_legendre(8);
    REQUIRE(r.nodes.size() == 8);
    for (int deg = 0; deg <= 15; ++deg)
    {
        double s = 0.0;
        for (std::size_t i = 0; i < r.nodes.size(); ++i)
            s += r.weights[i] * std::pow(r.nodes[i], deg);
        CHECK(s == Approx(1.0 / (deg + 1)).epsilon(1e-13));
    }
    CHECK(std::abs(pairwise_sum(std::vector<double>(1000000, 0.1)) - 1e5) < 1e-9);
}

TEST_CASE("Lobachevsky function", "[volume]")
{
    // frozen 20-digit values from an independent arbitrary-precision integration
    CHECK(lobachevsky(0.0) == 0.0);
    CHECK(lobachevsky(pi / 6) == Approx(0.50747080320482681251).margin(1e-13));
    CHECK(lobachevsky(pi / 3) == Approx(0.33831386880321787501).margin(1e-13));
    CHECK(lobachevsky(pi / 4) == Approx(0.45798279708860950753).margin(1e-13));
    CHECK(lobachevsky(pi / 5) == Approx(0.49867734569920738933).margin(1e-13));
    CHECK(lobachevsky(1.0) == Approx(0.36357302543163962371).margin(1e-13));
    CHECK(lobachevsky(0.1) == Approx(0.26099935791511870712).margin(1e-13));
    CHECK(lobachevsky(2.0) == Approx(-0.2840719722149348904).margin(1e-13));
    CHECK(lobachevsky(3.0) == Approx(-0.3203913328508616048).margin(1e-13));
    CHECK(lobachevsky(pi / 2) == Approx(0.0).margin(1e-14));
    CHECK(lobachevsky(-0.7) == Approx(-lobachevsky(0.7)).margin(1e-14));
    CHECK(lobachevsky(0.7 + pi) == Approx(lobachevsky(0.7)).margin(1e-13));

    for (double theta : {0.2, 0.9, 1.3, 2.5})
        CHECK(lobachevsky(theta) == Approx(lobachevsky_fourier(theta, 200000)).margin(1e-5));
}

TEST_CASE("ideal tetrahedra", "[volume]")
{
    CHECK(v3_simplex() == Approx(1.014941606409653625).margin(1e-13));
    CHECK(ideal_tetra_volume(pi / 3, pi / 3, pi / 3) == Approx(1.014941606409653625).margin(1e-13));
    CHECK(ideal_tetra_volume(pi / 2, pi / 4, pi / 4) == Approx(2 * lobachevsky(pi / 4)).margin(1e-13));
    CHECK(ideal_tetra_volume(pi, 0.0, 0.0) == Approx(0.0).margin(1e-13));
    CHECK_THROWS_AS(ideal_tetra_volume(1.0, 1.0, 1.0), ContractViolation);

    // regular ideal tetrahedron: alternate cube corners on the unit sphere
    std::array<Vec, 4> v;
    const int signs[4][3] = {{1, 1, 1}, {1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}};
    for (int k = 0; k < 4; ++k)
    {
        v[k] = Vec(3);
        v[k] << signs[k][0], signs[k][1], signs[k][2];
        v[k] /= std::sqrt(3.0);
    }
    for (double a : ideal_tetra_angles(v))
        CHECK(a == Approx(pi / 3).margin(1e-12));
}

TEST_CASE("Coxeter decomposition of the regular ideal cube", "[volume]")
{
    const CoxeterReport r = coxeter_check();
    for (double vol : r.volumes)
        CHECK(vol == Approx(v3_simplex()).margin(1e-9));
    CHECK(r.sum == Approx(5 * v3_simplex()).margin(5e-9));
    // the four corner tetrahedra are congruent
    int corners = 0;
    for (std::size_t i = 0; i < r.volumes.size(); ++i)
        for (std::size_t j = i + 1; j < r.volumes.size(); ++j)
            if (std::abs(r.volumes[i] - r.volumes[j]) <= 1e-12)
                ++corners;
    CHECK(corners >= 6);
}

TEST_CASE("signed volume properties", "[volume]")
{
    std::mt19937_64 rng(12);
    const StraightCube c = random_cube(3, rng, 1.0);
    const VolumeResult whole = signed_volume(c, 8, 2);
    const double halves = signed_volume(half_cube(c, true), 8, 2).value + signed_volume(half_cube(c, false), 8, 2).value;
    CHECK(whole.value == Approx(halves).margin(1e-9));

    // swapping the two t1-ends reverses orientation
    std::vector<HPoint> swapped(c.vertices());
    for (std::size_t b = 0; b < swapped.size(); b += 2)
        std::swap(swapped[b], swapped[b + 1]);
    CHECK(signed_volume(StraightCube(3, swapped), 8, 2).value == Approx(-whole.value).margin(1e-9));

    // two coinciding opposite faces
    std::vector<HPoint> flat(c.vertices());
    for (std::size_t b = 0; b < flat.size(); b += 2)
        flat[b + 1] = flat[b];
    CHECK(signed_volume(StraightCube(3, flat), 8, 2).value == Approx(0.0).margin(1e-9));

    // tiny cube at the origin: nearly Euclidean
    const double h = 1e-3;
    std::vector<HPoint> small;
    for (int b = 0; b < 8; ++b)
        small.push_back(point3(h * (b & 1), h * ((b >> 1) & 1), h * ((b >> 2) & 1)));
    CHECK(signed_volume(StraightCube(3, small), 4, 0).value == Approx(h * h * h).epsilon(1e-5));

    const VolumeResult adaptive = signed_volume_adaptive(c, 1e-10, 8, 1, 4);
    CHECK(adaptive.error_estimate < 1e-10);
    CHECK(adaptive.value == Approx(whole.value).margin(1e-9));
}

TEST_CASE("truncated regular ideal cubes", "[volume]")
{
    const StraightCube ideal = regular_ideal_cube(3);
    CHECK(signed_volume(truncate_ideal_cube(ideal, 1e-12), 4, 0).value == Approx(0.0).margin(1e-20));
    double previous = 0.0;
    for (double L : {1.0, 2.0, 4.0})
    {
        const double v = signed_volume(truncate_ideal_cube(ideal, L), 8, 2).value;
        CHECK(v > previous);
        CHECK(v < 5 * v3_simplex());
        previous = v;
    }
}

TEST_CASE("geodesic simplex volume", "[volume]")
{
    const double h = 1e-2;
    std::vector<Vec> s(4, Vec::Zero(3));
    for (int i = 0; i < 3; ++i)
        s[i + 1][i] = h;
    CHECK(geodesic_simplex_volume(s, 8, 1) == Approx(h * h * h / 6).epsilon(1e-3));
}

TEST_CASE("diameter of straight cubes", "[geometry]")
{
    const HPoint x = point3(0.5, 0.0, -0.2);
    const HPoint y = point3(-0.3, 0.8, 0.1);
    CHECK(diameter(StraightCube(0, {x})) == 0.0);
    CHECK(diameter(StraightCube(1, {x, y})) == distance(x, y));

    std::mt19937_64 rng(31);
    for (int k = 0; k < 10; ++k)
    {
        const StraightCube c = random_cube(3, rng, 2.0);
        const DiameterCheck d = check_diameter(c, 9, 1e-8);
        CHECK(d.ok);
        CHECK(d.grid_diameter <= d.vertex_diameter + 1e-8);
        CHECK(d.vertex_diameter == diameter(c));
    }
}

TEST_CASE("hull containment agrees with an exact LP", "[geometry]")
{
    const HPoint x = point3(0.5, 0.0, -0.2);
    const HPoint y = point3(-0.3, 0.8, 0.1);
    CHECK(hull_containment(StraightCube(1, {x, y}), 9));

    std::mt19937_64 rng(37);
    for (int k = 0; k < 5; ++k)
    {
        const StraightCube c = random_cube(3, rng, 2.0);
        CHECK(hull_containment(c, 9));
        std::vector<Vec> klein;
        for (const auto& v : c.vertices())
            klein.push_back(v.to_klein());
        Vec centroid = Vec::Zero(3);
        for (const auto& p : klein)
            centroid += p / 8.0;
        const Vec inside = c.evaluate({0.3, 0.6, 0.2}).to_klein();
        CHECK(in_convex_hull(klein, inside));
        CHECK(lp_in_hull(klein, inside));
        // push the farthest vertex outward
        std::size_t far = 0;
        for (std::size_t i = 0; i < klein.size(); ++i)
            if ((klein[i] - centroid).norm() > (klein[far] - centroid).norm())
                far = i;
        const Vec outside = centroid + 1.05 * (klein[far] - centroid);
        CHECK_FALSE(in_convex_hull(klein, outside));
        CHECK_FALSE(lp_in_hull(klein, outside));
    }
}

TEST_CASE("hull triangulation covers the hull", "[geometry]")
{
    std::mt19937_64 rng(41);
    const StraightCube c = random_cube(3, rng, 1.0);
    std::vector<Vec> klein;
    for (const auto& v : c.vertices())
        klein.push_back(v.to_klein());
    const auto simplices = triangulate_hull(klein);
    CHECK(!simplices.empty());
    const HullVolume hv = hull_volume(c);
    CHECK(hv.simplex_count == static_cast<int>(simplices.size()));
    CHECK(hv.volume >= std::abs(signed_volume(c, 8, 2).value) - 1e-6);
    CHECK(hv.max_simplex_volume <= v3_simplex() + 1e-9);
}

TEST_CASE("geodesic cube test", "[geometry]")
{
    const GeodesicTestReport ideal = geodesic_test(regular_ideal_cube(3));
    CHECK(ideal.is_geodesic);
    for (double r : ideal.residuals)
        CHECK(r < 1e-12);

    std::mt19937_64 rng(43);
    CHECK_FALSE(geodesic_test(random_cube(3, rng, 1.5)).is_geodesic);

    const GeodesicTestReport square = geodesic_test(random_cube(2, rng, 1.5));
    CHECK(square.is_geodesic);
    for (double r : square.residuals)
        CHECK(r == 0.0);
}

TEST_CASE("model conversions round-trip on random points", "[hyperbolic]")
{
    std::mt19937_64 rng(21);
    std::normal_distribution<double> gauss(0.0, 1.5);
    for (int k = 0; k < 1000; ++k)
    {
        const HPoint x = point3(gauss(rng), gauss(rng), gauss(rng));
        const double scale = x.coords().norm();
        CHECK((HPoint::from_klein(x.to_klein()).coords() - x.coords()).norm() < 1e-10 * scale);
        CHECK((HPoint::from_ball(x.to_ball()).coords() - x.coords()).norm() < 1e-10 * scale);
    }
}

TEST_CASE("signed volume is isometry invariant up to orientation", "[volume]")
{
    std::mt19937_64 rng(22);
    for (int k = 0; k < 50; ++k)
    {
        const StraightCube c = random_cube(3, rng, 1.0);
        const HIsometry g = HIsometry::random(3, rng, 1.5, k % 2 == 1);
        const double v = signed_volume(c, 6, 1).value;
        const double w = signed_volume(transform(g, c), 6, 1).value;
        CHECK(w == Approx(g.preserves_orientation() ? v : -v).margin(1e-6));
    }
}

TEST_CASE("unsigned volume is bounded by the hull", "[volume]")
{
    std::mt19937_64 rng(23);
    for (int k = 0; k < 20; ++k)
    {
        const StraightCube c = random_cube(3, rng, 1.5);
        const HullVolume hull = hull_volume(c, 8, 2);
        CHECK(std::abs(signed_volume(c, 8, 2).value) <= hull.volume + 1e-9);
        CHECK(hull.max_simplex_volume <= v3_simplex() + 1e-9);
    }
}

TEST_CASE("truncated regular ideal cube volume converges", "[volume]")
{
    const StraightCube ideal = regular_ideal_cube(3);
    const double v8 = signed_volume(truncate_ideal_cube(ideal, 8.0), 8, 3).value;
    const double v10 = signed_volume(truncate_ideal_cube(ideal, 10.0), 8, 3).value;
    CHECK(std::abs(v8 - v10) < 1e-3);
}

TEST_CASE("signed volume is continuous in the vertices", "[volume]")
{
    std::mt19937_64 rng(24);
    std::normal_distribution<double> gauss(0.0, 1.0);
    const StraightCube c = random_cube(3, rng, 1.0);
    const double v = signed_volume(c, 8, 2).value;
    std::vector<HPoint> moved;
    for (const HPoint& p : c.vertices())
    {
        Vec y = p.coords().head(3);
        for (int i = 0; i < 3; ++i)
            y[i] += 1e-4 * gauss(rng);
        moved.push_back(HPoint::from_spatial(y));
    }
    CHECK(std::abs(signed_volume(StraightCube(3, moved), 8, 2).value - v) < 1e-2);
}
