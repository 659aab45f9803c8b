#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>
#include <set>

#include "cubevol/smear/smearing.hpp"

using namespace cubevol;
using namespace cubevol::smear;
using Catch::Approx;

namespace {

constexpr double pi = std::numbers::pi;

/** Hyperbolic interior angle of a polygon at vertex k. */
double interior_angle(const std::vector<Vec3>& poly, std::size_t k)
{
    const std::size_t n = poly.size();
    const Vec3& p = poly[k];
    auto tangent = [&](const Vec3& q) {
        Vec3 t = q + minkowski(p, q) * p;
        return Vec3(t / std::sqrt(minkowski(t, t)));
    };
    const Vec3 a = tangent(poly[(k + 1) % n]);
    const Vec3 b = tangent(poly[(k + n - 1) % n]);
    return std::acos(std::clamp(minkowski(a, b), -1.0, 1.0));
}

}   // namespace

TEST_CASE("genus-2 surface group", "[smear]")
{
    const SurfaceGroup s(2);
    CHECK(s.sides() == 8);
    CHECK(s.area() == Approx(4 * pi).margin(1e-6));
    CHECK(polygon_area(s.polygon()) == Approx(4 * pi).margin(1e-6));
    for (std::size_t k = 0; k < s.polygon().size(); ++k)
        CHECK(interior_angle(s.polygon(), k) == Approx(pi / 4).margin(1e-9));

    CHECK((s.relator() - Mat3::Identity()).norm() < 1e-9);
    const Vec3 o(0, 0, 1);
    CHECK(distance(s.relator() * o, o) < 1e-8);

    // side pairings carry each side onto its partner
    const auto& poly = s.polygon();
    const int n = s.sides();
    for (int k = 0; k < n; ++k)
    {
        const int j = s.partner(k);
        CHECK(s.partner(j) == k);
        const Mat3& g = s.generator(k);
        // side k joins vertices k-1 and k; g_k carries the partner side onto side k
        const Vec3 a = g * poly[(j + n - 1) % n];
        const Vec3 b = g * poly[j];
        const Vec3& c = poly[(k + n - 1) % n];
        const Vec3& d = poly[k];
        const bool direct = distance(a, c) < 1e-8 && distance(b, d) < 1e-8;
        const bool flipped = distance(a, d) < 1e-8 && distance(b, c) < 1e-8;
        CHECK((direct || flipped));
    }

    const SurfaceGroup s3(3);
    CHECK(s3.area() == Approx(8 * pi).margin(1e-6));
    CHECK((s3.relator() - Mat3::Identity()).norm() < 1e-9);
    CHECK((SurfaceGroup(4).relator() - Mat3::Identity()).norm() < 1e-9);
    CHECK_THROWS_AS(SurfaceGroup(1), ContractViolation);
}

TEST_CASE("reduction into the fundamental polygon", "[smear]")
{
    const SurfaceGroup s(2);
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    for (int k = 0; k < 200; ++k)
    {
        const Vec3 y = lift(std::sinh(u(rng)), std::sinh(u(rng)));
        const Reduction r = s.reduce(y);
        CHECK(s.contains(r.point, 1e-9));
        // the word maps the representative back to y
        const Mat3 g = s.element(r.word);
        CHECK(distance(g * r.point, y) < 1e-8);
    }
    CHECK(s.canonical_word(Mat3::Identity()).empty());
}

TEST_CASE("Gamma-net construction", "[smear]")
{
    const SurfaceGroup s(2);
    const GammaNet single(s, s.diameter() + 0.1);
    CHECK(single.size() == 1);
    CHECK(single.conditions().diameter_ok);

    const GammaNet coarse(s, 2.0);
    const GammaNet fine(s, 1.0);
    CHECK(fine.size() >= 2 * coarse.size());
    for (const GammaNet* net : {&coarse, &fine})
    {
        const NetConditions& c = net->conditions();
        CHECK(c.diameter_ok);
        CHECK(c.max_cell_diameter <= net->mesh() + 1e-9);
        CHECK(c.partition_defect < 1e-6);
        CHECK(c.equivariance_failures == 0);
        CHECK(c.local_count > 0);
    }
}

TEST_CASE("net location is equivariant", "[smear]")
{
    const SurfaceGroup s(2);
    const GammaNet net(s, 1.5);
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> gen(0, 7);
    for (int k = 0; k < 100; ++k)
    {
        const Vec3 y = uniform_polygon_point(s, rng);
        const Mat3 gamma = s.generator(gen(rng)) * s.generator(gen(rng));
        const NetPoint a = net.locate(y);
        const NetPoint b = net.locate(gamma * y);
        CHECK(a.index == b.index);
        CHECK(distance(gamma * a.point, b.point) < 1e-9);
    }
}

TEST_CASE("model quadrilateral", "[smear]")
{
    const ModelQuadrilateral q(6.0);
    CHECK(q.area() < 2 * pi);
    const double alpha = 2 * std::atan(1 / std::cosh(6.0));
    CHECK(q.angle() == Approx(alpha).margin(1e-15));
    CHECK(q.area() == Approx(2 * pi - 4 * alpha).margin(1e-12));
    CHECK(quad_signed_area(q.vertices) == Approx(q.area()).margin(1e-9));
    for (const auto& v : q.vertices)
        CHECK(distance(v, Vec3(0, 0, 1)) == Approx(6.0).margin(1e-9));

    // reflected copy has negative area
    std::array<Vec3, 4> r;
    for (int k = 0; k < 4; ++k)
        r[k] = reflection() * q.vertices[k];
    CHECK(quad_signed_area(r) == Approx(-q.area()).margin(1e-9));
    CHECK_THROWS_AS(ModelQuadrilateral(0.0), ContractViolation);
}

TEST_CASE("upper bound from the truncation defect", "[smear]")
{
    SmearEstimate e;
    // ideal limit
    const ModelQuadrilateral near_ideal(30.0);
    CHECK(upper_bound_from_smearing(e, near_ideal, 4 * pi) == Approx(2.0).margin(1e-9));
    CHECK(upper_bound_from_smearing(e, near_ideal, 8 * pi) == Approx(4.0).margin(1e-9));
    // defect pi/2: area 3 pi / 2, i.e. interior angle pi/8
    const double L = std::acosh(1.0 / std::tan(pi / 16));
    const ModelQuadrilateral q(L);
    CHECK(q.area() == Approx(1.5 * pi).margin(1e-12));
    CHECK(upper_bound_from_smearing(e, q, 4 * pi) == Approx(4.0).margin(1e-9));
    // area <= pi is outside the admissible range
    CHECK_THROWS_AS(upper_bound_from_smearing(e, ModelQuadrilateral(0.5), 4 * pi), ContractViolation);
}

TEST_CASE("small smearing run", "[smear]")
{
    const SurfaceGroup s(2);
    const GammaNet net(s, 1.5);
    const ModelQuadrilateral q(6.0);
    SmearConfig config;
    config.samples = 20000;
    config.seed = 3;
    const SmearEstimate e = estimate_smearing(net, q, config);
    CHECK(e.samples == 20000);
    CHECK(e.weight == Approx(8 * pi / 20000));
    CHECK(e.l1_estimate <= 8 * pi + 3 * e.l1_sigma + 1e-9);
    CHECK(e.incoherent_samples == 0);
    CHECK(e.positive_samples + e.negative_samples + e.degenerate_samples == 20000);
    CHECK(e.volume_estimate == Approx(2 * s.area() * q.area()).epsilon(1e-2));
    CHECK(e.bound_estimate == Approx(2.0).epsilon(0.1));
    const auto j = estimate_to_json(e, 5);
    CHECK(j["sampled_terms"].size() == 5);
    CHECK(j.contains("boundary_residual"));
}

TEST_CASE("smearing is reproducible", "[smear]")
{
    const SurfaceGroup s(2);
    const GammaNet net(s, 1.5);
    const ModelQuadrilateral q(6.0);
    SmearConfig config;
    config.samples = 10000;
    config.seed = 42;
    const SmearEstimate a = estimate_smearing(net, q, config);
    const SmearEstimate b = estimate_smearing(net, q, config);
    CHECK(a.l1_estimate == b.l1_estimate);
    CHECK(a.volume_estimate == b.volume_estimate);
    CHECK(a.boundary_residual == b.boundary_residual);
    CHECK(a.quad_keys == b.quad_keys);

    config.workers = 3;
    const SmearEstimate c = estimate_smearing(net, q, config);
    const SmearEstimate d = estimate_smearing(net, q, config);
    CHECK(c.l1_estimate == d.l1_estimate);
    CHECK(c.volume_estimate == d.volume_estimate);
    CHECK(splitmix64(1) != splitmix64(2));
}

TEST_CASE("local finiteness under sample doubling", "[smear]")
{
    // single-cell net and a short quadrilateral: few orbit 4-tuples, nearly all found
    const SurfaceGroup s(2);
    const GammaNet net(s, s.diameter() + 0.1);
    const ModelQuadrilateral q(0.3);
    SmearConfig config;
    config.seed = 8;
    config.samples = 200000;
    const SmearEstimate a = estimate_smearing(net, q, config);
    config.samples = 400000;
    const SmearEstimate b = estimate_smearing(net, q, config);
    CHECK(a.quad_keys > 0);
    CHECK(a.quad_keys < a.samples / 100);
    CHECK(b.quad_keys >= a.quad_keys * 95 / 100);
    CHECK(b.quad_keys <= a.quad_keys * 105 / 100);
}

TEST_CASE("Kolmogorov-Smirnov test", "[smear]")
{
    std::mt19937_64 rng(1);
    std::normal_distribution<double> n01(0, 1);
    std::vector<double> a, b, c;
    for (int i = 0; i < 5000; ++i)
    {
        a.push_back(n01(rng));
        b.push_back(n01(rng));
        c.push_back(n01(rng) + 0.2);
    }
    CHECK(ks_two_sample(a, b).p_value > 0.01);
    CHECK(ks_two_sample(a, c).p_value < 1e-6);
    CHECK(ks_two_sample({1, 2, 3}, {1, 2, 3}).statistic == 0.0);
}

TEST_CASE("Haar sampling invariance", "[smear]")
{
    const SurfaceGroup s(2);
    CHECK(haar_right_invariance(s, s.generator(0), 100000, 4).p_value > 0.01);
    CHECK(haar_right_invariance(s, s.generator(3) * s.generator(5), 100000, 5).p_value > 0.01);

    // left translation by a group element leaves the area distribution unchanged
    const GammaNet net(s, 1.5);
    const ModelQuadrilateral q(3.0);
    SmearConfig config;
    config.samples = 100000;
    config.seed = 6;
    config.keep_areas = true;
    const SmearEstimate plain = estimate_smearing(net, q, config);
    config.seed = 7;
    config.left_translate = s.generator(2) * s.generator(1);
    const SmearEstimate moved = estimate_smearing(net, q, config);
    CHECK(ks_two_sample(plain.areas, moved.areas).p_value > 0.01);
}
