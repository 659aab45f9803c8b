#include <catch2/catch_amalgamated.hpp>

#include <Eigen/Dense>

#include "cubevol/cube2simplex.hpp"
#include "cubevol/verify.hpp"
#include "test_support.hpp"

using namespace cubevol;
using namespace cubevol::chains;
using namespace cubevol::cube2simplex;
using testing::point;

namespace {

/** Sum of c * (signed Euclidean volume) over a chain of top-dimensional simplices in R^n. */
double signed_volume(const FormalChain& z, int n)
{
    double total = 0.0;
    double factorial = 1.0;
    for (int i = 2; i <= n; ++i)
        factorial *= i;
    for (const auto& [g, c] : z)
    {
        Eigen::MatrixXd m(n, n);
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < n; ++k)
                m(k, i) = to_double(g.vertex(i + 1)[k] - g.vertex(0)[k]);
        total += to_double(c) * m.determinant() / factorial;
    }
    return total;
}

int count_sign(const FormalChain& z, int sign)
{
    int n = 0;
    for (const auto& [g, c] : z)
        if ((c > 0) == (sign > 0))
            ++n;
    return n;
}

}   // namespace

TEST_CASE("explicit triangulation chains", "[cube2simplex]")
{
    const FormalChain t1 = t_map(1);
    CHECK(t1 == FormalChain(1, Generator::simplex({point({0}), point({1})})));
    CHECK(l1_norm(t1) == 1);

    const FormalChain t2 = t_map(2);
    CHECK(t2.size() == 2);
    CHECK(count_sign(t2, 1) == 1);
    CHECK(count_sign(t2, -1) == 1);

    const FormalChain t3 = t_map(3);
    CHECK(t3.size() == 5);
    CHECK(count_sign(t3, 1) == 3);
    CHECK(count_sign(t3, -1) == 2);
    CHECK(l1_norm(t3) == 5);

    // every model represents the fundamental class of the cube
    for (int j = 1; j <= 3; ++j)
        CHECK(signed_volume(t_map(j), j) == Catch::Approx(1.0).margin(1e-12));
}

TEST_CASE("hyperoctahedral symmetries", "[cube2simplex]")
{
    const auto all3 = SignedCubeSymmetry::all(3);
    CHECK(all3.size() == 48);
    int reversing = 0;
    for (const auto& g : all3)
        reversing += g.sign() ? 1 : 0;
    CHECK(reversing == 24);
    CHECK(SignedCubeSymmetry::all(2).size() == 8);

    const FormalChain p(0, Generator::simplex({RationalPoint{}}));
    CHECK(symmetrize(0, p) == p);
    CHECK(l1_norm(reduce_degenerate(symmetrize(3, t_map(3)))) <= 5);
}

TEST_CASE("coning", "[cube2simplex]")
{
    const auto p = point({1, 2}), v = point({7, 7});
    CHECK(cone(FormalChain(0, Generator::simplex({p})), v) == FormalChain(1, Generator::simplex({p, v})));

    // apex appended last: d(s * v) = (ds) * v + (-1)^(k+1) s for a k-simplex s
    const auto a = point({0, 0}), b = point({1, 0}), c = point({0, 1});
    const FormalChain s(2, Generator::simplex({a, b, c}));
    const FormalChain lhs = boundary_simplex(cone(s, v));
    const FormalChain rhs = cone(boundary_simplex(s), v) - s;
    CHECK(lhs == rhs);

    std::mt19937_64 rng(3);
    const FormalChain z = testing::random_simplex_chain(2, 3, 6, rng);
    CHECK(l1_norm(cone(z, testing::random_point(3, rng))) == l1_norm(z));
}

TEST_CASE("phi commutes with boundaries", "[cube2simplex]")
{
    const FormalChain id2(2, Generator::standard_cube(2));
    CHECK(reduce_degenerate(boundary_simplex(phi(2, id2))) == phi(1, boundary_cube(id2)));

    std::mt19937_64 rng(17);
    for (int j = 1; j <= 3; ++j)
        for (int k = 0; k < 20; ++k)
        {
            const FormalChain c(j, verify::random_affine_cube(j, 3, rng));
            CHECK(reduce_degenerate(boundary_simplex(phi(j, c))) == phi(j - 1, boundary_cube(c)));
        }
}

TEST_CASE("phi normalisation and degenerate vanishing", "[cube2simplex]")
{
    const auto p = point({3, -1});
    CHECK(phi(0, FormalChain(0, Generator::cube(0, {p}))) == FormalChain(0, Generator::simplex({p})));

    std::mt19937_64 rng(23);
    for (int j = 1; j <= 3; ++j)
        for (int dir = 1; dir <= j; ++dir)
        {
            const FormalChain c(j, verify::random_affine_cube(j, j, rng, dir));
            CHECK(phi(j, c).is_zero());
        }
    CHECK(l1_norm(phi(3, FormalChain(3, Generator::standard_cube(3)))) == 5);
    CHECK(signed_volume(phi(3, FormalChain(3, Generator::standard_cube(3))), 3) == Catch::Approx(1.0).margin(1e-12));
}

TEST_CASE("iterated coning in degree 4", "[cube2simplex]")
{
    const FormalChain id4(4, Generator::standard_cube(4));
    const FormalChain image = extend_phi(4, id4);
    CHECK(l1_norm(image) <= 384);
    CHECK(reduce_degenerate(boundary_simplex(image)) == phi(3, boundary_cube(id4)));
    CHECK(signed_volume(image, 4) == Catch::Approx(1.0).margin(1e-12));

    std::mt19937_64 rng(29);
    for (int dir = 1; dir <= 4; ++dir)
        CHECK(extend_phi(4, FormalChain(4, verify::random_affine_cube(4, 4, rng, dir))).is_zero());
}

TEST_CASE("simplex to cube collapse", "[cube2simplex]")
{
    const auto p = point({4, 4});
    CHECK(simplex_to_cube(Generator::simplex({p})) == Generator::cube(0, {p}));

    const FormalChain s3(3, Generator::standard_simplex(3));
    CHECK(l1_norm(simplex_to_cube(s3)) == 1);

    for (int n = 1; n <= 3; ++n)
    {
        const FormalChain s(n, Generator::standard_simplex(n));
        const FormalChain lhs = boundary_cube(simplex_to_cube(s));
        const FormalChain rhs = simplex_to_cube(boundary_simplex(s));
        CHECK(reduce_degenerate(lhs - rhs).is_zero());
    }
}

TEST_CASE("symmetrization is idempotent", "[cube2simplex]")
{
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<int> num(0, 4);
    for (int j = 1; j <= 3; ++j)
        for (int trial = 0; trial < 5; ++trial)
        {
            FormalChain z(j);
            for (int k = 0; k < 3; ++k)
            {
                std::vector<RationalPoint> vs(j + 1, RationalPoint(j));
                for (auto& v : vs)
                    for (auto& x : v)
                        x = Rational(num(rng), 4);
                z.add(Generator::simplex(vs), k + 1);
            }
            const FormalChain once = symmetrize(j, z);
            CHECK(symmetrize(j, once) == once);
        }
}

TEST_CASE("symmetry sign is a homomorphism", "[cube2simplex]")
{
    for (int j = 1; j <= 3; ++j)
    {
        const auto all = SignedCubeSymmetry::all(j);
        for (const auto& g : all)
            for (const auto& h : all)
                REQUIRE(g.compose(h).sign() == (g.sign() != h.sign()));
    }
}

TEST_CASE("iterated coning bound in degree 5", "[cube2simplex]")
{
    const FormalChain id5(5, Generator::standard_cube(5));
    const FormalChain image = extend_phi(5, id5);
    CHECK(l1_norm(image) <= 3840);
    CHECK(reduce_degenerate(boundary_simplex(image)) == extend_phi(4, boundary_cube(id5)));
    CHECK(signed_volume(image, 5) == Catch::Approx(1.0).margin(1e-12));
}
