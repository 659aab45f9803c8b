#include <catch2/catch_amalgamated.hpp>

#include "cubevol/straighten.hpp"

using namespace cubevol;
using namespace cubevol::hyp;

namespace {

SingularChain random_singular_chain(int dim, int terms, std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> coeff(-3, 3);
    SingularChain z(dim);
    for (int k = 0; k < terms; ++k)
    {
        const StraightCube c = random_cube(dim, rng, 1.5);
        z.add(as_singular(c, rng()), coeff(rng));
    }
    return z;
}

}   // namespace

TEST_CASE("straightening is idempotent on straight cubes", "[straighten]")
{
    std::mt19937_64 rng(2);
    for (int n = 1; n <= 3; ++n)
        for (int k = 0; k < 10; ++k)
        {
            const StraightCube c = random_cube(n, rng, 2.0);
            CHECK(straighten(as_singular(c, k)) == c);
            CHECK(straighten(as_singular(straighten(as_singular(c, 1)), 2)) == c);
        }
}

TEST_CASE("straightening is a chain map", "[straighten]")
{
    std::mt19937_64 rng(6);
    for (int trial = 0; trial < 20; ++trial)
    {
        const SingularChain z = random_singular_chain(2, 4, rng);
        CHECK(cubical_boundary(straighten(z)) == straighten(cubical_boundary(z)));
        CHECK(cubical_boundary(cubical_boundary(z)).is_zero());
    }
}

TEST_CASE("straightening keeps coefficients termwise", "[straighten]")
{
    std::mt19937_64 rng(9);
    const SingularChain z = random_singular_chain(3, 5, rng);
    const StraightChain s = straighten(z);
    Rational lz = 0, ls = 0;
    for (const auto& [c, a] : z)
        lz += abs(a);
    for (const auto& [c, a] : s)
        ls += abs(a);
    CHECK(lz == ls);
}

TEST_CASE("faces of singular cubes follow the lifts", "[straighten]")
{
    std::mt19937_64 rng(10);
    const StraightCube c = random_cube(3, rng, 1.0);
    const SingularCube s = as_singular(c, 99);
    for (int j = 1; j <= 3; ++j)
        for (int i = 0; i <= 1; ++i)
        {
            CHECK(straighten(s.face(j, i)) == c.face(j, i));
            CHECK(s.face(j, i).tag() != s.tag());
        }
}
