#include <catch2/catch_amalgamated.hpp>

#include "cubevol/chains.hpp"
#include "test_support.hpp"

using namespace cubevol;
using namespace cubevol::chains;
using testing::point;

TEST_CASE("face of the square along the first coordinate", "[chains]")
{
    const Generator sq = Generator::standard_cube(2);
    const Generator f = cube_face(sq, {1, 0});
    REQUIRE(f.dim() == 1);
    // t1 frozen at 0: remaining parameter is t2
    CHECK(f.vertex(0) == point({0, 0}));
    CHECK(f.vertex(1) == point({0, 1}));

    const Generator v = cube_face(Generator::standard_cube(1), {1, 1});
    REQUIRE(v.dim() == 0);
    CHECK(v.vertex(0) == point({1}));
}

TEST_CASE("iterated faces agree with brute-force vertex enumeration", "[chains]")
{
    const Generator c = Generator::standard_cube(3);
    const Generator a = cube_face(cube_face(c, {1, 0}), {1, 0});
    const Generator b = cube_face(cube_face(c, {2, 0}), {1, 0});
    // both freeze t1 = t2 = 0: the edge from the origin along t3
    std::vector<RationalPoint> brute;
    for (const auto& v : c.vertices())
        if (v[0] == 0 && v[1] == 0)
            brute.push_back(v);
    CHECK(a.vertices() == brute);
    CHECK(b.vertices() == brute);
}

TEST_CASE("insert_bit places the frozen coordinate", "[chains]")
{
    CHECK(insert_bit(0b0, 1, 1) == 0b1);
    CHECK(insert_bit(0b1, 1, 0) == 0b10);
    CHECK(insert_bit(0b11, 2, 0) == 0b101);
    CHECK(insert_bit(0b11, 3, 1) == 0b111);
}

TEST_CASE("cubical boundary of id on the interval and square", "[chains]")
{
    const FormalChain d1 = boundary_cube(FormalChain(1, Generator::standard_cube(1)));
    FormalChain expect(0);
    expect.add(Generator::cube(0, {point({1})}), 1);
    expect.add(Generator::cube(0, {point({0})}), -1);
    CHECK(d1 == expect);

    const FormalChain d2 = boundary_cube(FormalChain(2, Generator::standard_cube(2)));
    CHECK(d2.size() == 4);
    CHECK(l1_norm(d2) == 4);
    CHECK(boundary_cube(d2).is_zero());
}

TEST_CASE("simplicial boundary examples", "[chains]")
{
    const auto a = point({0, 0}), b = point({1, 0}), c = point({0, 1}), d = point({1, 1});
    FormalChain expect(0);
    expect.add(Generator::simplex({b}), 1);
    expect.add(Generator::simplex({a}), -1);
    CHECK(boundary_simplex(FormalChain(1, Generator::simplex({a, b}))) == expect);
    CHECK(boundary_simplex(boundary_simplex(FormalChain(2, Generator::simplex({a, b, c})))).is_zero());

    FormalChain z(2);
    z.add(Generator::simplex({a, b, c}), 1);
    z.add(Generator::simplex({a, c, d}), 1);
    CHECK(l1_norm(boundary_simplex(z)) == 4);
}

TEST_CASE("boundary squares to zero on random chains", "[chains]")
{
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 30; ++trial)
    {
        const int dim = 2 + trial % 3;
        CHECK(boundary_simplex(boundary_simplex(testing::random_simplex_chain(dim, 3, 5, rng))).is_zero());
        CHECK(boundary_cube(boundary_cube(testing::random_cube_chain(dim, 2, 4, rng))).is_zero());
    }
}

TEST_CASE("degeneracy detection", "[chains]")
{
    const auto p = point({2, 3});
    CHECK(is_degenerate(Generator::cube(2, {p, p, p, p})));
    for (int n = 1; n <= 4; ++n)
        CHECK_FALSE(is_degenerate(Generator::standard_cube(n)));
    // v00 = v10, v01 = v11: independent of t1
    const auto q = point({5, 1});
    CHECK(is_degenerate(Generator::cube(2, {p, p, q, q})));
    // independent of t2 only
    CHECK(is_degenerate(Generator::cube(2, {p, q, p, q})));
    CHECK_FALSE(is_degenerate(Generator::cube(2, {p, q, q, p})));
}

TEST_CASE("reduce_degenerate and norms", "[chains]")
{
    const auto p = point({0, 0});
    CHECK(reduce_degenerate(FormalChain(2, Generator::cube(2, {p, p, p, p}))).is_zero());
    const FormalChain id3(3, Generator::standard_cube(3));
    CHECK(reduce_degenerate(id3) == id3);

    FormalChain z(1);
    z.add(Generator::cube(1, {point({4}), point({4})}), 7);
    z.add(Generator::standard_cube(1), 2);
    const FormalChain r = reduce_degenerate(z);
    CHECK(r == FormalChain(1, Generator::standard_cube(1), 2));
    CHECK(l1_norm(r) == 2);
    CHECK(quotient_norm(z) == 2);

    CHECK(l1_norm(FormalChain(1)) == 0);
    FormalChain s(1);
    s.add(Generator::simplex({point({0}), point({1})}), 3);
    s.add(Generator::simplex({point({0}), point({2})}), -2);
    CHECK(l1_norm(s) == 5);
}

TEST_CASE("chain JSON round trip", "[chains]")
{
    std::mt19937_64 rng(5);
    const FormalChain z = testing::random_simplex_chain(2, 3, 6, rng);
    CHECK(chain_from_json(chain_to_json(z)) == z);
    const FormalChain c = testing::random_cube_chain(2, 2, 3, rng);
    CHECK(chain_from_json(chain_to_json(c)) == c);
}

TEST_CASE("rational parsing", "[chains]")
{
    CHECK(parse_rational("3") == 3);
    CHECK(parse_rational("-7/14") == Rational(-1, 2));
    CHECK(to_string(Rational(6, 4)) == "3/2");
    CHECK_THROWS_AS(parse_rational("1/0"), InputError);
    CHECK_THROWS_AS(parse_rational("x"), InputError);
}

TEST_CASE("boundary squares to zero in dimensions up to 5", "[chains]")
{
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 1000; ++trial)
    {
        const int dim = 2 + trial % 4;
        if (trial % 2 == 0)
            REQUIRE(boundary_simplex(boundary_simplex(testing::random_simplex_chain(dim, 3, 3, rng))).is_zero());
        else
            REQUIRE(boundary_cube(boundary_cube(testing::random_cube_chain(dim, 2, 2, rng))).is_zero());
    }
}

TEST_CASE("degenerate cubes form a subcomplex", "[chains]")
{
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 50; ++trial)
    {
        const int dim = 2 + trial % 3;
        FormalChain z = testing::random_cube_chain(dim, 2, 3, rng);
        // add cubes that ignore one coordinate
        for (int k = 0; k < 2; ++k)
        {
            std::vector<RationalPoint> base;
            for (int i = 0; i < (1 << (dim - 1)); ++i)
                base.push_back(testing::random_point(2, rng));
            const Generator g = Generator::cube(dim - 1, base);
            const int dir = 1 + (trial + k) % dim;
            std::vector<RationalPoint> vs(std::size_t{1} << dim);
            for (std::uint32_t b = 0; b < vs.size(); ++b)
            {
                // drop bit dir-1 to index the lower-dimensional cube
                const std::uint32_t low = b & ((1u << (dir - 1)) - 1);
                const std::uint32_t high = (b >> dir) << (dir - 1);
                vs[b] = g.vertex(low | high);
            }
            const Generator d = Generator::cube(dim, vs);
            REQUIRE(is_degenerate(d));
            z.add(d, k + 1);
        }
        CHECK(reduce_degenerate(boundary_cube(reduce_degenerate(z))) == reduce_degenerate(boundary_cube(z)));
    }
}

TEST_CASE("l1 is a norm", "[chains]")
{
    std::mt19937_64 rng(14);
    for (int trial = 0; trial < 100; ++trial)
    {
        const FormalChain a = testing::random_simplex_chain(1, 1, 4, rng);
        const FormalChain b = testing::random_simplex_chain(1, 1, 4, rng);
        CHECK(l1_norm(a + b) <= l1_norm(a) + l1_norm(b));
        const Rational s(trial - 50, 7);
        CHECK(l1_norm(s * a) == abs(s) * l1_norm(a));
    }
}

TEST_CASE("double faces commute", "[chains]")
{
    for (int n = 2; n <= 4; ++n)
    {
        const Generator c = Generator::standard_cube(n);
        int pairs = 0;
        for (int j = 1; j <= n; ++j)
            for (int k = 1; k < j; ++k)
                for (int i = 0; i <= 1; ++i)
                    for (int l = 0; l <= 1; ++l)
                    {
                        // freezing t_j then t_k equals freezing t_k then t_{j}, renumbered to j-1
                        CHECK(cube_face(cube_face(c, {j, i}), {k, l}) == cube_face(cube_face(c, {k, l}), {j - 1, i}));
                        ++pairs;
                    }
        CHECK(pairs == 2 * n * (n - 1));
    }
}
