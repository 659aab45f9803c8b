#pragma once

/**
 * Natural chain maps between affine cubical and simplicial chains.
 *
 * Every map is fixed by its value on the standard cell (the "model" chain on
 * id of [0,1]^n or [0,e_1,...,e_n]) and extended to arbitrary affine cells
 * by substituting the cell's values at the model's vertices.
 */

#include <cstdint>
#include <vector>

#include "cubevol/chains.hpp"

namespace cubevol::cube2simplex {

using chains::FormalChain;
using chains::Generator;

/**
 * Element of the hyperoctahedral group acting on [0,1]^n: coordinate i is
 * moved to position perm[i], then flipped x -> 1-x where flips[perm[i]] is set.
 */
class SignedCubeSymmetry
{
    public:
        SignedCubeSymmetry(std::vector<int> perm, std::vector<bool> flips);

        static SignedCubeSymmetry identity(int n);

        /** All 2^n n! symmetries in a fixed order. */
        static std::vector<SignedCubeSymmetry> all(int n);

        int dim() const { return static_cast<int>(perm_.size()); }

        /** true iff orientation-reversing (parity of perm plus number of flips is odd). */
        bool sign() const;

        std::uint32_t apply(std::uint32_t vertex_index) const;
        RationalPoint apply(const RationalPoint& x) const;

        /** (*this) after `first`. */
        SignedCubeSymmetry compose(const SignedCubeSymmetry& first) const;

        friend bool operator==(const SignedCubeSymmetry&, const SignedCubeSymmetry&) = default;

    private:
        std::vector<int> perm_;
        std::vector<bool> flips_;
};

/** sigma -> [v_0, ..., v_k, apex], extended linearly. */
FormalChain cone(const FormalChain& z, const RationalPoint& apex);

RationalPoint cube_centre(int n);

/**
 * The explicit triangulation chains T_0..T_3 on id of [0,1]^j:
 * T_0 = [0], T_1 = [0,e1], T_2 = [e2,0,e12] - [e1,0,e12] and the signed
 * five-tetrahedron chain in dimension 3.
 */
FormalChain t_map(int j);

/** Average of (-1)^sign * pi_*(z) over the symmetries of [0,1]^j. */
FormalChain symmetrize(int j, const FormalChain& z);

/**
 * Naturality: transports a chain of simplices on [0,1]^n to the affine cube
 * `cube` by replacing every vertex p with cube.evaluate(p).
 */
FormalChain substitute(const FormalChain& model, const Generator& cube);

/**
 * A natural chain map from cubes to simplices modulo degenerate simplices.
 *
 * Degrees with an explicit model use it directly; every higher degree n is
 * obtained by coning the image of the cubical boundary of id over the cube
 * centre, with sign (-1)^n so that boundaries commute in every degree.
 */
class CubeToSimplexMap
{
    public:
        /** reduce(symmetrize(j, t_map(j))) in degrees 0..3. */
        static CubeToSimplexMap standard();

        /** Uses the given chains as images of id in degrees 0..models.size()-1. */
        static CubeToSimplexMap from_models(std::vector<FormalChain> models);

        /** Image of id of [0,1]^n; higher degrees are built and cached on demand. */
        const FormalChain& model(int n);

        int explicit_degrees() const { return explicit_degrees_; }

        /** Applies the map to a chain of affine cubes; degenerate cubes go to 0. */
        FormalChain apply(const FormalChain& cubes);

    private:
        explicit CubeToSimplexMap(std::vector<FormalChain> models);

        std::vector<FormalChain> models_;
        int explicit_degrees_;
};

/** phi_j for j in 0..3. */
FormalChain phi(int j, const FormalChain& cubes);

/** Image of degree n >= 4 chains under the iterated-coning extension of phi_0..phi_3. */
FormalChain extend_phi(int n, const FormalChain& cubes);

/**
 * The collapse [0,1]^n -> simplex, (t_1..t_n) -> barycentric coordinates
 * (1-t_1, t_1(1-t_2), ..., t_1...t_n), precomposed with sigma. The result is
 * multilinear, hence a single affine cube: the vertex with index b is v_k,
 * k the number of leading ones of b.
 */
Generator simplex_to_cube(const Generator& simplex);

FormalChain simplex_to_cube(const FormalChain& simplices);

}   // namespace cubevol::cube2simplex
