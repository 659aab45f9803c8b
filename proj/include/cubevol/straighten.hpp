#pragma once

/**
 * Straightening of cubical chains in H^n. A singular cube is modelled by an
 * opaque tag together with lifts of its 2^k vertices; straightening keeps the
 * lifts and forgets everything else.
 */

#include <cstdint>

#include "cubevol/chains.hpp"
#include "cubevol/straight_cube.hpp"

namespace cubevol::hyp {

class SingularCube
{
    public:
        SingularCube(int dim, std::vector<HPoint> lifts, std::uint64_t tag);

        int dim() const { return dim_; }
        const std::vector<HPoint>& lifts() const { return lifts_; }
        std::uint64_t tag() const { return tag_; }

        /**
         * (j,i)-face: the matching vertex sub-family. Its tag depends only on
         * the root cube and the set of frozen root coordinates, so iterated
         * faces taken in either order coincide.
         */
        SingularCube face(int j, int i) const;

        friend bool operator==(const SingularCube& a, const SingularCube& b)
        {
            return a.tag_ == b.tag_ && a.dim_ == b.dim_ && a.lifts_ == b.lifts_;
        }
        friend bool operator<(const SingularCube& a, const SingularCube& b);

    private:
        int dim_;
        std::vector<HPoint> lifts_;
        std::uint64_t tag_;
        std::uint64_t root_;
        std::uint32_t frozen_ = 0;   ///< root coordinates fixed by taking faces
        std::uint32_t values_ = 0;   ///< their values
        std::vector<int> free_;      ///< root coordinate of each remaining coordinate
};

using SingularChain = chains::BasicChain<SingularCube>;
using StraightChain = chains::BasicChain<StraightCube>;

/** Cubical boundary sum_j (-1)^j (face(j,0) - face(j,1)) for any cell type with face(j,i). */
template <typename Cell>
chains::BasicChain<Cell> cubical_boundary(const chains::BasicChain<Cell>& z)
{
    require(z.is_zero() || z.dim() >= 1, "boundary of a 0-chain is undefined");
    chains::BasicChain<Cell> out(z.dim() - 1);
    for (const auto& [c, coeff] : z)
        for (int j = 1; j <= c.dim(); ++j)
        {
            const Rational s = (j % 2 == 0) ? coeff : Rational(-coeff);
            out.add(c.face(j, 0), s);
            out.add(c.face(j, 1), -s);
        }
    return out;
}

StraightCube straighten(const SingularCube& c);

/** Linear extension; terms whose straightenings coincide are merged. */
StraightChain straighten(const SingularChain& z);

/** A straight cube viewed as a singular cube (its own vertex lifts). */
SingularCube as_singular(const StraightCube& c, std::uint64_t tag = 0);

}   // namespace cubevol::hyp
