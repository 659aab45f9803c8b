#pragma once

/**
 * Exact chain algebra for affine singular cubes and simplices.
 *
 * A generator is an affine cell in rational coordinate space, identified by
 * its ordered vertex tuple. Simplices carry dim+1 vertices; cubes carry 2^dim
 * vertices indexed by bit masks, where bit (i-1) of the index is the value of
 * the cube coordinate t_i. A cube is evaluated by iterated affine joins, i.e.
 * it is the multilinear interpolation of its vertex family.
 *
 * Chains store only nonzero coefficients, sorted by a total order on
 * generators, so equal chains compare equal term by term.
 */

#include <cstdint>
#include <map>
#include <vector>

#include "cubevol/errors.hpp"
#include "cubevol/rational.hpp"

namespace cubevol::chains {

enum class CellKind { simplex, cube };

class Generator
{
    public:
        static Generator simplex(std::vector<RationalPoint> vertices);
        static Generator cube(int dim, std::vector<RationalPoint> vertices);

        /** id of the standard n-cube [0,1]^n in R^n. */
        static Generator standard_cube(int dim);

        /** The affine simplex [0, e_1, ..., e_n] in R^n. */
        static Generator standard_simplex(int dim);

        CellKind kind() const { return kind_; }
        int dim() const { return dim_; }
        int ambient_dim() const { return static_cast<int>(vertices_.front().size()); }
        const std::vector<RationalPoint>& vertices() const { return vertices_; }
        const RationalPoint& vertex(std::size_t index) const { return vertices_.at(index); }

        /** Multilinear evaluation of a cube at a parameter in Q^dim. */
        RationalPoint evaluate(const RationalPoint& t) const;

        friend bool operator==(const Generator& a, const Generator& b);
        friend bool operator<(const Generator& a, const Generator& b);

    private:
        Generator(CellKind kind, int dim, std::vector<RationalPoint> vertices);

        CellKind kind_;
        int dim_;
        std::vector<RationalPoint> vertices_;
};

/** Finite linear combination of generators with nonzero rational coefficients. */
template <typename Gen>
class BasicChain
{
    public:
        using Terms = std::map<Gen, Rational>;

        explicit BasicChain(int dim = 0) : dim_(dim) {}

        BasicChain(int dim, const Gen& generator, const Rational& coefficient = 1) : dim_(dim)
        {
            add(generator, coefficient);
        }

        int dim() const { return dim_; }
        bool is_zero() const { return terms_.empty(); }
        std::size_t size() const { return terms_.size(); }
        const Terms& terms() const { return terms_; }
        auto begin() const { return terms_.begin(); }
        auto end() const { return terms_.end(); }

        Rational coefficient(const Gen& generator) const
        {
            auto it = terms_.find(generator);
            return it == terms_.end() ? Rational(0) : it->second;
        }

        void add(const Gen& generator, const Rational& coefficient)
        {
            if (coefficient == 0)
                return;
            auto [it, inserted] = terms_.try_emplace(generator, coefficient);
            if (!inserted)
            {
                it->second += coefficient;
                if (it->second == 0)
                    terms_.erase(it);
            }
        }

        BasicChain& operator+=(const BasicChain& other)
        {
            for (const auto& [g, c] : other.terms_)
                add(g, c);
            return *this;
        }

        BasicChain& operator-=(const BasicChain& other)
        {
            for (const auto& [g, c] : other.terms_)
                add(g, -c);
            return *this;
        }

        BasicChain& operator*=(const Rational& scalar)
        {
            if (scalar == 0)
            {
                terms_.clear();
                return *this;
            }
            for (auto& [g, c] : terms_)
                c *= scalar;
            return *this;
        }

        friend BasicChain operator+(BasicChain a, const BasicChain& b) { return a += b; }
        friend BasicChain operator-(BasicChain a, const BasicChain& b) { return a -= b; }
        friend BasicChain operator*(const Rational& s, BasicChain a) { return a *= s; }
        friend BasicChain operator-(BasicChain a) { return a *= Rational(-1); }

        friend bool operator==(const BasicChain& a, const BasicChain& b)
        {
            return a.terms_ == b.terms_ && (a.terms_.empty() || a.dim_ == b.dim_);
        }

    private:
        int dim_;
        Terms terms_;
};

using FormalChain = BasicChain<Generator>;

/** Selects the (j,i)-face of a cube: coordinate j (1-based) frozen at bit i. */
struct FacePattern
{
    int j;
    int i;
};

/** Vertex index of the n-cube obtained by inserting bit `i` at position `j` into a face index. */
std::uint32_t insert_bit(std::uint32_t face_index, int j, int i);

Generator cube_face(const Generator& cube, FacePattern pattern);

/** d c = sum_j (-1)^j (c o face(j,0) - c o face(j,1)), extended linearly. */
FormalChain boundary_cube(const FormalChain& z);

/** Alternating sum of vertex-deletion faces. */
FormalChain boundary_simplex(const FormalChain& z);

/** Dispatches on the generator kind of each term. */
FormalChain boundary(const FormalChain& z);

/**
 * Cubes: some direction j has every pair of vertices differing only in bit j
 * equal (for affine cubes this is independence of coordinate j).
 * Simplices: two adjacent vertices coincide.
 */
bool is_degenerate(const Generator& g);

FormalChain reduce_degenerate(const FormalChain& z);

Rational l1_norm(const FormalChain& z);

/** Norm of the class of z in the quotient by degenerate cells. */
Rational quotient_norm(const FormalChain& z);

nlohmann::json chain_to_json(const FormalChain& z);
FormalChain chain_from_json(const nlohmann::json& j);

}   // namespace cubevol::chains
