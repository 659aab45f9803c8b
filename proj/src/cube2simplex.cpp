#include "cubevol/cube2simplex.hpp"

#include <algorithm>
#include <numeric>

namespace cubevol::cube2simplex {

using chains::CellKind;

SignedCubeSymmetry::SignedCubeSymmetry(std::vector<int> perm, std::vector<bool> flips)
    : perm_(std::move(perm)), flips_(std::move(flips))
{
    require(perm_.size() == flips_.size(), "permutation and flip vector must have equal length");
    std::vector<int> sorted = perm_;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i)
        require(sorted[i] == static_cast<int>(i), "not a permutation of 0..n-1");
}

SignedCubeSymmetry SignedCubeSymmetry::identity(int n)
{
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    return SignedCubeSymmetry(std::move(perm), std::vector<bool>(n, false));
}

std::vector<SignedCubeSymmetry> SignedCubeSymmetry::all(int n)
{
    std::vector<SignedCubeSymmetry> group;
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do
    {
        for (std::uint32_t mask = 0; mask < (1u << n); ++mask)
        {
            std::vector<bool> flips(n);
            for (int i = 0; i < n; ++i)
                flips[i] = (mask >> i) & 1u;
            group.emplace_back(perm, std::move(flips));
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return group;
}

bool SignedCubeSymmetry::sign() const
{
    int parity = 0;
    for (std::size_t a = 0; a < perm_.size(); ++a)
        for (std::size_t b = a + 1; b < perm_.size(); ++b)
            if (perm_[a] > perm_[b])
                parity ^= 1;
    for (bool f : flips_)
        parity ^= f ? 1 : 0;
    return parity != 0;
}

std::uint32_t SignedCubeSymmetry::apply(std::uint32_t vertex_index) const
{
    std::uint32_t out = 0;
    for (std::size_t i = 0; i < perm_.size(); ++i)
    {
        std::uint32_t bit = (vertex_index >> i) & 1u;
        if (flips_[perm_[i]])
            bit ^= 1u;
        out |= bit << perm_[i];
    }
    return out;
}

RationalPoint SignedCubeSymmetry::apply(const RationalPoint& x) const
{
    require(x.size() == perm_.size(), "point dimension must match the symmetry");
    RationalPoint y(x.size());
    for (std::size_t i = 0; i < perm_.size(); ++i)
        y[perm_[i]] = flips_[perm_[i]] ? Rational(1 - x[i]) : x[i];
    return y;
}

SignedCubeSymmetry SignedCubeSymmetry::compose(const SignedCubeSymmetry& first) const
{
    require(first.dim() == dim(), "cannot compose symmetries of different cubes");
    const std::size_t n = perm_.size();
    std::vector<int> perm(n);
    std::vector<bool> flips(n);
    for (std::size_t i = 0; i < n; ++i)
    {
        perm[i] = perm_[first.perm_[i]];
        flips[perm[i]] = first.flips_[first.perm_[i]] != flips_[perm[i]];
    }
    return SignedCubeSymmetry(std::move(perm), std::move(flips));
}

FormalChain cone(const FormalChain& z, const RationalPoint& apex)
{
    FormalChain out(z.dim() + 1);
    for (const auto& [g, c] : z)
    {
        require(g.kind() == CellKind::simplex, "cone expects a chain of simplices");
        require(static_cast<int>(apex.size()) == g.ambient_dim(), "apex must live in the ambient space");
        std::vector<RationalPoint> vertices = g.vertices();
        vertices.push_back(apex);
        out.add(Generator::simplex(std::move(vertices)), c);
    }
    return out;
}

RationalPoint cube_centre(int n)
{
    return RationalPoint(n, Rational(1, 2));
}

namespace {

/** e_{n_1,...,n_k} in R^dim with 1-based indices. */
RationalPoint corner(int dim, std::initializer_list<int> ones)
{
    RationalPoint p(dim);
    for (int k : ones)
        p[k - 1] = 1;
    return p;
}

Generator tetra(RationalPoint a, RationalPoint b, RationalPoint c, RationalPoint d)
{
    return Generator::simplex({std::move(a), std::move(b), std::move(c), std::move(d)});
}

bool is_corner(const RationalPoint& p, std::uint32_t& index)
{
    index = 0;
    for (std::size_t i = 0; i < p.size(); ++i)
    {
        if (p[i] == 1)
            index |= 1u << i;
        else if (p[i] != 0)
            return false;
    }
    return true;
}

}   // namespace

FormalChain t_map(int j)
{
    require(j >= 0 && j <= 3, "t_map is defined for j in 0..3; use extend_phi above");
    FormalChain t(j);
    switch (j)
    {
        case 0:
            t.add(Generator::simplex({RationalPoint{}}), 1);
            break;
        case 1:
            t.add(Generator::simplex({corner(1, {}), corner(1, {1})}), 1);
            break;
        case 2:
            t.add(Generator::simplex({corner(2, {2}), corner(2, {}), corner(2, {1, 2})}), 1);
            t.add(Generator::simplex({corner(2, {1}), corner(2, {}), corner(2, {1, 2})}), -1);
            break;
        case 3:
            t.add(tetra(corner(3, {}), corner(3, {1}), corner(3, {2}), corner(3, {3})), 1);
            t.add(tetra(corner(3, {1, 2}), corner(3, {1}), corner(3, {2}), corner(3, {1, 2, 3})), -1);
            t.add(tetra(corner(3, {1, 3}), corner(3, {1}), corner(3, {3}), corner(3, {1, 2, 3})), 1);
            t.add(tetra(corner(3, {2, 3}), corner(3, {2}), corner(3, {3}), corner(3, {1, 2, 3})), -1);
            // central tetrahedron on the odd-weight corners
            t.add(tetra(corner(3, {1}), corner(3, {2}), corner(3, {3}), corner(3, {1, 2, 3})), 1);
            break;
    }
    return t;
}

FormalChain symmetrize(int j, const FormalChain& z)
{
    const auto group = SignedCubeSymmetry::all(j);
    const Rational weight(1, static_cast<long>(group.size()));
    FormalChain out(z.dim());
    for (const auto& [g, c] : z)
    {
        require(g.kind() == CellKind::simplex && g.ambient_dim() == j,
                "symmetrize expects simplices in [0,1]^j");
        for (const auto& pi : group)
        {
            std::vector<RationalPoint> moved;
            moved.reserve(g.vertices().size());
            for (const auto& v : g.vertices())
                moved.push_back(pi.apply(v));
            out.add(Generator::simplex(std::move(moved)), pi.sign() ? Rational(-c * weight) : Rational(c * weight));
        }
    }
    return out;
}

FormalChain substitute(const FormalChain& model, const Generator& cube)
{
    require(cube.kind() == CellKind::cube, "substitute expects an affine cube");
    FormalChain out(model.dim());
    for (const auto& [g, c] : model)
    {
        std::vector<RationalPoint> vertices;
        vertices.reserve(g.vertices().size());
        for (const auto& p : g.vertices())
        {
            require(static_cast<int>(p.size()) == cube.dim(), "model lives on a cube of another dimension");
            std::uint32_t index = 0;
            vertices.push_back(is_corner(p, index) ? cube.vertex(index) : cube.evaluate(p));
        }
        out.add(Generator::simplex(std::move(vertices)), c);
    }
    return out;
}

CubeToSimplexMap::CubeToSimplexMap(std::vector<FormalChain> models)
    : models_(std::move(models)), explicit_degrees_(static_cast<int>(models_.size()))
{
    require(!models_.empty(), "a cube-to-simplex map needs at least its degree-0 model");
}

CubeToSimplexMap CubeToSimplexMap::standard()
{
    std::vector<FormalChain> models;
    for (int j = 0; j <= 3; ++j)
        models.push_back(chains::reduce_degenerate(symmetrize(j, t_map(j))));
    return CubeToSimplexMap(std::move(models));
}

CubeToSimplexMap CubeToSimplexMap::from_models(std::vector<FormalChain> models)
{
    return CubeToSimplexMap(std::move(models));
}

const FormalChain& CubeToSimplexMap::model(int n)
{
    require(n >= 0 && n <= 12, "cube dimension out of range");
    while (static_cast<int>(models_.size()) <= n)
    {
        const int m = static_cast<int>(models_.size());
        const FormalChain face_image = apply(chains::boundary_cube(FormalChain(m, Generator::standard_cube(m))));
        FormalChain coned = cone(face_image, cube_centre(m));
        if (m % 2 != 0)
            coned *= Rational(-1);
        models_.push_back(chains::reduce_degenerate(coned));
    }
    return models_[n];
}

FormalChain CubeToSimplexMap::apply(const FormalChain& cubes)
{
    FormalChain out(cubes.dim());
    for (const auto& [g, c] : cubes)
    {
        require(g.kind() == CellKind::cube, "cube-to-simplex map expects a chain of cubes");
        const FormalChain image = substitute(model(g.dim()), g);
        for (const auto& [s, a] : image)
            out.add(s, a * c);
    }
    return chains::reduce_degenerate(out);
}

namespace {

CubeToSimplexMap& standard_instance()
{
    thread_local CubeToSimplexMap map = CubeToSimplexMap::standard();
    return map;
}

}   // namespace

FormalChain phi(int j, const FormalChain& cubes)
{
    require(j >= 0 && j <= 3, "phi is explicit in degrees 0..3; use extend_phi above");
    require(cubes.is_zero() || cubes.dim() == j, "chain degree must equal j");
    return standard_instance().apply(cubes);
}

FormalChain extend_phi(int n, const FormalChain& cubes)
{
    require(n >= 4, "extend_phi covers degrees >= 4");
    require(cubes.is_zero() || cubes.dim() == n, "chain degree must equal n");
    return standard_instance().apply(cubes);
}

Generator simplex_to_cube(const Generator& simplex)
{
    require(simplex.kind() == CellKind::simplex, "simplex_to_cube expects a simplex");
    const int n = simplex.dim();
    std::vector<RationalPoint> vertices(std::size_t{1} << n);
    for (std::uint32_t b = 0; b < vertices.size(); ++b)
    {
        int leading = 0;
        while (leading < n && ((b >> leading) & 1u))
            ++leading;
        vertices[b] = simplex.vertex(leading);
    }
    return Generator::cube(n, std::move(vertices));
}

FormalChain simplex_to_cube(const FormalChain& simplices)
{
    FormalChain out(simplices.dim());
    for (const auto& [g, c] : simplices)
        out.add(simplex_to_cube(g), c);
    return out;
}

}   // namespace cubevol::cube2simplex
