#include "cubevol/chains.hpp"

#include <algorithm>

namespace cubevol::chains {

Generator::Generator(CellKind kind, int dim, std::vector<RationalPoint> vertices)
    : kind_(kind), dim_(dim), vertices_(std::move(vertices))
{
    require(!vertices_.empty(), "generator needs at least one vertex");
    const std::size_t ambient = vertices_.front().size();
    for (const auto& v : vertices_)
        require(v.size() == ambient, "generator vertices must share one ambient dimension");
}

Generator Generator::simplex(std::vector<RationalPoint> vertices)
{
    require(!vertices.empty(), "simplex needs at least one vertex");
    const int dim = static_cast<int>(vertices.size()) - 1;
    return Generator(CellKind::simplex, dim, std::move(vertices));
}

Generator Generator::cube(int dim, std::vector<RationalPoint> vertices)
{
    require(dim >= 0 && dim < 31, "cube dimension out of range");
    require(vertices.size() == (std::size_t{1} << dim), "cube of dimension n needs 2^n vertices");
    return Generator(CellKind::cube, dim, std::move(vertices));
}

Generator Generator::standard_cube(int dim)
{
    require(dim >= 0 && dim < 31, "cube dimension out of range");
    std::vector<RationalPoint> vertices(std::size_t{1} << dim, RationalPoint(dim));
    for (std::size_t b = 0; b < vertices.size(); ++b)
        for (int i = 0; i < dim; ++i)
            vertices[b][i] = (b >> i) & 1u;
    return cube(dim, std::move(vertices));
}

Generator Generator::standard_simplex(int dim)
{
    std::vector<RationalPoint> vertices(dim + 1, RationalPoint(dim));
    for (int i = 1; i <= dim; ++i)
        vertices[i][i - 1] = 1;
    return simplex(std::move(vertices));
}

RationalPoint Generator::evaluate(const RationalPoint& t) const
{
    require(kind_ == CellKind::cube, "evaluate is defined for cubes");
    require(static_cast<int>(t.size()) == dim_, "parameter length must equal cube dimension");

    // Join along t_1 first (lowest index bit), then t_2, ...
    std::vector<RationalPoint> level = vertices_;
    for (int i = 0; i < dim_; ++i)
    {
        std::vector<RationalPoint> next(level.size() / 2);
        for (std::size_t m = 0; m < next.size(); ++m)
        {
            const RationalPoint& a = level[2 * m];
            const RationalPoint& b = level[2 * m + 1];
            RationalPoint p(a.size());
            for (std::size_t k = 0; k < a.size(); ++k)
                p[k] = a[k] + t[i] * (b[k] - a[k]);
            next[m] = std::move(p);
        }
        level = std::move(next);
    }
    return level.front();
}

bool operator==(const Generator& a, const Generator& b)
{
    return a.kind_ == b.kind_ && a.dim_ == b.dim_ && a.vertices_ == b.vertices_;
}

bool operator<(const Generator& a, const Generator& b)
{
    if (a.kind_ != b.kind_) return a.kind_ < b.kind_;
    if (a.dim_ != b.dim_) return a.dim_ < b.dim_;
    if (a.vertices_.size() != b.vertices_.size()) return a.vertices_.size() < b.vertices_.size();
    for (std::size_t k = 0; k < a.vertices_.size(); ++k)
    {
        const int c = compare_points(a.vertices_[k], b.vertices_[k]);
        if (c != 0) return c < 0;
    }
    return false;
}

std::uint32_t insert_bit(std::uint32_t face_index, int j, int i)
{
    const std::uint32_t low_mask = (1u << (j - 1)) - 1u;
    const std::uint32_t low = face_index & low_mask;
    const std::uint32_t high = face_index >> (j - 1);
    return low | (static_cast<std::uint32_t>(i) << (j - 1)) | (high << j);
}

Generator cube_face(const Generator& cube, FacePattern pattern)
{
    require(cube.kind() == CellKind::cube, "cube_face expects a cube");
    const int n = cube.dim();
    require(n >= 1, "a 0-cube has no faces");
    require(pattern.j >= 1 && pattern.j <= n && (pattern.i == 0 || pattern.i == 1),
            "face pattern out of range");
    std::vector<RationalPoint> vertices(std::size_t{1} << (n - 1));
    for (std::uint32_t b = 0; b < vertices.size(); ++b)
        vertices[b] = cube.vertex(insert_bit(b, pattern.j, pattern.i));
    return Generator::cube(n - 1, std::move(vertices));
}

namespace {

void add_cube_boundary(FormalChain& out, const Generator& c, const Rational& coeff)
{
    for (int j = 1; j <= c.dim(); ++j)
    {
        const Rational sign = (j % 2 == 0) ? coeff : Rational(-coeff);
        out.add(cube_face(c, {j, 0}), sign);
        out.add(cube_face(c, {j, 1}), -sign);
    }
}

void add_simplex_boundary(FormalChain& out, const Generator& s, const Rational& coeff)
{
    const auto& v = s.vertices();
    for (std::size_t i = 0; i < v.size(); ++i)
    {
        std::vector<RationalPoint> face;
        face.reserve(v.size() - 1);
        for (std::size_t k = 0; k < v.size(); ++k)
            if (k != i)
                face.push_back(v[k]);
        out.add(Generator::simplex(std::move(face)), (i % 2 == 0) ? coeff : Rational(-coeff));
    }
}

}   // namespace

FormalChain boundary_cube(const FormalChain& z)
{
    require(z.is_zero() || z.dim() >= 1, "boundary of a 0-chain is undefined");
    FormalChain out(z.dim() - 1);
    for (const auto& [g, c] : z)
    {
        require(g.kind() == CellKind::cube, "boundary_cube expects a chain of cubes");
        add_cube_boundary(out, g, c);
    }
    return out;
}

FormalChain boundary_simplex(const FormalChain& z)
{
    require(z.is_zero() || z.dim() >= 1, "boundary of a 0-chain is undefined");
    FormalChain out(z.dim() - 1);
    for (const auto& [g, c] : z)
    {
        require(g.kind() == CellKind::simplex, "boundary_simplex expects a chain of simplices");
        add_simplex_boundary(out, g, c);
    }
    return out;
}

FormalChain boundary(const FormalChain& z)
{
    require(z.is_zero() || z.dim() >= 1, "boundary of a 0-chain is undefined");
    FormalChain out(z.dim() - 1);
    for (const auto& [g, c] : z)
    {
        require(g.dim() == z.dim(), "chain terms must share the chain dimension");
        if (g.kind() == CellKind::cube)
            add_cube_boundary(out, g, c);
        else
            add_simplex_boundary(out, g, c);
    }
    return out;
}

bool is_degenerate(const Generator& g)
{
    const auto& v = g.vertices();
    if (g.kind() == CellKind::simplex)
    {
        for (std::size_t k = 0; k + 1 < v.size(); ++k)
            if (v[k] == v[k + 1])
                return true;
        return false;
    }
    for (int j = 0; j < g.dim(); ++j)
    {
        const std::uint32_t bit = 1u << j;
        bool independent = true;
        for (std::uint32_t b = 0; b < v.size() && independent; ++b)
            if (!(b & bit) && v[b] != v[b | bit])
                independent = false;
        if (independent)
            return true;
    }
    return false;
}

FormalChain reduce_degenerate(const FormalChain& z)
{
    FormalChain out(z.dim());
    for (const auto& [g, c] : z)
        if (!is_degenerate(g))
            out.add(g, c);
    return out;
}

Rational l1_norm(const FormalChain& z)
{
    Rational total = 0;
    for (const auto& [g, c] : z)
        total += abs(c);
    return total;
}

Rational quotient_norm(const FormalChain& z)
{
    return l1_norm(reduce_degenerate(z));
}

nlohmann::json chain_to_json(const FormalChain& z)
{
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [g, c] : z)
    {
        nlohmann::json flat = nlohmann::json::array();
        for (const auto& v : g.vertices())
            for (const auto& x : v)
                flat.push_back(rational_to_json(x));
        terms.push_back({{"kind", g.kind() == CellKind::cube ? "cube" : "simplex"},
                         {"vertices", std::move(flat)},
                         {"coeff", rational_to_json(c)}});
    }
    return {{"dim", z.dim()}, {"terms", std::move(terms)}};
}

FormalChain chain_from_json(const nlohmann::json& j)
{
    if (!j.is_object() || !j.contains("dim") || !j.contains("terms"))
        throw InputError("chain JSON needs 'dim' and 'terms'");
    const int dim = j.at("dim").get<int>();
    if (dim < 0 || dim > 30)
        throw InputError("chain dimension out of range");
    FormalChain z(dim);
    for (const auto& term : j.at("terms"))
    {
        const std::string kind = term.at("kind").get<std::string>();
        if (kind != "cube" && kind != "simplex")
            throw InputError("unknown cell kind '" + kind + "'");
        const bool is_cube = kind == "cube";
        const std::size_t count = is_cube ? (std::size_t{1} << dim) : static_cast<std::size_t>(dim + 1);
        const auto& flat = term.at("vertices");
        if (flat.size() % count != 0)
            throw InputError("vertex list length is not a multiple of the vertex count");
        const std::size_t ambient = flat.size() / count;
        std::vector<RationalPoint> vertices(count, RationalPoint(ambient));
        for (std::size_t v = 0; v < count; ++v)
            for (std::size_t k = 0; k < ambient; ++k)
                vertices[v][k] = rational_from_json(flat[v * ambient + k]);
        Generator g = is_cube ? Generator::cube(dim, std::move(vertices))
                              : Generator::simplex(std::move(vertices));
        z.add(g, rational_from_json(term.at("coeff")));
    }
    return z;
}

}   // namespace cubevol::chains
