#include "cubevol/straight_cube.hpp"

#include "cubevol/chains.hpp"

namespace cubevol::hyp {

StraightCube::StraightCube(int dim, std::vector<HPoint> vertices) : dim_(dim), vertices_(std::move(vertices))
{
    require(dim_ >= 0 && dim_ < 31, "cube dimension out of range");
    require(vertices_.size() == (std::size_t{1} << dim_), "a k-cube needs 2^k vertices");
    for (const auto& v : vertices_)
    {
        require(v.dim() == vertices_.front().dim(), "cube vertices must live in one H^n");
        ideal_ = ideal_ || v.is_ideal();
    }
}

HPoint StraightCube::evaluate(const std::vector<double>& t) const
{
    for (double x : t)
        require(x >= 0.0 && x <= 1.0, "cube parameters must lie in [0,1]");
    std::uint32_t corner = 0;
    bool at_corner = true;
    for (std::size_t i = 0; i < t.size() && at_corner; ++i)
    {
        if (t[i] == 1.0)
            corner |= 1u << i;
        else if (t[i] != 0.0)
            at_corner = false;
    }
    if (at_corner && t.size() == static_cast<std::size_t>(dim_))
        return vertices_[corner];
    const std::vector<double> x = evaluate_as(t);
    return HPoint::from_spatial(Eigen::Map<const Vec>(x.data(), ambient_dim()));
}

StraightCube StraightCube::face(int j, int i) const
{
    require(dim_ >= 1 && j >= 1 && j <= dim_ && (i == 0 || i == 1), "face pattern out of range");
    std::vector<HPoint> vertices(std::size_t{1} << (dim_ - 1));
    for (std::uint32_t b = 0; b < vertices.size(); ++b)
        vertices[b] = vertices_[chains::insert_bit(b, j, i)];
    return StraightCube(dim_ - 1, std::move(vertices));
}

bool operator<(const StraightCube& a, const StraightCube& b)
{
    if (a.dim_ != b.dim_)
        return a.dim_ < b.dim_;
    for (std::size_t v = 0; v < a.vertices_.size(); ++v)
    {
        const Vec& x = a.vertices_[v].coords();
        const Vec& y = b.vertices_[v].coords();
        if (x.size() != y.size())
            return x.size() < y.size();
        for (Eigen::Index k = 0; k < x.size(); ++k)
            if (x[k] != y[k])
                return x[k] < y[k];
        if (a.vertices_[v].is_ideal() != b.vertices_[v].is_ideal())
            return b.vertices_[v].is_ideal();
    }
    return false;
}

nlohmann::json cube_to_json(const StraightCube& c)
{
    nlohmann::json vertices = nlohmann::json::array();
    for (const auto& v : c.vertices())
        vertices.push_back({{"coords", std::vector<double>(v.coords().data(), v.coords().data() + v.coords().size())},
                            {"ideal", v.is_ideal()}});
    return {{"dim", c.dim()}, {"vertices", std::move(vertices)}};
}

StraightCube cube_from_json(const nlohmann::json& j)
{
    if (!j.is_object() || !j.contains("dim") || !j.contains("vertices"))
        throw InputError("cube JSON needs 'dim' and 'vertices'");
    if (!j.at("dim").is_number_integer())
        throw InputError("cube 'dim' must be an integer");
    const int dim = j.at("dim").get<int>();
    if (dim < 0 || dim > 10)
        throw InputError("cube dimension out of range");
    const auto& list = j.at("vertices");
    if (!list.is_array() || list.size() != (std::size_t{1} << dim))
        throw InputError("a " + std::to_string(dim) + "-cube needs " + std::to_string(1 << dim) + " vertices");
    std::vector<HPoint> vertices;
    try
    {
        for (const auto& v : list)
        {
            const auto coords = v.at("coords").get<std::vector<double>>();
            Vec x = Eigen::Map<const Vec>(coords.data(), static_cast<Eigen::Index>(coords.size()));
            vertices.push_back(v.value("ideal", false) ? HPoint::ideal(std::move(x)) : HPoint::finite(std::move(x)));
        }
        return StraightCube(dim, std::move(vertices));
    }
    catch (const ContractViolation& e)
    {
        throw InputError(std::string("invalid cube: ") + e.what());
    }
    catch (const nlohmann::json::exception& e)
    {
        throw InputError(std::string("invalid cube: ") + e.what());
    }
}

StraightCube regular_ideal_cube(int n)
{
    require(n >= 1, "dimension must be positive");
    std::vector<HPoint> vertices(std::size_t{1} << n);
    const double s = 1.0 / std::sqrt(static_cast<double>(n));
    for (std::uint32_t b = 0; b < vertices.size(); ++b)
    {
        Vec x(n + 1);
        for (int i = 0; i < n; ++i)
            x[i] = ((b >> i) & 1u) ? s : -s;
        x[n] = 1.0;
        vertices[b] = HPoint::ideal(std::move(x));
    }
    return StraightCube(n, std::move(vertices));
}

StraightCube truncate_ideal_cube(const StraightCube& ideal, double L)
{
    require(L >= 0.0, "truncation length must be non-negative");
    const auto& v = ideal.vertices();
    for (std::size_t a = 0; a < v.size(); ++a)
    {
        require(v[a].is_ideal(), "truncate_ideal_cube expects ideal vertices");
        for (std::size_t b = a + 1; b < v.size(); ++b)
            require((v[a].coords() - v[b].coords()).norm() > 1e-12, "ideal vertices must be distinct");
    }
    std::vector<HPoint> vertices;
    vertices.reserve(v.size());
    for (const auto& u : v)
    {
        const int n = u.dim();
        vertices.push_back(HPoint::from_spatial(std::sinh(L) * u.coords().head(n).normalized()));
    }
    return StraightCube(ideal.dim(), std::move(vertices));
}

StraightCube random_cube(int n, std::mt19937_64& rng, double radius)
{
    std::normal_distribution<double> gauss;
    std::uniform_real_distribution<double> uniform(0.0, 1.0);
    std::vector<HPoint> vertices(std::size_t{1} << n);
    for (auto& v : vertices)
    {
        Vec dir(n);
        for (int i = 0; i < n; ++i)
            dir[i] = gauss(rng);
        const double r = radius * std::pow(uniform(rng), 1.0 / n);
        v = HPoint::from_spatial(std::sinh(r) * dir.normalized());
    }
    return StraightCube(n, std::move(vertices));
}

StraightCube transform(const HIsometry& g, const StraightCube& c)
{
    std::vector<HPoint> vertices;
    vertices.reserve(c.vertices().size());
    for (const auto& v : c.vertices())
        vertices.push_back(g.apply(v));
    return StraightCube(c.dim(), std::move(vertices));
}

}   // namespace cubevol::hyp
