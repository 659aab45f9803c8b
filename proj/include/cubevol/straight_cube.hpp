#pragma once

/**
 * Straight cubes in H^n: 2^k vertices joined by iterated constant-speed
 * geodesics. Vertex index bit (i-1) is the value of parameter t_i; the join
 * runs along t_1 first and along t_k last.
 */

#include <cstdint>
#include <vector>

#include <json.hpp>

#include "cubevol/hyperbolic.hpp"

namespace cubevol::hyp {

class StraightCube
{
    public:
        StraightCube() = default;
        StraightCube(int dim, std::vector<HPoint> vertices);

        int dim() const { return dim_; }
        int ambient_dim() const { return vertices_.front().dim(); }
        bool is_ideal() const { return ideal_; }
        const std::vector<HPoint>& vertices() const { return vertices_; }
        const HPoint& vertex(std::size_t index) const { return vertices_.at(index); }

        HPoint evaluate(const std::vector<double>& t) const;

        /**
         * Evaluation with any scalar type T supporting the arithmetic used by
         * geodesic_weights (double or dual numbers). Returns hyperboloid coordinates.
         */
        template <typename T>
        std::vector<T> evaluate_as(const std::vector<T>& t) const;

        /** (j,i)-face, 1-based j. */
        StraightCube face(int j, int i) const;

        friend bool operator==(const StraightCube& a, const StraightCube& b)
        {
            return a.dim_ == b.dim_ && a.vertices_ == b.vertices_;
        }
        friend bool operator<(const StraightCube& a, const StraightCube& b);

    private:
        int dim_ = 0;
        std::vector<HPoint> vertices_;
        bool ideal_ = false;
};

/** {"dim": k, "vertices": [{"coords": [...], "ideal": bool}, ...]} */
nlohmann::json cube_to_json(const StraightCube& c);
StraightCube cube_from_json(const nlohmann::json& j);

/** Vertices (+-1, ..., +-1)/sqrt(n) on the sphere at infinity, sign + where the index bit is set. */
StraightCube regular_ideal_cube(int n);

/** Replaces each ideal vertex u by the finite point at distance L from the origin towards u. */
StraightCube truncate_ideal_cube(const StraightCube& ideal, double L);

/** Random straight n-cube with vertices at distance <= radius from the origin. */
StraightCube random_cube(int n, std::mt19937_64& rng, double radius);

StraightCube transform(const HIsometry& g, const StraightCube& c);

// ---------------------------------------------------------------------------

template <typename T>
std::vector<T> StraightCube::evaluate_as(const std::vector<T>& t) const
{
    require(!ideal_, "cannot evaluate a cube with ideal vertices");
    require(static_cast<int>(t.size()) == dim_, "parameter length must equal cube dimension");
    const int m = ambient_dim() + 1;
    // level p occupies buf[p*m .. p*m+m); joins write in place over the lower half
    std::vector<T> buf(vertices_.size() * m);
    for (std::size_t v = 0; v < vertices_.size(); ++v)
        for (int k = 0; k < m; ++k)
            buf[v * m + k] = T(vertices_[v][k]);

    std::size_t count = vertices_.size();
    for (int i = 0; i < dim_; ++i)
    {
        count /= 2;
        for (std::size_t p = 0; p < count; ++p)
        {
            const T* x = &buf[2 * p * m];
            const T* y = &buf[(2 * p + 1) * m];
            T inner = x[m - 1] * y[m - 1];
            inner = -inner;
            for (int k = 0; k + 1 < m; ++k)
                inner += x[k] * y[k];
            const T q = T(-1.0) - inner;
            T a, b;
            geodesic_weights(q, t[i], a, b);
            T* z = &buf[p * m];
            for (int k = 0; k < m; ++k)
            {
                T zk = a * x[k];
                zk += b * y[k];
                z[k] = zk;
            }
        }
    }
    buf.resize(m);
    return buf;
}

}   // namespace cubevol::hyp
