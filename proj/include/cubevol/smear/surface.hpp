#pragma once

/**
 * Closed genus-g hyperbolic surfaces from the regular 4g-gon in H^2
 * (hyperboloid model, last coordinate timelike).
 *
 * Side k has outward direction 2 pi k / 4g; sides 4i, 4i+2 and 4i+1, 4i+3
 * are paired. Generator g_k maps the polygon P onto its neighbour across
 * side k and carries the partner side onto side k.
 */

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "cubevol/errors.hpp"

namespace cubevol::smear {

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;

double minkowski(const Vec3& x, const Vec3& y);

/** The finite point with spatial part (x, y). */
Vec3 lift(double x, double y);

/** Hyperbolic distance, stable for nearby points. */
double distance(const Vec3& a, const Vec3& b);

/** Boost of length r along the x axis. */
Mat3 boost_x(double r);

/** Rotation about the origin. */
Mat3 rotation(double angle);

/** Reflection y -> -y. */
Mat3 reflection();

/** Inverse of an O(2,1) matrix: J m^T J. */
Mat3 lorentz_inverse(const Mat3& m);

/** Signed area of the geodesic triangle abc (positive when counterclockwise in the Klein disk). */
double signed_triangle_area(const Vec3& a, const Vec3& b, const Vec3& c);

/** Area of a convex geodesic polygon given counterclockwise. */
double polygon_area(const std::vector<Vec3>& vertices);

struct Reduction
{
    /** Point of P equivalent to the input. */
    Vec3 point;
    /** Side indices k_1..k_m with input = g_{k_1} ... g_{k_m} point. */
    std::vector<int> word;
};

class SurfaceGroup
{
    public:
        explicit SurfaceGroup(int genus);

        int genus() const { return genus_; }
        int sides() const { return 4 * genus_; }
        double inradius() const { return inradius_; }
        double circumradius() const { return circumradius_; }
        /** 2 pi (2g - 2). */
        double area() const { return area_; }
        /** Largest distance between two points of P (twice the circumradius). */
        double diameter() const { return 2.0 * circumradius_; }

        /** Vertex k sits at angle 2 pi k / n + pi / n; side k joins vertices k-1 and k. */
        const std::vector<Vec3>& polygon() const { return polygon_; }
        /** g_k carries side partner(k) onto side k, so g_k P lies across side k. */
        const std::vector<Mat3>& generators() const { return generators_; }
        const Mat3& generator(int k) const { return generators_.at(k); }
        int partner(int k) const;

        /** <p, u_k>; P is where every value is <= 0. */
        double side_value(const Vec3& p, int k) const { return minkowski(p, normals_[k]); }
        bool contains(const Vec3& p, double tol = 1e-12) const;

        /** prod_i g_{4i} g_{4i+3} g_{4i+2} g_{4i+1}, evaluated in extended precision. */
        Mat3 relator() const;

        /** Group element of a word. */
        Mat3 element(const std::vector<int>& word) const;

        /**
         * Moves p into P by repeatedly applying g_k^{-1} for the most violated
         * side k (ties go to the smallest index within a relative 1e-9).
         */
        Reduction reduce(const Vec3& p) const;

        /** Canonical word of a group element: the reduction word of gamma . origin. */
        std::vector<int> canonical_word(const Mat3& gamma) const;

        /**
         * All group elements h (with canonical words) such that h . origin is
         * within `radius` of the origin, by breadth-first search over generators.
         */
        std::vector<std::pair<Mat3, std::vector<int>>> ball(double radius) const;

    private:
        int genus_;
        double inradius_;
        double circumradius_;
        double area_;
        std::vector<Vec3> polygon_;
        std::vector<Vec3> normals_;
        std::vector<Mat3> generators_;
        std::vector<Mat3> inverses_;
};

std::uint64_t hash_word(const std::vector<int>& word, std::uint64_t seed = 0);

}   // namespace cubevol::smear
