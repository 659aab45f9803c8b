#pragma once

/**
 * Hyperbolic space H^n in the hyperboloid model: points x in R^{n+1} with
 * <x,x> = -1 and x_n > 0, where <x,y> = x_0 y_0 + ... + x_{n-1} y_{n-1} - x_n y_n.
 * Ideal points are future-pointing null vectors scaled to x_n = 1.
 */

#include <cmath>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "cubevol/dual.hpp"
#include "cubevol/errors.hpp"

namespace cubevol::hyp {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

double minkowski(const Vec& x, const Vec& y);

class HPoint
{
    public:
        HPoint() = default;

        /** Finite point from hyperboloid coordinates; checks <x,x> = -1 relative to x_n^2. */
        static HPoint finite(Vec coords);

        /** Ideal point from a null direction (rescaled to x_n = 1). */
        static HPoint ideal(Vec direction);

        /** The finite point with spatial part y (x_n = sqrt(1 + |y|^2)). */
        static HPoint from_spatial(const Vec& y);

        static HPoint origin(int n);

        /** From the Klein model (|k| < 1 finite, |k| = 1 ideal). */
        static HPoint from_klein(const Vec& k);

        /** From the Poincare ball model. */
        static HPoint from_ball(const Vec& b);

        int dim() const { return static_cast<int>(coords_.size()) - 1; }
        bool is_ideal() const { return ideal_; }
        const Vec& coords() const { return coords_; }
        double operator[](int i) const { return coords_[i]; }

        Vec to_klein() const;
        Vec to_ball() const;

        friend bool operator==(const HPoint& a, const HPoint& b)
        {
            return a.ideal_ == b.ideal_ && a.coords_ == b.coords_;
        }

    private:
        HPoint(Vec coords, bool ideal) : coords_(std::move(coords)), ideal_(ideal) {}

        Vec coords_;
        bool ideal_ = false;
};

/** Hyperbolic distance between finite points, stable for nearby points. */
double distance(const HPoint& x, const HPoint& y);

/**
 * Weights (a, b) with geodesic(x, y, t) = a x + b y, where
 * q = -1 - <x,y> = cosh d - 1. Uses a series in q for short segments so that
 * the weights stay smooth (and differentiable) as d -> 0.
 */
template <typename T>
void geodesic_weights(const T& q, const T& t, T& a, T& b);

HPoint geodesic(const HPoint& x, const HPoint& y, double t);

/** Element of O^+(n,1): a Minkowski-orthogonal, time-orientation preserving matrix. */
class HIsometry
{
    public:
        explicit HIsometry(Mat m);

        static HIsometry identity(int n);

        /** Boost of length `dist` along spatial axis `axis`. */
        static HIsometry translation(int n, int axis, double dist);

        /** Rotation by `angle` in the spatial (i, j) plane. */
        static HIsometry rotation(int n, int i, int j, double angle);

        /** Reflection x_axis -> -x_axis. */
        static HIsometry reflection(int n, int axis);

        /** Product of random rotations and one random boost; orientation-reversing if `reverse`. */
        static HIsometry random(int n, std::mt19937_64& rng, double max_translation, bool reverse = false);

        const Mat& matrix() const { return m_; }
        int dim() const { return static_cast<int>(m_.rows()) - 1; }
        bool preserves_orientation() const { return m_.determinant() > 0; }

        HPoint apply(const HPoint& x) const;
        HIsometry operator*(const HIsometry& other) const { return HIsometry(m_ * other.m_); }
        HIsometry inverse() const;

    private:
        Mat m_;
};

// ---------------------------------------------------------------------------

template <typename T>
void geodesic_weights(const T& q, const T& t, T& a, T& b)
{
    using std::sinh;
    using std::acosh;
    if (value_of(q) < 1e-2)
    {
        // sinh(s d) / sinh(d) = s * sum_k prod_{j<=k} 2 (s^2 - j^2) / (2j (2j+1)) * q^k
        auto ratio = [&](const T& s) {
            const T s2 = s * s;
            T sum(1.0);
            T term(1.0);
            for (int j = 1; j <= 12; ++j)
            {
                term = term * q * (s2 - T(double(j * j))) * T(1.0 / (j * (2.0 * j + 1.0)));
                sum = sum + term;
            }
            return sum * s;
        };
        a = ratio(T(1.0) - t);
        b = ratio(t);
        return;
    }
    const T d = acosh(q + T(1.0));
    const T sd = sinh(d);
    a = sinh(d * (T(1.0) - t)) / sd;
    b = sinh(d * t) / sd;
}

}   // namespace cubevol::hyp
