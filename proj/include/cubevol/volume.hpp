#pragma once

/**
 * Volumes in H^n: signed volume of straight cubes by Gauss-Legendre
 * quadrature, the Lobachevsky function, ideal tetrahedra and geodesic
 * simplices.
 */

#include <array>
#include <vector>

#include "cubevol/straight_cube.hpp"

namespace cubevol::hyp {

struct VolumeResult
{
    double value = 0.0;
    double error_estimate = 0.0;
    bool is_signed = true;
    int depth = 0;
    int order = 0;
    /** True when an adaptive run stopped at max depth above the tolerance. */
    bool tolerance_missed = false;
};

/** Nodes and weights of the order-point Gauss-Legendre rule on [0,1]. */
struct GaussRule
{
    std::vector<double> nodes;
    std::vector<double> weights;
};

GaussRule gauss_legendre(int order);

/** Pairwise (cascade) summation in a fixed order. */
double pairwise_sum(const std::vector<double>& values);

/**
 * Density of the pulled-back volume form at t: det[d_1 c, ..., d_n c, c(t)]
 * with hyperboloid coordinates as columns (positive on the standard frame at the origin).
 */
double volume_density(const StraightCube& c, const std::vector<double>& t);

/**
 * Integral of the pulled-back volume form over [0,1]^n, split into 2^(depth n)
 * dyadic subcubes with an order^n tensor rule on each. The error estimate is
 * |Q(depth) - Q(depth-1)| (for depth 0, |Q(0) - Q(1)|).
 */
VolumeResult signed_volume(const StraightCube& c, int order = 8, int depth = 2);

/** Raises depth from min_depth until the error estimate is below tol or max_depth is reached. */
VolumeResult signed_volume_adaptive(const StraightCube& c, double tol, int order = 8, int min_depth = 1,
                                    int max_depth = 5);

/** Lobachevsky function L(theta) = -int_0^theta log|2 sin t| dt. */
double lobachevsky(double theta);

/** L(a) + L(b) + L(c) for dihedral angles summing to pi. */
double ideal_tetra_volume(double alpha, double beta, double gamma);

/** Volume of the regular ideal tetrahedron, 3 L(pi/3). */
double v3_simplex();

/**
 * Dihedral angles of the ideal tetrahedron with vertices on the sphere at
 * infinity (ball-model unit vectors): the Euclidean angles of the triangle
 * obtained by inverting the other three vertices in a sphere centred at the first.
 */
std::array<double, 3> ideal_tetra_angles(const std::array<Vec, 4>& vertices);

struct CoxeterReport
{
    std::array<double, 5> volumes{};
    std::array<std::array<double, 3>, 5> angles{};
    double sum = 0.0;
};

/** The regular ideal 3-cube split along the five-tetrahedron pattern. */
CoxeterReport coxeter_check();

/**
 * Volume of the geodesic simplex with Klein-model vertices `klein` (n+1 points
 * in R^n), integrating the Klein density over the Euclidean simplex.
 */
double geodesic_simplex_volume(const std::vector<Vec>& klein, int order = 8, int depth = 2);

}   // namespace cubevol::hyp
