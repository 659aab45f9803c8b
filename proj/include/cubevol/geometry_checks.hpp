#pragma once

/**
 * Metric and convexity checks for straight cubes: diameter, containment in
 * the convex hull of the vertices (Klein model), hull triangulation and the
 * geodesic-face test.
 */

#include <vector>

#include "cubevol/straight_cube.hpp"

namespace cubevol::hyp {

/** Largest distance between two vertices. */
double diameter(const StraightCube& c);

struct DiameterCheck
{
    double vertex_diameter = 0.0;
    double grid_diameter = 0.0;
    bool ok = false;
};

/** Samples a grid^k parameter grid and compares its largest pairwise distance with diameter(c). */
DiameterCheck check_diameter(const StraightCube& c, int grid = 17, double tol = 1e-8);

/**
 * Whether q lies in the Euclidean convex hull of `points` within tol.
 * Lower-dimensional hulls are handled inside their affine span.
 */
bool in_convex_hull(const std::vector<Vec>& points, const Vec& q, double tol = 1e-9);

/** Klein images of a grid^k parameter grid all lie in the hull of the vertex images. */
bool hull_containment(const StraightCube& c, int grid = 17, double tol = 1e-9);

/**
 * Triangulation of the convex hull of `points` (full-dimensional, in R^d):
 * the cone from the centroid over recursively triangulated facets.
 */
std::vector<std::vector<Vec>> triangulate_hull(const std::vector<Vec>& points);

struct HullVolume
{
    double volume = 0.0;
    double max_simplex_volume = 0.0;
    int simplex_count = 0;
};

/** Hyperbolic volume of the convex hull of the cube's vertices. */
HullVolume hull_volume(const StraightCube& c, int order = 8, int depth = 2);

struct GeodesicTestReport
{
    bool is_geodesic = false;
    /** Smallest singular value of the normalized face vertex matrix, per face (j,i) in order (1,0),(1,1),(2,0),... */
    std::vector<double> residuals;
};

GeodesicTestReport geodesic_test(const StraightCube& c, double tol = 1e-9);

}   // namespace cubevol::hyp
