#pragma once

/**
 * Gamma-nets for a surface group: finitely many base points in the
 * fundamental polygon P; the net is their Gamma-orbit and the cell of an
 * orbit point is its Voronoi cell, so the partition is equivariant by
 * construction.
 */

#include <cstdint>
#include <random>
#include <vector>

#include "cubevol/smear/surface.hpp"

namespace cubevol::smear {

/** An orbit point gamma . b_index, identified by the canonical word of gamma. */
struct NetPoint
{
    int index = 0;
    std::vector<int> word;
    Mat3 gamma = Mat3::Identity();
    Vec3 point;
};

struct NetConditions
{
    /** Orbit points within distance 1 + diameter(P) of the origin (finite by construction). */
    long local_count = 0;
    /** |sum of cell areas - area(P)|. */
    double partition_defect = 0.0;
    /** Largest |cell(gamma x) - gamma cell(x)| location mismatch over the equivariance probes. */
    int equivariance_failures = 0;
    double max_cell_diameter = 0.0;
    bool diameter_ok = false;
};

class GammaNet
{
    public:
        /**
         * Greedy Poisson-disk selection from area-uniform candidates in P with
         * spacing 0.45 R, refined until every cell has diameter <= R. A single
         * base point (the centre) is used when diameter(P) <= R.
         */
        GammaNet(const SurfaceGroup& surface, double mesh, std::uint64_t seed = 1);

        const SurfaceGroup& surface() const { return *surface_; }
        double mesh() const { return mesh_; }
        const std::vector<Vec3>& base_points() const { return base_; }
        std::size_t size() const { return base_.size(); }

        /** Vertices (counterclockwise) of the cell of base point i. */
        const std::vector<Vec3>& cell(std::size_t i) const { return cells_.at(i); }
        double cell_diameter(std::size_t i) const;

        /** The orbit point whose cell contains y. */
        NetPoint locate(const Vec3& y) const;

        const NetConditions& conditions() const { return conditions_; }

    private:
        struct Candidate
        {
            int index;
            int element;
            Vec3 point;
        };

        bool build(double spacing, int candidates, std::uint64_t seed);
        void check_conditions(std::uint64_t seed);

        const SurfaceGroup* surface_;
        double mesh_;
        std::vector<Vec3> base_;
        std::vector<std::vector<Vec3>> cells_;
        std::vector<std::pair<Mat3, std::vector<int>>> elements_;
        std::vector<Candidate> candidates_;
        Eigen::Matrix<double, Eigen::Dynamic, 3> candidate_rows_;
        NetConditions conditions_;
};

/** Area-uniform point of the disk of radius r0 about the origin: cosh r = 1 + u (cosh r0 - 1). */
Vec3 uniform_disk_point(std::mt19937_64& rng, double r0);

/** Area-uniform point of the fundamental polygon, by rejection from its circumscribed disk. */
Vec3 uniform_polygon_point(const SurfaceGroup& surface, std::mt19937_64& rng);

}   // namespace cubevol::smear
