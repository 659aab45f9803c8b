#pragma once

/**
 * Monte-Carlo smearing of a model quadrilateral over Isom(H^2) relative to a
 * Gamma-net, with batch-means error bars.
 *
 * Haar measure on Isom(H^2) is factored as (hyperbolic area of the base point
 * in P) x (rotation angle / 2 pi) x (orientation bit), so the quotient by the
 * surface group has mass 2 area(P). Each sample carries weight 2 area(P) / N.
 */

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include <json.hpp>

#include "cubevol/smear/net.hpp"

namespace cubevol::smear {

/**
 * Truncated ideal square: vertex k (bit 0 = x sign, bit 1 = y sign) at
 * distance L from the origin towards the ideal point at angle 225, 315, 135, 45 degrees.
 */
struct ModelQuadrilateral
{
    double truncation = 0.0;
    std::array<Vec3, 4> vertices{};

    explicit ModelQuadrilateral(double L);

    /** 2 pi - 4 alpha with interior angle alpha = 2 arccot(cosh L). */
    double area() const;

    /** Interior angle at each vertex. */
    double angle() const;
};

/** Signed area of the straight 2-cube on v0..v3: tri(v0,v1,v3) + tri(v0,v3,v2). */
double quad_signed_area(const std::array<Vec3, 4>& v);

struct SmearConfig
{
    long samples = 1000000;
    std::uint64_t seed = 1;
    int workers = 1;
    int batches = 16;
    /** Optional element applied on the left of every sampled isometry. */
    std::optional<Mat3> left_translate;
    /** Keep per-sample net-quad areas (for distribution tests). */
    bool keep_areas = false;
};

struct SampledTerm
{
    std::uint64_t key = 0;
    std::array<int, 4> indices{};
    double a_plus = 0.0;
    double a_minus = 0.0;
};

struct SmearEstimate
{
    long samples = 0;
    std::uint64_t seed = 0;
    int workers = 1;
    double weight = 0.0;

    /** w sum_x |n+_x - n-_x| over net 4-tuples x. */
    double l1_estimate = 0.0;
    double l1_sigma = 0.0;

    /** w sum s A_x: the volume of the smeared chain. */
    double volume_estimate = 0.0;
    double volume_sigma = 0.0;

    /** area(P) l1 / volume: upper bound for the norm of the fundamental class. */
    double bound_estimate = 0.0;
    double bound_sigma = 0.0;

    /**
     * Edge-coefficient magnitude: sqrt|sum_y b^A_y b^B_y| for independent
     * half-sample estimates b^A, b^B of the boundary chain (unbiased for sum b_y^2).
     */
    double boundary_residual = 0.0;
    /** w sum_y |b_y| over all samples, and its value under sign-symmetric noise alone. */
    double boundary_raw = 0.0;
    double boundary_null_floor = 0.0;

    long quad_keys = 0;
    long edge_keys = 0;
    long positive_samples = 0;
    long negative_samples = 0;
    long degenerate_samples = 0;
    /** Samples whose orientation bit disagrees with the sign of the net quad's area. */
    long incoherent_samples = 0;

    std::vector<SampledTerm> terms;
    std::vector<double> areas;
};

SmearEstimate estimate_smearing(const GammaNet& net, const ModelQuadrilateral& q, const SmearConfig& config);

/**
 * area(surface) / (v - 2 eps) with v = 2 pi and eps = 2 pi - area(q).
 * Requires area(q) > pi.
 */
double upper_bound_from_smearing(const SmearEstimate& e, const ModelQuadrilateral& q, double surface_area);

struct KsResult
{
    double statistic = 0.0;
    double p_value = 0.0;
};

/** Two-sample Kolmogorov-Smirnov test with the asymptotic p-value. */
KsResult ks_two_sample(std::vector<double> a, std::vector<double> b);

/**
 * Right-invariance of the sampled measure on Gamma\G: distances from the
 * origin of reduce(g . o) and reduce(g h . o) for independent samples g.
 */
KsResult haar_right_invariance(const SurfaceGroup& surface, const Mat3& h, long samples, std::uint64_t seed);

/** splitmix64 step, used to derive per-worker seeds. */
std::uint64_t splitmix64(std::uint64_t x);

nlohmann::json estimate_to_json(const SmearEstimate& e, std::size_t max_terms = 50);

}   // namespace cubevol::smear
