#pragma once

/**
 * Self-check battery behind `cubevol verify`: exact chain identities, norm
 * bounds, LP fillings and the hyperbolic geometry sanity checks.
 */

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "cubevol/chains.hpp"

namespace cubevol::verify {

struct CheckResult
{
    std::string name;
    bool passed = false;
    std::string measured;
    std::string expected;
    std::string certifies;   ///< statement the check supports
    double seconds = 0.0;
};

struct VerifyOptions
{
    int random_cubes = 200;     ///< affine cubes per degree for the chain-map identity
    int geometry_cubes = 100;   ///< random hyperbolic 3-cubes for diameter and hull checks
    std::uint64_t seed = 20240601;
    bool inject_t3_sign_fault = false;   ///< negative control: flips one term of the 3-cube model
};

struct VerifyReport
{
    std::vector<CheckResult> checks;

    bool all_passed() const;
};

/**
 * Affine cube x -> origin + sum_i t_i a_i in Q^ambient with small random
 * rational data. If `degenerate_direction` is in 1..dim, a_{direction} = 0.
 */
chains::Generator random_affine_cube(int dim, int ambient, std::mt19937_64& rng, int degenerate_direction = 0);

VerifyReport run_verification(const VerifyOptions& options = {});

nlohmann::json report_to_json(const VerifyReport& report);

}   // namespace cubevol::verify
