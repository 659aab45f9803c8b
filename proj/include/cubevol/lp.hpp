#pragma once

/**
 * Exact rational linear programming: minimize c.x subject to A x = b, x >= 0.
 *
 * Dense two-phase tableau simplex with Bland's smallest-index rule, which
 * cannot cycle. Every returned status comes with an exact certificate:
 *   optimal    -> dual y with c_j - (A^T y)_j >= 0 for all j and b.y == c.x
 *   infeasible -> Farkas y with A^T y <= 0 and b.y > 0
 *   unbounded  -> a ray d >= 0 with A d = 0 and c.d < 0
 */

#include <string>
#include <vector>

#include "cubevol/rational.hpp"

namespace cubevol::lp {

using RationalMatrix = std::vector<std::vector<Rational>>;

enum class LpStatus { optimal, infeasible, unbounded };

struct LpResult
{
    LpStatus status = LpStatus::infeasible;
    std::vector<Rational> x;
    Rational objective = 0;
    std::vector<Rational> dual;
    std::vector<Rational> farkas;
    std::vector<Rational> ray;
    long pivots = 0;
};

LpResult minimize(const RationalMatrix& A, const std::vector<Rational>& b, const std::vector<Rational>& c);

/** Re-checks the certificate attached to `result` with exact arithmetic. */
bool check_certificate(const RationalMatrix& A, const std::vector<Rational>& b, const std::vector<Rational>& c,
                       const LpResult& result, std::string* why = nullptr);

std::string to_string(LpStatus status);

}   // namespace cubevol::lp
