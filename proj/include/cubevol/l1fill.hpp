#pragma once

/**
 * Exact l1-minimal fillings over a finite set of affine simplices.
 *
 * Chains are compared in the alternating quotient: a simplex is identified
 * with its sorted vertex tuple times the sign of the sorting permutation, and
 * simplices with a repeated vertex vanish. Each generator is one orientation
 * class; its coefficient carries the sign.
 */

#include <utility>
#include <vector>

#include "cubevol/chains.hpp"
#include "cubevol/lp.hpp"

namespace cubevol::l1fill {

using chains::FormalChain;
using chains::Generator;

struct L1Problem
{
    int dim = 0;
    std::vector<Generator> generators;
    FormalChain target;
};

struct L1Solution
{
    lp::LpStatus status = lp::LpStatus::infeasible;
    std::vector<Rational> coefficients;
    Rational objective = 0;
    /** Dual optimality vector, or a Farkas vector when infeasible. */
    std::vector<Rational> certificate;
    /** Oriented (dim-1)-faces indexing the rows of the certificate. */
    std::vector<Generator> rows;
    long pivots = 0;

    /** Sum of coefficient_i * generator_i (empty unless optimal). */
    FormalChain chain(const L1Problem& problem) const;
};

/** Canonical representative and sign (+1/-1), or sign 0 for a repeated vertex. */
std::pair<Generator, int> orient(const Generator& simplex);

/** Projects a simplicial chain onto the alternating quotient. */
FormalChain orient(const FormalChain& z);

/** True iff the n+1 points span an n-dimensional affine simplex. */
bool affinely_independent(const std::vector<RationalPoint>& points);

/** All affinely independent (n+1)-subsets of `vertices`, each in sorted vertex order. */
std::vector<Generator> enumerate_generators(const std::vector<RationalPoint>& vertices, int n);

L1Solution min_l1_fill(const L1Problem& problem);

/** Re-substitutes the solution and re-checks its certificate, exactly. */
bool verify_solution(const L1Problem& problem, const L1Solution& solution, std::string* why = nullptr);

/**
 * The filling problem for the image of the boundary of id of [0,1]^n under
 * the degree n-1 cube-to-simplex map, with generators on the cube corners
 * (and optionally the centre). n is 2 or 3.
 */
L1Problem cube_filling_problem(int n, bool with_centre = false);

nlohmann::json problem_to_json(const L1Problem& problem);
L1Problem problem_from_json(const nlohmann::json& j);
nlohmann::json solution_to_json(const L1Problem& problem, const L1Solution& solution);

}   // namespace cubevol::l1fill
