#include "cubevol/verify.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <sstream>

#include "cubevol/cube2simplex.hpp"
#include "cubevol/geometry_checks.hpp"
#include "cubevol/l1fill.hpp"
#include "cubevol/straight_cube.hpp"
#include "cubevol/volume.hpp"

namespace cubevol::verify {

using chains::FormalChain;
using chains::Generator;
using cube2simplex::CubeToSimplexMap;

namespace {

constexpr double v3_reference = 1.014941606410;

std::string fixed(double x, int digits = 12)
{
    std::ostringstream out;
    out.precision(digits);
    out << std::fixed << x;
    return out.str();
}

CheckResult timed(const std::string& name, const std::string& certifies, const std::function<void(CheckResult&)>& body)
{
    CheckResult r;
    r.name = name;
    r.certifies = certifies;
    const auto start = std::chrono::steady_clock::now();
    body(r);
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

CubeToSimplexMap make_map(bool fault)
{
    if (!fault)
        return CubeToSimplexMap::standard();
    std::vector<FormalChain> models;
    for (int j = 0; j <= 2; ++j)
        models.push_back(chains::reduce_degenerate(cube2simplex::symmetrize(j, cube2simplex::t_map(j))));
    // flip the sign of one tetrahedron of T_3
    const FormalChain t3 = cube2simplex::t_map(3);
    FormalChain broken(3);
    bool flipped = false;
    for (const auto& [g, c] : t3)
    {
        broken.add(g, flipped ? c : Rational(-c));
        flipped = true;
    }
    models.push_back(chains::reduce_degenerate(cube2simplex::symmetrize(3, broken)));
    return CubeToSimplexMap::from_models(std::move(models));
}

bool commutes(CubeToSimplexMap& map, const Generator& cube)
{
    const FormalChain c(cube.dim(), cube);
    const FormalChain lhs = chains::reduce_degenerate(chains::boundary_simplex(map.apply(c)));
    const FormalChain rhs = map.apply(chains::boundary_cube(c));
    return lhs == rhs;
}

}   // namespace

bool VerifyReport::all_passed() const
{
    for (const auto& c : checks)
        if (!c.passed)
            return false;
    return true;
}

Generator random_affine_cube(int dim, int ambient, std::mt19937_64& rng, int degenerate_direction)
{
    require(dim >= 0 && dim <= 12 && ambient >= 1, "cube dimensions out of range");
    std::uniform_int_distribution<int> num(-6, 6);
    std::uniform_int_distribution<int> den(1, 4);
    auto entry = [&] { return Rational(num(rng), den(rng)); };
    RationalPoint origin(ambient);
    for (auto& x : origin)
        x = entry();
    std::vector<RationalPoint> axes(dim, RationalPoint(ambient));
    for (int i = 0; i < dim; ++i)
        for (auto& x : axes[i])
            x = (i + 1 == degenerate_direction) ? Rational(0) : entry();
    std::vector<RationalPoint> vertices(std::size_t{1} << dim, origin);
    for (std::size_t b = 0; b < vertices.size(); ++b)
        for (int i = 0; i < dim; ++i)
            if (b & (std::size_t{1} << i))
                for (int k = 0; k < ambient; ++k)
                    vertices[b][k] += axes[i][k];
    return Generator::cube(dim, std::move(vertices));
}

VerifyReport run_verification(const VerifyOptions& options)
{
    VerifyReport report;
    CubeToSimplexMap map = make_map(options.inject_t3_sign_fault);
    std::mt19937_64 rng(options.seed);

    for (int j = 1; j <= 3; ++j)
        report.checks.push_back(timed("chain_map_degree_" + std::to_string(j),
                                      "the cube-to-simplex map commutes with boundaries in degree " + std::to_string(j),
                                      [&](CheckResult& r) {
                                          int failures = commutes(map, Generator::standard_cube(j)) ? 0 : 1;
                                          for (int k = 0; k < options.random_cubes; ++k)
                                              if (!commutes(map, random_affine_cube(j, j + 1, rng)))
                                                  ++failures;
                                          r.measured = std::to_string(failures) + " failures";
                                          r.expected = "0 failures on id and " + std::to_string(options.random_cubes) +
                                                       " random affine cubes";
                                          r.passed = failures == 0;
                                      }));

    report.checks.push_back(timed("degenerate_vanishing", "degenerate cubes map to zero modulo degenerate simplices",
                                  [&](CheckResult& r) {
                                      int failures = 0;
                                      for (int j = 1; j <= 3; ++j)
                                          for (int dir = 1; dir <= j; ++dir)
                                              for (int k = 0; k < 10; ++k)
                                              {
                                                  const Generator g = random_affine_cube(j, j, rng, dir);
                                                  if (!map.apply(FormalChain(j, g)).is_zero())
                                                      ++failures;
                                              }
                                      r.measured = std::to_string(failures) + " nonzero images";
                                      r.expected = "0 nonzero images";
                                      r.passed = failures == 0;
                                  }));

    report.checks.push_back(timed("phi3_norm <= 5", "the five-tetrahedron model has l1 norm at most 5",
                                  [&](CheckResult& r) {
                                      const Rational norm = chains::l1_norm(map.model(3));
                                      r.measured = to_string(norm);
                                      r.expected = "<= 5";
                                      r.passed = norm <= 5;
                                  }));

    report.checks.push_back(timed("phi4_norm <= 384", "iterated coning in degree 4 stays within 2^4 4! and commutes with boundaries",
                                  [&](CheckResult& r) {
                                      const Rational norm = chains::l1_norm(map.model(4));
                                      const bool ok = commutes(map, Generator::standard_cube(4));
                                      r.measured = to_string(norm) + (ok ? ", chain map exact" : ", chain map broken");
                                      r.expected = "<= 384, chain map exact";
                                      r.passed = norm <= 384 && ok;
                                  }));

    report.checks.push_back(timed("v3_simplex", "regular ideal tetrahedron volume from the Lobachevsky function",
                                  [&](CheckResult& r) {
                                      const double v3 = hyp::v3_simplex();
                                      r.measured = fixed(v3);
                                      r.expected = fixed(v3_reference) + " +- 1e-9";
                                      r.passed = std::abs(v3 - v3_reference) <= 1e-9;
                                  }));

    report.checks.push_back(timed("coxeter", "the regular ideal cube splits into five regular ideal tetrahedra",
                                  [&](CheckResult& r) {
                                      const auto c = hyp::coxeter_check();
                                      const double v3 = hyp::v3_simplex();
                                      double worst = 0.0;
                                      for (double v : c.volumes)
                                          worst = std::max(worst, std::abs(v - v3));
                                      r.measured = "max |vol - v3| = " + fixed(worst, 15) + ", sum = " + fixed(c.sum);
                                      r.expected = "each within 1e-9, sum within 5e-9 of " + fixed(5.0 * v3);
                                      r.passed = worst <= 1e-9 && std::abs(c.sum - 5.0 * v3) <= 5e-9;
                                  }));

    report.checks.push_back(timed("diameter_and_hull", "straight cubes have vertex-attained diameter and lie in the hull of their vertices",
                                  [&](CheckResult& r) {
                                      int diameter_failures = 0;
                                      int hull_failures = 0;
                                      for (int k = 0; k < options.geometry_cubes; ++k)
                                      {
                                          const hyp::StraightCube c = hyp::random_cube(3, rng, 2.0);
                                          if (!hyp::check_diameter(c, 17, 1e-8).ok)
                                              ++diameter_failures;
                                          if (!hyp::hull_containment(c, 17))
                                              ++hull_failures;
                                      }
                                      r.measured = std::to_string(diameter_failures) + " diameter, " +
                                                   std::to_string(hull_failures) + " hull failures";
                                      r.expected = "0 failures on " + std::to_string(options.geometry_cubes) + " cubes";
                                      r.passed = diameter_failures == 0 && hull_failures == 0;
                                  }));

    for (const auto& [dim, target] : {std::pair{2, 2}, std::pair{3, 5}})
        report.checks.push_back(timed("min_fill_dim_" + std::to_string(dim),
                                      "the LP certifies the minimal simplicial filling of the " + std::to_string(dim) +
                                          "-cube on its vertices",
                                      [&](CheckResult& r) {
                                          const auto problem = l1fill::cube_filling_problem(dim);
                                          const auto solution = l1fill::min_l1_fill(problem);
                                          std::string why;
                                          const bool certified = l1fill::verify_solution(problem, solution, &why);
                                          r.measured = lp::to_string(solution.status) + " " + to_string(solution.objective) +
                                                       (certified ? ", certificate valid" : ", " + why);
                                          r.expected = "optimal " + std::to_string(target) + ", certificate valid";
                                          r.passed = certified && solution.status == lp::LpStatus::optimal &&
                                                     solution.objective == target;
                                      }));
    return report;
}

nlohmann::json report_to_json(const VerifyReport& report)
{
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : report.checks)
        checks.push_back({{"name", c.name},
                          {"passed", c.passed},
                          {"measured", c.measured},
                          {"expected", c.expected},
                          {"certifies", c.certifies},
                          {"seconds", c.seconds}});
    return {{"schema_version", 1}, {"passed", report.all_passed()}, {"checks", checks}};
}

}   // namespace cubevol::verify
