// Command-line front end. Exit codes: 0 success, 1 verification failure, 2 input error.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "cubevol/combine.hpp"
#include "cubevol/errors.hpp"
#include "cubevol/l1fill.hpp"
#include "cubevol/smear/smearing.hpp"
#include "cubevol/straight_cube.hpp"
#include "cubevol/verify.hpp"
#include "cubevol/volume.hpp"

using namespace cubevol;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_failed = 1;
constexpr int exit_input = 2;

std::string read_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw InputError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_json(const std::string& path, const nlohmann::json& j)
{
    std::ofstream out(path);
    if (!out)
        throw InputError("cannot write " + path);
    out << j.dump(2) << '\n';
}

std::string fixed(double x, int digits)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, x);
    return buf;
}

int cmd_constants()
{
    const auto rows = combine::constants_table();
    for (const auto& r : rows)
        std::cout << r.name << ' ' << fixed(r.value, 12) << "  # " << r.note << '\n';
    std::cout << "v3_cube/v3_simplex " << fixed(rows[1].value / rows[0].value, 12) << '\n';
    return exit_ok;
}

int cmd_verify(const std::string& json_path, const std::string& fault)
{
    verify::VerifyOptions options;
    if (!fault.empty())
    {
        if (fault != "t3-sign")
            throw InputError("unknown fault '" + fault + "'");
        options.inject_t3_sign_fault = true;
    }
    const auto report = verify::run_verification(options);
    for (const auto& c : report.checks)
    {
        std::cout << (c.passed ? "PASS " : "FAIL ") << c.name << ": " << c.measured << " (expected " << c.expected << ")";
        if (!c.passed)
            std::cout << " -- certifies: " << c.certifies;
        std::cout << '\n';
    }
    if (!json_path.empty())
        write_json(json_path, verify::report_to_json(report));
    return report.all_passed() ? exit_ok : exit_failed;
}

int cmd_min_fill(int dim, bool with_centre, const std::string& json_path)
{
    const auto problem = l1fill::cube_filling_problem(dim, with_centre);
    const auto solution = l1fill::min_l1_fill(problem);
    std::string why;
    const bool certified = l1fill::verify_solution(problem, solution, &why);
    std::cout << "generators " << problem.generators.size() << '\n'
              << "status " << lp::to_string(solution.status) << '\n';
    if (solution.status == lp::LpStatus::optimal)
        std::cout << "objective " << to_string(solution.objective) << ' ' << fixed(to_double(solution.objective), 12)
                  << '\n';
    std::cout << "certificate " << (certified ? "valid" : "invalid: " + why) << '\n';
    if (!json_path.empty())
    {
        nlohmann::json j = l1fill::solution_to_json(problem, solution);
        j["schema_version"] = 1;
        write_json(json_path, j);
    }
    return certified ? exit_ok : exit_failed;
}

int cmd_volume(const std::string& path, int order, int depth)
{
    nlohmann::json j;
    try
    {
        j = nlohmann::json::parse(read_file(path));
    }
    catch (const nlohmann::json::parse_error& e)
    {
        throw InputError(std::string("malformed JSON: ") + e.what());
    }
    const hyp::StraightCube cube = hyp::cube_from_json(j);
    const auto result = hyp::signed_volume(cube, order, depth);
    std::cout << "label,value,error_estimate\n";
    const std::string label = j.contains("label") && j["label"].is_string()
                                  ? j["label"].get<std::string>()
                                  : std::filesystem::path(path).stem().string();
    std::cout << label << ',' << fixed(result.value, 12) << ',' << fixed(result.error_estimate, 12) << '\n';
    return exit_ok;
}

int cmd_coxeter()
{
    const auto report = hyp::coxeter_check();
    std::cout << "tetrahedron,alpha,beta,gamma,volume\n";
    for (std::size_t k = 0; k < report.volumes.size(); ++k)
        std::cout << k << ',' << fixed(report.angles[k][0], 12) << ',' << fixed(report.angles[k][1], 12) << ','
                  << fixed(report.angles[k][2], 12) << ',' << fixed(report.volumes[k], 12) << '\n';
    std::cout << "sum," << fixed(report.sum, 12) << '\n';
    const double v3 = hyp::v3_simplex();
    bool ok = std::abs(report.sum - 5.0 * v3) <= 5e-9;
    for (double v : report.volumes)
        ok = ok && std::abs(v - v3) <= 1e-9;
    return ok ? exit_ok : exit_failed;
}

struct SmearArgs
{
    int genus = 2;
    double mesh = 1.5;
    double truncation = 6.0;
    long samples = 1000000;
    std::uint64_t seed = 1;
    int workers = 1;
    std::string out;
};

int cmd_smear(const SmearArgs& a)
{
    if (a.samples < 10000)
        throw InputError("--samples must be at least 10000");
    if (a.genus < 2)
        throw InputError("--genus must be at least 2");
    if (!(a.mesh > 0.0) || !(a.truncation > 0.0))
        throw InputError("--mesh and --truncation must be positive");
    const smear::SurfaceGroup surface(a.genus);
    const smear::GammaNet net(surface, a.mesh, a.seed);
    const smear::ModelQuadrilateral q(a.truncation);
    smear::SmearConfig config;
    config.samples = a.samples;
    config.seed = a.seed;
    config.workers = a.workers;
    const auto e = smear::estimate_smearing(net, q, config);
    const auto conditions = net.conditions();

    nlohmann::json j = smear::estimate_to_json(e);
    j["schema_version"] = 1;
    j["config"] = {{"genus", a.genus},       {"mesh", a.mesh},       {"truncation", a.truncation},
                   {"samples", a.samples},   {"seed", a.seed},       {"workers", a.workers}};
    j["surface_area"] = surface.area();
    j["quad_area"] = q.area();
    j["net_size"] = net.size();
    j["net_max_cell_diameter"] = conditions.max_cell_diameter;
    if (q.area() > std::numbers::pi)
        j["upper_bound_from_smearing"] = smear::upper_bound_from_smearing(e, q, surface.area());

    std::cout << "l1_estimate " << fixed(e.l1_estimate, 6) << " +- " << fixed(e.l1_sigma, 6) << '\n'
              << "volume_estimate " << fixed(e.volume_estimate, 6) << " +- " << fixed(e.volume_sigma, 6) << '\n'
              << "bound_estimate " << fixed(e.bound_estimate, 6) << " +- " << fixed(e.bound_sigma, 6) << '\n'
              << "boundary_residual " << fixed(e.boundary_residual, 6) << '\n'
              << "incoherent_samples " << e.incoherent_samples << '\n';
    if (!a.out.empty())
        write_json(a.out, j);
    return exit_ok;
}

int cmd_combine(const std::string& path)
{
    const auto pieces = combine::parse_pieces(read_file(path));
    const auto report = combine::combine(pieces);
    std::cout << "sv " << fixed(report.sv, 6) << '\n' << "qsv " << fixed(report.qsv, 6) << '\n';
    for (const auto& p : report.per_piece)
        std::cout << "  " << p.label << ' ' << fixed(p.sv, 6) << '\n';
    return exit_ok;
}

}   // namespace

int main(int argc, char** argv)
{
    CLI::App app{"cubical and simplicial volume toolkit"};
    app.require_subcommand(1);

    app.add_subcommand("constants", "print volume constants");

    auto* verify_cmd = app.add_subcommand("verify", "run the self-check battery");
    std::string verify_json;
    std::string fault;
    verify_cmd->add_option("--json", verify_json, "write the JSON report here");
    verify_cmd->add_option("--inject-fault", fault)->group("");

    auto* fill_cmd = app.add_subcommand("min-fill", "minimal l1 simplicial filling of the cube");
    int fill_dim = 3;
    bool with_centre = false;
    std::string fill_json;
    fill_cmd->add_option("--dim", fill_dim)->required()->check(CLI::IsMember({2, 3}));
    fill_cmd->add_flag("--with-center", with_centre, "also allow the cube centre as a vertex");
    fill_cmd->add_option("--json", fill_json, "write problem and solution JSON here");

    auto* volume_cmd = app.add_subcommand("volume", "signed volume of a straight cube");
    std::string cube_path;
    int order = 8;
    int depth = 2;
    volume_cmd->add_option("--cube", cube_path)->required();
    volume_cmd->add_option("--order", order)->check(CLI::Range(1, 64));
    volume_cmd->add_option("--depth", depth)->check(CLI::Range(0, 8));

    app.add_subcommand("coxeter", "split the regular ideal cube into ideal tetrahedra");

    auto* smear_cmd = app.add_subcommand("smear", "Monte-Carlo smearing on a closed surface");
    SmearArgs smear_args;
    smear_cmd->add_option("--genus", smear_args.genus);
    smear_cmd->add_option("--mesh", smear_args.mesh);
    smear_cmd->add_option("--truncation", smear_args.truncation);
    smear_cmd->add_option("--samples", smear_args.samples);
    smear_cmd->add_option("--seed", smear_args.seed);
    smear_cmd->add_option("--workers", smear_args.workers)->check(CLI::Range(1, 256));
    smear_cmd->add_option("--out", smear_args.out);

    auto* combine_cmd = app.add_subcommand("combine", "simplicial volumes from geometric pieces");
    std::string pieces_path;
    combine_cmd->add_option("--pieces", pieces_path)->required();

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::CallForHelp& e)
    {
        return app.exit(e);
    }
    catch (const CLI::ParseError& e)
    {
        app.exit(e);
        return exit_input;
    }

    try
    {
        if (app.got_subcommand("constants"))
            return cmd_constants();
        if (app.got_subcommand(verify_cmd))
            return cmd_verify(verify_json, fault);
        if (app.got_subcommand(fill_cmd))
            return cmd_min_fill(fill_dim, with_centre, fill_json);
        if (app.got_subcommand(volume_cmd))
            return cmd_volume(cube_path, order, depth);
        if (app.got_subcommand("coxeter"))
            return cmd_coxeter();
        if (app.got_subcommand(smear_cmd))
            return cmd_smear(smear_args);
        if (app.got_subcommand(combine_cmd))
            return cmd_combine(pieces_path);
    }
    catch (const InputError& e)
    {
        std::cerr << "input error: " << e.what() << '\n';
        return exit_input;
    }
    catch (const ContractViolation& e)
    {
        std::cerr << "invalid argument: " << e.what() << '\n';
        return exit_input;
    }
    catch (const std::exception& e)
    {
        std::cerr << "error: " << e.what() << '\n';
        return exit_failed;
    }
    return exit_input;
}
