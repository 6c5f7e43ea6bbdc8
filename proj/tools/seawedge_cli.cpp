// Batch verification front end: property suites, spectra and state dumps as
// JSON reports with deterministic seeding.
//
// Exit codes: 0 all checks passed, 1 suite failure, 2 configuration error,
// 3 I/O error.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "seawedge/seawedge.hpp"

namespace {

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

seawedge::Json read_json_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path + "' for reading");
    std::string text;
    text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
    if (in.bad()) throw IoError("failed while reading '" + path + "'");
    try {
        return seawedge::Json::parse(text);
    } catch (const std::exception& e) {
        throw ConfigError("invalid JSON in '" + path + "': " + e.what());
    }
}

// Reports land on disk atomically: write a sibling temp file, then rename.
void emit(const std::string& out_path, const seawedge::Json& j) {
    const std::string text = j.dump(2) + "\n";
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    const std::filesystem::path target(out_path);
    std::filesystem::path tmp(target);
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw IoError("cannot open '" + tmp.string() + "' for writing");
        out << text;
        out.flush();
        if (!out) throw IoError("failed while writing '" + tmp.string() + "'");
    }
    std::error_code ec;
    std::filesystem::rename(tmp, target, ec);
    if (ec) throw IoError("cannot move report into place at '" + out_path + "': " + ec.message());
}

void summarize(const std::string& name, bool pass, const std::string& out_path) {
    if (!out_path.empty())
        std::cout << name << ": " << (pass ? "PASS" : "FAIL") << " (report at " << out_path << ")\n";
}

struct Options {
    std::uint64_t seed = 0;
    double tolerance = 0.0;  // 0 = command default
    int window = 4;
    int trials = -1;  // -1 = command default
    std::string grid_path;
    std::string in_path;
    std::string out_path;
    double time = 0.0;
    std::vector<int> particles;
    std::vector<int> holes;
};

void add_suite_flags(CLI::App* cmd, Options& opt, int max_window) {
    cmd->add_option("--seed", opt.seed, "RNG seed (64-bit)");
    cmd->add_option("--tol", opt.tolerance, "pass tolerance")->check(CLI::PositiveNumber);
    cmd->add_option("--window", opt.window, "mode window K (modes +-1..+-K)")
        ->check(CLI::Range(1, max_window));
    cmd->add_option("--trials", opt.trials, "number of random trials")
        ->check(CLI::NonNegativeNumber);
    cmd->add_option("--out", opt.out_path, "report path (stdout when omitted)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Dirac-sea / Fock equivalence verification tool"};
    app.require_subcommand(1);

    Options opt;

    auto* car = app.add_subcommand("verify-car", "anticommutation relations and smeared identities");
    add_suite_flags(car, opt, 16);

    auto* rot = app.add_subcommand("verify-basis-independence",
                                   "generated-vector Gram matrices under block rotations");
    add_suite_flags(rot, opt, 16);

    // the differential suite keeps generated supports tractable
    auto* equiv = app.add_subcommand("verify-equivalence",
                                     "differential comparison of the two quantizations");
    add_suite_flags(equiv, opt, 8);

    auto* spectrum = app.add_subcommand("spectrum", "per-momentum Dirac spectrum and mode table");
    spectrum->add_option("--grid", opt.grid_path, "momentum grid JSON")->required();
    spectrum->add_option("--out", opt.out_path, "report path (stdout when omitted)");

    auto* evolve_cmd = app.add_subcommand("evolve", "apply e^{iHt} to a one-particle state");
    evolve_cmd->add_option("--grid", opt.grid_path, "momentum grid JSON")->required();
    evolve_cmd->add_option("--in", opt.in_path, "input one-particle state JSON")->required();
    evolve_cmd->add_option("--t", opt.time, "evolution time")->required();
    evolve_cmd->add_option("--out", opt.out_path, "output path (stdout when omitted)");

    auto* dump = app.add_subcommand("dump-state", "serialize a wedge basis state (default: the sea vacuum)");
    dump->add_option("--particles", opt.particles, "occupied positive modes")->delimiter(',');
    dump->add_option("--holes", opt.holes, "vacated negative modes")->delimiter(',');
    dump->add_option("--out", opt.out_path, "output path (stdout when omitted)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (car->parsed()) {
            const double tol = opt.tolerance > 0 ? opt.tolerance : 1e-12;
            const int trials = opt.trials >= 0 ? opt.trials : 200;
            const auto report = seawedge::car_suite(opt.seed, opt.window, trials, tol);
            emit(opt.out_path, seawedge::car_report_to_json(report));
            summarize("verify-car", report.pass, opt.out_path);
            return report.pass ? 0 : 1;
        }
        if (rot->parsed()) {
            const double tol = opt.tolerance > 0 ? opt.tolerance : 1e-10;
            const int trials = opt.trials >= 0 ? opt.trials : 50;
            const auto report = seawedge::basis_independence_suite(opt.seed, opt.window, trials, tol);
            emit(opt.out_path, seawedge::rotation_report_to_json(report));
            summarize("verify-basis-independence", report.pass, opt.out_path);
            return report.pass ? 0 : 1;
        }
        if (equiv->parsed()) {
            const double tol = opt.tolerance > 0 ? opt.tolerance : 1e-10;
            const int trials = opt.trials >= 0 ? opt.trials : 300;
            const auto report = seawedge::differential_suite(opt.seed, trials, opt.window, tol);
            emit(opt.out_path, seawedge::differential_report_to_json(report));
            summarize("verify-equivalence", report.pass, opt.out_path);
            return report.pass ? 0 : 1;
        }
        if (spectrum->parsed()) {
            const auto grid = seawedge::grid_from_json(read_json_file(opt.grid_path));
            const auto basis = seawedge::build_mode_basis(grid);
            seawedge::Json out = seawedge::spectrum_to_json(grid);
            out["modes"] = seawedge::mode_basis_to_json(basis)["modes"];
            emit(opt.out_path, out);
            return 0;
        }
        if (evolve_cmd->parsed()) {
            const auto grid = seawedge::grid_from_json(read_json_file(opt.grid_path));
            const auto basis = seawedge::build_mode_basis(grid);
            const auto state = seawedge::one_particle_from_json(read_json_file(opt.in_path));
            const auto evolved = seawedge::evolve(state, opt.time, basis);
            emit(opt.out_path, seawedge::one_particle_to_json(evolved));
            return 0;
        }
        if (dump->parsed()) {
            const seawedge::BasisLabel label(opt.particles, opt.holes);
            emit(opt.out_path, seawedge::wedge_to_json(seawedge::WedgeVector::basis_state(label)));
            return 0;
        }
    } catch (const IoError& e) {
        std::cerr << "I/O error: " << e.what() << "\n";
        return 3;
    } catch (const ConfigError& e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range& e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
