// qwalk command line: run experiment configs, canned presets, and coin-angle
// sweeps. Exit codes: 0 success, 2 bad input (usage, config parse or
// validation), 3 runtime failure (capacity, io).

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "qwalk/emit.hpp"

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw qwalk::io_error("cannot open '" + path + "' for reading");
    std::ostringstream ss;
    ss << in.rdbuf();
    if (in.bad()) throw qwalk::io_error("failed reading '" + path + "'");
    return ss.str();
}

std::string fmt12(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

int do_run(const std::string& config_path) {
    const qwalk::ExperimentConfig cfg = qwalk::parse_config(read_file(config_path));
    const qwalk::RunResult res = qwalk::run_experiment(cfg);
    const qwalk::EmitSpec& e = res.config.emit;
    if (!e.csv_path && !e.json_path && !e.plot_path) {
        std::cout << qwalk::result_to_json(res).dump(2) << "\n";
        return 0;
    }
    qwalk::emit(res);
    if (e.csv_path) std::cout << "wrote " << *e.csv_path << "\n";
    if (e.json_path) std::cout << "wrote " << *e.json_path << "\n";
    if (e.plot_path) std::cout << "wrote " << *e.plot_path << "\n";
    return 0;
}

int do_preset(const std::string& name, const std::string& out_dir,
              unsigned threads, bool list) {
    if (list) {
        for (const qwalk::Preset& p : qwalk::presets())
            std::cout << p.name << "  " << p.title << "\n";
        return 0;
    }
    const qwalk::Preset* preset = qwalk::find_preset(name);
    if (!preset)
        throw qwalk::invalid_parameter(
            "unknown preset '" + name + "' (try: qwalk preset --list)");
    const std::vector<qwalk::RunResult> results =
        qwalk::run_many(preset->runs, threads);
    for (const std::string& path :
         qwalk::write_preset_outputs(*preset, results, out_dir))
        std::cout << "wrote " << path << "\n";
    return 0;
}

bool fit_possible(const std::vector<int>& steps) {
    if (steps.size() < 3) return false;
    int mx = 0;
    for (int n : steps) {
        if (n < 0) return false;
        mx = std::max(mx, n);
    }
    return mx >= 50;
}

int do_sweep(std::vector<double> thetas, const std::vector<int>& steps,
             const std::string& unit, const std::string& out_dir,
             unsigned threads) {
    if (thetas.empty()) throw qwalk::invalid_parameter("--theta-grid is empty");
    if (steps.empty()) throw qwalk::invalid_parameter("--steps is empty");
    if (unit != "deg" && unit != "rad")
        throw qwalk::invalid_parameter("--unit must be deg or rad");
    if (unit == "deg")
        for (double& t : thetas) t *= std::numbers::pi / 180.0;

    std::vector<qwalk::ExperimentConfig> runs;
    runs.reserve(thetas.size() * steps.size());
    for (double theta : thetas)
        for (int n : steps) {
            qwalk::ExperimentConfig cfg;
            cfg.coin = {0.0, theta, 0.0};
            cfg.steps = n;
            cfg.outputs = {qwalk::OutputKind::Moments};
            qwalk::resolve_defaults(cfg);
            qwalk::validate(cfg);
            runs.push_back(std::move(cfg));
        }
    const std::vector<qwalk::RunResult> results = qwalk::run_many(runs, threads);

    nlohmann::json meta;
    meta["theta_grid_rad"] = thetas;
    meta["steps"] = steps;
    std::ostringstream sweep_csv;
    sweep_csv << "# sweep: " << meta.dump() << "\n";
    sweep_csv << "theta_rad,steps,mean,variance,excess_kurtosis\n";
    std::size_t idx = 0;
    for (double theta : thetas)
        for (int n : steps) {
            const qwalk::MomentReport& m = *results[idx++].moments;
            sweep_csv << fmt12(theta) << "," << n << "," << fmt12(m.mean) << ","
                      << fmt12(m.variance) << "," << fmt12(m.excess_kurtosis)
                      << "\n";
        }

    std::ostringstream fits_csv;
    const bool with_fits = fit_possible(steps);
    if (with_fits) {
        fits_csv << "# sweep: " << meta.dump() << "\n";
        fits_csv << "theta_rad,slope,r_squared\n";
        for (double theta : thetas) {
            const qwalk::ScalingFit fit = qwalk::variance_scaling_fit(theta, steps);
            fits_csv << fmt12(theta) << "," << fmt12(fit.slope) << ","
                     << fmt12(fit.r_squared) << "\n";
        }
    }

    if (out_dir.empty()) {
        std::cout << sweep_csv.str();
        if (with_fits) {
            std::cout << "# fits\n" << fits_csv.str();
        } else {
            std::cout << "# fits skipped: need at least 3 step counts with "
                         "max >= 50\n";
        }
        return 0;
    }
    namespace fs = std::filesystem;
    try {
        fs::create_directories(out_dir);
    } catch (const fs::filesystem_error& e) {
        throw qwalk::io_error("cannot create output directory '" + out_dir +
                              "': " + e.what());
    }
    const auto write = [](const std::string& path, const std::string& body) {
        std::ofstream out(path, std::ios::binary);
        if (!out) throw qwalk::io_error("cannot open '" + path + "' for writing");
        out << body;
        out.flush();
        if (!out) throw qwalk::io_error("write to '" + path + "' failed");
        std::cout << "wrote " << path << "\n";
    };
    write((fs::path(out_dir) / "sweep.csv").string(), sweep_csv.str());
    if (with_fits)
        write((fs::path(out_dir) / "fits.csv").string(), fits_csv.str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"discrete-time quantum walk simulator for optical-lattice "
                 "density profiles"};
    app.require_subcommand(1);

    std::string config_path;
    CLI::App* run = app.add_subcommand("run", "execute one JSON experiment config");
    run->add_option("config", config_path, "path to the config file")->required();

    std::string preset_name, preset_out = ".";
    unsigned threads = 0;
    bool list = false;
    CLI::App* preset =
        app.add_subcommand("preset", "run a canned experiment group");
    preset->add_option("name", preset_name, "preset name (see --list)");
    preset->add_option("--out", preset_out, "output directory")
        ->capture_default_str();
    preset->add_flag("--list", list, "list available presets");
    preset->add_option("--threads", threads,
                       "worker threads (0 = QWALK_THREADS or hardware)");

    std::vector<double> theta_grid;
    std::vector<int> sweep_steps;
    std::string unit = "deg", sweep_out;
    CLI::App* sweep = app.add_subcommand(
        "sweep", "moments and variance fits over a theta grid");
    sweep->add_option("--theta-grid", theta_grid, "coin angles")
        ->required()
        ->delimiter(',');
    sweep->add_option("--steps", sweep_steps, "step counts")
        ->required()
        ->delimiter(',');
    sweep->add_option("--unit", unit, "theta unit: deg or rad")
        ->capture_default_str();
    sweep->add_option("--out", sweep_out,
                      "output directory (default: print to stdout)");
    sweep->add_option("--threads", threads,
                      "worker threads (0 = QWALK_THREADS or hardware)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (run->parsed()) return do_run(config_path);
        if (preset->parsed()) {
            if (!list && preset_name.empty())
                throw qwalk::invalid_parameter(
                    "preset needs a name (or --list)");
            return do_preset(preset_name, preset_out, threads, list);
        }
        return do_sweep(theta_grid, sweep_steps, unit, sweep_out, threads);
    } catch (const qwalk::parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const qwalk::invalid_parameter& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
