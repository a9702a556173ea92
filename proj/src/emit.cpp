#include "qwalk/emit.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>

namespace qwalk {
namespace {

std::string fmt12(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path, std::ios::binary);  // binary: identical bytes everywhere
    if (!out) throw io_error("cannot open '" + path + "' for writing");
    return out;
}

void finish(std::ofstream& out, const std::string& path) {
    out.flush();
    if (!out) throw io_error("write to '" + path + "' failed");
}

}  // namespace

void write_csv(const std::string& path, const RunResult& result) {
    const bool is_profile = result.profile.has_value();
    if (!is_profile && !result.distribution)
        throw invalid_parameter(
            "csv output needs a distribution or profile in the result");
    const int radius =
        is_profile ? result.profile->radius : result.distribution->radius;
    const std::vector<double>& values =
        is_profile ? result.profile->n : result.distribution->probs;

    std::ofstream out = open_out(path);
    out << "# config: " << config_echo(result.config).dump() << "\n";
    out << "position," << (is_profile ? "n_j" : "probability") << "\n";
    for (int j = -radius; j <= radius; ++j) {
        const double v = values[static_cast<std::size_t>(j + radius)];
        if (v == 0.0 && !result.config.emit.include_zero_rows) continue;
        out << j << "," << fmt12(v) << "\n";
    }
    finish(out, path);
}

void write_json(const std::string& path, const std::vector<RunResult>& results) {
    nlohmann::json doc;
    if (results.size() == 1) {
        doc = result_to_json(results.front());
    } else {
        doc["runs"] = nlohmann::json::array();
        for (const RunResult& r : results) doc["runs"].push_back(result_to_json(r));
    }
    std::ofstream out = open_out(path);
    out << doc.dump(2) << "\n";
    finish(out, path);
}

void write_plot_script(const std::string& path, const std::string& title,
                       const std::string& ylabel,
                       const std::vector<std::pair<std::string, std::string>>& series) {
    if (series.empty()) throw invalid_parameter("plot script needs at least one series");
    std::ofstream out = open_out(path);
    out << "# " << title << "\n";
    out << "set datafile separator \",\"\n";
    out << "set xlabel \"lattice site j\"\n";
    out << "set ylabel \"" << ylabel << "\"\n";
    out << "set key top right\n";
    out << "plot \\\n";
    for (std::size_t i = 0; i < series.size(); ++i) {
        out << "  \"" << series[i].second << "\" using 1:2 with linespoints title \""
            << series[i].first << "\"";
        out << (i + 1 < series.size() ? ", \\\n" : "\n");
    }
    finish(out, path);
}

void emit(const RunResult& result) {
    const EmitSpec& spec = result.config.emit;
    if (spec.csv_path) write_csv(*spec.csv_path, result);
    if (spec.json_path) write_json(*spec.json_path, {result});
    if (spec.plot_path) {
        if (!spec.csv_path)
            throw invalid_parameter("a plot script needs emit.csv to reference");
        const std::string ylabel = result.profile ? "n_j" : "probability";
        const std::string name =
            std::filesystem::path(*spec.csv_path).filename().string();
        write_plot_script(*spec.plot_path,
                          result.label.empty() ? "qwalk run" : result.label,
                          ylabel, {{result.label.empty() ? "run" : result.label,
                                    name}});
    }
}

std::vector<std::string> write_preset_outputs(const Preset& preset,
                                              const std::vector<RunResult>& results,
                                              const std::string& out_dir) {
    namespace fs = std::filesystem;
    try {
        fs::create_directories(out_dir);
    } catch (const fs::filesystem_error& e) {
        throw io_error("cannot create output directory '" + out_dir +
                       "': " + e.what());
    }
    std::vector<std::string> written;
    std::vector<std::pair<std::string, std::string>> series;
    for (const RunResult& r : results) {
        const std::string name = preset.name + "-" + r.label + ".csv";
        const std::string full = (fs::path(out_dir) / name).string();
        write_csv(full, r);
        written.push_back(full);
        series.emplace_back(r.label, name);
    }
    const std::string json_path =
        (fs::path(out_dir) / (preset.name + ".json")).string();
    write_json(json_path, results);
    written.push_back(json_path);

    const std::string ylabel =
        !results.empty() && results.front().profile ? "n_j" : "probability";
    const std::string plot_path =
        (fs::path(out_dir) / (preset.name + ".gp")).string();
    write_plot_script(plot_path, preset.title, ylabel, series);
    written.push_back(plot_path);
    return written;
}

}  // namespace qwalk
