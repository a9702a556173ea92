#pragma once

#include "qwalk/experiment.hpp"

namespace qwalk {

/// CSV for the run's distribution or profile: a "# config: {...}" comment,
/// then "position,probability" or "position,n_j", one row per site in
/// ascending order, values at 12 significant digits. Rows that are exactly
/// zero are skipped unless the config asks for them. Throws io_error on
/// write failure and invalid_parameter when the result holds neither a
/// distribution nor a profile.
void write_csv(const std::string& path, const RunResult& result);

/// One run record (object) or several (under "runs") as sorted-key JSON.
void write_json(const std::string& path, const std::vector<RunResult>& results);

/// gnuplot script: one curve per (title, csv-filename) pair. CSV names are
/// embedded as given, so keep them relative to the script's directory.
void write_plot_script(const std::string& path, const std::string& title,
                       const std::string& ylabel,
                       const std::vector<std::pair<std::string, std::string>>& series);

/// Applies result.config.emit: whichever of csv/json/plot are set.
void emit(const RunResult& result);

/// Writes <dir>/<name>-<label>.csv per run, <dir>/<name>.json with every
/// record, and <dir>/<name>.gp plotting the CSVs together. Returns the
/// paths written.
std::vector<std::string> write_preset_outputs(const Preset& preset,
                                              const std::vector<RunResult>& results,
                                              const std::string& out_dir);

}  // namespace qwalk
