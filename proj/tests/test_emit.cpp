#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "qwalk/emit.hpp"

using namespace qwalk;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() /
               ("qwalk-test-" + std::to_string(::getpid()) + "-" +
                std::to_string(counter()++));
        fs::create_directories(path);
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path, ec);
    }
    static int& counter() {
        static int c = 0;
        return c;
    }
    std::string file(const std::string& name) const { return (path / name).string(); }
};

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);
    return lines;
}

RunResult small_run() {
    return run_experiment(parse_config(R"({"label": "demo", "steps": 4})"));
}

}  // namespace

TEST_CASE("csv carries the config, a header and ascending nonzero rows") {
    const TempDir dir;
    const RunResult res = small_run();
    const std::string path = dir.file("out.csv");
    write_csv(path, res);

    const std::vector<std::string> lines = lines_of(slurp(path));
    REQUIRE(lines.size() >= 3);
    CHECK(lines[0].rfind("# config: {", 0) == 0);
    CHECK(lines[1] == "position,probability");
    CHECK_NOTHROW(parse_config(lines[0].substr(std::string("# config: ").size())));

    int prev = -1000;
    for (std::size_t i = 2; i < lines.size(); ++i) {
        const std::size_t comma = lines[i].find(',');
        REQUIRE(comma != std::string::npos);
        const int pos = std::stoi(lines[i].substr(0, comma));
        const double val = std::stod(lines[i].substr(comma + 1));
        CHECK(pos > prev);
        CHECK(val != 0.0);  // zero rows are skipped by default
        prev = pos;
    }
    // N=4 walk: 5 even sites reachable, site 0 included
    CHECK(lines.size() - 2 == 5);
}

TEST_CASE("include_zero_rows emits every lattice site") {
    const TempDir dir;
    ExperimentConfig cfg = parse_config(R"({"steps": 4})");
    cfg.emit.include_zero_rows = true;
    const RunResult res = run_experiment(cfg);
    const std::string path = dir.file("full.csv");
    write_csv(path, res);
    CHECK(lines_of(slurp(path)).size() - 2 == 9);  // all sites in [-4, 4]
}

TEST_CASE("values print with 12 significant digits") {
    const TempDir dir;
    const RunResult res = run_experiment(parse_config(R"({"steps": 100})"));
    write_csv(dir.file("wide.csv"), res);
    const std::string body = slurp(dir.file("wide.csv"));
    // deep-tail probability (1/2)^100 only shows up with %.12g formatting
    CHECK(body.find("7.88860905221e-31") != std::string::npos);
}

TEST_CASE("json round-trips the full record") {
    const TempDir dir;
    const RunResult res = small_run();
    const std::string path = dir.file("out.json");
    write_json(path, {res});
    const nlohmann::json doc = nlohmann::json::parse(slurp(path));
    CHECK(doc["label"] == "demo");
    CHECK(doc["config"]["steps"] == 4);
    CHECK(doc["moments"]["variance"].get<double>() ==
          doctest::Approx(moments(*res.distribution).variance).epsilon(1e-15));
    const std::vector<double> probs = doc["distribution"]["probs"];
    REQUIRE(probs.size() == res.distribution->probs.size());
    for (std::size_t i = 0; i < probs.size(); ++i)
        CHECK(probs[i] == res.distribution->probs[i]);  // exact via shortest round-trip
    CHECK(parse_config(doc["config"].dump()) == res.config);
}

TEST_CASE("emission is deterministic byte for byte") {
    const TempDir dir;
    const RunResult a = small_run();
    const RunResult b = small_run();
    write_csv(dir.file("a.csv"), a);
    write_csv(dir.file("b.csv"), b);
    CHECK(slurp(dir.file("a.csv")) == slurp(dir.file("b.csv")));
    write_json(dir.file("a.json"), {a});
    write_json(dir.file("b.json"), {b});
    CHECK(slurp(dir.file("a.json")) == slurp(dir.file("b.json")));
}

TEST_CASE("preset outputs produce one csv per run plus json and plot") {
    const TempDir dir;
    const Preset* fig1 = find_preset("fig1");
    REQUIRE(fig1 != nullptr);
    // a slimmed copy keeps the io test fast
    Preset slim = *fig1;
    slim.runs.resize(2);
    for (ExperimentConfig& cfg : slim.runs) cfg.steps = 10;

    const std::vector<RunResult> results = run_many(slim.runs, 2);
    const std::vector<std::string> written =
        write_preset_outputs(slim, results, dir.path.string());
    REQUIRE(written.size() == 4);  // 2 csv + json + gp
    for (const std::string& p : written) CHECK(fs::exists(p));

    const nlohmann::json doc = nlohmann::json::parse(slurp(written[2]));
    REQUIRE(doc["runs"].size() == 2);
    CHECK(doc["runs"][0]["label"] == "theta15");

    const std::string script = slurp(written[3]);
    CHECK(script.find("fig1-theta15.csv") != std::string::npos);
    CHECK(script.find("fig1-theta45.csv") != std::string::npos);
    CHECK(script.find("plot") != std::string::npos);
}

TEST_CASE("every built-in preset is a valid runnable config set") {
    for (const Preset& p : presets()) {
        CHECK(!p.runs.empty());
        for (const ExperimentConfig& cfg : p.runs) {
            CHECK_NOTHROW(validate(cfg));
            CHECK(!cfg.label.empty());
        }
    }
    CHECK(find_preset("fig3-mi") != nullptr);
    CHECK(find_preset("fig-multi2") != nullptr);
    CHECK(find_preset("nope") == nullptr);
}

TEST_CASE("run_experiment rejects inconsistent hand-built configs") {
    ExperimentConfig cfg;
    cfg.steps = 3;
    cfg.outputs = {OutputKind::Profile};  // profile without an ensemble
    CHECK_THROWS_AS(run_experiment(cfg), parse_error);
    cfg.outputs.clear();
    cfg.noise.p = 2.0;
    CHECK_THROWS_AS(run_experiment(cfg), parse_error);
}

TEST_CASE("io failures surface as io_error") {
    const RunResult res = small_run();
    CHECK_THROWS_AS(write_csv("/nonexistent-dir/x/y.csv", res), io_error);
    CHECK_THROWS_AS(write_json("/nonexistent-dir/x/y.json", {res}), io_error);
}
