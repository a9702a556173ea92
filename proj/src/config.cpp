#include "qwalk/config.hpp"

#include <algorithm>
#include <cmath>

namespace qwalk {
namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& field, const std::string& msg) {
    throw parse_error("config field '" + field + "': " + msg);
}

std::string join(const std::string& parent, const std::string& key) {
    return parent.empty() ? key : parent + "." + key;
}

void expect_keys(const json& obj, const std::string& where,
                 std::initializer_list<const char*> allowed) {
    for (const auto& item : obj.items()) {
        if (std::none_of(allowed.begin(), allowed.end(),
                         [&](const char* a) { return item.key() == a; }))
            fail(join(where, item.key()), "unknown key");
    }
}

const json* get(const json& obj, const char* key) {
    const auto it = obj.find(key);
    return it == obj.end() ? nullptr : &*it;
}

double as_number(const json& v, const std::string& field) {
    if (!v.is_number()) fail(field, "expected a number");
    const double d = v.get<double>();
    if (!std::isfinite(d)) fail(field, "must be finite");
    return d;
}

int as_int(const json& v, const std::string& field) {
    if (!v.is_number_integer()) fail(field, "expected an integer");
    return v.get<int>();
}

std::string as_string(const json& v, const std::string& field) {
    if (!v.is_string()) fail(field, "expected a string");
    return v.get<std::string>();
}

bool as_bool(const json& v, const std::string& field) {
    if (!v.is_boolean()) fail(field, "expected a boolean");
    return v.get<bool>();
}

CoinParams parse_coin(const json& v, const std::string& field) {
    if (!v.is_object()) fail(field, "expected an object");
    expect_keys(v, field, {"xi", "theta", "zeta", "unit"});
    double scale = 1.0;
    if (const json* u = get(v, "unit")) {
        const std::string unit = as_string(*u, join(field, "unit"));
        if (unit == "deg")
            scale = std::numbers::pi / 180.0;
        else if (unit != "rad")
            fail(join(field, "unit"), "expected \"rad\" or \"deg\"");
    }
    CoinParams p{0.0, 0.0, 0.0};
    if (const json* x = get(v, "xi")) p.xi = scale * as_number(*x, join(field, "xi"));
    if (const json* t = get(v, "theta")) p.theta = scale * as_number(*t, join(field, "theta"));
    if (const json* z = get(v, "zeta")) p.zeta = scale * as_number(*z, join(field, "zeta"));
    return normalized(p);
}

InitialProfile parse_profile(const json& v, const std::string& field) {
    const std::string s = as_string(v, field);
    if (s == "mott-insulator" || s == "mi") return InitialProfile::MottInsulator;
    if (s == "superfluid" || s == "sf") return InitialProfile::Superfluid;
    fail(field, "expected \"mott-insulator\" or \"superfluid\"");
}

std::variant<SingleWalker, EnsembleWalker> parse_walker(const json& v,
                                                        const std::string& field) {
    if (!v.is_object() || v.size() != 1)
        fail(field, "expected an object with exactly one of \"single\", \"ensemble\"");
    if (const json* s = get(v, "single")) {
        const std::string where = join(field, "single");
        if (!s->is_object()) fail(where, "expected an object");
        expect_keys(*s, where, {"j0"});
        SingleWalker w;
        if (const json* j = get(*s, "j0")) w.j0 = as_int(*j, join(where, "j0"));
        return w;
    }
    if (const json* e = get(v, "ensemble")) {
        const std::string where = join(field, "ensemble");
        if (!e->is_object()) fail(where, "expected an object");
        expect_keys(*e, where, {"atoms", "profile"});
        EnsembleWalker w;
        const json* a = get(*e, "atoms");
        if (!a) fail(join(where, "atoms"), "required");
        w.atom_count = as_int(*a, join(where, "atoms"));
        if (const json* p = get(*e, "profile"))
            w.profile = parse_profile(*p, join(where, "profile"));
        return w;
    }
    fail(field, "expected \"single\" or \"ensemble\"");
}

NoiseKind parse_noise_kind(const json& v, const std::string& field) {
    const std::string s = as_string(v, field);
    if (s == "none") return NoiseKind::None;
    if (s == "bit-flip") return NoiseKind::BitFlip;
    if (s == "phase-flip") return NoiseKind::PhaseFlip;
    if (s == "amplitude-damping") return NoiseKind::AmplitudeDamping;
    fail(field, "expected one of \"none\", \"bit-flip\", \"phase-flip\", "
                "\"amplitude-damping\"");
}

OutputKind parse_output(const json& v, const std::string& field) {
    const std::string s = as_string(v, field);
    if (s == "distribution") return OutputKind::Distribution;
    if (s == "profile") return OutputKind::Profile;
    if (s == "moments") return OutputKind::Moments;
    if (s == "scaling_fit") return OutputKind::ScalingFit;
    if (s == "support") return OutputKind::Support;
    if (s == "uniformity") return OutputKind::Uniformity;
    fail(field, "unknown output kind \"" + s + "\"");
}

bool wants(const ExperimentConfig& cfg, OutputKind k) {
    return std::find(cfg.outputs.begin(), cfg.outputs.end(), k) != cfg.outputs.end();
}

}  // namespace

void resolve_defaults(ExperimentConfig& cfg) {
    const bool ensemble = std::holds_alternative<EnsembleWalker>(cfg.walker);
    if (cfg.outputs.empty()) {
        if (ensemble)
            cfg.outputs = {OutputKind::Profile, OutputKind::Moments,
                           OutputKind::Support, OutputKind::Uniformity};
        else
            cfg.outputs = {OutputKind::Distribution, OutputKind::Moments,
                           OutputKind::Support};
    }
    if (ensemble && !cfg.uniformity_window) {
        const int half = std::get<EnsembleWalker>(cfg.walker).atom_count / 2;
        cfg.uniformity_window = SiteInterval{-half, half};
    }
}

void validate(const ExperimentConfig& cfg) {
    if (cfg.steps < 0) fail("steps", "must be nonnegative");
    if (!std::isfinite(cfg.coin.xi) || !std::isfinite(cfg.coin.theta) ||
        !std::isfinite(cfg.coin.zeta))
        fail("coin", "angles must be finite");
    if (!(cfg.noise.p >= 0.0 && cfg.noise.p <= 1.0))
        fail("noise.p", "must lie in [0, 1]");
    if (!(cfg.support_epsilon > 0.0 && cfg.support_epsilon < 1.0))
        fail("support_epsilon", "must lie in (0, 1)");
    for (int n : cfg.scaling_steps)
        if (n < 0) fail("scaling_steps", "entries must be nonnegative");
    if (cfg.uniformity_window && cfg.uniformity_window->lo > cfg.uniformity_window->hi)
        fail("uniformity_window", "lo must not exceed hi");
    if (cfg.emit.plot_path && !cfg.emit.csv_path)
        fail("emit.plot", "a plot script needs emit.csv to reference");

    const bool ensemble = std::holds_alternative<EnsembleWalker>(cfg.walker);
    if (ensemble && std::get<EnsembleWalker>(cfg.walker).atom_count < 1)
        fail("walker.ensemble.atoms", "must be at least 1");
    if (cfg.outputs.empty()) fail("outputs", "must not be empty once resolved");
    for (OutputKind k : cfg.outputs) {
        const bool needs_single =
            k == OutputKind::Distribution || k == OutputKind::ScalingFit;
        const bool needs_ensemble =
            k == OutputKind::Profile || k == OutputKind::Uniformity;
        if (needs_single && ensemble)
            fail("outputs", std::string("\"") + to_string(k) +
                                "\" applies to single-walker runs only");
        if (needs_ensemble && !ensemble)
            fail("outputs", std::string("\"") + to_string(k) +
                                "\" applies to ensemble runs only");
    }
    if (wants(cfg, OutputKind::ScalingFit) && cfg.scaling_steps.size() < 3)
        fail("scaling_steps", "a scaling fit needs at least three step counts");
}

ExperimentConfig parse_config(const std::string& text) {
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error& e) {
        std::size_t line = 1;
        const std::size_t upto = std::min(e.byte > 0 ? e.byte - 1 : 0, text.size());
        for (std::size_t i = 0; i < upto; ++i)
            if (text[i] == '\n') ++line;
        throw parse_error("config is not valid JSON (line " +
                          std::to_string(line) + "): " + e.what());
    }
    if (!root.is_object()) throw parse_error("config root must be a JSON object");
    expect_keys(root, "",
                {"label", "coin", "steps", "walker", "noise", "outputs",
                 "scaling_steps", "support_epsilon", "uniformity_window", "emit"});

    ExperimentConfig cfg;
    if (const json* l = get(root, "label")) cfg.label = as_string(*l, "label");

    if (const json* c = get(root, "coin")) cfg.coin = parse_coin(*c, "coin");

    const json* steps = get(root, "steps");
    if (!steps) fail("steps", "required");
    cfg.steps = as_int(*steps, "steps");

    if (const json* w = get(root, "walker")) cfg.walker = parse_walker(*w, "walker");

    if (const json* n = get(root, "noise")) {
        if (!n->is_object()) fail("noise", "expected an object");
        expect_keys(*n, "noise", {"kind", "p", "order"});
        if (const json* k = get(*n, "kind"))
            cfg.noise.kind = parse_noise_kind(*k, "noise.kind");
        if (const json* p = get(*n, "p"))
            cfg.noise.p = as_number(*p, "noise.p");
        if (const json* o = get(*n, "order")) {
            const std::string s = as_string(*o, "noise.order");
            if (s == "after")
                cfg.noise_order = NoiseOrder::AfterStep;
            else if (s == "before")
                cfg.noise_order = NoiseOrder::BeforeStep;
            else
                fail("noise.order", "expected \"after\" or \"before\"");
        }
    }

    if (const json* o = get(root, "outputs")) {
        if (!o->is_array()) fail("outputs", "expected an array");
        for (std::size_t i = 0; i < o->size(); ++i) {
            const OutputKind k =
                parse_output((*o)[i], "outputs[" + std::to_string(i) + "]");
            if (!wants(cfg, k)) cfg.outputs.push_back(k);
        }
        if (cfg.outputs.empty()) fail("outputs", "must not be empty when given");
    }

    if (const json* s = get(root, "scaling_steps")) {
        if (!s->is_array()) fail("scaling_steps", "expected an array");
        cfg.scaling_steps.clear();
        for (std::size_t i = 0; i < s->size(); ++i)
            cfg.scaling_steps.push_back(
                as_int((*s)[i], "scaling_steps[" + std::to_string(i) + "]"));
    }

    if (const json* e = get(root, "support_epsilon"))
        cfg.support_epsilon = as_number(*e, "support_epsilon");

    if (const json* u = get(root, "uniformity_window")) {
        if (!u->is_object()) fail("uniformity_window", "expected an object");
        expect_keys(*u, "uniformity_window", {"lo", "hi"});
        const json* lo = get(*u, "lo");
        const json* hi = get(*u, "hi");
        if (!lo || !hi) fail("uniformity_window", "needs both lo and hi");
        cfg.uniformity_window =
            SiteInterval{as_int(*lo, "uniformity_window.lo"),
                         as_int(*hi, "uniformity_window.hi")};
    }

    if (const json* e = get(root, "emit")) {
        if (!e->is_object()) fail("emit", "expected an object");
        expect_keys(*e, "emit", {"csv", "json", "plot", "include_zero_rows"});
        if (const json* p = get(*e, "csv"))
            cfg.emit.csv_path = as_string(*p, "emit.csv");
        if (const json* p = get(*e, "json"))
            cfg.emit.json_path = as_string(*p, "emit.json");
        if (const json* p = get(*e, "plot"))
            cfg.emit.plot_path = as_string(*p, "emit.plot");
        if (const json* p = get(*e, "include_zero_rows"))
            cfg.emit.include_zero_rows = as_bool(*p, "emit.include_zero_rows");
    }

    resolve_defaults(cfg);
    validate(cfg);
    return cfg;
}

nlohmann::json config_echo(const ExperimentConfig& cfg) {
    json root;
    root["label"] = cfg.label;
    root["coin"] = {{"xi", cfg.coin.xi},
                    {"theta", cfg.coin.theta},
                    {"zeta", cfg.coin.zeta},
                    {"unit", "rad"}};
    root["steps"] = cfg.steps;
    if (const auto* s = std::get_if<SingleWalker>(&cfg.walker)) {
        root["walker"] = {{"single", {{"j0", s->j0}}}};
    } else {
        const auto& e = std::get<EnsembleWalker>(cfg.walker);
        root["walker"] = {{"ensemble",
                           {{"atoms", e.atom_count},
                            {"profile", to_string(e.profile)}}}};
    }
    root["noise"] = {{"kind", to_string(cfg.noise.kind)},
                     {"p", cfg.noise.p},
                     {"order", to_string(cfg.noise_order)}};
    json outs = json::array();
    for (OutputKind k : cfg.outputs) outs.push_back(to_string(k));
    root["outputs"] = outs;
    root["scaling_steps"] = cfg.scaling_steps;
    root["support_epsilon"] = cfg.support_epsilon;
    if (cfg.uniformity_window)
        root["uniformity_window"] = {{"lo", cfg.uniformity_window->lo},
                                     {"hi", cfg.uniformity_window->hi}};
    json emit = json::object();
    if (cfg.emit.csv_path) emit["csv"] = *cfg.emit.csv_path;
    if (cfg.emit.json_path) emit["json"] = *cfg.emit.json_path;
    if (cfg.emit.plot_path) emit["plot"] = *cfg.emit.plot_path;
    emit["include_zero_rows"] = cfg.emit.include_zero_rows;
    root["emit"] = emit;
    return root;
}

const char* to_string(OutputKind k) {
    switch (k) {
        case OutputKind::Distribution: return "distribution";
        case OutputKind::Profile: return "profile";
        case OutputKind::Moments: return "moments";
        case OutputKind::ScalingFit: return "scaling_fit";
        case OutputKind::Support: return "support";
        case OutputKind::Uniformity: return "uniformity";
    }
    return "distribution";
}

const char* to_string(InitialProfile p) {
    return p == InitialProfile::MottInsulator ? "mott-insulator" : "superfluid";
}

const char* to_string(NoiseOrder o) {
    return o == NoiseOrder::AfterStep ? "after" : "before";
}

}  // namespace qwalk
