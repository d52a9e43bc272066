#include "drmt/json_io.hpp"

#include <set>

namespace drmt {

namespace {

void reject_unknown(const Json& j, const std::set<std::string>& allowed, const std::string& where) {
    for (auto it = j.begin(); it != j.end(); ++it) {
        if (!allowed.count(it.key())) {
            throw ValidationError(where + ": unknown field '" + it.key() + "'");
        }
    }
}

double need_number(const Json& j, const std::string& key, const std::string& where) {
    if (!j.contains(key) || !j.at(key).is_number()) {
        throw ValidationError(where + ": missing numeric field '" + key + "'");
    }
    return j.at(key).get<double>();
}

} // namespace

Json dist_to_json(const ScalarDist& d) {
    Json j;
    j["dist"] = d.name();
    switch (d.kind) {
        case ScalarDist::Kind::Constant: j["value"] = d.p1; break;
        case ScalarDist::Kind::Exponential: j["mean"] = d.p1; break;
        case ScalarDist::Kind::Gamma:
            j["shape"] = d.p1;
            j["scale"] = d.p2;
            break;
        case ScalarDist::Kind::Laplace: j["rate"] = d.p1; break;
        case ScalarDist::Kind::Uniform:
            j["a"] = d.p1;
            j["b"] = d.p2;
            break;
        case ScalarDist::Kind::TwoPoint:
            j["x1"] = d.p1;
            j["x2"] = d.p2;
            j["p"] = d.p3;
            break;
    }
    return j;
}

ScalarDist dist_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("dist")) {
        throw ValidationError("distribution: expected an object with a 'dist' tag");
    }
    const std::string kind = j.at("dist").get<std::string>();
    if (kind == "constant") {
        reject_unknown(j, {"dist", "value"}, "constant distribution");
        return ScalarDist::constant(need_number(j, "value", "constant distribution"));
    }
    if (kind == "exponential") {
        reject_unknown(j, {"dist", "mean"}, "exponential distribution");
        return ScalarDist::exponential(need_number(j, "mean", "exponential distribution"));
    }
    if (kind == "gamma") {
        reject_unknown(j, {"dist", "shape", "scale"}, "gamma distribution");
        return ScalarDist::gamma(need_number(j, "shape", "gamma"), need_number(j, "scale", "gamma"));
    }
    if (kind == "laplace") {
        reject_unknown(j, {"dist", "rate"}, "laplace distribution");
        return ScalarDist::laplace(need_number(j, "rate", "laplace distribution"));
    }
    if (kind == "uniform") {
        reject_unknown(j, {"dist", "a", "b"}, "uniform distribution");
        return ScalarDist::uniform(need_number(j, "a", "uniform"), need_number(j, "b", "uniform"));
    }
    if (kind == "two-point") {
        reject_unknown(j, {"dist", "x1", "x2", "p"}, "two-point distribution");
        return ScalarDist::two_point(need_number(j, "x1", "two-point"),
                                     need_number(j, "x2", "two-point"),
                                     need_number(j, "p", "two-point"));
    }
    throw ValidationError("distribution: unknown kind '" + kind + "'");
}

namespace {
template <class... Ts>
struct Overload : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
Overload(Ts...) -> Overload<Ts...>;
} // namespace

Json spec_to_json(const EnsembleSpec& spec) {
    Json p = Json::object();
    std::visit(Overload{
                   [&p](const DysonStringSpec& s) {
                       p["mass"] = dist_to_json(s.mass);
                       p["spacing"] = dist_to_json(s.spacing);
                       p["lambda"] = s.lambda;
                   },
                   [&p](const DysonTypeISpec& s) {
                       p["p"] = s.p;
                       p["q"] = s.q;
                       p["lambda"] = s.lambda;
                   },
                   [&p](const FrischLloydSpec& s) {
                       p["coupling"] = dist_to_json(s.coupling);
                       p["ell"] = s.mean_spacing;
                       p["energy"] = s.energy;
                   },
                   [&p](const KronigPenneySpec& s) {
                       p["v"] = s.v;
                       p["ell"] = s.ell;
                       p["energy"] = s.energy;
                   },
                   [&p](const AndersonSpec& s) {
                       p["potential"] = dist_to_json(s.potential);
                       p["energy"] = s.energy;
                   },
                   [&p](const IsingChainSpec& s) {
                       p["beta"] = s.beta;
                       p["J"] = s.coupling;
                       p["field"] = dist_to_json(s.field);
                   },
                   [](const FibonacciSpec&) {},
                   [](const RandomFibonacciSpec&) {},
                   [&p](const BougerolLacroixSpec& s) {
                       p["alpha"] = s.alpha;
                       p["p"] = s.p;
                   },
                   [&p](const CohenNewmanSpec& s) {
                       p["alpha"] = s.alpha;
                       p["beta"] = s.beta;
                   },
               },
               spec);
    Json j;
    j["model"] = model_tag(spec);
    j["params"] = p;
    return j;
}

EnsembleSpec spec_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("model")) {
        throw ValidationError("spec: expected an object with a 'model' tag");
    }
    reject_unknown(j, {"model", "params"}, "spec");
    const std::string tag = j.at("model").get<std::string>();
    const Json p = j.contains("params") ? j.at("params") : Json::object();
    EnsembleSpec spec;
    if (tag == "dyson-string") {
        reject_unknown(p, {"mass", "spacing", "lambda"}, tag);
        DysonStringSpec s;
        if (p.contains("mass")) s.mass = dist_from_json(p.at("mass"));
        if (p.contains("spacing")) s.spacing = dist_from_json(p.at("spacing"));
        if (p.contains("lambda")) s.lambda = need_number(p, "lambda", tag);
        spec = s;
    } else if (tag == "dyson-type-i") {
        reject_unknown(p, {"p", "q", "lambda"}, tag);
        DysonTypeISpec s;
        if (p.contains("p")) s.p = need_number(p, "p", tag);
        if (p.contains("q")) s.q = need_number(p, "q", tag);
        if (p.contains("lambda")) s.lambda = need_number(p, "lambda", tag);
        spec = s;
    } else if (tag == "frisch-lloyd") {
        reject_unknown(p, {"coupling", "ell", "energy"}, tag);
        FrischLloydSpec s;
        if (p.contains("coupling")) s.coupling = dist_from_json(p.at("coupling"));
        if (p.contains("ell")) s.mean_spacing = need_number(p, "ell", tag);
        if (p.contains("energy")) s.energy = need_number(p, "energy", tag);
        spec = s;
    } else if (tag == "kronig-penney") {
        reject_unknown(p, {"v", "ell", "energy"}, tag);
        KronigPenneySpec s;
        if (p.contains("v")) s.v = need_number(p, "v", tag);
        if (p.contains("ell")) s.ell = need_number(p, "ell", tag);
        if (p.contains("energy")) s.energy = need_number(p, "energy", tag);
        spec = s;
    } else if (tag == "anderson") {
        reject_unknown(p, {"potential", "energy"}, tag);
        AndersonSpec s;
        if (p.contains("potential")) s.potential = dist_from_json(p.at("potential"));
        if (p.contains("energy")) s.energy = need_number(p, "energy", tag);
        spec = s;
    } else if (tag == "ising-chain") {
        reject_unknown(p, {"beta", "J", "field"}, tag);
        IsingChainSpec s;
        if (p.contains("beta")) s.beta = need_number(p, "beta", tag);
        if (p.contains("J")) s.coupling = need_number(p, "J", tag);
        if (p.contains("field")) s.field = dist_from_json(p.at("field"));
        spec = s;
    } else if (tag == "fibonacci") {
        reject_unknown(p, {}, tag);
        spec = FibonacciSpec{};
    } else if (tag == "random-fibonacci") {
        reject_unknown(p, {}, tag);
        spec = RandomFibonacciSpec{};
    } else if (tag == "bougerol-lacroix") {
        reject_unknown(p, {"alpha", "p"}, tag);
        BougerolLacroixSpec s;
        if (p.contains("alpha")) s.alpha = need_number(p, "alpha", tag);
        if (p.contains("p")) s.p = need_number(p, "p", tag);
        spec = s;
    } else if (tag == "cohen-newman") {
        reject_unknown(p, {"alpha", "beta"}, tag);
        CohenNewmanSpec s;
        if (p.contains("alpha")) s.alpha = need_number(p, "alpha", tag);
        if (p.contains("beta")) s.beta = need_number(p, "beta", tag);
        spec = s;
    } else {
        throw ValidationError("spec: unknown model '" + tag + "'");
    }
    validate(spec);
    return spec;
}

Json estimate_to_json(const Estimate& e, const std::string& experiment, const EnsembleSpec* spec,
                      Json extra) {
    Json j;
    j["schema"] = 1;
    j["experiment"] = experiment;
    if (spec != nullptr) {
        const Json sj = spec_to_json(*spec);
        j["model"] = sj.at("model");
        j["params"] = sj.at("params");
    } else {
        j["model"] = e.model;
        j["params"] = Json::object();
    }
    j["seed"] = e.seed;
    j["n"] = e.n;
    j["value"] = e.value;
    j["stderr"] = e.stderr_;
    j["extra"] = std::move(extra);
    return j;
}

ExperimentConfig config_from_json(const Json& j) {
    if (!j.is_object()) throw ValidationError("config: expected a JSON object");
    reject_unknown(j,
                   {"schema", "experiment", "model", "params", "grid", "n", "L", "replicas",
                    "seed", "out"},
                   "config");
    if (!j.contains("schema") || !j.at("schema").is_number_integer() ||
        j.at("schema").get<int>() != 1) {
        throw ValidationError("config: requires \"schema\": 1");
    }
    ExperimentConfig cfg;
    cfg.raw = j;
    if (j.contains("experiment")) cfg.experiment = j.at("experiment").get<std::string>();
    if (j.contains("model")) {
        Json sj;
        sj["model"] = j.at("model");
        if (j.contains("params")) sj["params"] = j.at("params");
        cfg.spec = spec_from_json(sj);
        cfg.has_spec = true;
    }
    if (j.contains("grid")) {
        if (j.at("grid").is_string()) {
            cfg.grid = parse_grid(j.at("grid").get<std::string>());
        } else if (j.at("grid").is_array()) {
            cfg.grid = j.at("grid").get<std::vector<double>>();
        } else {
            throw ValidationError("config: grid must be \"a:b:n\" or an array");
        }
    }
    if (j.contains("n")) cfg.n = static_cast<std::uint64_t>(j.at("n").get<double>());
    if (j.contains("L")) cfg.length = j.at("L").get<double>();
    if (j.contains("replicas")) cfg.replicas = j.at("replicas").get<int>();
    if (j.contains("seed")) cfg.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("out")) cfg.out = j.at("out").get<std::string>();
    return cfg;
}

std::vector<double> parse_grid(const std::string& text) {
    const auto c1 = text.find(':');
    const auto c2 = text.find(':', c1 == std::string::npos ? c1 : c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos) {
        throw ValidationError("grid: expected \"a:b:n\"");
    }
    const double a = std::stod(text.substr(0, c1));
    const double b = std::stod(text.substr(c1 + 1, c2 - c1 - 1));
    const int n = std::stoi(text.substr(c2 + 1));
    if (n < 1) throw ValidationError("grid: need n >= 1 points");
    std::vector<double> g;
    g.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        g.push_back(n == 1 ? a : a + (b - a) * static_cast<double>(i) / (n - 1));
    }
    return g;
}

} // namespace drmt
