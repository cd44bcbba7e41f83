// Command line front end: validate inputs, compute distances, run
// convergence and continuity checks, materialize the corpus, export CSV.
//
// Exit codes: 0 pass/valid, 1 witness found or verdict fail, 2 malformed
// input or I/O error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "lcfuzz/fixtures.hpp"
#include "lcfuzz/json_io.hpp"

using namespace lcfuzz;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitBadInput = 2;

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw schema_error("cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const nlohmann::json::parse_error& e) {
        throw schema_error(path + ": " + e.what());
    }
    return j;
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw schema_error("cannot write " + out_path);
    out << text;
}

void emit(const json& j, const std::string& out_path) { emit(j.dump(2), out_path); }

double env_tol(double fallback) {
    if (const char* s = std::getenv("LCFUZZ_TOL")) {
        char* end = nullptr;
        const double v = std::strtod(s, &end);
        if (end != s && v > 0.0) return v;
    }
    return fallback;
}

// Structural parse of a PLJ object without invariant enforcement, so that
// invariant violations are reported as a verdict rather than a schema error.
struct RawPLJ {
    std::vector<Knot> knots;
    Direction dir = Direction::NonDecreasing;
};

RawPLJ raw_plj(const json& j) {
    if (!j.is_object() || !j.contains("knots") || !j.at("knots").is_array())
        throw schema_error("expected an object with a knots array");
    RawPLJ r;
    const std::string d = j.value("direction", std::string("nondecreasing"));
    if (d == "nonincreasing")
        r.dir = Direction::NonIncreasing;
    else if (d != "nondecreasing")
        throw schema_error("unknown direction: " + d);
    for (const json& kj : j.at("knots")) {
        if (!kj.contains("lambda") || !kj.contains("value"))
            throw schema_error("knot needs lambda and value");
        Knot k;
        k.lambda = kj.at("lambda").get<double>();
        k.value = kj.at("value").get<double>();
        k.right_limit = kj.contains("right") ? kj.at("right").get<double>() : k.value;
        r.knots.push_back(k);
    }
    return r;
}

json violations_json(const std::vector<Violation>& vs) {
    json arr = json::array();
    for (const Violation& v : vs)
        arr.push_back({{"kind", to_string(v.kind)}, {"knot", v.knot_index}, {"detail", v.detail}});
    return arr;
}

// Validates one object of any supported kind; returns {valid, report json}.
std::pair<bool, json> validate_any(const json& j) {
    if (j.contains("knots")) {
        RawPLJ r = raw_plj(j);
        auto v = PLJFunction::validate(std::move(r.knots), r.dir);
        json rep{{"kind", "plj"}, {"valid", v.ok()}};
        if (!v.ok()) rep["violations"] = violations_json(v.violations);
        return {v.ok(), rep};
    }
    if (j.contains("lower") && j.contains("upper")) {
        RawPLJ lo = raw_plj(j.at("lower"));
        RawPLJ hi = raw_plj(j.at("upper"));
        auto vlo = PLJFunction::validate(std::move(lo.knots), lo.dir);
        auto vhi = PLJFunction::validate(std::move(hi.knots), hi.dir);
        json rep{{"kind", "fuzzy_number"}};
        if (!vlo.ok() || !vhi.ok()) {
            rep["valid"] = false;
            if (!vlo.ok()) rep["lower_violations"] = violations_json(vlo.violations);
            if (!vhi.ok()) rep["upper_violations"] = violations_json(vhi.violations);
            return {false, rep};
        }
        auto v = FuzzyNumber::make(*vlo.function, *vhi.function);
        rep["valid"] = v.ok();
        if (!v.ok()) {
            json arr = json::array();
            for (const FuzzyViolation& fv : v.violations)
                arr.push_back({{"kind", to_string(fv.kind)}, {"detail", fv.detail}});
            rep["violations"] = std::move(arr);
        }
        return {v.ok(), rep};
    }
    if (j.contains("domain") && (j.contains("columns") || j.contains("values"))) {
        CompactDomain dom = domain_from_json(j.at("domain"));
        const bool is_map = j.contains("values");
        const json& entries = is_map ? j.at("values") : j.at("columns");
        json rep{{"kind", is_map ? "fuzzy_map" : "bivariate"}};
        json bad = json::array();
        for (std::size_t i = 0; i < dom.size(); ++i) {
            const std::string label = dom.label(i);
            if (!entries.contains(label))
                throw schema_error("missing entry for domain point " + label);
            auto [ok, sub] = validate_any(entries.at(label));
            if (!ok) {
                sub["point"] = label;
                bad.push_back(std::move(sub));
            }
        }
        rep["valid"] = bad.empty();
        if (!bad.empty()) rep["invalid_entries"] = std::move(bad);
        return {rep["valid"].get<bool>(), rep};
    }
    throw schema_error("unrecognized object: expected knots, lower/upper, or domain");
}

std::size_t resolve_point(const CompactDomain& dom, const std::string& t0) {
    try {
        return dom.index_of_label(t0);
    } catch (const domain_error&) {
    }
    char* end = nullptr;
    const double t = std::strtod(t0.c_str(), &end);
    if (end == t0.c_str() || *end != '\0')
        throw schema_error("unknown domain point: " + t0);
    return dom.index_near(t);
}

int run(int argc, char** argv) {
    CLI::App app{"level-continuous fuzzy analysis toolkit"};
    app.require_subcommand(1);

    std::string path, path2, out_path, format = "json";
    std::string t0, mode = "level", name;
    double tol = env_tol(1e-6);
    std::size_t grid_n = 101, tail = 5, n_param = 20, levels = 101;

    auto* validate_cmd = app.add_subcommand("validate", "validate a JSON object");
    validate_cmd->add_option("path", path)->required();
    validate_cmd->add_option("-o,--out", out_path);

    auto* dist_cmd = app.add_subcommand("dist", "d_infinity and per-level Hausdorff curve");
    dist_cmd->add_option("u", path)->required();
    dist_cmd->add_option("v", path2)->required();
    dist_cmd->add_option("--grid", grid_n);
    dist_cmd->add_option("-o,--out", out_path);

    auto* conv_cmd = app.add_subcommand("converge", "level vs d_infinity convergence");
    conv_cmd->add_option("seq", path)->required();
    conv_cmd->add_option("target", path2)->required();
    conv_cmd->add_option("--tol", tol);
    conv_cmd->add_option("--tail", tail);
    conv_cmd->add_option("--grid", grid_n);
    conv_cmd->add_option("-o,--out", out_path);

    auto* classify_cmd = app.add_subcommand("classify", "continuity of a fuzzy map at a point");
    classify_cmd->add_option("map", path)->required();
    classify_cmd->add_option("--t0", t0)->required();
    classify_cmd->add_option("--mode", mode)->check(CLI::IsMember({"level", "dinf"}));
    classify_cmd->add_option("--tol", tol);
    classify_cmd->add_option("-o,--out", out_path);

    auto* embed_cmd = app.add_subcommand("embed", "endpoint-pair embedding of a fuzzy map");
    embed_cmd->add_option("map", path)->required();
    embed_cmd->add_option("--other", path2, "second map for the isometry self-check");
    embed_cmd->add_option("-o,--out", out_path);

    auto* corpus_cmd = app.add_subcommand("corpus", "materialize a named fixture");
    corpus_cmd->add_option("name", name)->required();
    corpus_cmd->add_option("--n", n_param, "size parameter where applicable");
    corpus_cmd->add_option("-o,--out", out_path);

    auto* export_cmd = app.add_subcommand("export", "CSV export of level curves");
    export_cmd->add_option("path", path)->required();
    export_cmd->add_option("--levels", levels);
    export_cmd->add_option("-o,--out", out_path);
    export_cmd->add_option("--format", format)->check(CLI::IsMember({"csv"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitPass : kExitBadInput;
    }

    if (validate_cmd->parsed()) {
        auto [ok, rep] = validate_any(load_json(path));
        emit(rep, out_path);
        return ok ? kExitPass : kExitFail;
    }

    if (dist_cmd->parsed()) {
        if (grid_n < 2) throw schema_error("grid size must be at least 2");
        const FuzzyNumber u = fuzzy_from_json(load_json(path));
        const FuzzyNumber v = fuzzy_from_json(load_json(path2));
        const SupResult d = d_infinity_report(u, v);
        LambdaSet grid = LambdaSet::uniform(grid_n);
        for (const FuzzyNumber* w : {&u, &v})
            for (const PLJFunction* fn : {&w->lower(), &w->upper()})
                for (const Knot& k : fn->knots()) grid.insert(k.lambda);
        json curve = json::array();
        for (double l : grid.values())
            curve.push_back({{"lambda", l}, {"d_hausdorff", d_hausdorff_at(u, v, l)}});
        emit(json{{"d_infinity", d.value},
                  {"attained", d.attained},
                  {"at_lambda", d.at_lambda},
                  {"curve", std::move(curve)}},
             out_path);
        return kExitPass;
    }

    if (conv_cmd->parsed()) {
        const json sj = load_json(path);
        if (!sj.is_array() || sj.empty())
            throw schema_error("sequence file must be a nonempty JSON array");
        std::vector<FuzzyNumber> seq;
        for (const json& e : sj) seq.push_back(fuzzy_from_json(e));
        const FuzzyNumber target = fuzzy_from_json(load_json(path2));
        ConvergenceOptions opt;
        opt.tol = tol;
        opt.tail = std::min(tail, seq.size());
        const ComparedConvergence c =
            compare_convergence(seq, target, LambdaSet::uniform(grid_n), opt);
        emit(json{{"level", to_json(c.level)}, {"dinf", to_json(c.dinf)}}, out_path);
        return c.level.converges && c.dinf.converges ? kExitPass : kExitFail;
    }

    if (classify_cmd->parsed()) {
        const FuzzyMap f = fuzzymap_from_json(load_json(path));
        const std::size_t i = resolve_point(f.domain(), t0);
        ClassifyOptions opt;
        opt.tol = tol;
        const CheckReport rep = classify_continuity(
            f, i, mode == "dinf" ? ContinuityMode::DInf : ContinuityMode::Level, opt);
        emit(to_json(rep, &f.domain()), out_path);
        return rep.passed() ? kExitPass : kExitFail;
    }

    if (embed_cmd->parsed()) {
        const FuzzyMap f = fuzzymap_from_json(load_json(path));
        json out{{"embedding", to_json(embed(f))}};
        bool ok = true;
        if (!path2.empty()) {
            const FuzzyMap g = fuzzymap_from_json(load_json(path2));
            const double res = isometry_residual(f, g);
            out["isometry_residual"] = res;
            out["metric_D"] = metric_D(f, g);
            ok = res <= 1e-9;
        }
        emit(out, out_path);
        return ok ? kExitPass : kExitFail;
    }

    if (corpus_cmd->parsed()) {
        json out;
        if (name == "level_not_dinf") {
            out = to_json(
                fixtures::example_level_not_dinf(CompactDomain::reciprocal_sequence(n_param)));
        } else if (name == "constant_noncontinuous") {
            out = to_json(fixtures::example_constant_noncontinuous(
                CompactDomain::uniform_grid(0.0, 1.0, std::max<std::size_t>(n_param, 2))));
        } else if (name == "jump_fuzzy_number") {
            out = to_json(fixtures::jump_fuzzy_number());
        } else if (name == "alexandroff_unbounded") {
            out = to_json(fixtures::example_alexandroff_unbounded(n_param));
        } else if (name == "separately_not_jointly") {
            out = to_json(fixtures::example_separately_not_jointly());
        } else if (name == "sum_nonclosure") {
            auto [f, g] = fixtures::example_sum_nonclosure();
            out = json{{"f", to_json(f)}, {"g", to_json(g)}};
        } else {
            throw schema_error("unknown fixture: " + name);
        }
        emit(out, out_path);
        return kExitPass;
    }

    if (export_cmd->parsed()) {
        const json j = load_json(path);
        std::string csv;
        if (j.contains("lower"))
            csv = fuzzy_to_csv(fuzzy_from_json(j), levels);
        else if (j.contains("columns"))
            csv = lcc_to_csv(lcc_from_json(j));
        else if (j.contains("values"))
            csv = fuzzymap_to_csv(fuzzymap_from_json(j));
        else
            throw schema_error("unrecognized object for export");
        emit(csv, out_path);
        return kExitPass;
    }

    return kExitBadInput;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const schema_error& e) {
        std::cerr << json{{"error", "schema"}, {"detail", e.what()}}.dump() << '\n';
        return kExitBadInput;
    } catch (const std::exception& e) {
        std::cerr << json{{"error", "internal"}, {"detail", e.what()}}.dump() << '\n';
        return kExitBadInput;
    }
}
