#include "lcfuzz/json_io.hpp"

#include <sstream>

namespace lcfuzz {

namespace {

// Shortest round-trip decimal form of a double.
std::string fmt(double v) { return nlohmann::json(v).dump(); }

Direction direction_from_string(const std::string& s) {
    if (s == "nondecreasing") return Direction::NonDecreasing;
    if (s == "nonincreasing") return Direction::NonIncreasing;
    throw schema_error("unknown direction: " + s);
}

double require_number(const json& j, const char* key) {
    if (!j.contains(key) || !j.at(key).is_number())
        throw schema_error(std::string("missing or non-numeric field: ") + key);
    return j.at(key).get<double>();
}

}  // namespace

json to_json(const PLJFunction& f) {
    json knots = json::array();
    for (const Knot& k : f.knots()) {
        json kj{{"lambda", k.lambda}, {"value", k.value}};
        if (k.right_limit != k.value) kj["right"] = k.right_limit;
        knots.push_back(std::move(kj));
    }
    return {{"direction", to_string(f.direction())}, {"knots", std::move(knots)}};
}

PLJFunction plj_from_json(const json& j) {
    if (!j.is_object() || !j.contains("knots") || !j.at("knots").is_array())
        throw schema_error("PLJ function: expected object with a knots array");
    const Direction dir =
        direction_from_string(j.value("direction", std::string("nondecreasing")));
    std::vector<Knot> knots;
    for (const json& kj : j.at("knots")) {
        Knot k;
        k.lambda = require_number(kj, "lambda");
        k.value = require_number(kj, "value");
        k.right_limit = kj.contains("right") ? require_number(kj, "right") : k.value;
        knots.push_back(k);
    }
    auto v = PLJFunction::validate(std::move(knots), dir);
    if (!v.ok()) {
        std::ostringstream os;
        os << "invalid PLJ function:";
        for (const Violation& viol : v.violations)
            os << " [" << to_string(viol.kind) << " at knot " << viol.knot_index << ": "
               << viol.detail << "]";
        throw schema_error(os.str());
    }
    return *v.function;
}

json to_json(const FuzzyNumber& u) {
    return {{"lower", to_json(u.lower())}, {"upper", to_json(u.upper())}};
}

FuzzyNumber fuzzy_from_json(const json& j) {
    if (!j.is_object() || !j.contains("lower") || !j.contains("upper"))
        throw schema_error("fuzzy number: expected object with lower and upper");
    auto v = FuzzyNumber::make(plj_from_json(j.at("lower")), plj_from_json(j.at("upper")));
    if (!v.ok()) {
        std::ostringstream os;
        os << "invalid fuzzy number:";
        for (const FuzzyViolation& viol : v.violations)
            os << " [" << to_string(viol.kind) << ": " << viol.detail << "]";
        throw schema_error(os.str());
    }
    return *v.number;
}

json to_json(const CompactDomain& d) {
    if (d.is_grid()) {
        return {{"kind", "interval_grid"},
                {"a", d.grid().a},
                {"b", d.grid().b},
                {"points", d.grid().points}};
    }
    return {{"kind", "convergent_sequence"},
            {"terms", d.sequence().terms},
            {"limit", d.sequence().limit}};
}

CompactDomain domain_from_json(const json& j) {
    const std::string kind = j.value("kind", std::string());
    if (kind == "interval_grid") {
        IntervalGrid g;
        g.a = require_number(j, "a");
        g.b = require_number(j, "b");
        if (!j.contains("points") || !j.at("points").is_array())
            throw schema_error("interval_grid: missing points array");
        for (const json& p : j.at("points")) g.points.push_back(p.get<double>());
        return CompactDomain(std::move(g));
    }
    if (kind == "convergent_sequence") {
        ConvergentSequence s;
        if (!j.contains("terms") || !j.at("terms").is_array())
            throw schema_error("convergent_sequence: missing terms array");
        for (const json& p : j.at("terms")) s.terms.push_back(p.get<double>());
        s.limit = require_number(j, "limit");
        return CompactDomain(std::move(s));
    }
    throw schema_error("domain: unknown kind '" + kind + "'");
}

json to_json(const LCCFunction& f) {
    json cols = json::object();
    for (std::size_t i = 0; i < f.points(); ++i)
        cols[f.domain().label(i)] = to_json(f.column(i));
    return {{"domain", to_json(f.domain())}, {"columns", std::move(cols)}};
}

LCCFunction lcc_from_json(const json& j) {
    if (!j.is_object() || !j.contains("domain") || !j.contains("columns"))
        throw schema_error("bivariate function: expected domain and columns");
    CompactDomain d = domain_from_json(j.at("domain"));
    std::vector<PLJFunction> cols;
    for (std::size_t i = 0; i < d.size(); ++i) {
        const std::string label = d.label(i);
        if (!j.at("columns").contains(label))
            throw schema_error("bivariate function: missing column " + label);
        cols.push_back(plj_from_json(j.at("columns").at(label)));
    }
    return LCCFunction(std::move(d), std::move(cols));
}

json to_json(const FuzzyMap& f) {
    json vals = json::object();
    for (std::size_t i = 0; i < f.points(); ++i)
        vals[f.domain().label(i)] = to_json(f.value(i));
    return {{"domain", to_json(f.domain())}, {"values", std::move(vals)}};
}

FuzzyMap fuzzymap_from_json(const json& j) {
    if (!j.is_object() || !j.contains("domain") || !j.contains("values"))
        throw schema_error("fuzzy map: expected domain and values");
    CompactDomain d = domain_from_json(j.at("domain"));
    std::vector<FuzzyNumber> vals;
    for (std::size_t i = 0; i < d.size(); ++i) {
        const std::string label = d.label(i);
        if (!j.at("values").contains(label))
            throw schema_error("fuzzy map: missing value at " + label);
        vals.push_back(fuzzy_from_json(j.at("values").at(label)));
    }
    return FuzzyMap(std::move(d), std::move(vals));
}

json to_json(const ProductElement& p) {
    return {{"first", to_json(p.first)}, {"second", to_json(p.second)}};
}

json to_json(const Interval& i) { return {{"lo", i.lo}, {"hi", i.hi}}; }

json to_json(const CheckReport& r, const CompactDomain* domain) {
    json out{{"verdict", to_string(r.verdict)}, {"resolution", r.resolution}};
    if (r.witness) {
        json w{{"lambda", r.witness->lambda},
               {"point_index", r.witness->point},
               {"residual", r.witness->residual},
               {"eps", r.witness->eps},
               {"at_right_limit", r.witness->at_right_limit}};
        if (domain) w["point"] = domain->label(r.witness->point);
        out["witness"] = std::move(w);
    }
    if (!r.notes.empty()) {
        json notes = json::array();
        for (const auto& [k, v] : r.notes) notes.push_back({{"name", k}, {"value", v}});
        out["notes"] = std::move(notes);
    }
    return out;
}

json to_json(const ConvergenceReport& r) {
    json out{{"converges", r.converges}};
    json per = json::array();
    for (const auto& [l, res] : r.per_lambda_residuals)
        per.push_back({{"lambda", l}, {"residual", res}});
    out["per_lambda_residuals"] = std::move(per);
    if (r.witness) {
        out["witness"] = {{"lambda", r.witness->lambda},
                          {"index", r.witness->index},
                          {"residual", r.witness->residual}};
    }
    return out;
}

std::string fuzzy_to_csv(const FuzzyNumber& u, std::size_t n_levels) {
    std::ostringstream os;
    os << "lambda,lower,upper\n";
    std::vector<double> levels;
    for (std::size_t i = 0; i < n_levels; ++i)
        levels.push_back(static_cast<double>(i) / static_cast<double>(n_levels - 1));
    for (const PLJFunction* f : {&u.lower(), &u.upper()})
        for (const Knot& k : f->knots()) levels.push_back(k.lambda);
    std::sort(levels.begin(), levels.end());
    levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
    for (double l : levels) {
        const Interval s = u.level_set(l);
        os << fmt(l) << ',' << fmt(s.lo) << ',' << fmt(s.hi) << '\n';
    }
    return os.str();
}

std::string lcc_to_csv(const LCCFunction& f) {
    std::ostringstream os;
    os << "lambda,t,value,right_limit\n";
    for (std::size_t i = 0; i < f.points(); ++i) {
        const double t = f.domain().coordinate(i);
        for (const Knot& k : f.column(i).knots())
            os << fmt(k.lambda) << ',' << fmt(t) << ',' << fmt(k.value) << ','
               << fmt(k.right_limit) << '\n';
    }
    return os.str();
}

std::string fuzzymap_to_csv(const FuzzyMap& f) {
    std::ostringstream os;
    os << "t,lambda,f1,f2\n";
    for (std::size_t i = 0; i < f.points(); ++i) {
        const double t = f.domain().coordinate(i);
        const FuzzyNumber& u = f.value(i);
        std::vector<double> levels;
        for (const PLJFunction* fn : {&u.lower(), &u.upper()})
            for (const Knot& k : fn->knots()) levels.push_back(k.lambda);
        std::sort(levels.begin(), levels.end());
        levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
        for (double l : levels)
            os << fmt(t) << ',' << fmt(l) << ',' << fmt(u.lower().eval(l)) << ','
               << fmt(u.upper().eval(l)) << '\n';
    }
    return os.str();
}

}  // namespace lcfuzz
