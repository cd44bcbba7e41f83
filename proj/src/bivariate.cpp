#include "lcfuzz/bivariate.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>

namespace lcfuzz {

namespace {

enum class Chain { Constant, NonDec, NonInc, Neither };

// Classify the value/right-limit chain of one column.
Chain classify_chain(const PLJFunction& f) {
    bool up = false, down = false;
    const auto& ks = f.knots();
    double prev = ks.front().value;
    auto step = [&](double next) {
        if (next > prev) up = true;
        if (next < prev) down = true;
        prev = next;
    };
    for (std::size_t i = 0; i < ks.size(); ++i) {
        step(ks[i].value);
        step(ks[i].right_limit);
    }
    if (up && down) return Chain::Neither;
    if (up) return Chain::NonDec;
    if (down) return Chain::NonInc;
    return Chain::Constant;
}

// Probe levels that expose any non-monotonicity of a piecewise-linear column:
// knots, segment midpoints, and a point just past each jump.
std::vector<double> monotonicity_probes(const PLJFunction& f) {
    std::vector<double> probes;
    const auto& ks = f.knots();
    for (std::size_t i = 0; i < ks.size(); ++i) {
        probes.push_back(ks[i].lambda);
        if (i + 1 < ks.size()) {
            const double gap = ks[i + 1].lambda - ks[i].lambda;
            if (ks[i].value != ks[i].right_limit)
                probes.push_back(ks[i].lambda + gap * 0x1p-20);
            probes.push_back(ks[i].lambda + gap * 0.5);
        }
    }
    std::sort(probes.begin(), probes.end());
    probes.erase(std::unique(probes.begin(), probes.end()), probes.end());
    return probes;
}

std::string window_description(double lo, double hi, std::size_t nbhd_size) {
    std::ostringstream os;
    os << "lambda window (" << lo << ", " << hi << "), neighbourhood of " << nbhd_size
       << " domain point(s)";
    return os.str();
}

}  // namespace

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "pass";
        case Verdict::Fail: return "fail";
        case Verdict::PremiseFailed: return "premise_failed";
    }
    return "unknown";
}

LCCFunction::LCCFunction(CompactDomain domain, std::vector<PLJFunction> columns)
    : domain_(std::move(domain)), columns_(std::move(columns)) {
    if (columns_.size() != domain_.size())
        throw domain_error("LCCFunction: one column per domain point required");
}

LCCFunction LCCFunction::constant(const CompactDomain& domain, double c) {
    std::vector<PLJFunction> cols(domain.size(), PLJFunction::constant(c));
    return LCCFunction(domain, std::move(cols));
}

double LCCFunction::eval(double lambda, std::size_t point) const {
    if (point >= columns_.size()) throw domain_error("LCCFunction: unknown point");
    return columns_[point].eval(lambda);
}

double LCCFunction::right_limit_lambda(double lambda, std::size_t point) const {
    if (point >= columns_.size()) throw domain_error("LCCFunction: unknown point");
    return columns_[point].right_limit(lambda);
}

bool LCCFunction::all_nondecreasing() const {
    for (const auto& c : columns_) {
        const Chain ch = classify_chain(c);
        if (ch != Chain::NonDec && ch != Chain::Constant) return false;
    }
    return true;
}

bool LCCFunction::all_nonincreasing() const {
    for (const auto& c : columns_) {
        const Chain ch = classify_chain(c);
        if (ch != Chain::NonInc && ch != Chain::Constant) return false;
    }
    return true;
}

LCCFunction add(const LCCFunction& f, const LCCFunction& g) {
    if (f.domain() != g.domain()) throw domain_error("add: domain mismatch");
    std::vector<PLJFunction> cols;
    cols.reserve(f.points());
    for (std::size_t i = 0; i < f.points(); ++i) cols.push_back(add(f.column(i), g.column(i)));
    return LCCFunction(f.domain(), std::move(cols));
}

LCCFunction scale(double k, const LCCFunction& f) {
    std::vector<PLJFunction> cols;
    cols.reserve(f.points());
    for (std::size_t i = 0; i < f.points(); ++i) cols.push_back(scale(k, f.column(i)));
    return LCCFunction(f.domain(), std::move(cols));
}

ProductElement::ProductElement(LCCFunction f, LCCFunction s)
    : first(std::move(f)), second(std::move(s)) {
    if (first.domain() != second.domain())
        throw domain_error("ProductElement: components must share the domain");
}

MonotoneCheck check_monotone_first(const LCCFunction& f) {
    MonotoneCheck out;
    out.report.resolution = "value/right-limit chain per column; probe triple on failure";
    for (std::size_t i = 0; i < f.points(); ++i) {
        const PLJFunction& col = f.column(i);
        const Chain ch = classify_chain(col);
        switch (ch) {
            case Chain::NonDec: out.directions.push_back(Direction::NonDecreasing); break;
            case Chain::NonInc: out.directions.push_back(Direction::NonIncreasing); break;
            case Chain::Constant: out.directions.push_back(col.direction()); break;
            case Chain::Neither: {
                const std::vector<double> probes = monotonicity_probes(col);
                std::vector<double> vals(probes.size());
                for (std::size_t j = 0; j < probes.size(); ++j) vals[j] = col.eval(probes[j]);
                for (std::size_t b = 0; b < probes.size() && !out.witness_lambdas; ++b) {
                    for (std::size_t a = 0; a < b && !out.witness_lambdas; ++a) {
                        if (vals[a] == vals[b]) continue;
                        for (std::size_t c = b + 1; c < probes.size(); ++c) {
                            const bool peak = vals[a] < vals[b] && vals[c] < vals[b];
                            const bool valley = vals[a] > vals[b] && vals[c] > vals[b];
                            if (peak || valley) {
                                out.witness_lambdas = {probes[a], probes[b], probes[c]};
                                out.report.witness = {probes[b], i,
                                                      std::abs(vals[b] - vals[c]), 0.0, false};
                                break;
                            }
                        }
                    }
                }
                out.report.verdict = Verdict::Fail;
                out.directions.push_back(col.direction());
                break;
            }
        }
        if (out.report.verdict == Verdict::Fail) break;
    }
    return out;
}

CheckReport check_joint_left_continuity(const LCCFunction& f, double lambda0, std::size_t t0,
                                        const JointContinuityOptions& opt) {
    if (!(lambda0 > 0.0 && lambda0 <= 1.0))
        throw domain_error("check_joint_left_continuity: lambda0 must lie in (0,1]");
    const double c = f.eval(lambda0, t0);
    const double delta = std::ldexp(1.0, -opt.search_depth);
    const double lo = std::max(0.0, lambda0 - delta);
    const auto nbhds = f.domain().neighbourhoods(t0);
    const auto& v = nbhds.back();  // smallest; sup only shrinks with (delta, V)

    CheckReport rep;
    rep.resolution = window_description(lo, lambda0, v.size());
    DevProbe worst;
    std::size_t worst_point = t0;
    for (std::size_t s : v) {
        const DevProbe d = sup_abs_dev_on_open_report(f.column(s), lo, lambda0, c);
        if (d.value > worst.value) {
            worst = d;
            worst_point = s;
        }
    }
    double violated = 0.0;
    for (double e : opt.eps_list)
        if (worst.value >= e) violated = std::max(violated, e);
    if (violated > 0.0) {
        rep.verdict = Verdict::Fail;
        rep.witness = {worst.lambda, worst_point, worst.value, violated, worst.right_limit};
    }
    rep.notes.emplace_back("sup_residual", worst.value);
    return rep;
}

CheckReport check_joint_right_continuity_at_zero(const LCCFunction& f, std::size_t t0,
                                                 const JointContinuityOptions& opt) {
    const double c = f.eval(0.0, t0);
    const double delta = std::ldexp(1.0, -opt.search_depth);
    const auto nbhds = f.domain().neighbourhoods(t0);
    const auto& v = nbhds.back();

    CheckReport rep;
    rep.resolution = window_description(0.0, delta, v.size());
    DevProbe worst;
    std::size_t worst_point = t0;
    for (std::size_t s : v) {
        DevProbe d = sup_abs_dev_on_open_report(f.column(s), 0.0, delta, c);
        const double at_zero = std::abs(f.eval(0.0, s) - c);
        if (at_zero > d.value) d = {at_zero, 0.0, false};
        if (d.value > worst.value) {
            worst = d;
            worst_point = s;
        }
    }
    double violated = 0.0;
    for (double e : opt.eps_list)
        if (worst.value >= e) violated = std::max(violated, e);
    if (violated > 0.0) {
        rep.verdict = Verdict::Fail;
        rep.witness = {worst.lambda, worst_point, worst.value, violated, worst.right_limit};
    }
    rep.notes.emplace_back("sup_residual", worst.value);
    return rep;
}

CheckReport check_joint_right_limit(const LCCFunction& f, double lambda0, std::size_t t0,
                                    const JointContinuityOptions& opt) {
    if (!(lambda0 >= 0.0 && lambda0 < 1.0))
        throw domain_error("check_joint_right_limit: lambda0 must lie in [0,1)");
    const double c = f.right_limit_lambda(lambda0, t0);
    const double delta = std::ldexp(1.0, -opt.search_depth);
    const double hi = std::min(1.0, lambda0 + delta);
    const auto nbhds = f.domain().neighbourhoods(t0);
    const auto& v = nbhds.back();

    CheckReport rep;
    rep.resolution = window_description(lambda0, hi, v.size());
    DevProbe worst;
    std::size_t worst_point = t0;
    for (std::size_t s : v) {
        const DevProbe d = sup_abs_dev_on_open_report(f.column(s), lambda0, hi, c);
        if (d.value > worst.value) {
            worst = d;
            worst_point = s;
        }
    }
    double violated = 0.0;
    for (double e : opt.eps_list)
        if (worst.value >= e) violated = std::max(violated, e);
    if (violated > 0.0) {
        rep.verdict = Verdict::Fail;
        rep.witness = {worst.lambda, worst_point, worst.value, violated, worst.right_limit};
    }
    rep.notes.emplace_back("sup_residual", worst.value);
    return rep;
}

SupBound sup_bound(const LCCFunction& f) {
    SupBound best;
    best.sup = -1.0;
    auto consider = [&best](double d, bool attained, double l, std::size_t p) {
        if (d > best.sup || (d == best.sup && attained && !best.attained)) {
            best = {d, attained, l, p};
        }
    };
    for (std::size_t i = 0; i < f.points(); ++i) {
        for (const Knot& k : f.column(i).knots()) {
            consider(std::abs(k.value), true, k.lambda, i);
            consider(std::abs(k.right_limit), false, k.lambda, i);
        }
    }
    return best;
}

double sup_distance_bivar(const LCCFunction& f, const LCCFunction& g) {
    if (f.domain() != g.domain()) throw domain_error("sup_distance_bivar: domain mismatch");
    double d = 0.0;
    for (std::size_t i = 0; i < f.points(); ++i)
        d = std::max(d, sup_distance(f.column(i), g.column(i)));
    return d;
}

double product_distance(const ProductElement& p, const ProductElement& q) {
    return std::max(sup_distance_bivar(p.first, q.first),
                    sup_distance_bivar(p.second, q.second));
}

CheckReport check_uniform_limit_membership(const std::vector<LCCFunction>& seq,
                                           const LCCFunction& f, double tol) {
    if (seq.empty()) throw domain_error("check_uniform_limit_membership: empty sequence");
    const double last_residual = sup_distance_bivar(seq.back(), f);
    if (last_residual >= tol)
        throw domain_error("NotUniformlyConvergent: final sup residual " +
                           std::to_string(last_residual) + " >= tol");

    CheckReport rep;
    rep.resolution = "membership of the uniform limit; direction split per column";
    for (std::size_t i = 0; i < f.points(); ++i) {
        const Chain ch = classify_chain(f.column(i));
        if (ch == Chain::Neither) {
            rep.verdict = Verdict::Fail;
            rep.witness = {0.0, i, 0.0, 0.0, false};
            rep.notes.emplace_back("non_monotone_column", static_cast<double>(i));
            return rep;
        }
        // Direction split: if both strict monotonicity classes keep occurring
        // in the later half of the sequence, the limit column must be constant.
        bool nd_late = false, ni_late = false;
        for (std::size_t k = seq.size() / 2; k < seq.size(); ++k) {
            const Chain ck = classify_chain(seq[k].column(i));
            nd_late = nd_late || ck == Chain::NonDec;
            ni_late = ni_late || ck == Chain::NonInc;
        }
        if (nd_late && ni_late) {
            const Bounds b = f.column(i).bounds();
            if (b.max - b.min > 1e-12) {
                rep.verdict = Verdict::Fail;
                rep.witness = {0.0, i, b.max - b.min, 1e-12, false};
                rep.notes.emplace_back("alternating_directions_nonconstant_limit",
                                       static_cast<double>(i));
                return rep;
            }
        }
    }
    return rep;
}

CheckReport check_right_limit_lemma1(const LCCFunction& f, std::size_t t0, double lambda0,
                                     int step_count) {
    if (!(lambda0 >= 0.0 && lambda0 < 1.0))
        throw domain_error("check_right_limit_lemma1: lambda0 must lie in [0,1)");
    const double target = f.right_limit_lambda(lambda0, t0);
    CheckReport rep;
    rep.resolution = "probes lambda0 + 2^-k, k <= " + std::to_string(step_count);
    double residual = 0.0;
    bool probed = false;
    for (int k = 1; k <= step_count; ++k) {
        const double l = lambda0 + std::ldexp(1.0, -k);
        if (l >= 1.0) continue;
        residual = std::abs(f.right_limit_lambda(l, t0) - target);
        probed = true;
    }
    rep.notes.emplace_back("final_residual", residual);
    if (!probed || residual > 1e-9) {
        rep.verdict = Verdict::Fail;
        rep.witness = {lambda0, t0, residual, 1e-9, true};
    }
    return rep;
}

CheckReport check_right_limit_lemma2(const LCCFunction& f, std::size_t t0, double tol) {
    CheckReport rep;
    const auto approach = f.domain().approach_order(t0);
    rep.resolution = "approach of " + std::to_string(approach.size()) +
                     " domain points; premise = uniform-on-lambda convergence";
    if (approach.empty()) return rep;  // isolated point, nothing to interchange

    const std::size_t tail = std::min<std::size_t>(5, approach.size());
    const PLJFunction& base = f.column(t0);
    for (std::size_t j = approach.size() - tail; j < approach.size(); ++j) {
        const SupResult s = sup_distance_report(f.column(approach[j]), base);
        if (s.value >= tol) {
            rep.verdict = Verdict::PremiseFailed;
            rep.witness = {s.at_lambda, approach[j], s.value, tol, !s.attained};
            // Record the interchange discrepancy at the worst level: the
            // right-limit value approached along t versus the one at t0.
            const double l0 = std::min(s.at_lambda, 1.0 - 1e-12);
            rep.notes.emplace_back("rl_along_t", f.right_limit_lambda(l0, approach.back()));
            rep.notes.emplace_back("rl_at_t0", f.right_limit_lambda(l0, t0));
            rep.notes.emplace_back("at_lambda", l0);
            return rep;
        }
    }

    // Premise holds at this resolution; verify the right-limit interchange at
    // every knot level of every column.
    std::vector<double> levels;
    for (std::size_t i = 0; i < f.points(); ++i)
        for (const Knot& k : f.column(i).knots())
            if (k.lambda < 1.0) levels.push_back(k.lambda);
    std::sort(levels.begin(), levels.end());
    levels.erase(std::unique(levels.begin(), levels.end()), levels.end());

    for (double l0 : levels) {
        const double target = f.right_limit_lambda(l0, t0);
        for (std::size_t j = approach.size() - tail; j < approach.size(); ++j) {
            const double r = std::abs(f.right_limit_lambda(l0, approach[j]) - target);
            if (r >= tol) {
                rep.verdict = Verdict::Fail;
                rep.witness = {l0, approach[j], r, tol, true};
                return rep;
            }
        }
    }
    return rep;
}

}  // namespace lcfuzz
