#include "lcfuzz/fixtures.hpp"

#include <algorithm>
#include <cmath>

namespace lcfuzz {
namespace fixtures {

namespace {

void refine(const std::function<double(double)>& f, double la, double ra, double lb,
            double vb, int depth, double tol, std::vector<Knot>& out) {
    const double mid = 0.5 * (la + lb);
    if (depth <= 0 || mid <= la || mid >= lb) return;
    const double lin = ra + (vb - ra) * (mid - la) / (lb - la);
    const double vm = f(mid);
    if (std::abs(vm - lin) <= tol) return;
    refine(f, la, ra, mid, vm, depth - 1, tol, out);
    out.emplace_back(mid, vm);
    refine(f, mid, vm, lb, vb, depth - 1, tol, out);
}

}  // namespace

PLJFunction plj_from_formula(const std::function<double(double)>& formula,
                             const std::vector<HotKnot>& hot_knots, Direction dir,
                             const SamplingOptions& opt) {
    std::vector<Knot> base;
    base.emplace_back(0.0, formula(0.0));
    for (const HotKnot& h : hot_knots) {
        if (h.lambda <= 0.0 || h.lambda >= 1.0)
            throw domain_error("plj_from_formula: hot knot must lie in (0,1)");
        base.emplace_back(h.lambda, formula(h.lambda), h.right_limit);
    }
    base.emplace_back(1.0, formula(1.0));
    std::sort(base.begin(), base.end(),
              [](const Knot& a, const Knot& b) { return a.lambda < b.lambda; });

    std::vector<Knot> knots;
    for (std::size_t i = 0; i + 1 < base.size(); ++i) {
        knots.push_back(base[i]);
        refine(formula, base[i].lambda, base[i].right_limit, base[i + 1].lambda,
               base[i + 1].value, opt.max_depth, 0.5 * opt.sup_tol, knots);
    }
    knots.push_back(base.back());

    auto v = PLJFunction::validate(std::move(knots), dir);
    if (!v.ok()) throw domain_error("plj_from_formula: sampled function is not monotone");
    return *v.function;
}

AnalyticFamily level_not_dinf_family() {
    AnalyticFamily fam;
    fam.name = "level_not_dinf";
    fam.lower_formula = [](double l, double t) -> double {
        if (l <= 0.5) return 0.0;
        if (t == 0.0) return 1.0;
        return std::pow(l - 0.5, t);
    };
    fam.upper_formula = [](double, double) { return 1.0; };
    fam.hot_knots = [](double t) {
        return std::vector<HotKnot>{{0.5, t == 0.0 ? 1.0 : 0.0}};
    };
    return fam;
}

FuzzyMap example_level_not_dinf(const CompactDomain& domain, const SamplingOptions& opt) {
    const AnalyticFamily fam = level_not_dinf_family();
    std::vector<FuzzyNumber> values;
    values.reserve(domain.size());
    const PLJFunction one = PLJFunction::constant(1.0, Direction::NonIncreasing);
    for (std::size_t i = 0; i < domain.size(); ++i) {
        const double t = domain.coordinate(i);
        if (t < 0.0 || t > 1.0)
            throw domain_error("example_level_not_dinf: domain point outside [0,1]");
        PLJFunction lower =
            t == 0.0
                ? *PLJFunction::validate({Knot(0.0, 0.0), Knot(0.5, 0.0, 1.0), Knot(1.0, 1.0)},
                                         Direction::NonDecreasing)
                       .function
                : plj_from_formula([&](double l) { return fam.lower_formula(l, t); },
                                   fam.hot_knots(t), Direction::NonDecreasing, opt);
        values.push_back(*FuzzyNumber::make(std::move(lower), one).number);
    }
    return FuzzyMap(domain, std::move(values));
}

FuzzyNumber jump_fuzzy_number() {
    auto lower = PLJFunction::validate({Knot(0.0, 0.0), Knot(0.5, 0.0, 1.0), Knot(1.0, 1.0)},
                                       Direction::NonDecreasing);
    return *FuzzyNumber::make(*lower.function,
                              PLJFunction::constant(1.0, Direction::NonIncreasing))
                .number;
}

FuzzyMap example_constant_noncontinuous(const CompactDomain& domain) {
    return FuzzyMap::constant(domain, jump_fuzzy_number());
}

LCCFunction example_alexandroff_unbounded(std::size_t n_terms) {
    if (n_terms < 1) throw domain_error("example_alexandroff_unbounded: need n >= 1");
    ConvergentSequence seq;
    for (std::size_t n = 1; n <= n_terms; ++n) seq.terms.push_back(1.0 / static_cast<double>(n));
    seq.limit = 0.0;
    CompactDomain domain(seq);

    std::vector<PLJFunction> cols;
    for (std::size_t n = 1; n <= n_terms; ++n) {
        const double nn = static_cast<double>(n);
        const double b = 0.5 + 1.0 / nn;
        std::vector<Knot> ks;
        ks.emplace_back(0.0, 0.0);
        ks.emplace_back(0.5, 0.0, nn);
        if (b < 1.0) {
            ks.emplace_back(b, 0.0);
            ks.emplace_back(1.0, 0.0);
        } else {
            // the descending segment reaches lambda = 1 before hitting zero
            ks.emplace_back(1.0, -nn * nn + 0.5 * (nn * nn + 2.0 * nn));
        }
        cols.push_back(PLJFunction::unchecked(std::move(ks), Direction::NonDecreasing));
    }
    cols.push_back(PLJFunction::constant(0.0));  // the limit point p
    return LCCFunction(std::move(domain), std::move(cols));
}

LCCFunction example_separately_not_jointly() {
    IntervalGrid grid;
    grid.a = 0.0;
    grid.b = 0.5;
    grid.points.push_back(0.0);
    for (int k = 20; k >= 1; --k) grid.points.push_back(std::ldexp(1.0, -k));
    CompactDomain domain{std::move(grid)};

    auto h = [](double l, double t) -> double {
        const double x = l - 0.5;
        const double denom = x * x + t * t;
        if (denom == 0.0) return 0.0;
        return x * t / denom;
    };

    std::vector<double> lambdas;
    for (int j = 0; j <= 16; ++j) lambdas.push_back(static_cast<double>(j) / 16.0);
    for (int k = 1; k <= 20; ++k) {
        lambdas.push_back(0.5 - std::ldexp(1.0, -k));
        lambdas.push_back(0.5 + std::ldexp(1.0, -k));
    }
    std::sort(lambdas.begin(), lambdas.end());
    lambdas.erase(std::unique(lambdas.begin(), lambdas.end()), lambdas.end());

    std::vector<PLJFunction> cols;
    for (std::size_t i = 0; i < domain.size(); ++i) {
        const double t = domain.coordinate(i);
        std::vector<Knot> ks;
        for (double l : lambdas) ks.emplace_back(l, h(l, t));
        cols.push_back(PLJFunction::unchecked(std::move(ks), Direction::NonDecreasing));
    }
    return LCCFunction(std::move(domain), std::move(cols));
}

std::pair<LCCFunction, LCCFunction> example_sum_nonclosure() {
    CompactDomain domain = CompactDomain::uniform_grid(0.0, 1.0, 5);

    std::vector<Knot> sq;
    for (int j = 0; j <= 10; ++j) {
        const double l = static_cast<double>(j) / 10.0;
        sq.emplace_back(l, l * l);
    }
    PLJFunction parabola =
        *PLJFunction::validate(std::move(sq), Direction::NonDecreasing).function;
    PLJFunction neg_line = PLJFunction::line(0.0, -1.0);

    std::vector<PLJFunction> f_cols(domain.size(), parabola);
    std::vector<PLJFunction> g_cols(domain.size(), neg_line);
    return {LCCFunction(domain, std::move(f_cols)), LCCFunction(domain, std::move(g_cols))};
}

LCCFunction raw_sum(const LCCFunction& f, const LCCFunction& g) {
    if (f.domain() != g.domain()) throw domain_error("raw_sum: domain mismatch");
    std::vector<PLJFunction> cols;
    for (std::size_t i = 0; i < f.points(); ++i) {
        const PLJFunction& a = f.column(i);
        const PLJFunction& b = g.column(i);
        std::vector<Knot> ks;
        for (double l : union_lambdas(a, b)) {
            Knot k;
            k.lambda = l;
            k.value = a.eval(l) + b.eval(l);
            k.right_limit = l < 1.0 ? a.right_limit(l) + b.right_limit(l) : k.value;
            ks.push_back(k);
        }
        cols.push_back(PLJFunction::unchecked(std::move(ks), a.direction()));
    }
    return LCCFunction(f.domain(), std::move(cols));
}

}  // namespace fixtures

}  // namespace lcfuzz
