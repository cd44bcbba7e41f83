#include "lcfuzz/fuzzymap.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace lcfuzz {

FuzzyMap::FuzzyMap(CompactDomain domain, std::vector<FuzzyNumber> values)
    : domain_(std::move(domain)), values_(std::move(values)) {
    if (values_.size() != domain_.size())
        throw domain_error("FuzzyMap: one value per domain point required");
}

FuzzyMap FuzzyMap::constant(const CompactDomain& domain, const FuzzyNumber& u) {
    return FuzzyMap(domain, std::vector<FuzzyNumber>(domain.size(), u));
}

ProductElement rep(const FuzzyMap& f) {
    std::vector<PLJFunction> lowers, uppers;
    lowers.reserve(f.points());
    uppers.reserve(f.points());
    for (std::size_t i = 0; i < f.points(); ++i) {
        lowers.push_back(f.value(i).lower());
        uppers.push_back(f.value(i).upper());
    }
    return ProductElement(LCCFunction(f.domain(), std::move(lowers)),
                          LCCFunction(f.domain(), std::move(uppers)));
}

ProductElement embed(const FuzzyMap& f) { return rep(f); }

double metric_D(const FuzzyMap& f, const FuzzyMap& g) {
    if (f.domain() != g.domain()) throw domain_error("metric_D: domain mismatch");
    double d = 0.0;
    for (std::size_t i = 0; i < f.points(); ++i)
        d = std::max(d, d_infinity(f.value(i), g.value(i)));
    return d;
}

FuzzyMap cone_combine(double mu, const FuzzyMap& f, double eta, const FuzzyMap& g) {
    if (mu < 0.0 || eta < 0.0)
        throw domain_error("cone_combine: coefficients must be nonnegative");
    if (f.domain() != g.domain()) throw domain_error("cone_combine: domain mismatch");
    std::vector<FuzzyNumber> values;
    values.reserve(f.points());
    for (std::size_t i = 0; i < f.points(); ++i)
        values.push_back(add(scale(mu, f.value(i)), scale(eta, g.value(i))));
    return FuzzyMap(f.domain(), std::move(values));
}

double isometry_residual(const FuzzyMap& f, const FuzzyMap& g) {
    return std::abs(metric_D(f, g) - product_distance(embed(f), embed(g)));
}

namespace {

// Approach parameter per approach index: 1/n for the n-th sequence term,
// coordinate distance on a grid.
double approach_parameter(const CompactDomain& dom, std::size_t t0, std::size_t j) {
    if (dom.is_sequence()) return 1.0 / static_cast<double>(j + 1);
    return std::abs(dom.coordinate(j) - dom.coordinate(t0));
}

// Does the residual stream (aligned with `approach`) tend to zero at this
// resolution?  Either the nearest residual is below tol, or it has decayed
// enough against the point roughly twice as far out.
bool tends_to_zero(const std::vector<double>& residuals, const std::vector<double>& xs,
                   double tol, double decay_factor) {
    const double r_last = residuals.back();
    if (r_last < tol) return true;
    const double x_last = xs.back();
    std::size_t ref = residuals.size();  // invalid
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j + 1 < residuals.size(); ++j) {
        const double d = std::abs(xs[j] - 2.0 * x_last);
        if (xs[j] > x_last && d < best) {
            best = d;
            ref = j;
        }
    }
    if (ref == residuals.size() || residuals[ref] <= 0.0) return false;
    return r_last <= decay_factor * residuals[ref];
}

}  // namespace

CheckReport classify_continuity(const FuzzyMap& f, std::size_t t0, ContinuityMode mode,
                                const ClassifyOptions& opt) {
    if (t0 >= f.points()) throw domain_error("classify_continuity: unknown point");
    CheckReport rep;
    const auto approach = f.domain().approach_order(t0);
    rep.resolution = mode == ContinuityMode::Level ? "level residuals per probe lambda"
                                                   : "d_infinity residuals";
    if (approach.empty()) return rep;  // isolated point: continuity is trivial
    if (f.domain().is_grid() && t0 > 0 && t0 + 1 < f.points())
        rep.notes.emplace_back("grid_limited", 1.0);

    std::vector<double> xs;
    xs.reserve(approach.size());
    for (std::size_t j : approach) xs.push_back(approach_parameter(f.domain(), t0, j));

    const FuzzyNumber& target = f.value(t0);
    const std::size_t tail = std::min<std::size_t>(5, approach.size());

    if (mode == ContinuityMode::DInf) {
        std::vector<double> residuals;
        residuals.reserve(approach.size());
        for (std::size_t j : approach) residuals.push_back(d_infinity(f.value(j), target));
        for (std::size_t k = approach.size() - tail; k < approach.size(); ++k)
            rep.notes.emplace_back("residual_tail", residuals[k]);
        if (!tends_to_zero(residuals, xs, opt.tol, opt.decay_factor)) {
            rep.verdict = Verdict::Fail;
            rep.witness = {0.0, approach.back(), residuals.back(), opt.tol, false};
        }
        return rep;
    }

    LambdaSet probes = opt.probe_grid ? *opt.probe_grid : LambdaSet::uniform(101);
    if (!opt.probe_grid) {
        for (const PLJFunction* fn : {&target.lower(), &target.upper()})
            for (const Knot& k : fn->knots()) probes.insert(k.lambda);
    }

    double worst_final = 0.0;
    for (double l : probes.values()) {
        std::vector<double> residuals;
        residuals.reserve(approach.size());
        for (std::size_t j : approach)
            residuals.push_back(d_hausdorff_at(f.value(j), target, l));
        worst_final = std::max(worst_final, residuals.back());
        if (!tends_to_zero(residuals, xs, opt.tol, opt.decay_factor)) {
            rep.verdict = Verdict::Fail;
            rep.witness = {l, approach.back(), residuals.back(), opt.tol, false};
            return rep;
        }
    }
    rep.notes.emplace_back("worst_final_residual", worst_final);
    return rep;
}

}  // namespace lcfuzz
