#pragma once

#include <functional>
#include <string>
#include <vector>

#include "lcfuzz/bivariate.hpp"
#include "lcfuzz/fuzzymap.hpp"

namespace lcfuzz {
namespace fixtures {

/// A level where the sampled function jumps; the right limit cannot be
/// recovered by sampling and is supplied in closed form.
struct HotKnot {
    double lambda;
    double right_limit;
};

/// An endpoint-function family given in closed form, convertible to PLJ by
/// adaptive sampling.  Formulas are evaluated at (lambda, t).
struct AnalyticFamily {
    std::string name;
    std::function<double(double, double)> lower_formula;
    std::function<double(double, double)> upper_formula;
    std::function<std::vector<HotKnot>(double)> hot_knots;  // per t, for the lower formula
};

struct SamplingOptions {
    double sup_tol = 1e-6;
    int max_depth = 60;
};

/// Adaptive piecewise-linear sampling of a scalar formula on [0,1].  Hot
/// knots get their analytic right limits injected; elsewhere segments are
/// bisected until the midpoint deviation is below sup_tol (or the midpoint is
/// no longer representable between its neighbours).
PLJFunction plj_from_formula(const std::function<double(double)>& formula,
                             const std::vector<HotKnot>& hot_knots, Direction dir,
                             const SamplingOptions& opt = {});

/// The level-continuous but not d_infinity-continuous map: f(t) has upper
/// endpoint 1 and lower endpoint 0 for lambda <= 1/2, (lambda-1/2)^t above,
/// with the t = 0 column the exact unit jump at 1/2.
FuzzyMap example_level_not_dinf(const CompactDomain& domain,
                                const SamplingOptions& opt = {});

/// The analytic family behind example_level_not_dinf.
AnalyticFamily level_not_dinf_family();

/// A d_infinity-continuous map whose values are nowhere continuous fuzzy
/// numbers: the constant map to a fixed fuzzy number with a jump.
FuzzyMap example_constant_noncontinuous(const CompactDomain& domain);

/// The jump fuzzy number used by example_constant_noncontinuous.
FuzzyNumber jump_fuzzy_number();

/// Unbounded raw sample over the one-point compactification of {a_n}: the
/// column at a_n is a triangle spike with right limit n at 1/2, descending to
/// 0 at 1/2 + 1/n; the column at p is zero.  Not monotone, so not a valid
/// member of the left continuous - continuous space.
LCCFunction example_alexandroff_unbounded(std::size_t n_terms);

/// Separately continuous but not jointly left continuous - continuous at
/// (1/2, 0): h(l,t) = (l-1/2) t / ((l-1/2)^2 + t^2), sampled on a grid with
/// points accumulating at t = 0.  Not monotone in lambda.
LCCFunction example_separately_not_jointly();

/// A nondecreasing and a nonincreasing member whose sum is not monotone:
/// demonstrates that the space is not closed under addition.
std::pair<LCCFunction, LCCFunction> example_sum_nonclosure();

/// Pointwise sum with no direction policing; the result may leave the space.
LCCFunction raw_sum(const LCCFunction& f, const LCCFunction& g);

}  // namespace fixtures
}  // namespace lcfuzz
