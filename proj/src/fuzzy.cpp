#include "lcfuzz/fuzzy.hpp"

#include <algorithm>
#include <cmath>

namespace lcfuzz {

namespace {

// sup{lambda in [0,1] : f(lambda) <= x} for nondecreasing caglad f.
// Returns -1 when f(0) > x.  The supremum is attained (left continuity).
double sup_level_below(const PLJFunction& f, double x) {
    const auto& ks = f.knots();
    if (ks.front().value > x) return -1.0;
    double best = 0.0;
    for (std::size_t i = 0; i + 1 < ks.size(); ++i) {
        const Knot& a = ks[i];
        const Knot& b = ks[i + 1];
        if (b.value <= x) {
            best = b.lambda;
            continue;
        }
        if (a.right_limit > x) return best;
        if (a.right_limit < b.value) {
            const double w = (x - a.right_limit) / (b.value - a.right_limit);
            return a.lambda + w * (b.lambda - a.lambda);
        }
        return best;
    }
    return best;
}

}  // namespace

double hausdorff(const Interval& a, const Interval& b) {
    return std::max(std::abs(a.lo - b.lo), std::abs(a.hi - b.hi));
}

std::string to_string(FuzzyViolationKind k) {
    switch (k) {
        case FuzzyViolationKind::EndpointOrderViolation: return "EndpointOrderViolation";
        case FuzzyViolationKind::DirectionMismatch: return "DirectionMismatch";
        case FuzzyViolationKind::ComponentInvalid: return "ComponentInvalid";
        case FuzzyViolationKind::NonFinite: return "NonFinite";
        case FuzzyViolationKind::OrderViolation: return "OrderViolation";
    }
    return "Unknown";
}

FuzzyNumber::Validated FuzzyNumber::make(PLJFunction lower, PLJFunction upper) {
    std::vector<FuzzyViolation> v;
    if (lower.direction() != Direction::NonDecreasing && !lower.is_constant())
        v.push_back({FuzzyViolationKind::DirectionMismatch, "lower must be nondecreasing"});
    if (upper.direction() != Direction::NonIncreasing && !upper.is_constant())
        v.push_back({FuzzyViolationKind::DirectionMismatch, "upper must be nonincreasing"});
    if (lower.eval(1.0) > upper.eval(1.0))
        v.push_back({FuzzyViolationKind::EndpointOrderViolation, "lower(1) > upper(1)"});
    if (!v.empty()) return {std::nullopt, std::move(v)};
    return {FuzzyNumber(std::move(lower), std::move(upper)), {}};
}

FuzzyNumber FuzzyNumber::crisp(double r) {
    if (!std::isfinite(r)) throw domain_error("crisp: non-finite value");
    return FuzzyNumber(PLJFunction::constant(r, Direction::NonDecreasing),
                       PLJFunction::constant(r, Direction::NonIncreasing));
}

FuzzyNumber FuzzyNumber::triangular(double a, double b, double c) {
    if (!(a <= b && b <= c)) throw domain_error("triangular: need a <= b <= c");
    return FuzzyNumber(PLJFunction::line(a, b), PLJFunction::line(c, b));
}

FuzzyNumber FuzzyNumber::trapezoidal(double a, double b, double c, double d) {
    if (!(a <= b && b <= c && c <= d)) throw domain_error("trapezoidal: need a <= b <= c <= d");
    return FuzzyNumber(PLJFunction::line(a, b), PLJFunction::line(d, c));
}

Interval FuzzyNumber::level_set(double lambda) const {
    return {lower_.eval(lambda), upper_.eval(lambda)};
}

double FuzzyNumber::membership(double x) const {
    if (!std::isfinite(x)) throw domain_error("membership: non-finite argument");
    const double from_lower = sup_level_below(lower_, x);
    // upper is nonincreasing: reflect to reuse the nondecreasing search.
    const double from_upper = sup_level_below(scale(-1.0, upper_), -x);
    if (from_lower < 0.0 || from_upper < 0.0) return 0.0;
    return std::min(from_lower, from_upper);
}

bool FuzzyNumber::is_continuous() const {
    return lower_.is_continuous() && upper_.is_continuous();
}

FuzzyNumber add(const FuzzyNumber& u, const FuzzyNumber& v) {
    auto r = FuzzyNumber::make(add(u.lower(), v.lower()), add(u.upper(), v.upper()));
    return *r.number;
}

FuzzyNumber scale(double k, const FuzzyNumber& u) {
    // k < 0 swaps the roles of the endpoint functions.
    PLJFunction lo = scale(k, k >= 0.0 ? u.lower() : u.upper());
    PLJFunction hi = scale(k, k >= 0.0 ? u.upper() : u.lower());
    return *FuzzyNumber::make(std::move(lo), std::move(hi)).number;
}

SupResult d_infinity_report(const FuzzyNumber& u, const FuzzyNumber& v) {
    const SupResult a = sup_distance_report(u.lower(), v.lower());
    const SupResult b = sup_distance_report(u.upper(), v.upper());
    if (a.value > b.value || (a.value == b.value && a.attained)) return a;
    return b;
}

double d_infinity(const FuzzyNumber& u, const FuzzyNumber& v) {
    return d_infinity_report(u, v).value;
}

double d_hausdorff_at(const FuzzyNumber& u, const FuzzyNumber& v, double lambda) {
    return hausdorff(u.level_set(lambda), v.level_set(lambda));
}

}  // namespace lcfuzz
