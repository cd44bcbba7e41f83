#include "lcfuzz/regulated.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace lcfuzz {

namespace {

constexpr double kMergeTol = 1e-12;

bool finite(const Knot& k) {
    return std::isfinite(k.lambda) && std::isfinite(k.value) && std::isfinite(k.right_limit);
}

double interpolate(const Knot& left, const Knot& right, double lambda) {
    const double w = (lambda - left.lambda) / (right.lambda - left.lambda);
    return left.right_limit + w * (right.value - left.right_limit);
}

}  // namespace

Direction flip(Direction d) {
    return d == Direction::NonDecreasing ? Direction::NonIncreasing : Direction::NonDecreasing;
}

std::string to_string(Direction d) {
    return d == Direction::NonDecreasing ? "nondecreasing" : "nonincreasing";
}

std::string to_string(ViolationKind k) {
    switch (k) {
        case ViolationKind::NonMonotone: return "NonMonotone";
        case ViolationKind::MissingEndpoint: return "MissingEndpoint";
        case ViolationKind::RightDiscontinuityAtZero: return "RightDiscontinuityAtZero";
        case ViolationKind::DuplicateLambda: return "DuplicateLambda";
        case ViolationKind::NonFinite: return "NonFinite";
        case ViolationKind::OutOfRange: return "OutOfRange";
    }
    return "Unknown";
}

PLJFunction canonicalize(std::vector<Knot> knots, Direction dir) {
    if (!knots.empty()) {
        knots.back().right_limit = knots.back().value;  // lambda = 1 has no right limit
    }
    std::vector<Knot> out;
    out.reserve(knots.size());
    for (const Knot& k : knots) {
        while (out.size() >= 2) {
            const Knot& mid = out.back();
            if (mid.value != mid.right_limit) break;
            const Knot& left = out[out.size() - 2];
            const double lin = interpolate(left, k, mid.lambda);
            const double tol = kMergeTol * std::max(1.0, std::abs(mid.value));
            if (std::abs(lin - mid.value) > tol) break;
            out.pop_back();
        }
        out.push_back(k);
    }
    return PLJFunction(std::move(out), dir);
}

PLJFunction::Validated PLJFunction::validate(std::vector<Knot> raw, Direction dir) {
    std::vector<Violation> v;
    for (std::size_t i = 0; i < raw.size(); ++i) {
        if (!finite(raw[i])) v.push_back({ViolationKind::NonFinite, i, "non-finite knot"});
    }
    if (!v.empty()) return {std::nullopt, std::move(v)};

    std::stable_sort(raw.begin(), raw.end(),
                     [](const Knot& a, const Knot& b) { return a.lambda < b.lambda; });

    for (std::size_t i = 0; i < raw.size(); ++i) {
        if (raw[i].lambda < 0.0 || raw[i].lambda > 1.0)
            v.push_back({ViolationKind::OutOfRange, i, "lambda outside [0,1]"});
        if (i + 1 < raw.size() && raw[i].lambda == raw[i + 1].lambda)
            v.push_back({ViolationKind::DuplicateLambda, i, "repeated lambda"});
    }
    if (raw.empty() || raw.front().lambda != 0.0)
        v.push_back({ViolationKind::MissingEndpoint, 0, "no knot at lambda = 0"});
    if (raw.empty() || raw.back().lambda != 1.0)
        v.push_back({ViolationKind::MissingEndpoint, raw.empty() ? 0 : raw.size() - 1,
                     "no knot at lambda = 1"});
    if (!v.empty()) return {std::nullopt, std::move(v)};

    if (raw.front().value != raw.front().right_limit)
        v.push_back({ViolationKind::RightDiscontinuityAtZero, 0,
                     "value and right limit differ at lambda = 0"});

    raw.back().right_limit = raw.back().value;
    for (std::size_t i = 0; i + 1 < raw.size(); ++i) {
        const bool ok =
            dir == Direction::NonDecreasing
                ? raw[i].value <= raw[i].right_limit && raw[i].right_limit <= raw[i + 1].value
                : raw[i].value >= raw[i].right_limit && raw[i].right_limit >= raw[i + 1].value;
        if (!ok) v.push_back({ViolationKind::NonMonotone, i, "order violated at this knot"});
    }
    if (!v.empty()) return {std::nullopt, std::move(v)};

    return {canonicalize(std::move(raw), dir), {}};
}

PLJFunction PLJFunction::unchecked(std::vector<Knot> knots, Direction dir) {
    if (!knots.empty()) knots.back().right_limit = knots.back().value;
    return PLJFunction(std::move(knots), dir);
}

PLJFunction PLJFunction::constant(double c, Direction dir) {
    return PLJFunction({Knot(0.0, c), Knot(1.0, c)}, dir);
}

PLJFunction PLJFunction::line(double value_at_0, double value_at_1) {
    const Direction dir =
        value_at_1 >= value_at_0 ? Direction::NonDecreasing : Direction::NonIncreasing;
    return PLJFunction({Knot(0.0, value_at_0), Knot(1.0, value_at_1)}, dir);
}

double PLJFunction::eval(double lambda) const {
    if (lambda < 0.0 || lambda > 1.0) throw domain_error("eval: lambda outside [0,1]");
    if (lambda == 0.0) return knots_.front().value;
    // segment (knots[i].lambda, knots[i+1].lambda]
    auto it = std::lower_bound(knots_.begin(), knots_.end(), lambda,
                               [](const Knot& k, double l) { return k.lambda < l; });
    if (it->lambda == lambda) return it->value;
    return interpolate(*(it - 1), *it, lambda);
}

double PLJFunction::right_limit(double lambda) const {
    if (lambda < 0.0 || lambda >= 1.0)
        throw domain_error("right_limit: lambda outside [0,1)");
    auto it = std::lower_bound(knots_.begin(), knots_.end(), lambda,
                               [](const Knot& k, double l) { return k.lambda < l; });
    if (it != knots_.end() && it->lambda == lambda) return it->right_limit;
    return interpolate(*(it - 1), *it, lambda);
}

Bounds PLJFunction::bounds() const {
    double vmin = std::numeric_limits<double>::infinity(), vmax = -vmin;
    double rmin = vmin, rmax = -vmin;
    for (const Knot& k : knots_) {
        vmin = std::min(vmin, k.value);
        vmax = std::max(vmax, k.value);
        rmin = std::min(rmin, k.right_limit);
        rmax = std::max(rmax, k.right_limit);
    }
    Bounds b;
    b.min = std::min(vmin, rmin);
    b.max = std::max(vmax, rmax);
    b.min_attained = vmin <= rmin;
    b.max_attained = vmax >= rmax;
    return b;
}

bool PLJFunction::is_continuous() const {
    for (const Knot& k : knots_)
        if (k.value != k.right_limit) return false;
    return true;
}

bool PLJFunction::is_constant() const {
    const double c = knots_.front().value;
    for (const Knot& k : knots_)
        if (k.value != c || k.right_limit != c) return false;
    return true;
}

bool PLJFunction::is_monotone() const {
    for (std::size_t i = 0; i + 1 < knots_.size(); ++i) {
        const bool ok =
            dir_ == Direction::NonDecreasing
                ? knots_[i].value <= knots_[i].right_limit &&
                      knots_[i].right_limit <= knots_[i + 1].value
                : knots_[i].value >= knots_[i].right_limit &&
                      knots_[i].right_limit >= knots_[i + 1].value;
        if (!ok) return false;
    }
    return true;
}

bool operator==(const PLJFunction& a, const PLJFunction& b) {
    if (a.knots_.size() != b.knots_.size()) return false;
    for (std::size_t i = 0; i < a.knots_.size(); ++i) {
        const Knot &x = a.knots_[i], &y = b.knots_[i];
        if (x.lambda != y.lambda || x.value != y.value || x.right_limit != y.right_limit)
            return false;
    }
    if (a.dir_ != b.dir_ && !(a.is_constant() && b.is_constant())) return false;
    return true;
}

std::vector<double> union_lambdas(const PLJFunction& f, const PLJFunction& g) {
    std::vector<double> u;
    u.reserve(f.knots().size() + g.knots().size());
    auto i = f.knots().begin(), j = g.knots().begin();
    while (i != f.knots().end() || j != g.knots().end()) {
        double l;
        if (j == g.knots().end() || (i != f.knots().end() && i->lambda <= j->lambda)) {
            l = i->lambda;
            if (j != g.knots().end() && j->lambda == l) ++j;
            ++i;
        } else {
            l = j->lambda;
            ++j;
        }
        u.push_back(l);
    }
    return u;
}

PLJFunction add(const PLJFunction& f, const PLJFunction& g) {
    Direction dir;
    if (f.direction() == g.direction()) {
        dir = f.direction();
    } else if (f.is_constant()) {
        dir = g.direction();
    } else if (g.is_constant()) {
        dir = f.direction();
    } else {
        throw mixed_directions("add: operands have different monotonicity");
    }
    std::vector<Knot> knots;
    for (double l : union_lambdas(f, g)) {
        Knot k;
        k.lambda = l;
        k.value = f.eval(l) + g.eval(l);
        k.right_limit = l < 1.0 ? f.right_limit(l) + g.right_limit(l) : k.value;
        knots.push_back(k);
    }
    return canonicalize(std::move(knots), dir);
}

PLJFunction scale(double k, const PLJFunction& f) {
    if (k == 0.0) return PLJFunction::constant(0.0, f.direction());
    const Direction dir = k < 0.0 ? flip(f.direction()) : f.direction();
    std::vector<Knot> knots = f.knots();
    for (Knot& kn : knots) {
        kn.value *= k;
        kn.right_limit *= k;
    }
    return canonicalize(std::move(knots), dir);
}

SupResult sup_distance_report(const PLJFunction& f, const PLJFunction& g) {
    SupResult best;
    best.value = -1.0;
    auto consider = [&best](double d, bool attained, double at) {
        if (d > best.value || (d == best.value && attained && !best.attained)) {
            best = {d, attained, at};
        }
    };
    for (double l : union_lambdas(f, g)) {
        consider(std::abs(f.eval(l) - g.eval(l)), true, l);
        if (l < 1.0) consider(std::abs(f.right_limit(l) - g.right_limit(l)), false, l);
    }
    return best;
}

double sup_distance(const PLJFunction& f, const PLJFunction& g) {
    return sup_distance_report(f, g).value;
}

DevProbe sup_abs_dev_on_open_report(const PLJFunction& f, double lo, double hi, double c) {
    DevProbe best;
    if (!(lo < hi)) return best;
    auto consider = [&best](double d, double at, bool rl) {
        if (d > best.value || (d == best.value && best.right_limit && !rl)) {
            best = {d, at, rl};
        }
    };
    consider(std::abs(f.eval(hi) - c), hi, false);  // left limit at the open right end
    if (lo < 1.0) consider(std::abs(f.right_limit(lo) - c), lo, true);
    for (const Knot& k : f.knots()) {
        if (k.lambda <= lo || k.lambda >= hi) continue;
        consider(std::abs(k.value - c), k.lambda, false);
        consider(std::abs(k.right_limit - c), k.lambda, true);
    }
    return best;
}

double sup_abs_dev_on_open(const PLJFunction& f, double lo, double hi, double c) {
    return sup_abs_dev_on_open_report(f, lo, hi, c).value;
}

}  // namespace lcfuzz
