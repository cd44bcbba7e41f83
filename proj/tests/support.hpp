#pragma once

// Shared random generators and independent brute-force oracles.  The oracles
// deliberately avoid the library's own evaluation helpers where the value
// under test is the library's exactness.

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "lcfuzz/fuzzy.hpp"
#include "lcfuzz/regulated.hpp"

namespace testsupport {

using namespace lcfuzz;

inline std::vector<double> random_interior_lambdas(std::mt19937& rng, std::size_t n) {
    std::uniform_real_distribution<double> u(0.01, 0.99);
    std::vector<double> ls;
    while (ls.size() < n) {
        const double l = u(rng);
        if (std::find(ls.begin(), ls.end(), l) == ls.end()) ls.push_back(l);
    }
    std::sort(ls.begin(), ls.end());
    return ls;
}

// A valid random nondecreasing knot list with occasional jumps.
inline std::vector<Knot> random_nondecreasing_knots(std::mt19937& rng) {
    std::uniform_int_distribution<std::size_t> nk(0, 6);
    std::uniform_real_distribution<double> inc(0.0, 1.0);
    std::uniform_real_distribution<double> base(-2.0, 2.0);
    std::bernoulli_distribution jump(0.3);

    std::vector<double> ls = random_interior_lambdas(rng, nk(rng));
    ls.insert(ls.begin(), 0.0);
    ls.push_back(1.0);

    std::vector<Knot> ks;
    double v = base(rng);
    for (std::size_t i = 0; i < ls.size(); ++i) {
        Knot k;
        k.lambda = ls[i];
        k.value = v;
        k.right_limit = (i + 1 < ls.size() && i > 0 && jump(rng)) ? v + inc(rng) : v;
        if (i == 0) k.right_limit = v;
        ks.push_back(k);
        v = k.right_limit + inc(rng) * 0.5;
    }
    ks.back().right_limit = ks.back().value;
    return ks;
}

inline PLJFunction random_plj(std::mt19937& rng, Direction dir = Direction::NonDecreasing) {
    PLJFunction f = *PLJFunction::validate(random_nondecreasing_knots(rng),
                                           Direction::NonDecreasing)
                         .function;
    if (dir == Direction::NonIncreasing) f = scale(-1.0, f);
    return f;
}

inline FuzzyNumber random_fuzzy(std::mt19937& rng) {
    PLJFunction lower = random_plj(rng, Direction::NonDecreasing);
    PLJFunction upper = random_plj(rng, Direction::NonIncreasing);
    // lift the upper endpoint so that upper(1) >= lower(1)
    const double gap = lower.eval(1.0) - upper.eval(1.0);
    if (gap > 0.0) {
        std::uniform_real_distribution<double> slack(0.0, 0.5);
        upper = add(upper, PLJFunction::constant(gap + slack(rng)));
    }
    return *FuzzyNumber::make(std::move(lower), std::move(upper)).number;
}

// Raw knot lists for the validation agreement test: mostly valid, with every
// violation kind injected at random.
inline std::vector<Knot> random_raw_knots(std::mt19937& rng) {
    std::vector<Knot> ks = random_nondecreasing_knots(rng);
    std::uniform_int_distribution<int> kind(0, 11);
    std::uniform_int_distribution<std::size_t> pick(0, ks.size() - 1);
    switch (kind(rng)) {
        case 0: ks[pick(rng)].value = std::nan(""); break;
        case 1: ks.front().lambda = -0.25; break;
        case 2: ks.erase(ks.begin()); break;                      // no knot at 0
        case 3: ks.pop_back(); break;                             // no knot at 1
        case 4: ks[pick(rng)].lambda = ks.back().lambda; break;   // duplicate
        case 5: ks.front().right_limit = ks.front().value + 1.0; break;
        case 6: {                                                 // non-monotone value
            const std::size_t i = pick(rng);
            ks[i].value -= 3.0;
            if (i == 0 || i + 1 == ks.size()) ks[i].right_limit = ks[i].value;
            break;
        }
        case 7: {                                                 // right limit below value
            if (ks.size() > 2) ks[1 + pick(rng) % (ks.size() - 2)].right_limit -= 2.0;
            break;
        }
        default: break;  // keep valid
    }
    return ks;
}

// Independent re-implementation of piecewise evaluation on a sorted raw list.
inline double raw_eval(const std::vector<Knot>& ks, double l) {
    if (l <= ks.front().lambda) return ks.front().value;
    for (std::size_t i = 0; i + 1 < ks.size(); ++i) {
        if (l <= ks[i + 1].lambda) {
            if (l == ks[i + 1].lambda) return ks[i + 1].value;
            const double w = (l - ks[i].lambda) / (ks[i + 1].lambda - ks[i].lambda);
            return ks[i].right_limit + w * (ks[i + 1].value - ks[i].right_limit);
        }
    }
    return ks.back().value;
}

// Brute-force validity checker: structural conditions plus dense-grid
// monotonicity with right limits.  Mirrors the characterization, not the
// library's validation code path.
inline bool brute_force_valid(std::vector<Knot> raw, Direction dir, std::size_t grid = 257) {
    for (const Knot& k : raw) {
        if (!std::isfinite(k.lambda) || !std::isfinite(k.value) ||
            !std::isfinite(k.right_limit))
            return false;
    }
    std::stable_sort(raw.begin(), raw.end(),
                     [](const Knot& a, const Knot& b) { return a.lambda < b.lambda; });
    for (std::size_t i = 0; i < raw.size(); ++i) {
        if (raw[i].lambda < 0.0 || raw[i].lambda > 1.0) return false;
        if (i + 1 < raw.size() && raw[i].lambda == raw[i + 1].lambda) return false;
    }
    if (raw.empty() || raw.front().lambda != 0.0 || raw.back().lambda != 1.0) return false;
    if (raw.front().value != raw.front().right_limit) return false;
    raw.back().right_limit = raw.back().value;

    const double sign = dir == Direction::NonDecreasing ? 1.0 : -1.0;
    double prev = sign * raw_eval(raw, 0.0);
    for (std::size_t i = 1; i <= grid; ++i) {
        const double l = static_cast<double>(i) / static_cast<double>(grid);
        const double v = sign * raw_eval(raw, l);
        if (v < prev) return false;
        prev = v;
    }
    // the grid cannot see jumps down between samples; check them directly
    for (std::size_t i = 0; i + 1 < raw.size(); ++i) {
        if (sign * raw[i].right_limit < sign * raw[i].value) return false;
        if (sign * raw[i + 1].value < sign * raw[i].right_limit) return false;
    }
    return true;
}

// Dense-grid supremum oracle with right-limit refinement at all knots.
inline double brute_sup_distance(const PLJFunction& f, const PLJFunction& g,
                                 std::size_t grid = 4096) {
    double best = 0.0;
    for (std::size_t i = 0; i <= grid; ++i) {
        const double l = static_cast<double>(i) / static_cast<double>(grid);
        best = std::max(best, std::abs(f.eval(l) - g.eval(l)));
    }
    for (const PLJFunction* h : {&f, &g}) {
        for (const Knot& k : h->knots()) {
            best = std::max(best, std::abs(f.eval(k.lambda) - g.eval(k.lambda)));
            if (k.lambda < 1.0)
                best = std::max(best,
                                std::abs(f.right_limit(k.lambda) - g.right_limit(k.lambda)));
        }
    }
    return best;
}

}  // namespace testsupport
