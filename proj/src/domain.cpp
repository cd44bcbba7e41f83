#include "lcfuzz/domain.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "lcfuzz/regulated.hpp"

namespace lcfuzz {

CompactDomain::CompactDomain(IntervalGrid grid) : rep_(std::move(grid)) {
    auto& g = std::get<IntervalGrid>(rep_);
    if (g.points.empty()) throw domain_error("IntervalGrid: empty point set");
    if (!std::is_sorted(g.points.begin(), g.points.end()))
        throw domain_error("IntervalGrid: points must be sorted");
    if (std::adjacent_find(g.points.begin(), g.points.end()) != g.points.end())
        throw domain_error("IntervalGrid: duplicate points");
    if (g.points.front() != g.a || g.points.back() != g.b)
        throw domain_error("IntervalGrid: endpoints must be grid points");
}

CompactDomain::CompactDomain(ConvergentSequence seq) : rep_(std::move(seq)) {
    auto& s = std::get<ConvergentSequence>(rep_);
    if (s.terms.empty()) throw domain_error("ConvergentSequence: needs at least one term");
}

CompactDomain CompactDomain::uniform_grid(double a, double b, std::size_t n_points) {
    if (n_points < 2) throw domain_error("uniform_grid: need at least two points");
    IntervalGrid g{a, b, {}};
    g.points.reserve(n_points);
    for (std::size_t i = 0; i < n_points; ++i)
        g.points.push_back(a + (b - a) * static_cast<double>(i) /
                                   static_cast<double>(n_points - 1));
    g.points.front() = a;
    g.points.back() = b;
    return CompactDomain(std::move(g));
}

CompactDomain CompactDomain::reciprocal_sequence(std::size_t count) {
    ConvergentSequence s;
    for (std::size_t n = 1; n <= count; ++n) s.terms.push_back(1.0 / static_cast<double>(n));
    s.limit = 0.0;
    return CompactDomain(std::move(s));
}

std::size_t CompactDomain::size() const {
    if (is_grid()) return grid().points.size();
    return sequence().terms.size() + 1;
}

double CompactDomain::coordinate(std::size_t i) const {
    if (is_grid()) return grid().points.at(i);
    const auto& s = sequence();
    return i < s.terms.size() ? s.terms[i] : s.limit;
}

std::string CompactDomain::label(std::size_t i) const {
    if (is_grid()) return "t" + std::to_string(i);
    const auto& s = sequence();
    return i < s.terms.size() ? "a" + std::to_string(i + 1) : "p";
}

std::size_t CompactDomain::index_of_label(const std::string& label) const {
    for (std::size_t i = 0; i < size(); ++i)
        if (this->label(i) == label) return i;
    throw domain_error("unknown point label: " + label);
}

std::size_t CompactDomain::index_near(double t) const {
    std::size_t best = 0;
    double best_d = std::abs(coordinate(0) - t);
    for (std::size_t i = 1; i < size(); ++i) {
        const double d = std::abs(coordinate(i) - t);
        if (d < best_d) {
            best = i;
            best_d = d;
        }
    }
    return best;
}

bool CompactDomain::is_limit_point(std::size_t i) const {
    return is_sequence() && i == sequence().terms.size();
}

std::vector<std::vector<std::size_t>> CompactDomain::neighbourhoods(std::size_t i) const {
    std::vector<std::vector<std::size_t>> out;
    if (is_sequence()) {
        const std::size_t n = sequence().terms.size();
        if (i < n) {
            out.push_back({i});  // isolated point
            return out;
        }
        // tails {a_m, ..., a_n} + p, largest first
        for (std::size_t m = 0; m < n; ++m) {
            std::vector<std::size_t> v;
            for (std::size_t j = m; j < n; ++j) v.push_back(j);
            v.push_back(n);
            out.push_back(std::move(v));
        }
        // {p} alone is not open: every neighbourhood of the limit point
        // contains a tail of the sequence.
        return out;
    }
    // Grid: index-radius balls, shrinking down to the immediate neighbours.
    // The smallest neighbourhood keeps radius 1: a finite grid stands in for
    // the continuum and its step is the resolution limit.
    const std::size_t n = grid().points.size();
    std::size_t max_r = std::max(i, n - 1 - i);
    for (std::size_t r = max_r; r >= 1; --r) {
        std::vector<std::size_t> v;
        const std::size_t lo = i > r ? i - r : 0;
        const std::size_t hi = std::min(n - 1, i + r);
        for (std::size_t j = lo; j <= hi; ++j) v.push_back(j);
        out.push_back(std::move(v));
        if (r == 1) break;
    }
    if (out.empty()) out.push_back({i});  // single-point grid
    return out;
}

std::vector<std::size_t> CompactDomain::approach_order(std::size_t i) const {
    std::vector<std::size_t> out;
    if (is_sequence()) {
        if (!is_limit_point(i)) return out;  // isolated
        for (std::size_t j = 0; j < sequence().terms.size(); ++j) out.push_back(j);
        return out;
    }
    for (std::size_t j = 0; j < size(); ++j)
        if (j != i) out.push_back(j);
    std::stable_sort(out.begin(), out.end(), [&](std::size_t x, std::size_t y) {
        return std::abs(coordinate(x) - coordinate(i)) >
               std::abs(coordinate(y) - coordinate(i));
    });
    return out;
}

bool operator==(const CompactDomain& x, const CompactDomain& y) {
    if (x.is_grid() != y.is_grid()) return false;
    if (x.is_grid()) {
        return x.grid().a == y.grid().a && x.grid().b == y.grid().b &&
               x.grid().points == y.grid().points;
    }
    return x.sequence().terms == y.sequence().terms && x.sequence().limit == y.sequence().limit;
}

}  // namespace lcfuzz
