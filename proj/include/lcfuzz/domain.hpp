#pragma once

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

namespace lcfuzz {

/// Finite sorted grid inside [a, b], endpoints included.
struct IntervalGrid {
    double a = 0.0;
    double b = 1.0;
    std::vector<double> points;
};

/// A convergent sequence a_1, ..., a_N together with its limit point p
/// (one-point compactification: the neighbourhoods of p are the tails).
/// `terms` carries a numeric coordinate per term for fixtures that need one.
struct ConvergentSequence {
    std::vector<double> terms;
    double limit = 0.0;
};

/// Desk realization of the compact space K.  Points are indexed 0..size()-1;
/// for a ConvergentSequence the last index is the limit point.
class CompactDomain {
public:
    explicit CompactDomain(IntervalGrid grid);
    explicit CompactDomain(ConvergentSequence seq);

    static CompactDomain uniform_grid(double a, double b, std::size_t n_points);
    /// The sequence {1/n : n <= count} with limit 0 (the usual desk model).
    static CompactDomain reciprocal_sequence(std::size_t count);

    std::size_t size() const;
    double coordinate(std::size_t i) const;
    std::string label(std::size_t i) const;
    std::size_t index_of_label(const std::string& label) const;
    /// Index of the point whose coordinate is nearest to t (exact match first).
    std::size_t index_near(double t) const;

    bool is_grid() const { return std::holds_alternative<IntervalGrid>(rep_); }
    bool is_sequence() const { return std::holds_alternative<ConvergentSequence>(rep_); }
    const IntervalGrid& grid() const { return std::get<IntervalGrid>(rep_); }
    const ConvergentSequence& sequence() const { return std::get<ConvergentSequence>(rep_); }

    /// True when index i is the adjoined limit point of a ConvergentSequence.
    bool is_limit_point(std::size_t i) const;

    /// Shrinking neighbourhood bases around point i, largest first, each a
    /// list of point indices containing i.  For a ConvergentSequence limit
    /// point these are the tails; for grids, index-radius balls down to the
    /// immediate neighbours; for isolated sequence terms, the singleton.
    std::vector<std::vector<std::size_t>> neighbourhoods(std::size_t i) const;

    /// Point indices approaching point i, ordered farthest first, i excluded.
    /// Empty when i is an isolated sequence term.
    std::vector<std::size_t> approach_order(std::size_t i) const;

    friend bool operator==(const CompactDomain& x, const CompactDomain& y);
    friend bool operator!=(const CompactDomain& x, const CompactDomain& y) { return !(x == y); }

private:
    std::variant<IntervalGrid, ConvergentSequence> rep_;
};

}  // namespace lcfuzz
