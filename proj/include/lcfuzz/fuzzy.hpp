#pragma once

#include <optional>
#include <vector>

#include "lcfuzz/regulated.hpp"

namespace lcfuzz {

/// Compact interval [lo, hi]; the lambda-level set of a fuzzy number.
struct Interval {
    double lo = 0.0;
    double hi = 0.0;

    double width() const { return hi - lo; }
    bool contains(double x) const { return lo <= x && x <= hi; }
    friend bool operator==(const Interval& a, const Interval& b) {
        return a.lo == b.lo && a.hi == b.hi;
    }
};

/// Hausdorff distance of two compact intervals.
double hausdorff(const Interval& a, const Interval& b);

enum class FuzzyViolationKind {
    EndpointOrderViolation,
    DirectionMismatch,
    ComponentInvalid,
    NonFinite,
    OrderViolation,
};

struct FuzzyViolation {
    FuzzyViolationKind kind;
    std::string detail;
};

std::string to_string(FuzzyViolationKind k);

/// A fuzzy number through its level-set endpoint functions: `lower` is
/// nondecreasing, `upper` nonincreasing, both caglad on (0,1] and right
/// continuous at 0, with lower(1) <= upper(1).
struct ValidatedFuzzy;

class FuzzyNumber {
public:
    using Validated = ValidatedFuzzy;

    static Validated make(PLJFunction lower, PLJFunction upper);
    static FuzzyNumber crisp(double r);
    static FuzzyNumber triangular(double a, double b, double c);
    static FuzzyNumber trapezoidal(double a, double b, double c, double d);

    const PLJFunction& lower() const { return lower_; }
    const PLJFunction& upper() const { return upper_; }

    Interval level_set(double lambda) const;
    /// sup{lambda : lower(lambda) <= x <= upper(lambda)}, 0 outside the support.
    double membership(double x) const;
    bool is_continuous() const;

    friend bool operator==(const FuzzyNumber& a, const FuzzyNumber& b) {
        return a.lower_ == b.lower_ && a.upper_ == b.upper_;
    }
    friend bool operator!=(const FuzzyNumber& a, const FuzzyNumber& b) { return !(a == b); }

private:
    FuzzyNumber(PLJFunction lower, PLJFunction upper)
        : lower_(std::move(lower)), upper_(std::move(upper)) {}

    PLJFunction lower_;
    PLJFunction upper_;
};

struct ValidatedFuzzy {
    std::optional<FuzzyNumber> number;
    std::vector<FuzzyViolation> violations;
    bool ok() const { return number.has_value(); }
    explicit operator bool() const { return ok(); }
};

FuzzyNumber add(const FuzzyNumber& u, const FuzzyNumber& v);
FuzzyNumber scale(double k, const FuzzyNumber& u);

/// Supremum metric: sup over lambda of the larger endpoint deviation,
/// right-limit aware and hence exact on PLJ inputs.
double d_infinity(const FuzzyNumber& u, const FuzzyNumber& v);
SupResult d_infinity_report(const FuzzyNumber& u, const FuzzyNumber& v);

/// Hausdorff distance of the two level sets at a fixed lambda.
double d_hausdorff_at(const FuzzyNumber& u, const FuzzyNumber& v, double lambda);

}  // namespace lcfuzz
