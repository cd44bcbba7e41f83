#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace lcfuzz {

/// Monotonicity flag for a cross-section in lambda.
enum class Direction { NonDecreasing, NonIncreasing };

Direction flip(Direction d);
std::string to_string(Direction d);

/// One sample of a piecewise-linear jump function: the value at `lambda`
/// (which equals the left limit) and the one-sided limit from the right.
/// A jump sits at this knot iff value != right_limit.
struct Knot {
    double lambda = 0.0;
    double value = 0.0;
    double right_limit = 0.0;

    Knot() = default;
    Knot(double l, double v) : lambda(l), value(v), right_limit(v) {}
    Knot(double l, double v, double r) : lambda(l), value(v), right_limit(r) {}
};

enum class ViolationKind {
    NonMonotone,
    MissingEndpoint,
    RightDiscontinuityAtZero,
    DuplicateLambda,
    NonFinite,
    OutOfRange,
};

struct Violation {
    ViolationKind kind;
    std::size_t knot_index;
    std::string detail;
};

std::string to_string(ViolationKind k);

class domain_error : public std::runtime_error {
    using std::runtime_error::runtime_error;
};
class mixed_directions : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Bounds {
    double min = 0.0;
    double max = 0.0;
    bool min_attained = true;
    bool max_attained = true;
};

struct SupResult {
    double value = 0.0;
    bool attained = true;
    double at_lambda = 0.0;
};

/// Bounded piecewise-linear function on [0,1] with jumps, left-continuous on
/// (0,1] and right-continuous at 0.  On each interval (l_k, l_{k+1}] the
/// function is the line from (l_k, right_limit_k), open end, to
/// (l_{k+1}, value_{k+1}), closed end; at lambda = 0 it takes knots[0].value.
///
/// `validate` additionally enforces monotonicity per the direction flag and
/// canonicalizes (merges collinear jump-free interior knots).  `unchecked`
/// skips both, which is how raw non-monotone bivariate samples are stored.
struct ValidatedPLJ;

class PLJFunction {
public:
    using Validated = ValidatedPLJ;

    static Validated validate(std::vector<Knot> raw, Direction dir);
    static PLJFunction unchecked(std::vector<Knot> knots, Direction dir);

    /// Constant function, canonical two-knot form.
    static PLJFunction constant(double c, Direction dir = Direction::NonDecreasing);
    /// The line value_at_0 -> value_at_1 (direction inferred).
    static PLJFunction line(double value_at_0, double value_at_1);

    double eval(double lambda) const;
    double operator()(double lambda) const { return eval(lambda); }

    /// lim_{b -> lambda+} eval(b); only defined for lambda in [0,1).
    double right_limit(double lambda) const;

    Bounds bounds() const;
    bool is_continuous() const;
    bool is_constant() const;
    bool is_monotone() const;  // per the stored direction flag

    const std::vector<Knot>& knots() const { return knots_; }
    Direction direction() const { return dir_; }

    /// Structural equality on canonical knots; direction is ignored for
    /// constant functions.
    friend bool operator==(const PLJFunction& a, const PLJFunction& b);
    friend bool operator!=(const PLJFunction& a, const PLJFunction& b) { return !(a == b); }

private:
    PLJFunction(std::vector<Knot> knots, Direction dir)
        : knots_(std::move(knots)), dir_(dir) {}

    std::vector<Knot> knots_;
    Direction dir_;

    friend PLJFunction canonicalize(std::vector<Knot> knots, Direction dir);
};

struct ValidatedPLJ {
    std::optional<PLJFunction> function;
    std::vector<Violation> violations;
    bool ok() const { return function.has_value(); }
    explicit operator bool() const { return ok(); }
};

PLJFunction add(const PLJFunction& f, const PLJFunction& g);
PLJFunction scale(double k, const PLJFunction& f);

/// Exact sup_{lambda in [0,1]} |f(lambda) - g(lambda)|, including suprema
/// attained only as right limits (then `attained` is false).
SupResult sup_distance_report(const PLJFunction& f, const PLJFunction& g);
double sup_distance(const PLJFunction& f, const PLJFunction& g);

struct DevProbe {
    double value = 0.0;
    double lambda = 0.0;
    bool right_limit = false;  // supremum only approached from the right of lambda
};

/// Exact sup_{a in (lo, hi)} |f(a) - c| over an open sub-interval of [0,1],
/// with the probe location where it is attained or approached.
/// Returns 0 for an empty interval.
DevProbe sup_abs_dev_on_open_report(const PLJFunction& f, double lo, double hi, double c);
double sup_abs_dev_on_open(const PLJFunction& f, double lo, double hi, double c);

/// Sorted union of the knot lambdas of both functions.
std::vector<double> union_lambdas(const PLJFunction& f, const PLJFunction& g);

}  // namespace lcfuzz
