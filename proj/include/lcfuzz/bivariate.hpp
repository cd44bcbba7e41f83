#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lcfuzz/domain.hpp"
#include "lcfuzz/regulated.hpp"

namespace lcfuzz {

enum class Verdict { Pass, Fail, PremiseFailed };

std::string to_string(Verdict v);

struct CheckWitness {
    double lambda = 0.0;
    std::size_t point = 0;       // domain point index
    double residual = 0.0;
    double eps = 0.0;            // threshold the residual violates (0 if n/a)
    bool at_right_limit = false; // residual only approached from the right of lambda
};

struct CheckReport {
    Verdict verdict = Verdict::Pass;
    std::optional<CheckWitness> witness;
    std::string resolution;
    std::vector<std::pair<std::string, double>> notes;

    bool passed() const { return verdict == Verdict::Pass; }
};

/// A real function on [0,1] x K given by one lambda cross-section per domain
/// point.  Columns are caglad piecewise linear; monotonicity per column is a
/// property of valid members of the space, not of the storage (raw
/// counterexample samples are stored here too).
class LCCFunction {
public:
    LCCFunction(CompactDomain domain, std::vector<PLJFunction> columns);

    static LCCFunction constant(const CompactDomain& domain, double c);

    const CompactDomain& domain() const { return domain_; }
    std::size_t points() const { return columns_.size(); }
    const PLJFunction& column(std::size_t i) const { return columns_.at(i); }

    double eval(double lambda, std::size_t point) const;
    double right_limit_lambda(double lambda, std::size_t point) const;

    bool all_nondecreasing() const;  // membership in the nondecreasing cone
    bool all_nonincreasing() const;

private:
    CompactDomain domain_;
    std::vector<PLJFunction> columns_;
};

LCCFunction add(const LCCFunction& f, const LCCFunction& g);
LCCFunction scale(double k, const LCCFunction& f);

struct ProductElement {
    LCCFunction first;
    LCCFunction second;

    ProductElement(LCCFunction f, LCCFunction s);
};

struct MonotoneCheck {
    CheckReport report;
    std::vector<Direction> directions;  // detected per column (valid when pass)
    // witness probe triple for a failing column: f(l1), f(l2), f(l3) violate
    // both orders
    std::optional<std::array<double, 3>> witness_lambdas;
};

MonotoneCheck check_monotone_first(const LCCFunction& f);

struct JointContinuityOptions {
    std::vector<double> eps_list = {0.25};
    int search_depth = 20;  // delta shrinks to 2^-depth
};

/// Searches for (delta, V) with |f(alpha,s) - f(lambda0,t0)| < eps on
/// (lambda0-delta, lambda0) x V; the lambda-supremum per column is exact.
CheckReport check_joint_left_continuity(const LCCFunction& f, double lambda0,
                                        std::size_t t0, const JointContinuityOptions& opt = {});

/// Mirror image at lambda = 0 from the right (window [0, delta) x V).
CheckReport check_joint_right_continuity_at_zero(const LCCFunction& f, std::size_t t0,
                                                 const JointContinuityOptions& opt = {});

/// Right-limit variant: |f(lambda,t) - f(lambda0+,t0)| < eps on
/// (lambda0, lambda0+delta) x V.
CheckReport check_joint_right_limit(const LCCFunction& f, double lambda0, std::size_t t0,
                                    const JointContinuityOptions& opt = {});

struct SupBound {
    double sup = 0.0;  // sup of |f|
    bool attained = true;
    double lambda = 0.0;
    std::size_t point = 0;
};

SupBound sup_bound(const LCCFunction& f);

double sup_distance_bivar(const LCCFunction& f, const LCCFunction& g);
double product_distance(const ProductElement& p, const ProductElement& q);

/// Verifies that the uniform limit of valid members is itself a valid member:
/// monotone columns, and a constant column wherever the sequence's column
/// directions keep alternating.
CheckReport check_uniform_limit_membership(const std::vector<LCCFunction>& seq,
                                           const LCCFunction& f, double tol);

/// lim_{l -> l0+} f(l+, t0) = f(l0+, t0), checked along l0 + 2^-k.
CheckReport check_right_limit_lemma1(const LCCFunction& f, std::size_t t0, double lambda0,
                                     int step_count = 40);

/// Moore-Osgood style interchange: first validates the uniform-on-lambda
/// convergence premise as t -> t0, then the right-limit interchange at every
/// knot level.  A failing premise is a verdict, not an error.
CheckReport check_right_limit_lemma2(const LCCFunction& f, std::size_t t0, double tol = 1e-9);

}  // namespace lcfuzz
