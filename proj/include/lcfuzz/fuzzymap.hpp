#pragma once

#include <optional>
#include <vector>

#include "lcfuzz/bivariate.hpp"
#include "lcfuzz/fuzzy.hpp"
#include "lcfuzz/topology.hpp"

namespace lcfuzz {

/// A fuzzy-valued function K -> E1 at desk scale: one fuzzy number per
/// domain point.
class FuzzyMap {
public:
    FuzzyMap(CompactDomain domain, std::vector<FuzzyNumber> values);

    static FuzzyMap constant(const CompactDomain& domain, const FuzzyNumber& u);

    const CompactDomain& domain() const { return domain_; }
    std::size_t points() const { return values_.size(); }
    const FuzzyNumber& value(std::size_t i) const { return values_.at(i); }

private:
    CompactDomain domain_;
    std::vector<FuzzyNumber> values_;
};

/// The bivariate endpoint representation (f1, f2): column t of the first
/// component is f(t)'s lower endpoint function, of the second its upper.
ProductElement rep(const FuzzyMap& f);

/// The embedding Phi; identical to rep, kept as the named map.
ProductElement embed(const FuzzyMap& f);

/// D(f,g) = sup_t d_infinity(f(t), g(t)), exact on PLJ data.
double metric_D(const FuzzyMap& f, const FuzzyMap& g);

/// mu*f + eta*g pointwise; both coefficients must be nonnegative.
FuzzyMap cone_combine(double mu, const FuzzyMap& f, double eta, const FuzzyMap& g);

/// |D(f,g) - D_inf(Phi f, Phi g)|; zero up to rounding by the isometry.
double isometry_residual(const FuzzyMap& f, const FuzzyMap& g);

enum class ContinuityMode { Level, DInf };

struct ClassifyOptions {
    double tol = 1e-3;
    /// Residuals count as tending to zero when the residual at the nearest
    /// approach point is below tol, or has decayed by at least this factor
    /// against the approach point twice as far out.
    double decay_factor = 0.85;
    /// Probe levels for Level mode; defaults to a 101-point uniform grid plus
    /// the knot levels of the target value f(t0).
    std::optional<LambdaSet> probe_grid;
};

/// Semi-decision for continuity of f at t0 in the chosen topology, along the
/// domain's approach order toward t0.
CheckReport classify_continuity(const FuzzyMap& f, std::size_t t0, ContinuityMode mode,
                                const ClassifyOptions& opt = {});

}  // namespace lcfuzz
