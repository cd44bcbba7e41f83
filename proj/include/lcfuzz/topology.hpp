#pragma once

#include <map>
#include <optional>
#include <vector>

#include "lcfuzz/fuzzy.hpp"

namespace lcfuzz {

/// Finite strictly increasing set of levels in [0,1].
class LambdaSet {
public:
    explicit LambdaSet(std::vector<double> lambdas);
    static LambdaSet uniform(std::size_t n_points);

    const std::vector<double>& values() const { return lambdas_; }
    void insert(double lambda);

private:
    std::vector<double> lambdas_;
};

struct ConvergenceWitness {
    double lambda = 0.0;   // 0 for the d_infinity oracle
    std::size_t index = 0;
    double residual = 0.0;
};

struct ConvergenceReport {
    bool converges = false;
    /// Per probed lambda, the max residual over the tail window.
    std::map<double, double> per_lambda_residuals;
    std::optional<ConvergenceWitness> witness;
};

/// Membership in the basic level-topology neighbourhood V(u, Lambda, eps).
bool in_neighborhood(const FuzzyNumber& v, const FuzzyNumber& u,
                     const LambdaSet& lambdas, double eps);

struct ConvergenceOptions {
    double tol = 1e-6;
    std::size_t tail = 5;
};

/// Semi-decision for level convergence: every probed lambda must have
/// Hausdorff residual < tol over the final `tail` entries.  The probe grid is
/// always augmented with the knot lambdas of all inputs and near-jump probes.
ConvergenceReport level_converges(const std::vector<FuzzyNumber>& seq, const FuzzyNumber& u,
                                  const LambdaSet& grid, const ConvergenceOptions& opt = {});

/// Same protocol with residual d_infinity(seq_k, u).
ConvergenceReport dinf_converges(const std::vector<FuzzyNumber>& seq, const FuzzyNumber& u,
                                 const ConvergenceOptions& opt = {});

struct ComparedConvergence {
    ConvergenceReport level;
    ConvergenceReport dinf;
};

ComparedConvergence compare_convergence(const std::vector<FuzzyNumber>& seq,
                                        const FuzzyNumber& u, const LambdaSet& grid,
                                        const ConvergenceOptions& opt = {});

}  // namespace lcfuzz
