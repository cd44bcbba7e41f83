#include "lcfuzz/topology.hpp"

#include <algorithm>
#include <cmath>

namespace lcfuzz {

namespace {

// Offset used to probe just past a jump; levels separate exactly there.
constexpr double kJumpProbe = 0x1p-20;

void augment_with_knots(LambdaSet& grid, const FuzzyNumber& u) {
    for (const PLJFunction* f : {&u.lower(), &u.upper()}) {
        for (const Knot& k : f->knots()) {
            grid.insert(k.lambda);
            if (k.value != k.right_limit && k.lambda < 1.0)
                grid.insert(std::min(1.0, k.lambda + kJumpProbe));
        }
    }
}

}  // namespace

LambdaSet::LambdaSet(std::vector<double> lambdas) : lambdas_(std::move(lambdas)) {
    if (lambdas_.empty()) throw domain_error("LambdaSet: empty");
    std::sort(lambdas_.begin(), lambdas_.end());
    lambdas_.erase(std::unique(lambdas_.begin(), lambdas_.end()), lambdas_.end());
    if (lambdas_.front() < 0.0 || lambdas_.back() > 1.0)
        throw domain_error("LambdaSet: levels must lie in [0,1]");
}

LambdaSet LambdaSet::uniform(std::size_t n_points) {
    if (n_points < 2) throw domain_error("LambdaSet::uniform: need at least two points");
    std::vector<double> l(n_points);
    for (std::size_t i = 0; i < n_points; ++i)
        l[i] = static_cast<double>(i) / static_cast<double>(n_points - 1);
    return LambdaSet(std::move(l));
}

void LambdaSet::insert(double lambda) {
    if (lambda < 0.0 || lambda > 1.0) throw domain_error("LambdaSet::insert: out of range");
    auto it = std::lower_bound(lambdas_.begin(), lambdas_.end(), lambda);
    if (it != lambdas_.end() && *it == lambda) return;
    lambdas_.insert(it, lambda);
}

bool in_neighborhood(const FuzzyNumber& v, const FuzzyNumber& u,
                     const LambdaSet& lambdas, double eps) {
    if (!(eps > 0.0)) throw domain_error("in_neighborhood: eps must be positive");
    for (double l : lambdas.values()) {
        if (d_hausdorff_at(v, u, l) >= eps) return false;
    }
    return true;
}

ConvergenceReport level_converges(const std::vector<FuzzyNumber>& seq, const FuzzyNumber& u,
                                  const LambdaSet& grid, const ConvergenceOptions& opt) {
    if (seq.empty()) throw domain_error("level_converges: empty sequence");
    if (!(opt.tol > 0.0)) throw domain_error("level_converges: tol must be positive");
    const std::size_t tail = std::min(opt.tail, seq.size());

    LambdaSet probes = grid;
    augment_with_knots(probes, u);
    for (const FuzzyNumber& v : seq) augment_with_knots(probes, v);

    ConvergenceReport rep;
    rep.converges = true;
    for (double l : probes.values()) {
        double worst = 0.0;
        for (std::size_t k = seq.size() - tail; k < seq.size(); ++k) {
            const double r = d_hausdorff_at(seq[k], u, l);
            worst = std::max(worst, r);
            if (r >= opt.tol && !rep.witness) {
                rep.witness = {l, k, r};
            }
        }
        rep.per_lambda_residuals[l] = worst;
    }
    rep.converges = !rep.witness.has_value();
    return rep;
}

ConvergenceReport dinf_converges(const std::vector<FuzzyNumber>& seq, const FuzzyNumber& u,
                                 const ConvergenceOptions& opt) {
    if (seq.empty()) throw domain_error("dinf_converges: empty sequence");
    if (!(opt.tol > 0.0)) throw domain_error("dinf_converges: tol must be positive");
    const std::size_t tail = std::min(opt.tail, seq.size());

    ConvergenceReport rep;
    double worst = 0.0;
    for (std::size_t k = seq.size() - tail; k < seq.size(); ++k) {
        const double r = d_infinity(seq[k], u);
        worst = std::max(worst, r);
        if (r >= opt.tol && !rep.witness) {
            rep.witness = {0.0, k, r};
        }
    }
    rep.per_lambda_residuals[0.0] = worst;
    rep.converges = !rep.witness.has_value();
    return rep;
}

ComparedConvergence compare_convergence(const std::vector<FuzzyNumber>& seq,
                                        const FuzzyNumber& u, const LambdaSet& grid,
                                        const ConvergenceOptions& opt) {
    return {level_converges(seq, u, grid, opt), dinf_converges(seq, u, opt)};
}

}  // namespace lcfuzz
