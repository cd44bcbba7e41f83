#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "lcfuzz/fixtures.hpp"

using namespace lcfuzz;
using namespace lcfuzz::fixtures;

TEST_CASE("adaptive sampling hits the sup-norm target") {
    auto square = [](double l) { return l * l; };
    const PLJFunction f = plj_from_formula(square, {}, Direction::NonDecreasing);
    double worst = 0.0;
    for (int i = 0; i <= 10000; ++i) {
        const double l = i / 10000.0;
        worst = std::max(worst, std::abs(f.eval(l) - square(l)));
    }
    CHECK(worst <= 1e-6);

    SamplingOptions coarse;
    coarse.sup_tol = 1e-3;
    const PLJFunction g = plj_from_formula(square, {}, Direction::NonDecreasing, coarse);
    CHECK(g.knots().size() < f.knots().size());
    double worst_coarse = 0.0;
    for (int i = 0; i <= 10000; ++i) {
        const double l = i / 10000.0;
        worst_coarse = std::max(worst_coarse, std::abs(g.eval(l) - square(l)));
    }
    CHECK(worst_coarse <= 1e-3);
    CHECK(worst <= worst_coarse);  // refinement never hurts
}

TEST_CASE("hot knots carry analytic right limits") {
    auto step = [](double l) { return l <= 0.5 ? 0.0 : std::sqrt(l - 0.5); };
    const PLJFunction f =
        plj_from_formula(step, {{0.5, 0.0}}, Direction::NonDecreasing);
    CHECK(f.eval(0.5) == 0.0);
    CHECK(f.right_limit(0.5) == 0.0);
    CHECK(std::abs(f.eval(0.75) - 0.5) <= 1e-6);
    CHECK_THROWS_AS(plj_from_formula(step, {{1.5, 0.0}}, Direction::NonDecreasing),
                    domain_error);
}

TEST_CASE("jump example map") {
    const FuzzyMap f = example_level_not_dinf(CompactDomain::reciprocal_sequence(4));
    const ProductElement pe = rep(f);
    CHECK(pe.first.eval(0.75, 0) == 0.25);       // t = 1, exact
    CHECK(pe.first.eval(0.75, 4) == 1.0);        // t = 0, the jump column
    for (std::size_t i = 0; i < 4; ++i)
        CHECK(pe.first.right_limit_lambda(0.5, i) == 0.0);
    CHECK(pe.first.right_limit_lambda(0.5, 4) == 1.0);
    CHECK(pe.second.eval(0.2, 2) == 1.0);

    IntervalGrid bad{0.0, 2.0, {0.0, 2.0}};
    CHECK_THROWS_AS(example_level_not_dinf(CompactDomain(std::move(bad))), domain_error);
}

TEST_CASE("constant map to a non-continuous fuzzy number") {
    const CompactDomain dom = CompactDomain::uniform_grid(0.0, 1.0, 3);
    const FuzzyMap f = example_constant_noncontinuous(dom);
    for (std::size_t i = 0; i < 3; ++i) {
        CHECK(f.value(i) == jump_fuzzy_number());
        CHECK(!f.value(i).is_continuous());
    }
    CHECK(metric_D(f, f) == 0.0);
}

TEST_CASE("unbounded spike sample") {
    for (std::size_t n : {2u, 5u}) {
        const LCCFunction f = example_alexandroff_unbounded(n);
        CHECK(f.domain().size() == n + 1);
        for (std::size_t i = 0; i < n; ++i) {
            const double nn = static_cast<double>(i + 1);
            CHECK(f.right_limit_lambda(0.5, i) == nn);
            if (0.5 + 1.0 / nn < 1.0) CHECK(f.eval(0.5 + 1.0 / nn, i) == 0.0);
        }
        CHECK(f.eval(0.7, n) == 0.0);  // the limit-point column is zero
    }
    // n = 1: the descending segment leaves the unit interval; f_1(1) = 0.5
    const LCCFunction one = example_alexandroff_unbounded(1);
    CHECK(one.eval(1.0, 0) == 0.5);
    CHECK_THROWS_AS(example_alexandroff_unbounded(0), domain_error);
}

TEST_CASE("separately continuous sample") {
    const LCCFunction h = example_separately_not_jointly();
    const std::size_t t0 = h.domain().index_of_label("t0");
    CHECK(h.eval(0.5, t0) == 0.0);
    for (std::size_t i = 0; i < h.domain().size(); ++i) CHECK(h.eval(0.5, i) == 0.0);
    // along t = lambda - 1/2 the value is exactly 1/2
    for (int k = 2; k <= 10; ++k) {
        const double t = std::ldexp(1.0, -k);
        const std::size_t i = h.domain().index_near(t);
        CHECK(h.eval(0.5 + t, i) == 0.5);
    }
    CHECK(!check_monotone_first(h).report.passed());
}

TEST_CASE("sum non-closure pair") {
    auto [f, g] = example_sum_nonclosure();
    CHECK(f.all_nondecreasing());
    CHECK(g.all_nonincreasing());
    const LCCFunction s = raw_sum(f, g);
    CHECK(s.eval(0.0, 2) == 0.0);
    CHECK(s.eval(0.5, 2) == -0.25);
    CHECK(s.eval(1.0, 2) == 0.0);
    CHECK(!s.all_nondecreasing());
    CHECK(!s.all_nonincreasing());
}
