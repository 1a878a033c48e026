#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "dfee/parser.hpp"
#include "dfee/problem.hpp"
#include "dfee/solver.hpp"
#include "dfee/verify.hpp"
#include "gen.hpp"

using namespace dfee;

namespace {

ProblemSpec example1() { return load_problem(DFEE_DATA_DIR "/example1.json").spec; }

FuzzyFunction exact1() { return fz_fun_parse("(2+alpha)*e^(x+y)", "(4-alpha)*e^(x+y)"); }

double worst(const ResidualReport& r) { return std::max(r.lower.max, r.upper.max); }

}  // namespace

TEST_CASE("quadrature") {
    const double e2 = quad2d([](double t, double s) { return std::exp(1 - t + 1 - s) * std::exp(t + s); }, 1, 1, 4);
    CHECK(std::abs(e2 - std::exp(2.0)) < 1e-9);
    CHECK(std::abs(quad2d([](double, double) { return 1.0; }, 1, 1, 1) - 1.0) < 1e-15);
    CHECK(quad2d([](double, double) { return 1.0; }, 0, 0.5, 3) == 0.0);
    // Exact for polynomials of degree 15 per axis on one panel.
    const double p = quad2d([](double t, double s) { return std::pow(t, 15) * std::pow(s, 14); }, 1, 1, 1);
    CHECK(p == doctest::Approx(1.0 / (16 * 15)).epsilon(1e-14));
}

TEST_CASE("quadrature converges as panels double") {
    auto f = [](double t, double s) { return std::sin(7 * t) * std::exp(3 * s) * std::cos(5 * t * s); };
    const double ref = quad2d(f, 1, 1, 64);
    double prev = std::abs(quad2d(f, 1, 1, 1) - ref);
    for (unsigned panels = 2; panels <= 8; panels *= 2) {
        const double err = std::abs(quad2d(f, 1, 1, panels) - ref);
        if (prev > 1e-12) CHECK(err <= std::max(prev * 1e-3, 1e-12));
        prev = err;
    }
}

TEST_CASE("residual of the worked example") {
    const ResidualReport r = residual(example1(), exact1());
    CHECK(r.pass);
    CHECK(worst(r) <= 1e-8);
    CHECK(r.points == 5 * 5 * 11);
    CHECK(r.rule == "gauss-legendre-8");

    // 2 + alpha -> 2.01 + alpha
    FuzzyFunction bumped = exact1();
    bumped.lower = bumped.lower + AlphaSeries(parse_exp_poly("1/100*e^(x+y)"));
    const ResidualReport rb = residual(example1(), bumped);
    CHECK_FALSE(rb.pass);
    CHECK(rb.lower.max >= 1e-3);
    CHECK(rb.upper.max <= 1e-8);

    VerifyOptions loose;
    loose.tol = 1.0;
    CHECK(residual(example1(), bumped, loose).pass);
}

TEST_CASE("zero problem") {
    ProblemSpec p = example1();
    p.forcing = FuzzyFunction::crisp(ExpPolyExpr());
    for (auto& ic : p.x_ics) ic = FuzzyFunction::crisp(ExpPolyExpr());
    for (auto& ic : p.y_ics) ic = FuzzyFunction::crisp(ExpPolyExpr());
    const FuzzyFunction zero = FuzzyFunction::crisp(ExpPolyExpr());
    const ResidualReport r = residual(p, zero);
    CHECK(worst(r) == 0.0);
    CHECK(check_ics(p, zero).max_deviation == 0.0);
}

TEST_CASE("crisp candidate fails against fuzzy data") {
    const ResidualReport r = residual(example1(), FuzzyFunction::crisp(parse_exp_poly("e^(x+y)")));
    CHECK_FALSE(r.pass);
}

TEST_CASE("initial conditions") {
    const IcReport ok = check_ics(example1(), exact1());
    CHECK(ok.pass);
    CHECK(ok.max_deviation <= 1e-12);

    ProblemSpec p = example1();
    p.x_ics[1] = FuzzyFunction::crisp(parse_exp_poly("2*e^(y)"));
    const IcReport bad = check_ics(p, exact1());
    CHECK_FALSE(bad.pass);
    CHECK(bad.max_deviation >= 1.0);
}

TEST_CASE("parallel and serial residuals agree exactly") {
    gen::Rng rng(71);
    for (int k = 0; k < 5; ++k) {
        const gen::Manufactured mf = gen::manufactured(rng);
        FuzzyFunction w = mf.solution;
        w.upper = w.upper + AlphaSeries(parse_exp_poly("1/50*x*e^(y)"));
        const ResidualReport a = residual(mf.spec, w), b = residual_serial(mf.spec, w);
        CHECK(a.lower.max == b.lower.max);
        CHECK(a.upper.max == b.upper.max);
        CHECK(a.lower.mean == b.lower.mean);
        CHECK(a.upper.mean == b.upper.mean);
        CHECK(a.upper.worst_x == b.upper.worst_x);
        CHECK(a.pass == b.pass);
    }
}

TEST_CASE("quadrature convolution matches the closed form") {
    // The residual of a manufactured solution is exactly the difference
    // between quadrature and ep_convolve, both applied to the same data.
    gen::Rng rng(72);
    for (int k = 0; k < 10; ++k) {
        const gen::Manufactured mf = gen::manufactured(rng);
        CHECK(worst(residual(mf.spec, mf.solution)) <= 1e-8);
    }
}

TEST_CASE("emitted solutions pass the default checks") {
    gen::Rng rng(73);
    for (int k = 0; k < 10; ++k) {
        const gen::Manufactured mf = gen::manufactured(rng);
        const FuzzyFunction w = solve(mf.spec).value;
        CHECK(residual(mf.spec, w).pass);
        CHECK(check_ics(mf.spec, w).pass);
    }
}

TEST_CASE("case (ii) pairs each side with the opposite conditions") {
    ProblemSpec p = example1();
    p.diff_case = DiffCase::II;
    for (auto& ic : p.x_ics) ic = ic.swapped();
    for (auto& ic : p.y_ics) ic = ic.swapped();
    CHECK(check_ics(p, exact1()).pass);
    CHECK(residual(p, exact1()).pass);
}
