#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dfee/error.hpp"
#include "dfee/parser.hpp"
#include "dfee/render.hpp"
#include "dfee/table.hpp"
#include "dfee/transform.hpp"
#include "dfee/verify.hpp"
#include "gen.hpp"

using namespace dfee;

namespace {

const BiPoly U = BiPoly::U(), V = BiPoly::V();
const GaussRat I = GaussRat::i();

BiRat img(const char* f) { return forward(parse_exp_poly(f)).to_birat(); }

ErrorKind kind_of(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("no error thrown");
    return ErrorKind::Schema;
}

}  // namespace

TEST_CASE("forward") {
    CHECK(img("1") == BiRat(1, U * V));
    CHECK(img("e^(x+y)") == BiRat(1, (U - 1) * (V - 1)));
    CHECK(img("x*y") == BiRat(1, U * U * V * V));
    CHECK(img("x^2*y^3*e^(2*x-y)") == BiRat(12, pow(U - 2, 3) * pow(V + 1, 4)));
    // sin(x+2y) by Euler, over the common denominator.
    CHECK(img("sin(x+2*y)") == BiRat(2 * U + V, (U * U + 1) * (V * V + 4)));
}

TEST_CASE("single-variable forward") {
    CHECK(forward_single(parse_exp_poly("e^(y)"), Var::Y).to_birat() == BiRat(1, V - 1));
    CHECK(forward_single(parse_exp_poly("1"), Var::Y).to_birat() == BiRat(1, V));
    CHECK(forward_single(parse_exp_poly("y*e^(2*y)"), Var::Y).to_birat() == BiRat(1, pow(V - 2, 2)));
    CHECK(kind_of([] { forward_single(parse_exp_poly("x*y"), Var::Y); }) == ErrorKind::MixedVariable);
}

TEST_CASE("inverse") {
    CHECK(inverse(separate(BiRat(1, (U - 1) * (V - 1)))) == parse_exp_poly("e^(x+y)"));
    CHECK(inverse(separate(BiRat(1, U * U * V * V))) == parse_exp_poly("x*y"));
    const TransformExpr cosx = TransformExpr::single({Rational(1, 2), I, 1, 0, 1}) +
                               TransformExpr::single({Rational(1, 2), -I, 1, 0, 1});
    CHECK(inverse(cosx) == parse_exp_poly("cos(x)"));
}

TEST_CASE("shift") {
    const TransformExpr one = forward(parse_exp_poly("1"));
    CHECK(shift(one, 1, 1) == forward(parse_exp_poly("e^(x+y)")));
    CHECK(shift(one, 0, 0) == one);
    CHECK(shift(forward(parse_exp_poly("x")), 2, 0) == forward(parse_exp_poly("x*e^(2*x)")));
}

TEST_CASE("convolution images") {
    const TransformExpr one = forward(parse_exp_poly("1"));
    CHECK(convolve_image(one, one) == img("x*y"));
    const TransformExpr e = forward(parse_exp_poly("e^(x+y)"));
    CHECK(convolve_image(e, e) == forward(ep_convolve(parse_exp_poly("e^(x+y)"), parse_exp_poly("e^(x+y)"))).to_birat());
    CHECK(convolve_image(e, TransformExpr()).is_zero());
}

TEST_CASE("derivative images") {
    const ExpPolyExpr f = parse_exp_poly("x*e^(x+2*y) + y^2");
    const std::vector<SingleTransformExpr> ics = {forward_single(ep_trace(f, Var::X), Var::Y)};
    const DerivativeImage d = derivative_image(Var::X, 1, ics);
    CHECK(d.main == BiRat(U));
    CHECK(d.apply(forward(f).to_birat()) == forward(ep_diff(f, Var::X)).to_birat());
    CHECK(kind_of([&] { derivative_image(Var::X, 2, ics); }) == ErrorKind::ArityMismatch);
}

TEST_CASE("transform properties on random inputs") {
    gen::Rng rng(51);
    for (int k = 0; k < 40; ++k) {
        const ExpPolyExpr f = gen::exp_poly(rng, 5, 3), g = gen::exp_poly(rng);
        CHECK(inverse(forward(f)) == f);
        const TransformExpr t = gen::transform_expr(rng, 5, 4);
        CHECK(forward(inverse(t)) == t);
        CHECK(forward(ep_convolve(f, g)).to_birat() == convolve_image(forward(f), forward(g)));
        // Order-1 derivative in y.
        const std::vector<SingleTransformExpr> ics = {forward_single(ep_trace(f, Var::Y), Var::X)};
        CHECK(derivative_image(Var::Y, 1, ics).apply(forward(f).to_birat()) ==
              forward(ep_diff(f, Var::Y)).to_birat());
        // Linearity.
        CHECK(forward(f + g) == forward(f) + forward(g));
    }
}

TEST_CASE("numeric check of the defining integral") {
    const ForwardCheck a = numeric_forward_check(parse_exp_poly("e^(-(x+y))"), 1, 1, 1);
    CHECK(std::abs(a.numeric - std::complex<double>(0, -0.5)) < 1e-6);
    CHECK(a.gap < 1e-6);
    const ForwardCheck b = numeric_forward_check(parse_exp_poly("x*e^(-2*x-y)"), 1, 1, 1);
    const std::complex<double> i(0, 1);
    CHECK(std::abs(b.numeric - 1.0 / ((i + 2.0) * (i + 2.0) * (i + 1.0))) < 1e-6);
    CHECK(kind_of([] { numeric_forward_check(parse_exp_poly("e^(x+y)"), 1, 1, 1); }) ==
          ErrorKind::NonDecayingIntegrand);
}

TEST_CASE("rendering in u^n, v^n") {
    auto paper = [](const char* f, std::optional<int> n = std::nullopt) {
        return render_paper(forward(parse_exp_poly(f)), n);
    };
    CHECK(paper("1") == "(-i/u^n)(-i/v^n)");
    CHECK(paper("e^(x+y)") == "(1 + iu^n)(1 + iv^n)/((1+u^{2n})(1+v^{2n}))");
    CHECK(paper("e^(x+y)", 1) == "(1 + iu)(1 + iv)/((1+u^2)(1+v^2))");
    CHECK(paper("cos(x+y)") == "-(u^n v^n + 1)/((u^{2n}-1)(v^{2n}-1))");
    CHECK(paper("sin(x+2*y)") == "i(2u^n + v^n)/((u^{2n}-1)(v^{2n}-4))");
}

TEST_CASE("rendering in the input grammar") {
    for (const char* text : {"e^(x+y)", "(2+alpha)*e^(x+y)", "cos(x)", "sin(2*x+y)*e^(x)", "x*y^2 - 3", "cosh(x)"}) {
        const AlphaSeries s = lower_with_alpha(parse_expr(text));
        CHECK(lower_with_alpha(parse_expr(render_series(s))) == s);
    }
    CHECK(render_series(lower_with_alpha(parse_expr("e^(x+y)*(2+alpha)"))) == "(2+alpha)*e^(x+y)");
    const ExpPolyExpr lone = ExpPolyExpr::term(Rational(1, 2), 0, 0, I, 0);
    CHECK(kind_of([&] { render_exp_poly(lone); }) == ErrorKind::ResidualImaginaryPart);
    CHECK(parse_exp_poly(render_complex(lone)) == lone);
}

TEST_CASE("rule table") {
    const auto rows = rule_table();
    CHECK(rows.size() >= 1 + 3 + 8 * 3);
    for (const auto& r : rows) CHECK_MESSAGE(r.match, r.rule, " ", r.instance);
    for (const auto& r : rows)
        if (r.rule == 8 && r.instance == "a=1, b=1") CHECK(r.engine == "-(u^n v^n + 1)/((u^{2n}-1)(v^{2n}-1))");
    CHECK(rows.front().engine == "(-i/u^n)(-i/v^n)");
    CHECK_FALSE(rows[1].note.empty());
}
