#pragma once

// Seeded random instances shared by the property tests, the acceptance
// binary and the benchmark.

#include <random>

#include "dfee/problem.hpp"
#include "dfee/ratfunc.hpp"
#include "dfee/solver.hpp"
#include "dfee/symexpr.hpp"
#include "dfee/transform.hpp"

namespace dfee::gen {

class Rng {
public:
    explicit Rng(unsigned seed) : eng_(seed) {}

    int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(eng_); }
    bool coin() { return integer(0, 1) == 1; }

    /// p/q with |p| <= span, q in 1..max_den.
    Rational rational(int span = 4, int max_den = 3) { return Rational(integer(-span, span), integer(1, max_den)); }
    Rational nonzero_rational(int span = 4, int max_den = 3) {
        Rational r;
        while (r.is_zero()) r = rational(span, max_den);
        return r;
    }
    Rational positive_rational(int span = 4, int max_den = 3) {
        return Rational(integer(1, span), integer(1, max_den));
    }
    GaussRat gauss(int span = 3, int max_den = 2, bool complex = true) {
        return complex && coin() ? GaussRat(rational(span, max_den), rational(span, max_den))
                                 : GaussRat(rational(span, max_den));
    }
    GaussRat nonzero_gauss(int span = 3, int max_den = 2) {
        GaussRat g;
        while (g.is_zero()) g = gauss(span, max_den);
        return g;
    }

    std::mt19937& engine() { return eng_; }

private:
    std::mt19937 eng_;
};

/// Up to max_terms terms C x^r y^m e^{ax+by} with r, m <= max_power.
inline ExpPolyExpr exp_poly(Rng& rng, unsigned max_terms = 3, unsigned max_power = 2, bool complex = true) {
    ExpPolyExpr f;
    while (f.is_zero()) {
        const int n = rng.integer(1, static_cast<int>(max_terms));
        for (int k = 0; k < n; ++k) {
            const unsigned r = static_cast<unsigned>(rng.integer(0, static_cast<int>(max_power)));
            const unsigned m = static_cast<unsigned>(rng.integer(0, static_cast<int>(max_power)));
            f += ExpPolyExpr::term(rng.nonzero_gauss(), r, m, rng.gauss(2, 2, complex), rng.gauss(2, 2, complex));
        }
    }
    return f;
}

/// Sum of separable pole terms with multiplicities up to max_mult.
inline TransformExpr transform_expr(Rng& rng, unsigned max_terms = 3, unsigned max_mult = 3) {
    TransformExpr t;
    while (t.is_zero()) {
        const int n = rng.integer(1, static_cast<int>(max_terms));
        for (int k = 0; k < n; ++k) {
            SepTerm s;
            s.coeff = rng.nonzero_gauss();
            s.pole_u = rng.gauss(2, 2);
            s.mult_u = static_cast<unsigned>(rng.integer(1, static_cast<int>(max_mult)));
            s.pole_v = rng.gauss(2, 2);
            s.mult_v = static_cast<unsigned>(rng.integer(1, static_cast<int>(max_mult)));
            t = t + TransformExpr::single(s);
        }
    }
    return t;
}

/// L[f] - K ** f for the crisp operator of p.
inline ExpPolyExpr apply_operator(const ProblemSpec& p, const ExpPolyExpr& f) {
    ExpPolyExpr out = ep_scale(f, p.c);
    for (unsigned h = 0; h < p.l(); ++h) out += ep_scale(ep_diff(f, Var::X, h + 1), p.a[h]);
    for (unsigned j = 0; j < p.m(); ++j) out += ep_scale(ep_diff(f, Var::Y, j + 1), p.b[j]);
    return out - ep_convolve(p.kernel, f);
}

/// Derivative traces d^k w/d var^k at var = 0, k < order, per side.
inline std::vector<FuzzyFunction> traces(const FuzzyFunction& w, Var var, unsigned order) {
    std::vector<FuzzyFunction> out;
    for (unsigned k = 0; k < order; ++k) {
        auto tr = [&](const ExpPolyExpr& f) { return ep_trace(ep_diff(f, var, k), var); };
        out.push_back({w.lower.map(tr), w.upper.map(tr)});
    }
    return out;
}

struct Manufactured {
    ProblemSpec spec;
    FuzzyFunction solution;
};

namespace detail {

/// Random operator with a positive kernel (a sum of positive multiples of
/// e^{ax+by}).
inline ProblemSpec random_operator(Rng& rng) {
    ProblemSpec p;
    const int l = rng.integer(1, 3), m = rng.integer(1, 3);
    for (int h = 0; h < l; ++h) p.a.push_back(rng.coin() ? Rational(rng.integer(0, 3)) : rng.positive_rational(3, 2));
    for (int j = 0; j < m; ++j) p.b.push_back(rng.coin() ? Rational(rng.integer(0, 3)) : rng.positive_rational(3, 2));
    p.c = Rational(rng.integer(0, 3));
    const int kt = rng.integer(1, 2);
    for (int k = 0; k < kt; ++k)
        p.kernel += ExpPolyExpr::term(GaussRat(rng.positive_rational(2, 2)), 0, 0, GaussRat(rng.rational(2, 2)),
                                      GaussRat(rng.rational(2, 2)));
    return p;
}

/// c e^{ax+by} (1 + x + y + xy)-type function, positive on the unit square.
inline ExpPolyExpr positive_shape(Rng& rng) {
    const GaussRat a(rng.rational(3, 2)), b(rng.rational(3, 2));
    ExpPolyExpr f = ExpPolyExpr::term(GaussRat(rng.positive_rational(3, 1)), 0, 0, a, b);
    if (rng.coin()) f += ExpPolyExpr::term(GaussRat(rng.positive_rational(2, 2)), 1, 0, a, b);
    if (rng.coin()) f += ExpPolyExpr::term(GaussRat(rng.positive_rational(2, 2)), 0, 1, a, b);
    if (rng.coin()) f += ExpPolyExpr::term(GaussRat(rng.positive_rational(2, 2)), 1, 1, a, b);
    return f;
}

/// c0 f + c1 alpha f
inline AlphaSeries weighted(const ExpPolyExpr& f, const Rational& c0, const Rational& c1) {
    AlphaSeries s;
    s.add_part(0, ep_scale(f, c0));
    s.add_part(1, ep_scale(f, c1));
    return s;
}

/// Fills forcing and initial data from w by substitution. In case (ii)
/// each side's conditions are stored on the opposite side.
inline void substitute(ProblemSpec& p, const FuzzyFunction& w) {
    auto op = [&](const ExpPolyExpr& e) { return apply_operator(p, e); };
    p.forcing = {w.lower.map(op), w.upper.map(op)};
    p.x_ics = traces(w, Var::X, p.l());
    p.y_ics = traces(w, Var::Y, p.m());
    if (p.diff_case == DiffCase::II) {
        for (auto& ic : p.x_ics) ic = ic.swapped();
        for (auto& ic : p.y_ics) ic = ic.swapped();
    }
}

}  // namespace detail

/// Problem built backwards from a chosen solution: w is picked first, then
/// g and the initial conditions follow by substitution. The solution has
/// the shape lower = (p0 + p1 alpha) f, upper = (q0 - q1 alpha) f with f
/// positive on the unit square; regenerated until every fuzzy input is
/// valid. Case (i).
inline Manufactured manufactured(Rng& rng) {
    for (;;) {
        ProblemSpec p = detail::random_operator(rng);
        const ExpPolyExpr f = detail::positive_shape(rng);
        const Rational p1 = rng.positive_rational(2, 2), q1 = rng.positive_rational(2, 2);
        const Rational p0 = Rational(rng.integer(0, 3)), q0 = p0 + p1 + q1 + Rational(rng.integer(0, 2));
        const FuzzyFunction w{detail::weighted(f, p0, p1), detail::weighted(f, q0, -q1)};
        detail::substitute(p, w);
        if (validate_spec(p)) return {p, w};
    }
}

/// Valid case-(i) spec whose lower and upper data come from unrelated
/// solutions, lower = (p0 + p1 alpha) f and upper = (q0 - q1 alpha) h, so
/// nothing ties one side to the other.
inline Manufactured two_sided(Rng& rng) {
    for (;;) {
        ProblemSpec p = detail::random_operator(rng);
        const Rational p1 = rng.positive_rational(2, 2), q1 = rng.positive_rational(2, 2);
        const Rational p0 = Rational(rng.integer(0, 3)), q0 = p0 + p1 + q1 + Rational(rng.integer(0, 2));
        const FuzzyFunction w{detail::weighted(detail::positive_shape(rng), p0, p1),
                              detail::weighted(detail::positive_shape(rng), q0, -q1)};
        detail::substitute(p, w);
        if (validate_spec(p)) return {p, w};
    }
}

}  // namespace dfee::gen
