#include "dfee/solver.hpp"

#include <cmath>
#include <exception>

#include "dfee/error.hpp"
#include "dfee/transform.hpp"

namespace dfee {

ProblemSpec ProblemSpec::swapped() const {
    ProblemSpec s = *this;
    s.forcing = forcing.swapped();
    for (auto& f : s.x_ics) f = f.swapped();
    for (auto& f : s.y_ics) f = f.swapped();
    return s;
}

namespace {

SpecReport fail(std::string condition, std::string message) {
    return {false, condition, condition + ": " + message};
}

bool depends_on(const FuzzyFunction& f, Var v) {
    for (const auto* side : {&f.lower, &f.upper})
        for (const auto& part : side->parts())
            if (part.depends_on(v)) return true;
    return false;
}

}  // namespace

SpecReport validate_spec(const ProblemSpec& p, const SpecLimits& limits) {
    if (p.l() == 0 || p.m() == 0) return fail("OrderOutOfRange", "x and y orders must be at least 1");
    if (p.l() > limits.max_order || p.m() > limits.max_order)
        return fail("OrderOutOfRange", "derivative orders are limited to " + std::to_string(limits.max_order));
    if (p.x_ics.size() != p.l())
        return fail("ArityMismatch", "expected " + std::to_string(p.l()) + " x_ics, got " + std::to_string(p.x_ics.size()));
    if (p.y_ics.size() != p.m())
        return fail("ArityMismatch", "expected " + std::to_string(p.m()) + " y_ics, got " + std::to_string(p.y_ics.size()));

    for (std::size_t h = 0; h < p.a.size(); ++h)
        if (p.a[h].sign() < 0) return fail("NegativeCoefficient", "a_" + std::to_string(h + 1));
    for (std::size_t j = 0; j < p.b.size(); ++j)
        if (p.b[j].sign() < 0) return fail("NegativeCoefficient", "b_" + std::to_string(j + 1));
    if (p.c.sign() < 0) return fail("NegativeCoefficient", "c");
    if (p.a.back().is_zero() && p.b.back().is_zero() && p.c.is_zero())
        return fail("NoPositiveCoefficient", "one of a_l, b_m, c must be positive");

    const CompiledExpPoly k(p.kernel);
    for (double x : limits.grid.xs)
        for (double y : limits.grid.ys) {
            const auto v = k(x, y);
            if (std::fabs(v.imag()) > 1e-9 * (1.0 + std::fabs(v.real())))
                return fail("KernelNotReal", "K has an imaginary part at (" + std::to_string(x) + ", " +
                                                 std::to_string(y) + ")");
            if (!(v.real() > 0.0))
                return fail("KernelNotPositive", "K(" + std::to_string(x) + ", " + std::to_string(y) +
                                                     ") = " + std::to_string(v.real()));
        }

    for (std::size_t h = 0; h < p.x_ics.size(); ++h)
        if (depends_on(p.x_ics[h], Var::X))
            return fail("InitialConditionVariable", "x_ics[" + std::to_string(h) + "] must depend on y only");
    for (std::size_t j = 0; j < p.y_ics.size(); ++j)
        if (depends_on(p.y_ics[j], Var::Y))
            return fail("InitialConditionVariable", "y_ics[" + std::to_string(j) + "] must depend on x only");

    auto check = [&](const FuzzyFunction& f, const std::string& name) -> SpecReport {
        if (auto rep = fz_validate(f, limits.grid); !rep) return fail("InvalidFuzzyInput", name + ": " + rep.message);
        return {};
    };
    if (auto r = check(p.forcing, "g"); !r) return r;
    for (std::size_t h = 0; h < p.x_ics.size(); ++h)
        if (auto r = check(p.x_ics[h], "x_ics[" + std::to_string(h) + "]"); !r) return r;
    for (std::size_t j = 0; j < p.y_ics.size(); ++j)
        if (auto r = check(p.y_ics[j], "y_ics[" + std::to_string(j) + "]"); !r) return r;
    return {};
}

BiRat assemble_denominator(const ProblemSpec& p) {
    BiPoly d(GaussRat(p.c));
    for (unsigned h = 1; h <= p.l(); ++h) d += BiPoly::monomial(GaussRat(p.a[h - 1]), h, 0);
    for (unsigned j = 1; j <= p.m(); ++j) d += BiPoly::monomial(GaussRat(p.b[j - 1]), 0, j);
    const BiRat den = BiRat(d) - forward(p.kernel).to_birat();
    if (den.is_zero()) throw Error(ErrorKind::ZeroDenominator, "the transformed operator vanishes identically");
    return den;
}

namespace {

/// Numerator of one (side, alpha power) sub-problem: forcing image plus the
/// initial-condition boundary sums.
BiRat assemble_numerator(const ProblemSpec& p, bool upper_side, std::size_t k) {
    const bool ic_upper = p.diff_case == DiffCase::I ? upper_side : !upper_side;
    BiRat num = forward(p.forcing.side(upper_side).part(k)).to_birat();

    auto boundary = [&](Var var, const std::vector<Rational>& coeffs, const std::vector<FuzzyFunction>& ics) {
        const Var trace = var == Var::X ? Var::Y : Var::X;
        std::vector<SingleTransformExpr> images;
        for (const auto& ic : ics) images.push_back(forward_single(ic.side(ic_upper).part(k), trace));
        for (unsigned h = 1; h <= coeffs.size(); ++h) {
            if (coeffs[h - 1].is_zero()) continue;
            const std::vector<SingleTransformExpr> first(images.begin(), images.begin() + h);
            num = num + BiRat(GaussRat(coeffs[h - 1])) * derivative_image(var, h, first).boundary;
        }
    };
    boundary(Var::X, p.a, p.x_ics);
    boundary(Var::Y, p.b, p.y_ics);
    return num;
}

std::size_t alpha_terms(const ProblemSpec& p) {
    int deg = std::max(p.forcing.lower.degree(), p.forcing.upper.degree());
    for (const auto* ics : {&p.x_ics, &p.y_ics})
        for (const auto& f : *ics) deg = std::max({deg, f.lower.degree(), f.upper.degree()});
    return static_cast<std::size_t>(deg + 1);
}

}  // namespace

std::vector<BiRat> assemble(const ProblemSpec& p, bool upper_side) {
    const BiRat den = assemble_denominator(p);
    std::vector<BiRat> out;
    for (std::size_t k = 0; k < alpha_terms(p); ++k) out.push_back(assemble_numerator(p, upper_side, k) / den);
    return out;
}

Solution solve(const ProblemSpec& p, const SolveOptions& opts) {
    const BiRat den = assemble_denominator(p);
    const std::size_t nk = alpha_terms(p);
    const int tasks = static_cast<int>(2 * nk);

    std::vector<TransformExpr> images(tasks);
    std::vector<ExpPolyExpr> values(tasks);
    std::vector<std::exception_ptr> errors(tasks);

#pragma omp parallel for schedule(dynamic) if (opts.parallel)
    for (int t = 0; t < tasks; ++t) {
        try {
            const bool upper = t >= static_cast<int>(nk);
            const std::size_t k = static_cast<std::size_t>(t) % nk;
            const BiRat w_hat = assemble_numerator(p, upper, k) / den;
            images[t] = separate(w_hat, opts.snap);
            values[t] = realify(inverse(images[t]));
        } catch (...) {
            errors[t] = std::current_exception();
        }
    }
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);

    Solution s;
    for (std::size_t k = 0; k < nk; ++k) {
        s.value.lower.add_part(k, values[k]);
        s.value.upper.add_part(k, values[nk + k]);
        s.lower_images.push_back(images[k]);
        s.upper_images.push_back(images[nk + k]);
    }
    if (opts.check_output)
        if (auto rep = fz_validate(s.value, opts.grid); !rep)
            throw Error(ErrorKind::InvalidFuzzyResult, "solution is not a fuzzy number: " + rep.message);
    return s;
}

ExpPolyExpr realify(const ExpPolyExpr& f) {
    const auto& terms = f.terms();
    for (const auto& [k, c] : terms) {
        if (k.a.is_real() && k.b.is_real()) {
            if (!c.is_real())
                throw Error(ErrorKind::ResidualImaginaryPart, "imaginary coefficient " + c.str() + " on a real term");
            continue;
        }
        auto it = terms.find(TermKey{k.r, k.m, k.a.conj(), k.b.conj()});
        if (it == terms.end() || it->second != c.conj())
            throw Error(ErrorKind::ResidualImaginaryPart,
                        "term with rates (" + k.a.str() + ", " + k.b.str() + ") has no conjugate partner");
    }
    return f;
}

}  // namespace dfee
