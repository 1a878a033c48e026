#include "dfee/fuzzy.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <type_traits>

#include "dfee/error.hpp"

namespace dfee {

AlphaPoly::AlphaPoly(Rational c) : c_{std::move(c)} { trim(); }

AlphaPoly::AlphaPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

void AlphaPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Rational AlphaPoly::operator()(const Rational& alpha) const {
    Rational acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * alpha + *it;
    return acc;
}

double AlphaPoly::operator()(double alpha) const {
    double acc = 0.0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * alpha + it->to_double();
    return acc;
}

AlphaPoly operator+(const AlphaPoly& p, const AlphaPoly& q) {
    std::vector<Rational> c(std::max(p.c_.size(), q.c_.size()));
    for (std::size_t k = 0; k < p.c_.size(); ++k) c[k] += p.c_[k];
    for (std::size_t k = 0; k < q.c_.size(); ++k) c[k] += q.c_[k];
    return AlphaPoly(std::move(c));
}

AlphaPoly operator-(const AlphaPoly& p, const AlphaPoly& q) {
    std::vector<Rational> c(std::max(p.c_.size(), q.c_.size()));
    for (std::size_t k = 0; k < p.c_.size(); ++k) c[k] += p.c_[k];
    for (std::size_t k = 0; k < q.c_.size(); ++k) c[k] -= q.c_[k];
    return AlphaPoly(std::move(c));
}

AlphaPoly operator*(const AlphaPoly& p, const AlphaPoly& q) {
    if (p.c_.empty() || q.c_.empty()) return {};
    std::vector<Rational> c(p.c_.size() + q.c_.size() - 1);
    for (std::size_t i = 0; i < p.c_.size(); ++i)
        for (std::size_t j = 0; j < q.c_.size(); ++j) c[i + j] += p.c_[i] * q.c_[j];
    return AlphaPoly(std::move(c));
}

std::string AlphaPoly::str() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < c_.size(); ++k) {
        if (c_[k].is_zero()) continue;
        Rational mag = c_[k].sign() < 0 ? -c_[k] : c_[k];
        if (!first) os << (c_[k].sign() < 0 ? "-" : "+");
        else if (c_[k].sign() < 0) os << "-";
        first = false;
        if (k == 0 || mag != Rational(1)) os << mag.str() << (k ? "*" : "");
        if (k >= 1) os << "alpha";
        if (k >= 2) os << "^" << k;
    }
    return os.str();
}

FuzzyGrid FuzzyGrid::standard() {
    FuzzyGrid g;
    for (int k = 0; k <= 10; ++k) g.alphas.emplace_back(Rational(k, 10));
    for (int k = 0; k <= 4; ++k) {
        g.xs.push_back(0.25 * k);
        g.ys.push_back(0.25 * k);
    }
    return g;
}

namespace {

ValidityReport violation(std::string condition, const Rational& alpha, double x, double y,
                         std::string detail) {
    ValidityReport r;
    r.ok = false;
    r.condition = std::move(condition);
    r.alpha = alpha;
    r.x = x;
    r.y = y;
    std::ostringstream os;
    os << r.condition << " violated at alpha=" << alpha.to_double() << " (x=" << x << ", y=" << y
       << "): " << detail;
    r.message = os.str();
    return r;
}

std::string pair_str(double a, double b) {
    std::ostringstream os;
    os << a << " vs " << b;
    return os.str();
}

/// Certifies one alpha-profile (lower(alpha_k), upper(alpha_k)) at a point.
/// `slack` absorbs floating-point evaluation noise; exact callers pass 0.
template <typename T>
ValidityReport check_profile(const std::vector<Rational>& alphas, const std::vector<T>& lo,
                             const std::vector<T>& hi, double x, double y, double slack) {
    auto tol = [&](const T& a, const T& b) {
        if constexpr (std::is_same_v<T, double>) return slack * (1.0 + std::max(std::fabs(a), std::fabs(b)));
        else return T(0);
    };
    for (std::size_t k = 0; k < alphas.size(); ++k) {
        auto to_d = [](const T& v) {
            if constexpr (std::is_same_v<T, double>) return v;
            else return v.to_double();
        };
        if (lo[k] > hi[k] + tol(lo[k], hi[k]))
            return violation("order", alphas[k], x, y, "lower > upper, " + pair_str(to_d(lo[k]), to_d(hi[k])));
        if (k > 0 && lo[k] < lo[k - 1] - tol(lo[k], lo[k - 1]))
            return violation("lower-decreasing", alphas[k], x, y,
                             "lower decreases, " + pair_str(to_d(lo[k - 1]), to_d(lo[k])));
        if (k > 0 && hi[k] > hi[k - 1] + tol(hi[k], hi[k - 1]))
            return violation("upper-increasing", alphas[k], x, y,
                             "upper increases, " + pair_str(to_d(hi[k - 1]), to_d(hi[k])));
    }
    return {};
}

}  // namespace

ValidityReport fz_validate(const FuzzyScalar& v, const FuzzyGrid& grid) {
    std::vector<Rational> lo, hi;
    for (const auto& a : grid.alphas) {
        lo.push_back(v.lower(a));
        hi.push_back(v.upper(a));
    }
    return check_profile(grid.alphas, lo, hi, 0.0, 0.0, 0.0);
}

FuzzyScalar fz_add(const FuzzyScalar& v, const FuzzyScalar& z) { return {v.lower + z.lower, v.upper + z.upper}; }

FuzzyScalar fz_sub(const FuzzyScalar& v, const FuzzyScalar& z, const FuzzyGrid& grid) {
    FuzzyScalar d{v.lower - z.lower, v.upper - z.upper};
    if (auto rep = fz_validate(d, grid); !rep)
        throw Error(ErrorKind::InvalidFuzzyResult, "difference is not a fuzzy number: " + rep.message);
    return d;
}

std::vector<AlphaInterval> fz_mul(const FuzzyScalar& v, const FuzzyScalar& z, const FuzzyGrid& grid) {
    std::vector<AlphaInterval> out;
    out.reserve(grid.alphas.size());
    for (const auto& a : grid.alphas) {
        const Rational vl = v.lower(a), vu = v.upper(a), zl = z.lower(a), zu = z.upper(a);
        const Rational p[4] = {vl * zl, vl * zu, vu * zl, vu * zu};
        out.push_back({a, *std::min_element(p, p + 4), *std::max_element(p, p + 4)});
    }
    return out;
}

ValidityReport fz_validate(const FuzzyFunction& f, const FuzzyGrid& grid) {
    // Relative slack for double evaluation of the spatial parts.
    constexpr double kSlack = 1e-9;
    std::vector<CompiledExpPoly> lo_parts, hi_parts;
    for (const auto& p : f.lower.parts()) lo_parts.emplace_back(p);
    for (const auto& p : f.upper.parts()) hi_parts.emplace_back(p);
    std::vector<double> alphas;
    for (const auto& a : grid.alphas) alphas.push_back(a.to_double());

    auto profile = [&](const std::vector<CompiledExpPoly>& parts, double x, double y) {
        std::vector<double> coeff;
        for (const auto& p : parts) coeff.push_back(p(x, y).real());
        std::vector<double> out;
        for (double a : alphas) {
            double acc = 0.0;
            for (auto it = coeff.rbegin(); it != coeff.rend(); ++it) acc = acc * a + *it;
            out.push_back(acc);
        }
        return out;
    };

    for (double x : grid.xs) {
        for (double y : grid.ys) {
            auto rep = check_profile(grid.alphas, profile(lo_parts, x, y), profile(hi_parts, x, y), x, y, kSlack);
            if (!rep) return rep;
        }
    }
    return {};
}

FuzzyFunction fz_fun_build(const SurfaceExpr& lower_ast, const SurfaceExpr& upper_ast, const FuzzyGrid& grid) {
    FuzzyFunction f{lower_with_alpha(lower_ast), lower_with_alpha(upper_ast)};
    if (auto rep = fz_validate(f, grid); !rep) throw Error(ErrorKind::InvalidFuzzyInput, rep.message);
    return f;
}

FuzzyFunction fz_fun_parse(std::string_view lower, std::string_view upper, const FuzzyGrid& grid) {
    return fz_fun_build(parse_expr(lower), parse_expr(upper), grid);
}

}  // namespace dfee
