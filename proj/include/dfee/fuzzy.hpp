#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dfee/parser.hpp"
#include "dfee/scalar.hpp"
#include "dfee/symexpr.hpp"

namespace dfee {

/// Univariate polynomial in alpha over Q, stored without trailing zeros.
class AlphaPoly {
public:
    AlphaPoly() = default;
    AlphaPoly(Rational c);  // NOLINT(google-explicit-constructor)
    AlphaPoly(int c) : AlphaPoly(Rational(c)) {}  // NOLINT(google-explicit-constructor)
    explicit AlphaPoly(std::vector<Rational> coeffs);
    static AlphaPoly alpha() { return AlphaPoly(std::vector<Rational>{Rational(0), Rational(1)}); }

    const std::vector<Rational>& coeffs() const { return c_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    Rational operator()(const Rational& alpha) const;
    double operator()(double alpha) const;

    friend AlphaPoly operator+(const AlphaPoly& p, const AlphaPoly& q);
    friend AlphaPoly operator-(const AlphaPoly& p, const AlphaPoly& q);
    friend AlphaPoly operator*(const AlphaPoly& p, const AlphaPoly& q);
    friend bool operator==(const AlphaPoly& p, const AlphaPoly& q) { return p.c_ == q.c_; }
    friend bool operator!=(const AlphaPoly& p, const AlphaPoly& q) { return !(p == q); }

    std::string str() const;

private:
    void trim();
    std::vector<Rational> c_;
};

/// Grids on which the validity conditions are certified.
struct FuzzyGrid {
    std::vector<Rational> alphas;
    std::vector<double> xs;
    std::vector<double> ys;

    /// alpha in {0, 0.1, ..., 1}, (x, y) in {0, 0.25, 0.5, 0.75, 1}^2.
    static FuzzyGrid standard();
};

struct ValidityReport {
    bool ok = true;
    std::string condition;  // "order", "lower-decreasing", "upper-increasing"
    Rational alpha;
    double x = 0.0;
    double y = 0.0;
    std::string message;

    explicit operator bool() const { return ok; }
};

/// Fuzzy number in parametric form (lower(alpha), upper(alpha)).
struct FuzzyScalar {
    AlphaPoly lower;
    AlphaPoly upper;

    static FuzzyScalar crisp(const Rational& r) { return {AlphaPoly(r), AlphaPoly(r)}; }
    friend bool operator==(const FuzzyScalar& a, const FuzzyScalar& b) {
        return a.lower == b.lower && a.upper == b.upper;
    }
};

struct AlphaInterval {
    Rational alpha;
    Rational lo;
    Rational hi;
};

ValidityReport fz_validate(const FuzzyScalar& v, const FuzzyGrid& grid = FuzzyGrid::standard());

FuzzyScalar fz_add(const FuzzyScalar& v, const FuzzyScalar& z);
/// Componentwise difference; throws InvalidFuzzyResult when the result is not
/// a fuzzy number (the Hukuhara difference does not exist).
FuzzyScalar fz_sub(const FuzzyScalar& v, const FuzzyScalar& z, const FuzzyGrid& grid = FuzzyGrid::standard());
/// min/max of the four endpoint products, per grid alpha.
std::vector<AlphaInterval> fz_mul(const FuzzyScalar& v, const FuzzyScalar& z,
                                  const FuzzyGrid& grid = FuzzyGrid::standard());

/// Fuzzy-valued function of (x, y): lower and upper are polynomials in alpha
/// whose coefficients are exp-poly functions.
struct FuzzyFunction {
    AlphaSeries lower;
    AlphaSeries upper;

    static FuzzyFunction crisp(const ExpPolyExpr& f) { return {AlphaSeries(f), AlphaSeries(f)}; }
    FuzzyFunction swapped() const { return {upper, lower}; }
    const AlphaSeries& side(bool upper_side) const { return upper_side ? upper : lower; }

    friend bool operator==(const FuzzyFunction& a, const FuzzyFunction& b) {
        return a.lower == b.lower && a.upper == b.upper;
    }
};

/// Checks order and alpha-monotonicity at every spatial grid point.
ValidityReport fz_validate(const FuzzyFunction& f, const FuzzyGrid& grid = FuzzyGrid::standard());

/// Builds from parsed bounds; throws AlphaInExponent or InvalidFuzzyInput.
FuzzyFunction fz_fun_build(const SurfaceExpr& lower_ast, const SurfaceExpr& upper_ast,
                           const FuzzyGrid& grid = FuzzyGrid::standard());
FuzzyFunction fz_fun_parse(std::string_view lower, std::string_view upper,
                           const FuzzyGrid& grid = FuzzyGrid::standard());

}  // namespace dfee
