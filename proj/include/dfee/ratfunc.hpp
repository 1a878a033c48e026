#pragma once

#include <complex>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "dfee/poly.hpp"
#include "dfee/roots.hpp"

namespace dfee {

/// Reduced bivariate rational function num/den in the transform variables.
/// gcd(num, den) is a unit and den is monic in its lex (U-major) leading term.
class BiRat {
public:
    BiRat() : den_(GaussRat(1)) {}
    BiRat(BiPoly num);  // NOLINT(google-explicit-constructor)
    BiRat(GaussRat c) : BiRat(BiPoly(std::move(c))) {}  // NOLINT(google-explicit-constructor)
    BiRat(int c) : BiRat(BiPoly(GaussRat(c))) {}         // NOLINT(google-explicit-constructor)
    /// Reduces on construction; throws DivisionByZero for den == 0.
    BiRat(BiPoly num, BiPoly den);

    const BiPoly& num() const { return num_; }
    const BiPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    GaussRat operator()(const GaussRat& u, const GaussRat& v) const;

    BiRat operator-() const;
    friend BiRat operator+(const BiRat& f, const BiRat& g);
    friend BiRat operator-(const BiRat& f, const BiRat& g);
    friend BiRat operator*(const BiRat& f, const BiRat& g);
    friend BiRat operator/(const BiRat& f, const BiRat& g);
    friend bool operator==(const BiRat& f, const BiRat& g) { return f.num_ == g.num_ && f.den_ == g.den_; }
    friend bool operator!=(const BiRat& f, const BiRat& g) { return !(f == g); }

    std::string str(const std::string& u = "U", const std::string& v = "V") const;

private:
    struct NoReduce {};
    BiRat(BiPoly num, BiPoly den, NoReduce) : num_(std::move(num)), den_(std::move(den)) {}
    friend BiRat br_reduce(const BiRat& f);
    friend BiRat br_unreduced(BiPoly num, BiPoly den);

    BiPoly num_;
    BiPoly den_;
};

/// Divides num and den by their bivariate gcd and normalizes den.
BiRat br_reduce(const BiRat& f);
/// Builds num/den without reduction (for testing reduction itself).
BiRat br_unreduced(BiPoly num, BiPoly den);

/// f(su * U, sv * V): every monomial U^p V^q of num and den picks up
/// su^p sv^q. With su = sv = i this rewrites U = iu^n, V = iv^n in u^n, v^n.
BiRat br_scale_vars(const BiRat& f, const GaussRat& su, const GaussRat& sv);

/// coeff / ((U - pole_u)^mult_u (V - pole_v)^mult_v)
struct SepTerm {
    GaussRat coeff;
    GaussRat pole_u;
    unsigned mult_u = 1;
    GaussRat pole_v;
    unsigned mult_v = 1;
};

struct SepKey {
    GaussRat pole_u;
    unsigned mult_u;
    GaussRat pole_v;
    unsigned mult_v;
};

struct SepKeyLess {
    bool operator()(const SepKey& a, const SepKey& b) const;
};

/// Finite sum of SepTerms, merged on (pole_u, mult_u, pole_v, mult_v).
class TransformExpr {
public:
    using Map = std::map<SepKey, GaussRat, SepKeyLess>;

    TransformExpr() = default;
    static TransformExpr single(const SepTerm& t);

    const Map& terms() const { return terms_; }
    std::vector<SepTerm> term_list() const;
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    void accumulate(const SepKey& key, const GaussRat& coeff);

    /// Sum over a common denominator, reduced.
    BiRat to_birat() const;
    std::complex<double> eval(std::complex<double> u, std::complex<double> v) const;

    friend TransformExpr operator+(const TransformExpr& a, const TransformExpr& b);
    friend TransformExpr operator-(const TransformExpr& a, const TransformExpr& b);
    friend TransformExpr scale(const TransformExpr& a, const GaussRat& s);
    friend bool operator==(const TransformExpr& a, const TransformExpr& b);
    friend bool operator!=(const TransformExpr& a, const TransformExpr& b) { return !(a == b); }

    /// Canonical rendering, e.g. "1/((U-1)*(V-1))".
    std::string str() const;

private:
    Map terms_;
};

/// Splits a reduced rational function into separable partial fractions.
/// Throws NonSeparableDenominator, ImproperRational or UnsnappableRoot.
TransformExpr separate(const BiRat& f, const SnapOptions& opts = {});

/// coeff / (W - pole)^mult
struct PoleTerm {
    GaussRat coeff;
    GaussRat pole;
    unsigned mult = 1;
};

/// One-variable partial fractions of num/den over Q(i); roots must snap.
/// Zero coefficients are omitted. Throws ImproperRational when
/// deg num >= deg den.
std::vector<PoleTerm> partial_fractions(const UniPoly& num, const UniPoly& den, const SnapOptions& opts = {});

/// Parses +, -, *, /, ^ (non-negative integer), parentheses, numbers, i and
/// the two variable names into a reduced BiRat.
BiRat parse_birat(std::string_view text, const std::string& u_name = "U", const std::string& v_name = "V");

}  // namespace dfee
