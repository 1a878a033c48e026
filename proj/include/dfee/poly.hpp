#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "dfee/scalar.hpp"

namespace dfee {

/// Dense univariate polynomial over Q(i); coeffs()[k] multiplies W^k. The
/// zero polynomial has no coefficients.
class UniPoly {
public:
    UniPoly() = default;
    UniPoly(GaussRat c);  // NOLINT(google-explicit-constructor)
    explicit UniPoly(std::vector<GaussRat> coeffs);
    /// W - root
    static UniPoly linear(const GaussRat& root);
    static UniPoly monomial(const GaussRat& c, unsigned k);

    const std::vector<GaussRat>& coeffs() const { return c_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    GaussRat lead() const { return c_.empty() ? GaussRat() : c_.back(); }
    GaussRat coeff(std::size_t k) const { return k < c_.size() ? c_[k] : GaussRat(); }

    GaussRat operator()(const GaussRat& w) const;
    UniPoly derivative() const;
    UniPoly monic() const;
    /// p(W + shift)
    UniPoly taylor_shift(const GaussRat& shift) const;

    UniPoly operator-() const;
    friend UniPoly operator+(const UniPoly& p, const UniPoly& q);
    friend UniPoly operator-(const UniPoly& p, const UniPoly& q);
    friend UniPoly operator*(const UniPoly& p, const UniPoly& q);
    UniPoly& operator+=(const UniPoly& q) { return *this = *this + q; }
    UniPoly& operator-=(const UniPoly& q) { return *this = *this - q; }
    friend bool operator==(const UniPoly& p, const UniPoly& q) { return p.c_ == q.c_; }
    friend bool operator!=(const UniPoly& p, const UniPoly& q) { return !(p == q); }

    std::string str(char var = 'W') const;

private:
    void trim();
    std::vector<GaussRat> c_;
};

UniPoly pow(const UniPoly& p, unsigned k);
/// Euclidean division; throws DivisionByZero for a zero divisor.
std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);
/// Monic gcd (zero only if both inputs are zero).
UniPoly gcd(const UniPoly& a, const UniPoly& b);
/// Quotient of an exact division; throws if the remainder is nonzero.
UniPoly exact_div(const UniPoly& a, const UniPoly& b);

/// Sparse bivariate polynomial in U, V over Q(i), keyed by (degU, degV).
class BiPoly {
public:
    using Exps = std::pair<unsigned, unsigned>;
    using Map = std::map<Exps, GaussRat>;

    BiPoly() = default;
    BiPoly(GaussRat c);  // NOLINT(google-explicit-constructor)
    BiPoly(int c) : BiPoly(GaussRat(c)) {}  // NOLINT(google-explicit-constructor)
    static BiPoly U() { return monomial(1, 1, 0); }
    static BiPoly V() { return monomial(1, 0, 1); }
    static BiPoly monomial(const GaussRat& c, unsigned du, unsigned dv);
    /// Embeds p(U) (in_u) or p(V).
    static BiPoly from_uni(const UniPoly& p, bool in_u);

    const Map& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    bool is_constant() const;
    int deg_u() const;
    int deg_v() const;
    /// Leading term in lex order with U major.
    std::pair<Exps, GaussRat> lead() const;

    /// Coefficients as a polynomial in U: result[k] is the V-polynomial
    /// multiplying U^k.
    std::vector<UniPoly> as_poly_in_u() const;
    /// Same with the roles swapped.
    std::vector<UniPoly> as_poly_in_v() const;
    static BiPoly from_poly_in_u(const std::vector<UniPoly>& coeffs);

    GaussRat operator()(const GaussRat& u, const GaussRat& v) const;

    void add_term(const Exps& e, const GaussRat& c);

    BiPoly operator-() const;
    friend BiPoly operator+(const BiPoly& p, const BiPoly& q);
    friend BiPoly operator-(const BiPoly& p, const BiPoly& q);
    friend BiPoly operator*(const BiPoly& p, const BiPoly& q);
    BiPoly& operator+=(const BiPoly& q);
    BiPoly& operator-=(const BiPoly& q);
    friend bool operator==(const BiPoly& p, const BiPoly& q) { return p.t_ == q.t_; }
    friend bool operator!=(const BiPoly& p, const BiPoly& q) { return !(p == q); }

    /// Renders with the given variable names, e.g. "U^2 + 2*U*V + V^2".
    std::string str(const std::string& u = "U", const std::string& v = "V") const;

private:
    Map t_;
};

BiPoly scale(const BiPoly& p, const GaussRat& s);
BiPoly pow(const BiPoly& p, unsigned k);
/// Exact quotient; throws if b does not divide a.
BiPoly exact_div(const BiPoly& a, const BiPoly& b);
/// gcd of the V-polynomial coefficients of a viewed in (Q(i)[V])[U] (monic).
UniPoly content_in_u(const BiPoly& a);
/// gcd of the U-polynomial coefficients of a viewed in (Q(i)[U])[V] (monic).
UniPoly content_in_v(const BiPoly& a);
/// Bivariate gcd via primitive remainder sequences in U with V-contents
/// handled by univariate gcds. Normalized monic in the lex leading term.
BiPoly gcd(const BiPoly& a, const BiPoly& b);

}  // namespace dfee
