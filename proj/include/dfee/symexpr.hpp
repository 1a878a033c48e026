#pragma once

#include <complex>
#include <map>
#include <string>
#include <vector>

#include "dfee/scalar.hpp"

namespace dfee {

enum class Var { X, Y };

/// Shape of one term x^r * y^m * e^{a x + b y}; terms with equal keys merge.
struct TermKey {
    unsigned r = 0;
    unsigned m = 0;
    GaussRat a;
    GaussRat b;
};

struct TermKeyLess {
    bool operator()(const TermKey& l, const TermKey& r) const;
};

bool operator==(const TermKey& l, const TermKey& r);

struct ExpPolyTerm {
    GaussRat coeff;
    TermKey key;
};

/// Finite sum of coeff * x^r * y^m * e^{a x + b y} in merged form. The empty
/// sum is the zero function.
class ExpPolyExpr {
public:
    using Map = std::map<TermKey, GaussRat, TermKeyLess>;

    ExpPolyExpr() = default;
    /// Constant function.
    explicit ExpPolyExpr(const GaussRat& c);
    static ExpPolyExpr term(const GaussRat& coeff, unsigned r, unsigned m, const GaussRat& a = {},
                            const GaussRat& b = {});
    static ExpPolyExpr x() { return term(1, 1, 0); }
    static ExpPolyExpr y() { return term(1, 0, 1); }
    /// e^{a x + b y}
    static ExpPolyExpr exp(const GaussRat& a, const GaussRat& b) { return term(1, 0, 0, a, b); }

    const Map& terms() const { return terms_; }
    std::vector<ExpPolyTerm> term_list() const;
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    /// Adds coeff to the term with this key, dropping it if it cancels.
    void accumulate(const TermKey& key, const GaussRat& coeff);

    bool depends_on(Var v) const;
    /// Every coefficient and rate is real.
    bool has_real_data() const;

    ExpPolyExpr operator-() const;
    friend ExpPolyExpr operator+(const ExpPolyExpr& f, const ExpPolyExpr& g);
    friend ExpPolyExpr operator-(const ExpPolyExpr& f, const ExpPolyExpr& g);
    friend ExpPolyExpr operator*(const ExpPolyExpr& f, const ExpPolyExpr& g);
    friend ExpPolyExpr operator*(const GaussRat& s, const ExpPolyExpr& f);
    ExpPolyExpr& operator+=(const ExpPolyExpr& g);
    ExpPolyExpr& operator-=(const ExpPolyExpr& g);

    friend bool operator==(const ExpPolyExpr& f, const ExpPolyExpr& g);
    friend bool operator!=(const ExpPolyExpr& f, const ExpPolyExpr& g) { return !(f == g); }

    /// Debug rendering in the input grammar (complex data shown with i).
    std::string str() const;

private:
    Map terms_;
};

ExpPolyExpr ep_scale(const ExpPolyExpr& f, const GaussRat& s);
ExpPolyExpr ep_pow(const ExpPolyExpr& f, unsigned k);

/// Exact partial derivative; order 0 is the identity.
ExpPolyExpr ep_diff(const ExpPolyExpr& f, Var v, unsigned order = 1);

/// Restricts x = 0 (Var::X) or y = 0 (Var::Y) exactly.
ExpPolyExpr ep_trace(const ExpPolyExpr& f, Var v);

/// Machine evaluation of the sum at (x, y).
std::complex<double> ep_eval(const ExpPolyExpr& f, double x, double y);

/// Double-precision snapshot of an ExpPolyExpr for repeated evaluation.
class CompiledExpPoly {
public:
    CompiledExpPoly() = default;
    explicit CompiledExpPoly(const ExpPolyExpr& f);

    std::complex<double> operator()(double x, double y) const;

private:
    struct Term {
        std::complex<double> coeff;
        unsigned r;
        unsigned m;
        std::complex<double> a;
        std::complex<double> b;
    };
    std::vector<Term> terms_;
};

/// Closed-form double convolution
///   (f ** g)(x, y) = int_0^y int_0^x f(x - tau, y - mu) g(tau, mu) dtau dmu.
ExpPolyExpr ep_convolve(const ExpPolyExpr& f, const ExpPolyExpr& g);

/// One summand coeff * t^power * e^{rate t} of a univariate exp-poly.
struct ExpMonomial {
    GaussRat coeff;
    unsigned power = 0;
    GaussRat rate;
};

/// int_0^t (t-s)^r e^{a(t-s)} s^q e^{c s} ds, unmerged.
std::vector<ExpMonomial> convolve_1d(unsigned r, const GaussRat& a, unsigned q, const GaussRat& c);

/// Polynomial in alpha with ExpPolyExpr coefficients: sum_k alpha^k * parts[k].
/// Trailing zero coefficients are never stored.
class AlphaSeries {
public:
    AlphaSeries() = default;
    explicit AlphaSeries(ExpPolyExpr f);
    static AlphaSeries alpha();

    const std::vector<ExpPolyExpr>& parts() const { return parts_; }
    /// Coefficient of alpha^k (zero beyond the degree).
    ExpPolyExpr part(std::size_t k) const;
    /// -1 for the zero series.
    int degree() const { return static_cast<int>(parts_.size()) - 1; }
    bool is_zero() const { return parts_.empty(); }

    void add_part(std::size_t k, const ExpPolyExpr& f);
    /// Crisp function at a given alpha.
    ExpPolyExpr at(const Rational& alpha) const;

    friend AlphaSeries operator+(const AlphaSeries& p, const AlphaSeries& q);
    friend AlphaSeries operator-(const AlphaSeries& p, const AlphaSeries& q);
    friend AlphaSeries operator*(const AlphaSeries& p, const AlphaSeries& q);
    friend bool operator==(const AlphaSeries& p, const AlphaSeries& q) { return p.parts_ == q.parts_; }
    friend bool operator!=(const AlphaSeries& p, const AlphaSeries& q) { return !(p == q); }

    /// Applies a linear map to every coefficient.
    template <typename F>
    AlphaSeries map(F&& fn) const {
        AlphaSeries out;
        for (std::size_t k = 0; k < parts_.size(); ++k) out.add_part(k, fn(parts_[k]));
        return out;
    }

private:
    void trim();
    std::vector<ExpPolyExpr> parts_;
};

}  // namespace dfee
