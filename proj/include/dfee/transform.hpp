#pragma once

#include <map>
#include <string>
#include <vector>

#include "dfee/ratfunc.hpp"
#include "dfee/symexpr.hpp"

namespace dfee {

/// Sum of coeff / (W - pole)^mult in one transform variable W (U for
/// functions of x, V for functions of y).
class SingleTransformExpr {
public:
    SingleTransformExpr() = default;
    explicit SingleTransformExpr(Var var) : var_(var) {}

    Var var() const { return var_; }
    std::vector<PoleTerm> term_list() const;
    bool is_zero() const { return terms_.empty(); }

    void accumulate(const GaussRat& pole, unsigned mult, const GaussRat& coeff);
    /// As a rational function of U (var X) or V (var Y).
    BiRat to_birat() const;

    friend bool operator==(const SingleTransformExpr& a, const SingleTransformExpr& b);

private:
    struct Key {
        GaussRat pole;
        unsigned mult;
    };
    struct KeyLess {
        bool operator()(const Key& a, const Key& b) const;
    };
    Var var_ = Var::X;
    std::map<Key, GaussRat, KeyLess> terms_;
};

/// C x^r y^m e^{ax+by}  ->  C r! m! / ((U-a)^{r+1} (V-b)^{m+1}), termwise.
TransformExpr forward(const ExpPolyExpr& f);

/// One-variable transform of f, which must depend on `var` only.
/// Throws MixedVariable otherwise.
SingleTransformExpr forward_single(const ExpPolyExpr& f, Var var);

/// Table inversion; exact inverse of forward.
ExpPolyExpr inverse(const TransformExpr& t);

/// Substitutes U -> U - a, V -> V - b (every pole moves by (a, b)).
TransformExpr shift(const TransformExpr& t, const GaussRat& a, const GaussRat& b);

/// Product of two images, reduced.
BiRat convolve_image(const TransformExpr& f, const TransformExpr& g);

/// Image of d^order w / d var^order as main * w_hat - boundary.
struct DerivativeImage {
    Var var = Var::X;
    unsigned order = 0;
    BiRat main;
    BiRat boundary;

    BiRat apply(const BiRat& w_hat) const { return main * w_hat - boundary; }
};

/// ics[k] is the image of the k-th derivative trace (k = 0..order-1); each
/// is paired with W^{order-1-k}. Throws ArityMismatch on a count mismatch.
DerivativeImage derivative_image(Var var, unsigned order, const std::vector<SingleTransformExpr>& ics);

}  // namespace dfee
