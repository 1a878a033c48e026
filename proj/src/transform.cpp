#include "dfee/transform.hpp"

#include "dfee/error.hpp"

namespace dfee {

bool SingleTransformExpr::KeyLess::operator()(const Key& a, const Key& b) const {
    if (int c = compare(a.pole, b.pole)) return c < 0;
    return a.mult < b.mult;
}

std::vector<PoleTerm> SingleTransformExpr::term_list() const {
    std::vector<PoleTerm> out;
    for (const auto& [k, c] : terms_) out.push_back({c, k.pole, k.mult});
    return out;
}

void SingleTransformExpr::accumulate(const GaussRat& pole, unsigned mult, const GaussRat& coeff) {
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(Key{pole, mult}, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

BiRat SingleTransformExpr::to_birat() const {
    const bool in_u = var_ == Var::X;
    BiRat sum;
    for (const auto& [k, c] : terms_)
        sum = sum + BiRat(BiPoly(c), BiPoly::from_uni(pow(UniPoly::linear(k.pole), k.mult), in_u));
    return sum;
}

bool operator==(const SingleTransformExpr& a, const SingleTransformExpr& b) {
    if (a.var_ != b.var_ || a.terms_.size() != b.terms_.size()) return false;
    auto it = b.terms_.begin();
    for (const auto& [k, c] : a.terms_) {
        if (k.pole != it->first.pole || k.mult != it->first.mult || c != it->second) return false;
        ++it;
    }
    return true;
}

TransformExpr forward(const ExpPolyExpr& f) {
    TransformExpr out;
    for (const auto& [k, c] : f.terms())
        out.accumulate(SepKey{k.a, k.r + 1, k.b, k.m + 1}, c * GaussRat(factorial(k.r) * factorial(k.m)));
    return out;
}

SingleTransformExpr forward_single(const ExpPolyExpr& f, Var var) {
    const Var other = var == Var::X ? Var::Y : Var::X;
    if (f.depends_on(other))
        throw Error(ErrorKind::MixedVariable, "expected a function of " + std::string(var == Var::X ? "x" : "y") +
                                                  " only, got " + f.str());
    SingleTransformExpr out(var);
    for (const auto& [k, c] : f.terms()) {
        const unsigned p = var == Var::X ? k.r : k.m;
        out.accumulate(var == Var::X ? k.a : k.b, p + 1, c * GaussRat(factorial(p)));
    }
    return out;
}

ExpPolyExpr inverse(const TransformExpr& t) {
    ExpPolyExpr out;
    for (const auto& [k, c] : t.terms()) {
        const GaussRat w = GaussRat(factorial(k.mult_u - 1) * factorial(k.mult_v - 1));
        out.accumulate(TermKey{k.mult_u - 1, k.mult_v - 1, k.pole_u, k.pole_v}, c / w);
    }
    return out;
}

TransformExpr shift(const TransformExpr& t, const GaussRat& a, const GaussRat& b) {
    TransformExpr out;
    for (const auto& [k, c] : t.terms()) out.accumulate(SepKey{k.pole_u + a, k.mult_u, k.pole_v + b, k.mult_v}, c);
    return out;
}

BiRat convolve_image(const TransformExpr& f, const TransformExpr& g) {
    if (f.is_zero() || g.is_zero()) return BiRat();
    return f.to_birat() * g.to_birat();
}

DerivativeImage derivative_image(Var var, unsigned order, const std::vector<SingleTransformExpr>& ics) {
    if (ics.size() != order)
        throw Error(ErrorKind::ArityMismatch, "derivative of order " + std::to_string(order) + " needs " +
                                                  std::to_string(order) + " initial conditions, got " +
                                                  std::to_string(ics.size()));
    const bool in_u = var == Var::X;
    const Var trace_var = in_u ? Var::Y : Var::X;
    DerivativeImage img;
    img.var = var;
    img.order = order;
    img.main = BiRat(BiPoly::monomial(GaussRat(1), in_u ? order : 0, in_u ? 0 : order));
    for (unsigned k = 0; k < order; ++k) {
        if (!ics[k].is_zero() && ics[k].var() != trace_var)
            throw Error(ErrorKind::MixedVariable, "initial condition image is in the wrong variable");
        const unsigned e = order - 1 - k;
        const BiRat w(BiPoly::monomial(GaussRat(1), in_u ? e : 0, in_u ? 0 : e));
        img.boundary = img.boundary + w * ics[k].to_birat();
    }
    return img;
}

}  // namespace dfee
