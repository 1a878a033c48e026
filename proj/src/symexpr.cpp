#include "dfee/symexpr.hpp"

#include <cmath>
#include <sstream>

namespace dfee {

bool TermKeyLess::operator()(const TermKey& l, const TermKey& r) const {
    if (l.r != r.r) return l.r < r.r;
    if (l.m != r.m) return l.m < r.m;
    if (int c = compare(l.a, r.a)) return c < 0;
    return compare(l.b, r.b) < 0;
}

bool operator==(const TermKey& l, const TermKey& r) {
    return l.r == r.r && l.m == r.m && l.a == r.a && l.b == r.b;
}

ExpPolyExpr::ExpPolyExpr(const GaussRat& c) { accumulate(TermKey{}, c); }

ExpPolyExpr ExpPolyExpr::term(const GaussRat& coeff, unsigned r, unsigned m, const GaussRat& a,
                              const GaussRat& b) {
    ExpPolyExpr e;
    e.accumulate(TermKey{r, m, a, b}, coeff);
    return e;
}

std::vector<ExpPolyTerm> ExpPolyExpr::term_list() const {
    std::vector<ExpPolyTerm> out;
    out.reserve(terms_.size());
    for (const auto& [k, c] : terms_) out.push_back({c, k});
    return out;
}

void ExpPolyExpr::accumulate(const TermKey& key, const GaussRat& coeff) {
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(key, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

bool ExpPolyExpr::depends_on(Var v) const {
    for (const auto& [k, c] : terms_) {
        if (v == Var::X && (k.r != 0 || !k.a.is_zero())) return true;
        if (v == Var::Y && (k.m != 0 || !k.b.is_zero())) return true;
    }
    return false;
}

bool ExpPolyExpr::has_real_data() const {
    for (const auto& [k, c] : terms_)
        if (!c.is_real() || !k.a.is_real() || !k.b.is_real()) return false;
    return true;
}

ExpPolyExpr ExpPolyExpr::operator-() const { return ep_scale(*this, GaussRat(-1)); }

ExpPolyExpr& ExpPolyExpr::operator+=(const ExpPolyExpr& g) {
    for (const auto& [k, c] : g.terms_) accumulate(k, c);
    return *this;
}

ExpPolyExpr& ExpPolyExpr::operator-=(const ExpPolyExpr& g) {
    for (const auto& [k, c] : g.terms_) accumulate(k, -c);
    return *this;
}

ExpPolyExpr operator+(const ExpPolyExpr& f, const ExpPolyExpr& g) {
    ExpPolyExpr out = f;
    out += g;
    return out;
}

ExpPolyExpr operator-(const ExpPolyExpr& f, const ExpPolyExpr& g) {
    ExpPolyExpr out = f;
    out -= g;
    return out;
}

ExpPolyExpr operator*(const ExpPolyExpr& f, const ExpPolyExpr& g) {
    ExpPolyExpr out;
    for (const auto& [kf, cf] : f.terms_)
        for (const auto& [kg, cg] : g.terms_)
            out.accumulate(TermKey{kf.r + kg.r, kf.m + kg.m, kf.a + kg.a, kf.b + kg.b}, cf * cg);
    return out;
}

ExpPolyExpr operator*(const GaussRat& s, const ExpPolyExpr& f) { return ep_scale(f, s); }

bool operator==(const ExpPolyExpr& f, const ExpPolyExpr& g) {
    if (f.terms_.size() != g.terms_.size()) return false;
    auto it = g.terms_.begin();
    for (const auto& [k, c] : f.terms_) {
        if (!(k == it->first) || c != it->second) return false;
        ++it;
    }
    return true;
}

std::string ExpPolyExpr::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    auto rate = [](const GaussRat& g) { return "(" + g.str() + ")"; };
    for (const auto& [k, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")";
        if (k.r) os << "*x^" << k.r;
        if (k.m) os << "*y^" << k.m;
        if (!k.a.is_zero() || !k.b.is_zero()) os << "*e^(" << rate(k.a) << "*x+" << rate(k.b) << "*y)";
    }
    return os.str();
}

ExpPolyExpr ep_scale(const ExpPolyExpr& f, const GaussRat& s) {
    ExpPolyExpr out;
    if (s.is_zero()) return out;
    for (const auto& [k, c] : f.terms()) out.accumulate(k, c * s);
    return out;
}

ExpPolyExpr ep_pow(const ExpPolyExpr& f, unsigned k) {
    ExpPolyExpr out(GaussRat(1));
    for (unsigned i = 0; i < k; ++i) out = out * f;
    return out;
}

ExpPolyExpr ep_diff(const ExpPolyExpr& f, Var v, unsigned order) {
    ExpPolyExpr cur = f;
    for (unsigned step = 0; step < order; ++step) {
        ExpPolyExpr next;
        for (const auto& [k, c] : cur.terms()) {
            const unsigned p = v == Var::X ? k.r : k.m;
            const GaussRat& rate = v == Var::X ? k.a : k.b;
            // d/dt [t^p e^{rate t}] = p t^{p-1} e^{rate t} + rate t^p e^{rate t}
            if (p > 0) {
                TermKey lower = k;
                (v == Var::X ? lower.r : lower.m) = p - 1;
                next.accumulate(lower, c * GaussRat(static_cast<long>(p)));
            }
            if (!rate.is_zero()) next.accumulate(k, c * rate);
        }
        cur = std::move(next);
    }
    return cur;
}

ExpPolyExpr ep_trace(const ExpPolyExpr& f, Var v) {
    ExpPolyExpr out;
    for (const auto& [k, c] : f.terms()) {
        TermKey t = k;
        if (v == Var::X) {
            if (k.r != 0) continue;
            t.a = GaussRat();
        } else {
            if (k.m != 0) continue;
            t.b = GaussRat();
        }
        out.accumulate(t, c);
    }
    return out;
}

CompiledExpPoly::CompiledExpPoly(const ExpPolyExpr& f) {
    terms_.reserve(f.size());
    for (const auto& [k, c] : f.terms())
        terms_.push_back({c.to_complex(), k.r, k.m, k.a.to_complex(), k.b.to_complex()});
}

std::complex<double> CompiledExpPoly::operator()(double x, double y) const {
    std::complex<double> sum = 0.0;
    for (const Term& t : terms_) {
        std::complex<double> v = t.coeff;
        if (t.r) v *= std::pow(x, static_cast<int>(t.r));
        if (t.m) v *= std::pow(y, static_cast<int>(t.m));
        const std::complex<double> arg = t.a * x + t.b * y;
        if (arg.imag() == 0.0)
            v *= std::exp(arg.real());
        else
            v *= std::exp(arg);
        sum += v;
    }
    return sum;
}

std::complex<double> ep_eval(const ExpPolyExpr& f, double x, double y) {
    return CompiledExpPoly(f)(x, y);
}

std::vector<ExpMonomial> convolve_1d(unsigned r, const GaussRat& a, unsigned q, const GaussRat& c) {
    std::vector<ExpMonomial> out;
    if (a == c) {
        // e^{at} int_0^t (t-s)^r s^q ds = e^{at} t^{r+q+1} r! q! / (r+q+1)!
        out.push_back({GaussRat(factorial(r) * factorial(q) / factorial(r + q + 1)), r + q + 1, a});
        return out;
    }
    const GaussRat delta = c - a;
    // (t-s)^r = sum_k C(r,k) t^{r-k} (-s)^k, then
    // int_0^t s^n e^{delta s} ds
    //   = e^{delta t} sum_j (-1)^j n!/(n-j)! t^{n-j} / delta^{j+1} - (-1)^n n! / delta^{n+1}.
    for (unsigned k = 0; k <= r; ++k) {
        GaussRat outer(binomial(r, k));
        if (k % 2) outer = -outer;
        const unsigned n = q + k;
        const Rational nfact = factorial(n);
        GaussRat dpow = delta;
        for (unsigned j = 0; j <= n; ++j) {
            GaussRat coeff = outer * GaussRat(nfact / factorial(n - j)) / dpow;
            if (j % 2) coeff = -coeff;
            out.push_back({coeff, r - k + n - j, c});
            dpow *= delta;
        }
        GaussRat tail = outer * GaussRat(nfact) / pow(delta, n + 1);
        if (n % 2 == 0) tail = -tail;
        out.push_back({tail, r - k, a});
    }
    return out;
}

ExpPolyExpr ep_convolve(const ExpPolyExpr& f, const ExpPolyExpr& g) {
    ExpPolyExpr out;
    for (const auto& [kf, cf] : f.terms()) {
        for (const auto& [kg, cg] : g.terms()) {
            const auto xs = convolve_1d(kf.r, kf.a, kg.r, kg.a);
            const auto ys = convolve_1d(kf.m, kf.b, kg.m, kg.b);
            const GaussRat base = cf * cg;
            for (const auto& ex : xs)
                for (const auto& ey : ys)
                    out.accumulate(TermKey{ex.power, ey.power, ex.rate, ey.rate}, base * ex.coeff * ey.coeff);
        }
    }
    return out;
}

AlphaSeries::AlphaSeries(ExpPolyExpr f) {
    if (!f.is_zero()) parts_.push_back(std::move(f));
}

AlphaSeries AlphaSeries::alpha() {
    AlphaSeries a;
    a.add_part(1, ExpPolyExpr(GaussRat(1)));
    return a;
}

ExpPolyExpr AlphaSeries::part(std::size_t k) const { return k < parts_.size() ? parts_[k] : ExpPolyExpr(); }

void AlphaSeries::add_part(std::size_t k, const ExpPolyExpr& f) {
    if (f.is_zero()) return;
    if (parts_.size() <= k) parts_.resize(k + 1);
    parts_[k] += f;
    trim();
}

void AlphaSeries::trim() {
    while (!parts_.empty() && parts_.back().is_zero()) parts_.pop_back();
}

ExpPolyExpr AlphaSeries::at(const Rational& alpha) const {
    ExpPolyExpr out;
    Rational w(1);
    for (const auto& p : parts_) {
        out += ep_scale(p, GaussRat(w));
        w *= alpha;
    }
    return out;
}

AlphaSeries operator+(const AlphaSeries& p, const AlphaSeries& q) {
    AlphaSeries out = p;
    for (std::size_t k = 0; k < q.parts_.size(); ++k) out.add_part(k, q.parts_[k]);
    return out;
}

AlphaSeries operator-(const AlphaSeries& p, const AlphaSeries& q) {
    AlphaSeries out = p;
    for (std::size_t k = 0; k < q.parts_.size(); ++k) out.add_part(k, -q.parts_[k]);
    return out;
}

AlphaSeries operator*(const AlphaSeries& p, const AlphaSeries& q) {
    AlphaSeries out;
    for (std::size_t i = 0; i < p.parts_.size(); ++i)
        for (std::size_t j = 0; j < q.parts_.size(); ++j) out.add_part(i + j, p.parts_[i] * q.parts_[j]);
    return out;
}

}  // namespace dfee
