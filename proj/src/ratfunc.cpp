#include "dfee/ratfunc.hpp"

#include <cctype>
#include <sstream>

#include "dfee/error.hpp"

namespace dfee {

// ------------------------------------------------------------------ BiRat --

BiRat::BiRat(BiPoly num) : num_(std::move(num)), den_(GaussRat(1)) {}

BiRat::BiRat(BiPoly num, BiPoly den) {
    if (den.is_zero()) throw Error(ErrorKind::DivisionByZero, "rational function with zero denominator");
    *this = br_reduce(BiRat(std::move(num), std::move(den), NoReduce{}));
}

BiRat br_unreduced(BiPoly num, BiPoly den) {
    if (den.is_zero()) throw Error(ErrorKind::DivisionByZero, "rational function with zero denominator");
    return BiRat(std::move(num), std::move(den), BiRat::NoReduce{});
}

namespace {

/// p / d(U) (in_u) or p / d(V), coefficientwise; d must divide exactly.
BiPoly divide_uni(const BiPoly& p, const UniPoly& d, bool in_u) {
    const std::vector<UniPoly> coeffs = in_u ? p.as_poly_in_v() : p.as_poly_in_u();
    BiPoly out;
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        const UniPoly q = exact_div(coeffs[k], d);
        for (std::size_t e = 0; e < q.coeffs().size(); ++e) {
            const unsigned ke = static_cast<unsigned>(k), ee = static_cast<unsigned>(e);
            out.add_term(in_u ? BiPoly::Exps{ee, ke} : BiPoly::Exps{ke, ee}, q.coeffs()[e]);
        }
    }
    return out;
}

}  // namespace

BiRat br_reduce(const BiRat& f) {
    if (f.num_.is_zero()) return BiRat();
    BiPoly num = f.num_, den = f.den_;
    if (!den.is_constant()) {
        // Common factors in one variable only come out by univariate gcds,
        // which is all that separable denominators ever need.
        const UniPoly gu = gcd(content_in_v(den), content_in_v(num));
        if (!gu.is_constant()) {
            num = divide_uni(num, gu, true);
            den = divide_uni(den, gu, true);
        }
        const UniPoly gv = gcd(content_in_u(den), content_in_u(num));
        if (!gv.is_constant()) {
            num = divide_uni(num, gv, false);
            den = divide_uni(den, gv, false);
        }
        // Anything left that mixes U and V needs the bivariate gcd.
        const UniPoly du = content_in_v(den), dv = content_in_u(den);
        const BiPoly mixed = divide_uni(divide_uni(den, du, true), dv, false);
        if (!mixed.is_constant()) {
            const BiPoly g = gcd(num, mixed);
            if (!g.is_constant()) {
                num = exact_div(num, g);
                den = exact_div(den, g);
            }
        }
    }
    const GaussRat inv = GaussRat(1) / den.lead().second;
    return BiRat(scale(num, inv), scale(den, inv), BiRat::NoReduce{});
}

BiRat br_scale_vars(const BiRat& f, const GaussRat& su, const GaussRat& sv) {
    auto sub = [&](const BiPoly& p) {
        BiPoly out;
        for (const auto& [e, c] : p.terms()) out.add_term(e, c * pow(su, e.first) * pow(sv, e.second));
        return out;
    };
    return BiRat(sub(f.num()), sub(f.den()));
}

GaussRat BiRat::operator()(const GaussRat& u, const GaussRat& v) const { return num_(u, v) / den_(u, v); }

BiRat BiRat::operator-() const { return BiRat(-num_, den_, NoReduce{}); }

BiRat operator+(const BiRat& f, const BiRat& g) {
    if (f.den_ == g.den_) return BiRat(f.num_ + g.num_, f.den_);
    return BiRat(f.num_ * g.den_ + g.num_ * f.den_, f.den_ * g.den_);
}

BiRat operator-(const BiRat& f, const BiRat& g) { return f + (-g); }

BiRat operator*(const BiRat& f, const BiRat& g) {
    if (f.is_zero() || g.is_zero()) return BiRat();
    return BiRat(f.num_ * g.num_, f.den_ * g.den_);
}

BiRat operator/(const BiRat& f, const BiRat& g) {
    if (g.is_zero()) throw Error(ErrorKind::DivisionByZero, "rational function division by zero");
    if (f.is_zero()) return BiRat();
    return BiRat(f.num_ * g.den_, f.den_ * g.num_);
}

std::string BiRat::str(const std::string& u, const std::string& v) const {
    if (den_.is_constant() && den_ == BiPoly(GaussRat(1))) return num_.str(u, v);
    return "(" + num_.str(u, v) + ")/(" + den_.str(u, v) + ")";
}

// ----------------------------------------------------------- TransformExpr --

bool SepKeyLess::operator()(const SepKey& a, const SepKey& b) const {
    if (int c = compare(a.pole_u, b.pole_u)) return c < 0;
    if (a.mult_u != b.mult_u) return a.mult_u < b.mult_u;
    if (int c = compare(a.pole_v, b.pole_v)) return c < 0;
    return a.mult_v < b.mult_v;
}

TransformExpr TransformExpr::single(const SepTerm& t) {
    TransformExpr e;
    e.accumulate(SepKey{t.pole_u, t.mult_u, t.pole_v, t.mult_v}, t.coeff);
    return e;
}

std::vector<SepTerm> TransformExpr::term_list() const {
    std::vector<SepTerm> out;
    for (const auto& [k, c] : terms_) out.push_back({c, k.pole_u, k.mult_u, k.pole_v, k.mult_v});
    return out;
}

void TransformExpr::accumulate(const SepKey& key, const GaussRat& coeff) {
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(key, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

BiRat TransformExpr::to_birat() const {
    if (terms_.empty()) return BiRat();
    std::map<GaussRat, unsigned, GaussRatLess> mu, mv;
    for (const auto& [k, c] : terms_) {
        mu[k.pole_u] = std::max(mu[k.pole_u], k.mult_u);
        mv[k.pole_v] = std::max(mv[k.pole_v], k.mult_v);
    }
    auto product = [](const auto& mults, const GaussRat& skip, unsigned skip_by, bool in_u) {
        UniPoly p(GaussRat(1));
        for (const auto& [pole, m] : mults) {
            const unsigned e = pole == skip ? m - skip_by : m;
            p = p * pow(UniPoly::linear(pole), e);
        }
        return BiPoly::from_uni(p, in_u);
    };
    BiPoly den = product(mu, GaussRat(), 0, true) * product(mv, GaussRat(), 0, false);
    BiPoly num;
    for (const auto& [k, c] : terms_)
        num += scale(product(mu, k.pole_u, k.mult_u, true) * product(mv, k.pole_v, k.mult_v, false), c);
    return BiRat(std::move(num), std::move(den));
}

std::complex<double> TransformExpr::eval(std::complex<double> u, std::complex<double> v) const {
    std::complex<double> sum = 0.0;
    for (const auto& [k, c] : terms_) {
        const auto du = std::pow(u - k.pole_u.to_complex(), static_cast<int>(k.mult_u));
        const auto dv = std::pow(v - k.pole_v.to_complex(), static_cast<int>(k.mult_v));
        sum += c.to_complex() / (du * dv);
    }
    return sum;
}

TransformExpr operator+(const TransformExpr& a, const TransformExpr& b) {
    TransformExpr out = a;
    for (const auto& [k, c] : b.terms_) out.accumulate(k, c);
    return out;
}

TransformExpr operator-(const TransformExpr& a, const TransformExpr& b) {
    TransformExpr out = a;
    for (const auto& [k, c] : b.terms_) out.accumulate(k, -c);
    return out;
}

TransformExpr scale(const TransformExpr& a, const GaussRat& s) {
    TransformExpr out;
    for (const auto& [k, c] : a.terms_) out.accumulate(k, c * s);
    return out;
}

bool operator==(const TransformExpr& a, const TransformExpr& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    auto it = b.terms_.begin();
    for (const auto& [k, c] : a.terms_) {
        const SepKey& o = it->first;
        if (k.pole_u != o.pole_u || k.mult_u != o.mult_u || k.pole_v != o.pole_v || k.mult_v != o.mult_v ||
            c != it->second)
            return false;
        ++it;
    }
    return true;
}

namespace {

std::string gauss_literal(const GaussRat& g) {
    if (g.is_real()) return g.re().str();
    std::string im = g.im() == Rational(1) ? "i" : g.im() == Rational(-1) ? "-i" : g.im().str() + "*i";
    if (g.re().is_zero()) return im;
    return g.re().str() + (g.im().sign() > 0 ? "+" : "") + im;
}

std::string linear_factor(const std::string& var, const GaussRat& pole, unsigned mult) {
    std::string f;
    if (pole.is_zero()) {
        f = var;
    } else if (pole.is_real()) {
        f = "(" + var + (pole.re().sign() > 0 ? "-" + pole.re().str() : "+" + (-pole.re()).str()) + ")";
    } else {
        f = "(" + var + "-(" + gauss_literal(pole) + "))";
    }
    if (mult > 1) f += "^" + std::to_string(mult);
    return f;
}

}  // namespace

std::string TransformExpr::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        std::string coeff;
        bool neg = false;
        if (c.is_real()) {
            neg = c.re().sign() < 0;
            coeff = (neg ? -c.re() : c.re()).str();
        } else {
            coeff = "(" + gauss_literal(c) + ")";
        }
        os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
        first = false;
        os << coeff << "/(" << linear_factor("U", k.pole_u, k.mult_u) << "*" << linear_factor("V", k.pole_v, k.mult_v)
           << ")";
    }
    return os.str();
}

// --------------------------------------------------------- partial fractions --

namespace {

/// Coefficient-ring helpers so one partial-fraction routine serves both the
/// Q(i) and the Q(i)[V] numerators.
inline bool is_zero(const GaussRat& g) { return g.is_zero(); }
inline bool is_zero(const UniPoly& p) { return p.is_zero(); }
inline GaussRat times(const GaussRat& t, const GaussRat& s) { return t * s; }
inline UniPoly times(const UniPoly& t, const GaussRat& s) { return t * UniPoly(s); }

template <typename T>
struct RingTerm {
    T coeff;
    GaussRat pole;
    unsigned mult;
};

/// num(W) / (lead * prod (W - a)^m) for known exact roots. num's coefficients
/// live in T; the denominator is over Q(i).
template <typename T>
std::vector<RingTerm<T>> split_known_roots(std::vector<T> num, const GaussRat& lead,
                                           const std::vector<RootMultiplicity>& roots) {
    while (!num.empty() && is_zero(num.back())) num.pop_back();
    unsigned total = 0;
    for (const auto& r : roots) total += r.multiplicity;
    if (num.size() > total)
        throw Error(ErrorKind::ImproperRational, "numerator degree is not below denominator degree");

    std::vector<RingTerm<T>> out;
    for (std::size_t i = 0; i < roots.size(); ++i) {
        const GaussRat& a = roots[i].root;
        const unsigned m = roots[i].multiplicity;
        UniPoly others(lead);
        for (std::size_t j = 0; j < roots.size(); ++j)
            if (j != i) others = others * pow(UniPoly::linear(roots[j].root), roots[j].multiplicity);
        const UniPoly q = others.taylor_shift(a);

        // num(t + a) truncated to t^{m-1}: coefficient j is sum_k num_k C(k, j) a^{k-j}.
        std::vector<T> shifted(m);
        for (unsigned j = 0; j < m; ++j) {
            for (std::size_t k = j; k < num.size(); ++k) {
                const GaussRat w = GaussRat(binomial(static_cast<unsigned>(k), j)) * pow(a, static_cast<unsigned>(k - j));
                shifted[j] = shifted[j] + times(num[k], w);
            }
        }
        // Power-series quotient shifted / q modulo t^m.
        const GaussRat inv_q0 = GaussRat(1) / q.coeff(0);
        std::vector<T> c(m);
        for (unsigned k = 0; k < m; ++k) {
            T acc = shifted[k];
            for (unsigned j = 1; j <= k; ++j) acc = acc - times(c[k - j], q.coeff(j));
            c[k] = times(acc, inv_q0);
        }
        for (unsigned k = 0; k < m; ++k)
            if (!is_zero(c[k])) out.push_back({c[k], a, m - k});
    }
    return out;
}

}  // namespace

std::vector<PoleTerm> partial_fractions(const UniPoly& num, const UniPoly& den, const SnapOptions& opts) {
    if (den.is_zero()) throw Error(ErrorKind::DivisionByZero, "partial fractions over zero");
    if (num.is_zero()) return {};
    if (den.degree() < 1) throw Error(ErrorKind::ImproperRational, "constant denominator");
    const auto roots = snap_roots(den, opts);
    std::vector<PoleTerm> out;
    for (auto& t : split_known_roots<GaussRat>(num.coeffs(), den.lead(), roots))
        out.push_back({t.coeff, t.pole, t.mult});
    return out;
}

TransformExpr separate(const BiRat& f, const SnapOptions& opts) {
    TransformExpr out;
    if (f.is_zero()) return out;

    const BiPoly& den = f.den();
    const UniPoly den_v = content_in_u(den);
    const BiPoly rest = exact_div(den, BiPoly::from_uni(den_v, false));
    if (rest.deg_v() > 0)
        throw Error(ErrorKind::NonSeparableDenominator,
                    "denominator " + den.str() + " has a factor mixing U and V");
    const auto rest_u = rest.as_poly_in_u();
    std::vector<GaussRat> du_coeffs;
    for (const auto& c : rest_u) du_coeffs.push_back(c.coeff(0));
    const UniPoly den_u(std::move(du_coeffs));

    if (den_u.degree() < 1 || den_v.degree() < 1)
        throw Error(ErrorKind::ImproperRational, "no pole in " + std::string(den_u.degree() < 1 ? "U" : "V") +
                                                     ": image of a distribution, not a function");

    const auto roots_u = snap_roots(den_u, opts);
    const auto roots_v = snap_roots(den_v, opts);

    // Partial fractions in U with coefficients in Q(i)[V] ...
    const auto in_u = split_known_roots<UniPoly>(f.num().as_poly_in_u(), den_u.lead(), roots_u);
    // ... then each coefficient over den_v in V.
    for (const auto& tu : in_u) {
        for (const auto& tv : split_known_roots<GaussRat>(tu.coeff.coeffs(), den_v.lead(), roots_v))
            out.accumulate(SepKey{tu.pole, tu.mult, tv.pole, tv.mult}, tv.coeff);
    }
    return out;
}

// ------------------------------------------------------------- parse_birat --

namespace {

class RatParser {
public:
    RatParser(std::string_view text, std::string u, std::string v)
        : text_(text), u_(std::move(u)), v_(std::move(v)) {}

    BiRat run() {
        BiRat r = expr();
        skip();
        if (pos_ != text_.size()) throw SyntaxError(pos_, std::string("unexpected '") + text_[pos_] + "'");
        return r;
    }

private:
    void skip() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool accept(char c) {
        skip();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    BiRat expr() {
        BiRat acc = term();
        for (;;) {
            if (accept('+')) acc = acc + term();
            else if (accept('-')) acc = acc - term();
            else return acc;
        }
    }

    BiRat term() {
        BiRat acc = factor();
        for (;;) {
            if (accept('*')) acc = acc * factor();
            else if (accept('/')) acc = acc / factor();
            else return acc;
        }
    }

    BiRat factor() {
        if (accept('-')) return -factor();
        if (accept('+')) return factor();
        BiRat b = base();
        if (accept('^')) {
            skip();
            const std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            if (start == pos_) throw SyntaxError(start, "expected integer exponent");
            const unsigned k = static_cast<unsigned>(std::stoul(std::string(text_.substr(start, pos_ - start))));
            BiRat out(1);
            for (unsigned j = 0; j < k; ++j) out = out * b;
            return out;
        }
        return b;
    }

    BiRat base() {
        skip();
        if (pos_ >= text_.size()) throw SyntaxError(pos_, "unexpected end of input");
        const std::size_t at = pos_;
        const char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            BiRat e = expr();
            if (!accept(')')) throw SyntaxError(pos_, "expected ')'");
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            while (pos_ < text_.size() &&
                   (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.'))
                ++pos_;
            return BiRat(GaussRat(Rational::parse(text_.substr(at, pos_ - at))));
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            const std::string id(text_.substr(at, pos_ - at));
            if (id == u_) return BiRat(BiPoly::U());
            if (id == v_) return BiRat(BiPoly::V());
            if (id == "i") return BiRat(GaussRat::i());
            throw SyntaxError(at, "unknown symbol '" + id + "'");
        }
        throw SyntaxError(at, std::string("unexpected '") + c + "'");
    }

    std::string_view text_;
    std::string u_, v_;
    std::size_t pos_ = 0;
};

}  // namespace

BiRat parse_birat(std::string_view text, const std::string& u_name, const std::string& v_name) {
    return RatParser(text, u_name, v_name).run();
}

}  // namespace dfee
