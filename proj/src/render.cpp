#include "dfee/render.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "dfee/error.hpp"
#include "dfee/fuzzy.hpp"

namespace dfee {

namespace {

// ------------------------------------------------------- grammar rendering --

std::string affine(const Rational& a, const Rational& b) {
    std::string out;
    auto part = [&](const Rational& k, const char* var) {
        if (k.is_zero()) return;
        const bool neg = k.sign() < 0;
        const Rational mag = neg ? -k : k;
        if (!out.empty()) out += neg ? "-" : "+";
        else if (neg) out += "-";
        if (mag != Rational(1)) out += mag.str() + "*";
        out += var;
    };
    part(a, "x");
    part(b, "y");
    return out;
}

/// Splits p into a sign and a factor string; "" stands for a unit factor.
std::pair<bool, std::string> weight(AlphaPoly p) {
    const auto& c = p.coeffs();
    std::size_t low = 0;
    while (c[low].is_zero()) ++low;
    const bool neg = c[low].sign() < 0;
    if (neg) p = AlphaPoly() - p;
    std::size_t nonzero = 0;
    for (const auto& q : p.coeffs()) nonzero += !q.is_zero();
    if (p == AlphaPoly(1)) return {neg, ""};
    if (nonzero == 1) return {neg, p.str()};
    return {neg, "(" + p.str() + ")"};
}

struct Piece {
    bool neg;
    std::string body;
};

void emit(std::vector<Piece>& out, const AlphaPoly& w, std::vector<std::string> factors) {
    if (w.coeffs().empty()) return;
    auto [neg, coef] = weight(w);
    std::string body = coef;
    for (const auto& f : factors) body += (body.empty() ? "" : "*") + f;
    if (body.empty()) body = "1";
    out.push_back({neg, body});
}

std::vector<std::string> spatial(const TermKey& k, const Rational& ra, const Rational& rb) {
    std::vector<std::string> f;
    if (k.r) f.push_back(k.r == 1 ? "x" : "x^" + std::to_string(k.r));
    if (k.m) f.push_back(k.m == 1 ? "y" : "y^" + std::to_string(k.m));
    if (!ra.is_zero() || !rb.is_zero()) f.push_back("e^(" + affine(ra, rb) + ")");
    return f;
}

bool upper_half(const GaussRat& a, const GaussRat& b) {
    if (!a.im().is_zero()) return a.im().sign() > 0;
    return b.im().sign() > 0;
}

}  // namespace

std::string render_series(const AlphaSeries& s) {
    std::map<TermKey, std::vector<GaussRat>, TermKeyLess> by_key;
    const auto& parts = s.parts();
    for (std::size_t k = 0; k < parts.size(); ++k)
        for (const auto& [key, c] : parts[k].terms()) {
            auto& v = by_key[key];
            v.resize(parts.size());
            v[k] = c;
        }

    std::vector<Piece> pieces;
    for (const auto& [key, coeffs] : by_key) {
        if (key.a.is_real() && key.b.is_real()) {
            std::vector<Rational> re;
            for (const auto& c : coeffs) {
                if (!c.is_real())
                    throw Error(ErrorKind::ResidualImaginaryPart, "complex coefficient on a real exponential");
                re.push_back(c.re());
            }
            emit(pieces, AlphaPoly(re), spatial(key, key.a.re(), key.b.re()));
            continue;
        }
        const TermKey partner{key.r, key.m, key.a.conj(), key.b.conj()};
        auto it = by_key.find(partner);
        bool paired = it != by_key.end() && it->second.size() == coeffs.size();
        for (std::size_t k = 0; paired && k < coeffs.size(); ++k) paired = it->second[k] == coeffs[k].conj();
        if (!paired)
            throw Error(ErrorKind::ResidualImaginaryPart,
                        "term with rates (" + key.a.str() + ", " + key.b.str() + ") has no conjugate partner");
        if (!upper_half(key.a, key.b)) continue;
        // c e^{i theta} + conj = 2 Re(c) cos(theta) - 2 Im(c) sin(theta)
        std::vector<Rational> cos_w, sin_w;
        for (const auto& c : coeffs) {
            cos_w.push_back(Rational(2) * c.re());
            sin_w.push_back(Rational(-2) * c.im());
        }
        const std::string theta = affine(key.a.im(), key.b.im());
        auto base = spatial(key, key.a.re(), key.b.re());
        auto with = [&](const std::string& fn) {
            auto f = base;
            f.push_back(fn + "(" + theta + ")");
            return f;
        };
        emit(pieces, AlphaPoly(cos_w), with("cos"));
        emit(pieces, AlphaPoly(sin_w), with("sin"));
    }

    if (pieces.empty()) return "0";
    std::string out;
    for (std::size_t k = 0; k < pieces.size(); ++k) {
        if (k == 0) out += pieces[k].neg ? "-" : "";
        else out += pieces[k].neg ? " - " : " + ";
        out += pieces[k].body;
    }
    return out;
}

std::string render_exp_poly(const ExpPolyExpr& f) { return render_series(AlphaSeries(f)); }

namespace {

std::string gauss_text(const GaussRat& g) {
    if (g.is_real()) return g.re().str();
    const std::string im = g.im() == Rational(1)    ? "i"
                           : g.im() == Rational(-1) ? "-i"
                                                    : g.im().str() + "*i";
    if (g.re().is_zero()) return im;
    return g.re().str() + (g.im().sign() > 0 ? "+" : "") + im;
}

}  // namespace

std::string render_complex(const ExpPolyExpr& f) {
    if (f.is_zero()) return "0";
    std::string out;
    for (const auto& [k, c] : f.terms()) {
        std::vector<std::string> parts;
        if (c != GaussRat(1)) parts.push_back("(" + gauss_text(c) + ")");
        if (k.r) parts.push_back(k.r == 1 ? "x" : "x^" + std::to_string(k.r));
        if (k.m) parts.push_back(k.m == 1 ? "y" : "y^" + std::to_string(k.m));
        if (!k.a.is_zero() || !k.b.is_zero()) {
            std::string arg;
            if (!k.a.is_zero()) arg += "(" + gauss_text(k.a) + ")*x";
            if (!k.b.is_zero()) arg += std::string(arg.empty() ? "" : "+") + "(" + gauss_text(k.b) + ")*y";
            parts.push_back("e^(" + arg + ")");
        }
        std::string body;
        for (const auto& p : parts) body += (body.empty() ? "" : "*") + p;
        out += (out.empty() ? "" : " + ") + (body.empty() ? "1" : body);
    }
    return out;
}

// ------------------------------------------------------------ u^n notation --

namespace {

struct Notation {
    std::optional<int> n;

    std::string power(char var, unsigned k) const {
        if (k == 0) return "";
        const std::string v(1, var);
        if (!n) return k == 1 ? v + "^n" : v + "^{" + std::to_string(k) + "n}";
        const long e = static_cast<long>(k) * *n;
        if (e == 0) return "1";
        if (e == 1) return v;
        return v + "^" + (e < 0 ? "(" + std::to_string(e) + ")" : std::to_string(e));
    }
};

/// Sign-aware coefficient text: returns (negative, magnitude string).
std::pair<bool, std::string> coef_text(const GaussRat& c) {
    if (c.is_real()) {
        const bool neg = c.re().sign() < 0;
        return {neg, (neg ? -c.re() : c.re()).str()};
    }
    if (c.re().is_zero()) {
        const bool neg = c.im().sign() < 0;
        const Rational mag = neg ? -c.im() : c.im();
        return {neg, mag == Rational(1) ? "i" : mag.str() + "i"};
    }
    const std::string im = c.im() == Rational(1) ? "i" : c.im() == Rational(-1) ? "-i" : c.im().str() + "i";
    return {false, "(" + c.re().str() + (c.im().sign() > 0 ? "+" : "") + im + ")"};
}

std::string signed_coef(const GaussRat& c) {
    auto [neg, s] = coef_text(c);
    return (neg ? "-" : "") + s;
}

/// Renders a polynomial in P = u^n, Q = v^n.
std::string pq_poly(const BiPoly& p, const Notation& nt, bool ascending) {
    std::vector<std::pair<BiPoly::Exps, GaussRat>> terms(p.terms().begin(), p.terms().end());
    std::stable_sort(terms.begin(), terms.end(), [&](const auto& l, const auto& r) {
        const unsigned dl = l.first.first + l.first.second, dr = r.first.first + r.first.second;
        if (dl != dr) return ascending ? dl < dr : dl > dr;
        return l.first.first > r.first.first;
    });
    std::string out;
    for (const auto& [e, c] : terms) {
        std::string mono = nt.power('u', e.first);
        const std::string mv = nt.power('v', e.second);
        if (!mv.empty()) mono += (mono.empty() ? "" : " ") + mv;
        auto [neg, mag] = coef_text(c);
        std::string body;
        if (mono.empty()) body = mag;
        else if (mag == "1") body = mono;
        else if (c.is_real() && !c.re().is_integer()) body = "(" + mag + ")" + mono;
        else body = mag + mono;
        if (out.empty()) out += (neg ? "-" : "") + body;
        else out += (neg ? " - " : " + ") + body;
    }
    return out.empty() ? "0" : out;
}

struct PaperFactor {
    UniPoly poly;  // in P (or Q)
    std::string text;
    unsigned exp;
    bool monomial;
};

std::string sq(const Rational& r) { return (r * r).str(); }

std::vector<PaperFactor> paper_factors(const std::map<GaussRat, unsigned, GaussRatLess>& poles, char var,
                                       const Notation& nt) {
    std::vector<PaperFactor> out;
    std::set<GaussRat, GaussRatLess> done;
    const UniPoly W = UniPoly::monomial(GaussRat(1), 1);
    auto mult_of = [&](const GaussRat& g) {
        auto it = poles.find(g);
        return it == poles.end() ? 0u : it->second;
    };
    const std::string p1 = nt.power(var, 1), p2 = nt.power(var, 2);
    for (const auto& [a, m] : poles) {
        if (done.count(a)) continue;
        done.insert(a);
        if (a.is_zero()) {
            out.push_back({W, p1, m, true});
        } else if (a.is_real()) {
            const GaussRat partner = -a;
            const unsigned e = std::max(m, mult_of(partner));
            done.insert(partner);
            out.push_back({W * W + UniPoly(a * a), "(" + sq(a.re()) + "+" + p2 + ")", e, false});
        } else if (a.re().is_zero()) {
            const Rational beta = a.im();
            const GaussRat partner = -a;
            const unsigned mp = mult_of(partner);
            done.insert(partner);
            const unsigned common = std::min(m, mp);
            auto lin = [&](const Rational& root, unsigned e) {
                if (e == 0) return;
                const std::string t = "(" + p1 + (root.sign() > 0 ? "-" + root.str() : "+" + (-root).str()) + ")";
                out.push_back({UniPoly::linear(GaussRat(root)), t, e, false});
            };
            if (common) out.push_back({W * W - UniPoly(GaussRat(beta * beta)), "(" + p2 + "-" + sq(beta) + ")", common, false});
            lin(beta, m - common);
            lin(-beta, mp - common);
        } else {
            // U - (p + iq) = i (P - q + ip); the partner pole -p + iq closes the conjugate pair.
            const Rational p = a.re(), q = a.im();
            const GaussRat partner(-p, q);
            const unsigned e = std::max(m, mult_of(partner));
            done.insert(partner);
            const UniPoly shifted = W - UniPoly(GaussRat(q));
            std::string t = "((" + p1 + (q.sign() > 0 ? "-" + q.str() : "+" + (-q).str()) + ")^2+" + sq(p) + ")";
            out.push_back({shifted * shifted + UniPoly(GaussRat(p * p)), t, e, false});
        }
    }
    return out;
}

UniPoly product(const std::vector<PaperFactor>& fs) {
    UniPoly d(GaussRat(1));
    for (const auto& f : fs) d = d * pow(f.poly, f.exp);
    return d;
}

std::string den_text(const std::vector<PaperFactor>& fu, const std::vector<PaperFactor>& fv, const Notation& nt,
                     std::size_t& count) {
    std::string s;
    count = 0;
    auto add = [&](const std::vector<PaperFactor>& fs, char var) {
        for (const auto& f : fs) {
            ++count;
            if (f.monomial) s += nt.power(var, f.exp);
            else s += f.text + (f.exp > 1 ? "^" + std::to_string(f.exp) : "");
        }
    };
    add(fu, 'u');
    add(fv, 'v');
    return s;
}

/// Divides by the unit making the lowest nonzero coefficient a positive
/// rational (or give it a positive real part); returns the unit.
GaussRat normalize_unit(UniPoly& p) {
    GaussRat c0;
    for (const auto& c : p.coeffs())
        if (!c.is_zero()) {
            c0 = c;
            break;
        }
    GaussRat u(1);
    if (c0.re().is_zero()) u = c0.im().sign() > 0 ? GaussRat::i() : -GaussRat::i();
    else if (c0.re().sign() < 0) u = GaussRat(-1);
    p = p * UniPoly(GaussRat(1) / u);
    return u;
}

std::string uni_text(const UniPoly& p, char var, const Notation& nt) {
    return pq_poly(BiPoly::from_uni(p, var == 'u'), nt, true);
}

std::string unit_prefix(const GaussRat& k) {
    if (k == GaussRat(1)) return "";
    if (k == GaussRat(-1)) return "-";
    return signed_coef(k);
}

}  // namespace

BiRat to_paper_vars(const TransformExpr& t) { return br_scale_vars(t.to_birat(), GaussRat::i(), GaussRat::i()); }

std::string render_paper(const TransformExpr& t, std::optional<int> n) {
    if (t.is_zero()) return "0";
    const Notation nt{n};
    const BiRat r = to_paper_vars(t);

    std::map<GaussRat, unsigned, GaussRatLess> mu, mv;
    for (const auto& [k, c] : t.terms()) {
        mu[k.pole_u] = std::max(mu[k.pole_u], k.mult_u);
        mv[k.pole_v] = std::max(mv[k.pole_v], k.mult_v);
    }
    const auto fu = paper_factors(mu, 'u', nt);
    const auto fv = paper_factors(mv, 'v', nt);
    const UniPoly du = product(fu), dv = product(fv);
    const BiPoly num = exact_div(r.num() * BiPoly::from_uni(du, true) * BiPoly::from_uni(dv, false), r.den());

    std::size_t nden = 0;
    const std::string den = den_text(fu, fv, nt, nden);
    const bool all_monomial = std::all_of(fu.begin(), fu.end(), [](auto& f) { return f.monomial; }) &&
                              std::all_of(fv.begin(), fv.end(), [](auto& f) { return f.monomial; });

    // Try num = kappa * nP(P) * nQ(Q).
    const UniPoly nq = content_in_u(num);
    const BiPoly rest = exact_div(num, BiPoly::from_uni(nq, false));
    if (rest.deg_v() <= 0) {
        std::vector<GaussRat> pc;
        for (const auto& c : rest.as_poly_in_u()) pc.push_back(c.coeff(0));
        UniPoly np(pc), nqq = nq;
        GaussRat kappa = np.lead();
        np = np * UniPoly(GaussRat(1) / kappa);
        if (np.is_constant() && nqq.is_constant()) {
            if (all_monomial && fu.size() == 1 && fv.size() == 1) {
                // Product of the two one-variable images, as in 1/(iu^n) = -i/u^n.
                const unsigned q = fv.front().exp;
                const GaussRat c2 = pow(-GaussRat::i(), q) * GaussRat(factorial(q - 1));
                const GaussRat c1 = kappa / c2;
                return "(" + signed_coef(c1) + "/" + nt.power('u', fu.front().exp) + ")(" + signed_coef(c2) + "/" +
                       nt.power('v', q) + ")";
            }
            return signed_coef(kappa) + "/" + (nden > 1 ? "(" + den + ")" : den);
        }
        std::string factors;
        if (!np.is_constant()) {
            kappa *= normalize_unit(np);
            factors += "(" + uni_text(np, 'u', nt) + ")";
        }
        if (!nqq.is_constant()) {
            kappa *= normalize_unit(nqq);
            factors += "(" + uni_text(nqq, 'v', nt) + ")";
        }
        return unit_prefix(kappa) + factors + "/" + (nden > 1 ? "(" + den + ")" : den);
    }

    // Mixed numerator: pull out a unit shared by every coefficient.
    for (const GaussRat& u : {GaussRat(1), GaussRat(-1), GaussRat::i(), -GaussRat::i()}) {
        bool shared = true;
        for (const auto& [e, c] : num.terms()) {
            const GaussRat q = c / u;
            shared = shared && q.is_real() && q.re().sign() > 0;
        }
        if (shared) {
            const std::string body = pq_poly(scale(num, GaussRat(1) / u), nt, false);
            return unit_prefix(u) + "(" + body + ")/" + (nden > 1 ? "(" + den + ")" : den);
        }
    }
    return "(" + pq_poly(num, nt, true) + ")/" + (nden > 1 ? "(" + den + ")" : den);
}

}  // namespace dfee
