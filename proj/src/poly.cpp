#include "dfee/poly.hpp"

#include <sstream>

#include "dfee/error.hpp"

namespace dfee {

// ---------------------------------------------------------------- UniPoly --

UniPoly::UniPoly(GaussRat c) {
    if (!c.is_zero()) c_.push_back(std::move(c));
}

UniPoly::UniPoly(std::vector<GaussRat> coeffs) : c_(std::move(coeffs)) { trim(); }

UniPoly UniPoly::linear(const GaussRat& root) { return UniPoly(std::vector<GaussRat>{-root, GaussRat(1)}); }

UniPoly UniPoly::monomial(const GaussRat& c, unsigned k) {
    std::vector<GaussRat> v(k + 1);
    v[k] = c;
    return UniPoly(std::move(v));
}

void UniPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

GaussRat UniPoly::operator()(const GaussRat& w) const {
    GaussRat acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * w + *it;
    return acc;
}

UniPoly UniPoly::derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<GaussRat> d(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * GaussRat(static_cast<long>(k));
    return UniPoly(std::move(d));
}

UniPoly UniPoly::monic() const {
    if (c_.empty()) return {};
    const GaussRat inv = GaussRat(1) / c_.back();
    std::vector<GaussRat> m(c_.size());
    for (std::size_t k = 0; k < c_.size(); ++k) m[k] = c_[k] * inv;
    return UniPoly(std::move(m));
}

UniPoly UniPoly::taylor_shift(const GaussRat& shift) const {
    UniPoly acc;
    const UniPoly step(std::vector<GaussRat>{shift, GaussRat(1)});
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * step + UniPoly(*it);
    return acc;
}

UniPoly UniPoly::operator-() const {
    std::vector<GaussRat> n(c_.size());
    for (std::size_t k = 0; k < c_.size(); ++k) n[k] = -c_[k];
    return UniPoly(std::move(n));
}

UniPoly operator+(const UniPoly& p, const UniPoly& q) {
    std::vector<GaussRat> s(std::max(p.c_.size(), q.c_.size()));
    for (std::size_t k = 0; k < p.c_.size(); ++k) s[k] += p.c_[k];
    for (std::size_t k = 0; k < q.c_.size(); ++k) s[k] += q.c_[k];
    return UniPoly(std::move(s));
}

UniPoly operator-(const UniPoly& p, const UniPoly& q) { return p + (-q); }

UniPoly operator*(const UniPoly& p, const UniPoly& q) {
    if (p.c_.empty() || q.c_.empty()) return {};
    std::vector<GaussRat> s(p.c_.size() + q.c_.size() - 1);
    for (std::size_t i = 0; i < p.c_.size(); ++i) {
        if (p.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < q.c_.size(); ++j) s[i + j] += p.c_[i] * q.c_[j];
    }
    return UniPoly(std::move(s));
}

std::string UniPoly::str(char var) const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = c_.size(); k-- > 0;) {
        if (c_[k].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << "(" << c_[k].str() << ")";
        if (k) os << "*" << var;
        if (k > 1) os << "^" << k;
    }
    return os.str();
}

UniPoly pow(const UniPoly& p, unsigned k) {
    UniPoly out(GaussRat(1));
    for (unsigned i = 0; i < k; ++i) out = out * p;
    return out;
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
    if (b.is_zero()) throw Error(ErrorKind::DivisionByZero, "polynomial division by zero");
    std::vector<GaussRat> r = a.coeffs();
    const int db = b.degree();
    if (a.degree() < db) return {UniPoly(), a};
    std::vector<GaussRat> q(r.size() - db);
    const GaussRat inv = GaussRat(1) / b.lead();
    for (int k = static_cast<int>(r.size()) - 1; k >= db; --k) {
        if (r[k].is_zero()) continue;
        const GaussRat f = r[k] * inv;
        q[k - db] = f;
        for (int j = 0; j <= db; ++j) r[k - db + j] -= f * b.coeffs()[j];
    }
    r.resize(db);
    return {UniPoly(std::move(q)), UniPoly(std::move(r))};
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
    UniPoly x = a, y = b;
    while (!y.is_zero()) {
        UniPoly r = divmod(x, y).second;
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

UniPoly exact_div(const UniPoly& a, const UniPoly& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw Error(ErrorKind::DivisionByZero, "inexact polynomial division");
    return q;
}

// ----------------------------------------------------------------- BiPoly --

BiPoly::BiPoly(GaussRat c) {
    if (!c.is_zero()) t_.emplace(Exps{0, 0}, std::move(c));
}

BiPoly BiPoly::monomial(const GaussRat& c, unsigned du, unsigned dv) {
    BiPoly p;
    p.add_term({du, dv}, c);
    return p;
}

BiPoly BiPoly::from_uni(const UniPoly& p, bool in_u) {
    BiPoly out;
    for (std::size_t k = 0; k < p.coeffs().size(); ++k)
        out.add_term(in_u ? Exps{k, 0} : Exps{0, k}, p.coeffs()[k]);
    return out;
}

bool BiPoly::is_constant() const { return t_.empty() || (t_.size() == 1 && t_.begin()->first == Exps{0, 0}); }

int BiPoly::deg_u() const { return t_.empty() ? -1 : static_cast<int>(t_.rbegin()->first.first); }

int BiPoly::deg_v() const {
    int d = -1;
    for (const auto& [e, c] : t_) d = std::max(d, static_cast<int>(e.second));
    return d;
}

std::pair<BiPoly::Exps, GaussRat> BiPoly::lead() const {
    if (t_.empty()) return {{0, 0}, GaussRat()};
    return *t_.rbegin();
}

std::vector<UniPoly> BiPoly::as_poly_in_u() const {
    std::vector<std::vector<GaussRat>> rows(deg_u() + 1);
    for (const auto& [e, c] : t_) {
        auto& row = rows[e.first];
        if (row.size() <= e.second) row.resize(e.second + 1);
        row[e.second] = c;
    }
    std::vector<UniPoly> out;
    out.reserve(rows.size());
    for (auto& r : rows) out.emplace_back(std::move(r));
    return out;
}

std::vector<UniPoly> BiPoly::as_poly_in_v() const {
    std::vector<std::vector<GaussRat>> rows(deg_v() + 1);
    for (const auto& [e, c] : t_) {
        auto& row = rows[e.second];
        if (row.size() <= e.first) row.resize(e.first + 1);
        row[e.first] = c;
    }
    std::vector<UniPoly> out;
    out.reserve(rows.size());
    for (auto& r : rows) out.emplace_back(std::move(r));
    return out;
}

BiPoly BiPoly::from_poly_in_u(const std::vector<UniPoly>& coeffs) {
    BiPoly out;
    for (std::size_t k = 0; k < coeffs.size(); ++k)
        for (std::size_t j = 0; j < coeffs[k].coeffs().size(); ++j)
            out.add_term({static_cast<unsigned>(k), static_cast<unsigned>(j)}, coeffs[k].coeffs()[j]);
    return out;
}

GaussRat BiPoly::operator()(const GaussRat& u, const GaussRat& v) const {
    GaussRat acc;
    for (const auto& [e, c] : t_) acc += c * pow(u, e.first) * pow(v, e.second);
    return acc;
}

void BiPoly::add_term(const Exps& e, const GaussRat& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = t_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) t_.erase(it);
    }
}

BiPoly BiPoly::operator-() const { return scale(*this, GaussRat(-1)); }

BiPoly& BiPoly::operator+=(const BiPoly& q) {
    for (const auto& [e, c] : q.t_) add_term(e, c);
    return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& q) {
    for (const auto& [e, c] : q.t_) add_term(e, -c);
    return *this;
}

BiPoly operator+(const BiPoly& p, const BiPoly& q) {
    BiPoly out = p;
    out += q;
    return out;
}

BiPoly operator-(const BiPoly& p, const BiPoly& q) {
    BiPoly out = p;
    out -= q;
    return out;
}

BiPoly operator*(const BiPoly& p, const BiPoly& q) {
    BiPoly out;
    for (const auto& [ep, cp] : p.t_)
        for (const auto& [eq, cq] : q.t_) out.add_term({ep.first + eq.first, ep.second + eq.second}, cp * cq);
    return out;
}

namespace {

std::string coeff_str(const GaussRat& c, bool& negative) {
    negative = false;
    if (c.is_real()) {
        negative = c.re().sign() < 0;
        return (negative ? -c.re() : c.re()).str();
    }
    if (c.is_imaginary()) {
        negative = c.im().sign() < 0;
        const Rational m = negative ? -c.im() : c.im();
        return m == Rational(1) ? "i" : m.str() + "*i";
    }
    const std::string im = (c.im().sign() < 0 ? "-" : "+") +
                           (c.im().sign() < 0 ? -c.im() : c.im()).str() + "*i";
    return "(" + c.re().str() + im + ")";
}

std::string monomial_str(const std::string& name, unsigned k) {
    if (k == 0) return "";
    return k == 1 ? name : name + "^" + std::to_string(k);
}

}  // namespace

std::string BiPoly::str(const std::string& u, const std::string& v) const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
        const auto& [e, c] = *it;
        bool neg = false;
        std::string cs = coeff_str(c, neg);
        if (first) os << (neg ? "-" : "");
        else os << (neg ? " - " : " + ");
        first = false;
        std::string mono = monomial_str(u, e.first);
        std::string mv = monomial_str(v, e.second);
        if (!mono.empty() && !mv.empty()) mono += "*" + mv;
        else if (mono.empty()) mono = mv;
        if (mono.empty()) os << cs;
        else if (cs == "1") os << mono;
        else os << cs << "*" << mono;
    }
    return os.str();
}

BiPoly scale(const BiPoly& p, const GaussRat& s) {
    BiPoly out;
    if (s.is_zero()) return out;
    for (const auto& [e, c] : p.terms()) out.add_term(e, c * s);
    return out;
}

BiPoly pow(const BiPoly& p, unsigned k) {
    BiPoly out(GaussRat(1));
    for (unsigned i = 0; i < k; ++i) out = out * p;
    return out;
}

BiPoly exact_div(const BiPoly& a, const BiPoly& b) {
    if (b.is_zero()) throw Error(ErrorKind::DivisionByZero, "bivariate division by zero");
    BiPoly rem = a, quot;
    const auto [eb, cb] = b.lead();
    const GaussRat inv = GaussRat(1) / cb;
    while (!rem.is_zero()) {
        const auto [er, cr] = rem.lead();
        if (er.first < eb.first || er.second < eb.second)
            throw Error(ErrorKind::DivisionByZero, "inexact bivariate division");
        const BiPoly step = BiPoly::monomial(cr * inv, er.first - eb.first, er.second - eb.second);
        quot += step;
        rem -= step * b;
    }
    return quot;
}

namespace {

UniPoly content_of(const std::vector<UniPoly>& coeffs) {
    UniPoly g;
    for (const auto& c : coeffs) {
        if (c.is_zero()) continue;
        g = gcd(g, c);
        if (g.degree() == 0) break;
    }
    return g;
}

/// Pseudo-remainder of a by b as polynomials in U over Q(i)[V].
std::vector<UniPoly> pseudo_remainder(std::vector<UniPoly> r, const std::vector<UniPoly>& b) {
    const std::size_t db = b.size() - 1;
    const UniPoly& lb = b.back();
    auto trim = [](std::vector<UniPoly>& v) {
        while (!v.empty() && v.back().is_zero()) v.pop_back();
    };
    trim(r);
    while (!r.empty() && r.size() - 1 >= db) {
        const std::size_t d = r.size() - 1 - db;
        const UniPoly lr = r.back();
        for (auto& c : r) c = lb * c;
        for (std::size_t k = 0; k <= db; ++k) r[k + d] -= lr * b[k];
        trim(r);
    }
    return r;
}

std::vector<UniPoly> primitive(std::vector<UniPoly> p) {
    const UniPoly c = content_of(p);
    if (c.degree() <= 0) {
        // Constant content: normalize the scale to keep coefficients small.
        const GaussRat inv = GaussRat(1) / p.back().lead();
        for (auto& q : p) q = q * UniPoly(inv);
        return p;
    }
    for (auto& q : p) q = exact_div(q, c);
    return p;
}

BiPoly normalize_lex(const BiPoly& p) {
    if (p.is_zero()) return p;
    return scale(p, GaussRat(1) / p.lead().second);
}

}  // namespace

UniPoly content_in_u(const BiPoly& a) { return content_of(a.as_poly_in_u()); }

UniPoly content_in_v(const BiPoly& a) { return content_of(a.as_poly_in_v()); }

BiPoly gcd(const BiPoly& a, const BiPoly& b) {
    if (a.is_zero()) return normalize_lex(b);
    if (b.is_zero()) return normalize_lex(a);

    const UniPoly ca = content_in_u(a), cb = content_in_u(b);
    const UniPoly c = gcd(ca, cb);
    std::vector<UniPoly> pa = primitive(a.as_poly_in_u());
    std::vector<UniPoly> pb = primitive(b.as_poly_in_u());
    if (pa.size() < pb.size()) std::swap(pa, pb);

    std::vector<UniPoly> g;
    if (pb.size() == 1) {
        g = {UniPoly(GaussRat(1))};
    } else {
        for (;;) {
            std::vector<UniPoly> r = pseudo_remainder(pa, pb);
            if (r.empty()) {
                g = pb;
                break;
            }
            if (r.size() == 1) {
                g = {UniPoly(GaussRat(1))};
                break;
            }
            pa = std::move(pb);
            pb = primitive(std::move(r));
        }
    }
    return normalize_lex(BiPoly::from_uni(c, false) * BiPoly::from_poly_in_u(g));
}

}  // namespace dfee
