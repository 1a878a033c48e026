#include "dfee/scalar.hpp"

#include <cctype>
#include <cfloat>

#include "dfee/error.hpp"

namespace dfee {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::DivisionByZero: return "DivisionByZero";
        case ErrorKind::Overflow: return "Overflow";
        case ErrorKind::SyntaxError: return "SyntaxError";
        case ErrorKind::NonAffineArgument: return "NonAffineArgument";
        case ErrorKind::AlphaInExponent: return "AlphaInExponent";
        case ErrorKind::AlphaNotAllowed: return "AlphaNotAllowed";
        case ErrorKind::InvalidFuzzyResult: return "InvalidFuzzyResult";
        case ErrorKind::InvalidFuzzyInput: return "InvalidFuzzyInput";
        case ErrorKind::NonSeparableDenominator: return "NonSeparableDenominator";
        case ErrorKind::ImproperRational: return "ImproperRational";
        case ErrorKind::UnsnappableRoot: return "UnsnappableRoot";
        case ErrorKind::MixedVariable: return "MixedVariable";
        case ErrorKind::ArityMismatch: return "ArityMismatch";
        case ErrorKind::ZeroDenominator: return "ZeroDenominator";
        case ErrorKind::ResidualImaginaryPart: return "ResidualImaginaryPart";
        case ErrorKind::NonDecayingIntegrand: return "NonDecayingIntegrand";
        case ErrorKind::ValidationFailed: return "ValidationFailed";
        case ErrorKind::Schema: return "Schema";
    }
    return "Unknown";
}

Rational::Rational(long num, long den) {
    if (den == 0) throw Error(ErrorKind::DivisionByZero, "rational with zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw Error(ErrorKind::DivisionByZero, "rational with zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw SyntaxError(0, "empty number");

    std::size_t pos = 0;
    bool neg = false;
    if (s[pos] == '+' || s[pos] == '-') neg = s[pos++] == '-';
    auto digits = [&](std::size_t from) {
        std::size_t p = from;
        while (p < s.size() && std::isdigit(static_cast<unsigned char>(s[p]))) ++p;
        return p;
    };

    std::size_t int_end = digits(pos);
    std::string int_part = s.substr(pos, int_end - pos);
    mpz_class num = int_part.empty() ? mpz_class(0) : mpz_class(int_part);
    mpz_class den = 1;
    pos = int_end;
    if (pos < s.size() && s[pos] == '.') {
        std::size_t frac_end = digits(pos + 1);
        std::string frac = s.substr(pos + 1, frac_end - pos - 1);
        if (int_part.empty() && frac.empty()) throw SyntaxError(pos, "malformed decimal");
        for (char c : frac) {
            num = num * 10 + (c - '0');
            den *= 10;
        }
        pos = frac_end;
    } else if (int_part.empty()) {
        throw SyntaxError(pos, "expected digits");
    }
    if (pos < s.size() && s[pos] == '/') {
        std::size_t d_end = digits(pos + 1);
        if (d_end == pos + 1) throw SyntaxError(pos + 1, "expected denominator");
        mpz_class d(s.substr(pos + 1, d_end - pos - 1));
        if (d == 0) throw Error(ErrorKind::DivisionByZero, "zero denominator in '" + s + "'");
        den *= d;
        pos = d_end;
    }
    if (pos != s.size()) throw SyntaxError(pos, "unexpected character in number '" + s + "'");
    if (neg) num = -num;
    return Rational(num, den);
}

double Rational::to_double() const {
    static const mpq_class kMax(DBL_MAX);
    if (abs(q_) > kMax) throw Error(ErrorKind::Overflow, "value " + str() + " exceeds double range");
    return q_.get_d();
}

std::string Rational::str() const { return q_.get_str(); }

Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw Error(ErrorKind::DivisionByZero, "rational division by zero");
    return Rational(mpq_class(a.q_ / b.q_));
}

Rational factorial(unsigned k) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), k);
    return Rational(mpq_class(f));
}

Rational binomial(unsigned n, unsigned k) {
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return Rational(mpq_class(b));
}

Rational pow(const Rational& x, unsigned k) {
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), x.raw().get_num_mpz_t(), k);
    mpz_pow_ui(d.get_mpz_t(), x.raw().get_den_mpz_t(), k);
    return Rational(n, d);
}

std::string GaussRat::str() const {
    if (im_.is_zero()) return re_.str();
    if (re_.is_zero()) return im_.str() + " i";
    if (im_.sign() < 0) return re_.str() + " - " + (-im_).str() + " i";
    return re_.str() + " + " + im_.str() + " i";
}

GaussRat operator/(const GaussRat& a, const GaussRat& b) {
    if (b.is_zero()) throw Error(ErrorKind::DivisionByZero, "division by zero");
    if (b.is_real()) return {a.re_ / b.re_, a.im_ / b.re_};
    Rational n = b.norm();
    GaussRat t = a * b.conj();
    return {t.re_ / n, t.im_ / n};
}

int compare(const GaussRat& a, const GaussRat& b) {
    if (a.re() != b.re()) return a.re() < b.re() ? -1 : 1;
    if (a.im() != b.im()) return a.im() < b.im() ? -1 : 1;
    return 0;
}

GaussRat pow(const GaussRat& x, unsigned k) {
    GaussRat result(1);
    GaussRat base = x;
    while (k) {
        if (k & 1u) result *= base;
        k >>= 1u;
        if (k) base *= base;
    }
    return result;
}

}  // namespace dfee
