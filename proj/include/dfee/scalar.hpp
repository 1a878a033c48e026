#pragma once

#include <complex>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace dfee {

/// Exact rational with canonical (reduced, positive denominator) storage.
class Rational {
public:
    Rational() : q_(0) {}
    Rational(long v) : q_(v) {}  // NOLINT(google-explicit-constructor)
    Rational(int v) : q_(v) {}   // NOLINT(google-explicit-constructor)
    Rational(long num, long den);
    explicit Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }
    Rational(const mpz_class& num, const mpz_class& den);

    /// Accepts "3", "-1/2", "2.5", "-0.125". Decimals convert exactly.
    static Rational parse(std::string_view text);

    mpz_class num() const { return q_.get_num(); }
    mpz_class den() const { return q_.get_den(); }
    const mpq_class& raw() const { return q_; }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    /// Throws Overflow when the value is outside the double range.
    double to_double() const;

    std::string str() const;

    Rational operator-() const { return Rational(mpq_class(-q_)); }
    friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ + b.q_)); }
    friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ - b.q_)); }
    friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ * b.q_)); }
    friend Rational operator/(const Rational& a, const Rational& b);
    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

private:
    mpq_class q_;
};

Rational factorial(unsigned k);
Rational binomial(unsigned n, unsigned k);
Rational pow(const Rational& x, unsigned k);

/// Gaussian rational re + im*i, the coefficient field of the symbolic engine.
class GaussRat {
public:
    GaussRat() = default;
    GaussRat(Rational re) : re_(std::move(re)) {}  // NOLINT(google-explicit-constructor)
    GaussRat(long v) : re_(v) {}                   // NOLINT(google-explicit-constructor)
    GaussRat(int v) : re_(v) {}                    // NOLINT(google-explicit-constructor)
    GaussRat(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    static GaussRat i() { return {Rational(0), Rational(1)}; }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    bool is_real() const { return im_.is_zero(); }
    bool is_imaginary() const { return re_.is_zero(); }

    GaussRat conj() const { return {re_, -im_}; }
    /// |z|^2, exact.
    Rational norm() const { return re_ * re_ + im_ * im_; }

    /// Nearest machine value per component; Overflow when out of range.
    std::complex<double> to_complex() const { return {re_.to_double(), im_.to_double()}; }

    /// Debug form "p/q + r/s i".
    std::string str() const;

    GaussRat operator-() const { return {-re_, -im_}; }
    friend GaussRat operator+(const GaussRat& a, const GaussRat& b) { return {a.re_ + b.re_, a.im_ + b.im_}; }
    friend GaussRat operator-(const GaussRat& a, const GaussRat& b) { return {a.re_ - b.re_, a.im_ - b.im_}; }
    friend GaussRat operator*(const GaussRat& a, const GaussRat& b) {
        return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
    }
    friend GaussRat operator/(const GaussRat& a, const GaussRat& b);
    GaussRat& operator+=(const GaussRat& o) { re_ += o.re_; im_ += o.im_; return *this; }
    GaussRat& operator-=(const GaussRat& o) { re_ -= o.re_; im_ -= o.im_; return *this; }
    GaussRat& operator*=(const GaussRat& o) { return *this = *this * o; }
    GaussRat& operator/=(const GaussRat& o) { return *this = *this / o; }

    friend bool operator==(const GaussRat& a, const GaussRat& b) { return a.re_ == b.re_ && a.im_ == b.im_; }
    friend bool operator!=(const GaussRat& a, const GaussRat& b) { return !(a == b); }

private:
    Rational re_;
    Rational im_;
};

/// Total order used only to key containers (re first, then im).
struct GaussRatLess {
    bool operator()(const GaussRat& a, const GaussRat& b) const {
        if (a.re() != b.re()) return a.re() < b.re();
        return a.im() < b.im();
    }
};
int compare(const GaussRat& a, const GaussRat& b);

GaussRat pow(const GaussRat& x, unsigned k);

}  // namespace dfee
