#include "dfee/roots.hpp"

#include <cmath>
#include <optional>
#include <sstream>

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>

namespace dfee {

namespace mp = boost::multiprecision;
using Real = mp::cpp_bin_float_50;
using Complex = mp::cpp_complex_50;

std::string UnsnappableRootError::describe(std::complex<double> z) {
    std::ostringstream os;
    os.precision(17);
    os << "root (" << z.real() << ", " << z.imag() << ") has no Gaussian-rational form";
    return os.str();
}

namespace {

Real to_real(const Rational& q) {
    if (q.is_integer()) return Real(q.num().get_str());
    return Real(q.num().get_str()) / Real(q.den().get_str());
}

Complex to_mp(const GaussRat& g) { return Complex(to_real(g.re()), to_real(g.im())); }

/// Simultaneous Aberth-Ehrlich iteration on the monic coefficient vector.
std::vector<Complex> aberth(const std::vector<Complex>& monic) {
    const std::size_t n = monic.size() - 1;
    Real bound = 0;
    for (std::size_t k = 0; k < n; ++k) {
        const Real a = mp::abs(monic[k]);
        if (a > bound) bound = a;
    }
    bound += 1;

    std::vector<Complex> z(n);
    const Real two_pi = 2 * boost::math::constants::pi<Real>();
    for (std::size_t k = 0; k < n; ++k) {
        const Real theta = two_pi * Real(k) / Real(n) + Real(0.4);
        z[k] = Complex(bound * 0.5 * mp::cos(theta), bound * 0.5 * mp::sin(theta));
    }

    auto eval = [&](const Complex& x, Complex& dp) {
        Complex p = monic[n];
        dp = Complex(0);
        for (std::size_t k = n; k-- > 0;) {
            dp = dp * x + p;
            p = p * x + monic[k];
        }
        return p;
    };

    const Real eps("1e-45");
    for (int iter = 0; iter < 2000; ++iter) {
        Real worst = 0;
        for (std::size_t k = 0; k < n; ++k) {
            Complex dp;
            const Complex p = eval(z[k], dp);
            if (mp::abs(p) == 0) continue;
            const Complex ratio = p / dp;
            Complex repulsion(0);
            for (std::size_t j = 0; j < n; ++j)
                if (j != k) repulsion += Complex(1) / (z[k] - z[j]);
            const Complex step = ratio / (Complex(1) - ratio * repulsion);
            z[k] -= step;
            const Real rel = mp::abs(step) / (1 + mp::abs(z[k]));
            if (rel > worst) worst = rel;
        }
        if (worst < eps) break;
    }
    return z;
}

std::vector<Complex> mp_roots(const UniPoly& p) {
    const UniPoly m = p.monic();
    std::vector<Complex> coeffs;
    for (const auto& c : m.coeffs()) coeffs.push_back(to_mp(c));
    return aberth(coeffs);
}

/// Smallest-denominator rational within tolerance of x, if any.
std::optional<Rational> snap_component(const Real& x, unsigned max_den) {
    const Real tol("1e-25");
    if (mp::abs(x) > Real("1e15")) return std::nullopt;
    for (unsigned d = 1; d <= max_den; ++d) {
        const Real scaled = x * d;
        const Real n = mp::round(scaled);
        if (mp::abs(scaled - n) <= tol * d * (1 + mp::abs(x)))
            return Rational(static_cast<long>(n.convert_to<long long>()), static_cast<long>(d));
    }
    return std::nullopt;
}

}  // namespace

std::vector<std::complex<double>> numeric_roots(const UniPoly& p) {
    std::vector<std::complex<double>> out;
    if (p.degree() < 1) return out;
    for (const auto& z : mp_roots(p))
        out.emplace_back(z.real().convert_to<double>(), z.imag().convert_to<double>());
    return out;
}

std::vector<RootMultiplicity> snap_roots(const UniPoly& p, const SnapOptions& opts) {
    if (p.degree() < 1) throw Error(ErrorKind::ArityMismatch, "snap_roots needs degree >= 1");

    // Roots of the square-free part are simple, so the iteration converges fast.
    const UniPoly squarefree = exact_div(p, gcd(p, p.derivative()));
    std::vector<GaussRat> candidates;
    if (squarefree.degree() == 1) {
        candidates.push_back(-squarefree.coeff(0) / squarefree.coeff(1));
    } else {
        for (const Complex& z : mp_roots(squarefree)) {
            auto re = snap_component(z.real(), opts.max_denominator);
            auto im = snap_component(z.imag(), opts.max_denominator);
            const std::complex<double> approx(z.real().convert_to<double>(), z.imag().convert_to<double>());
            if (!re || !im) throw UnsnappableRootError(approx);
            GaussRat g(*re, *im);
            if (!squarefree(g).is_zero()) throw UnsnappableRootError(approx);
            candidates.push_back(std::move(g));
        }
    }

    std::vector<RootMultiplicity> out;
    UniPoly rest = p;
    for (const GaussRat& root : candidates) {
        unsigned mult = 0;
        for (;;) {
            auto [q, r] = divmod(rest, UniPoly::linear(root));
            if (!r.is_zero()) break;
            rest = std::move(q);
            ++mult;
        }
        if (mult == 0) throw UnsnappableRootError(root.to_complex());
        out.push_back({root, mult});
    }
    if (rest.degree() != 0)
        throw Error(ErrorKind::UnsnappableRoot, "deflation left a non-constant factor " + rest.str());
    return out;
}

}  // namespace dfee
