#include "dfee/verify.hpp"

#include <array>
#include <cmath>
#include <sstream>

#include <boost/math/quadrature/gauss.hpp>

#include "dfee/error.hpp"
#include "dfee/transform.hpp"

namespace dfee {

namespace {

struct Rule {
    std::array<double, 8> x;
    std::array<double, 8> w;
};

const Rule& gl8() {
    static const Rule rule = [] {
        using G = boost::math::quadrature::gauss<double, 8>;
        Rule r{};
        for (std::size_t k = 0; k < 4; ++k) {
            r.x[k] = -G::abscissa()[k];
            r.x[4 + k] = G::abscissa()[k];
            r.w[k] = r.w[4 + k] = G::weights()[k];
        }
        return r;
    }();
    return rule;
}

template <typename T, typename F>
T tensor(const F& f, double x1, double y1, unsigned px, unsigned py) {
    if (x1 == 0.0 || y1 == 0.0) return T(0);
    const Rule& r = gl8();
    const double hx = x1 / px, hy = y1 / py;
    T sum(0);
    for (unsigned i = 0; i < px; ++i) {
        const double cx = (i + 0.5) * hx;
        for (unsigned a = 0; a < 8; ++a) {
            const double x = cx + 0.5 * hx * r.x[a];
            T row(0);
            for (unsigned j = 0; j < py; ++j) {
                const double cy = (j + 0.5) * hy;
                for (unsigned b = 0; b < 8; ++b) row += r.w[b] * f(x, cy + 0.5 * hy * r.x[b]);
            }
            sum += r.w[a] * row;
        }
    }
    return sum * (0.25 * hx * hy);
}

}  // namespace

double quad2d(const std::function<double(double, double)>& f, double x1, double y1, unsigned panels) {
    return tensor<double>(f, x1, y1, panels, panels);
}

std::complex<double> quad2d(const std::function<std::complex<double>(double, double)>& f, double x1, double y1,
                            unsigned panels_x, unsigned panels_y) {
    return tensor<std::complex<double>>(f, x1, y1, panels_x, panels_y);
}

namespace {

/// Per-side data compiled once: w, L[w] and g as alpha polynomials.
struct SideData {
    std::vector<CompiledExpPoly> w, lw, g;

    std::complex<double> eval(const std::vector<CompiledExpPoly>& parts, double x, double y, double alpha) const {
        std::complex<double> acc = 0.0;
        for (auto it = parts.rbegin(); it != parts.rend(); ++it) acc = acc * alpha + (*it)(x, y);
        return acc;
    }
};

SideData compile_side(const ProblemSpec& p, const AlphaSeries& w, const AlphaSeries& g) {
    SideData d;
    for (const auto& part : w.parts()) {
        ExpPolyExpr lw = ep_scale(part, GaussRat(p.c));
        for (unsigned h = 1; h <= p.l(); ++h) lw += ep_scale(ep_diff(part, Var::X, h), GaussRat(p.a[h - 1]));
        for (unsigned j = 1; j <= p.m(); ++j) lw += ep_scale(ep_diff(part, Var::Y, j), GaussRat(p.b[j - 1]));
        d.w.emplace_back(part);
        d.lw.emplace_back(lw);
    }
    for (const auto& part : g.parts()) d.g.emplace_back(part);
    return d;
}

/// |R| at one grid point for one side.
double point_residual(const SideData& d, const CompiledExpPoly& k, double x, double y, double alpha,
                      unsigned panels) {
    const auto conv = quad2d(
        [&](double tau, double mu) { return k(x - tau, y - mu) * d.eval(d.w, tau, mu, alpha); }, x, y, panels,
        panels);
    return std::abs(d.eval(d.lw, x, y, alpha) - d.eval(d.g, x, y, alpha) - conv);
}

struct Point {
    double x, y, alpha;
};

ResidualReport summarize(const std::vector<Point>& pts, const std::vector<double>& lo, const std::vector<double>& hi,
                         const VerifyOptions& opts) {
    ResidualReport rep;
    rep.panels = opts.panels;
    rep.points = pts.size();
    rep.tol = opts.tol;
    auto fill = [&](SideResidual& s, const std::vector<double>& r) {
        double sum = 0.0;
        for (std::size_t k = 0; k < r.size(); ++k) {
            sum += r[k];
            // NaN compares false, so track it explicitly.
            if (r[k] > s.max || std::isnan(r[k])) {
                s.max = r[k];
                s.worst_x = pts[k].x;
                s.worst_y = pts[k].y;
                s.worst_alpha = pts[k].alpha;
                if (std::isnan(r[k])) break;
            }
        }
        s.mean = r.empty() ? 0.0 : sum / static_cast<double>(r.size());
    };
    fill(rep.lower, lo);
    fill(rep.upper, hi);
    rep.pass = rep.lower.max <= opts.tol && rep.upper.max <= opts.tol;
    return rep;
}

ResidualReport residual_impl(const ProblemSpec& p, const FuzzyFunction& w, const VerifyOptions& opts,
                             bool parallel) {
    const SideData lower = compile_side(p, w.lower, p.forcing.lower);
    const SideData upper = compile_side(p, w.upper, p.forcing.upper);
    const CompiledExpPoly k(p.kernel);

    std::vector<Point> pts;
    for (double x : opts.xs)
        for (double y : opts.ys)
            for (double a : opts.alphas) pts.push_back({x, y, a});
    const long n = static_cast<long>(pts.size());
    std::vector<double> lo(pts.size()), hi(pts.size());

    if (parallel) {
#pragma omp parallel for schedule(static)
        for (long i = 0; i < n; ++i) {
            lo[i] = point_residual(lower, k, pts[i].x, pts[i].y, pts[i].alpha, opts.panels);
            hi[i] = point_residual(upper, k, pts[i].x, pts[i].y, pts[i].alpha, opts.panels);
        }
    } else {
        for (long i = 0; i < n; ++i) {
            lo[i] = point_residual(lower, k, pts[i].x, pts[i].y, pts[i].alpha, opts.panels);
            hi[i] = point_residual(upper, k, pts[i].x, pts[i].y, pts[i].alpha, opts.panels);
        }
    }
    return summarize(pts, lo, hi, opts);
}

}  // namespace

ResidualReport residual(const ProblemSpec& p, const FuzzyFunction& w, const VerifyOptions& opts) {
    return residual_impl(p, w, opts, opts.parallel);
}

ResidualReport residual_serial(const ProblemSpec& p, const FuzzyFunction& w, const VerifyOptions& opts) {
    return residual_impl(p, w, opts, false);
}

IcReport check_ics(const ProblemSpec& p, const FuzzyFunction& w, const VerifyOptions& opts) {
    IcReport rep;
    rep.tol = opts.tol;
    auto series_at = [](const AlphaSeries& s, double x, double y, double alpha) {
        std::complex<double> acc = 0.0;
        const auto& parts = s.parts();
        for (auto it = parts.rbegin(); it != parts.rend(); ++it) acc = acc * alpha + ep_eval(*it, x, y);
        return acc;
    };
    auto run = [&](Var var, const std::vector<FuzzyFunction>& ics, const char* name) {
        for (unsigned h = 0; h < ics.size(); ++h) {
            for (bool upper : {false, true}) {
                const bool ic_upper = p.diff_case == DiffCase::I ? upper : !upper;
                const AlphaSeries trace = w.side(upper).map([&](const ExpPolyExpr& f) { return ep_diff(f, var, h); });
                const AlphaSeries& target = ics[h].side(ic_upper);
                for (double t : var == Var::X ? opts.ys : opts.xs) {
                    const double x = var == Var::X ? 0.0 : t, y = var == Var::X ? t : 0.0;
                    for (double a : opts.alphas) {
                        const double dev = std::abs(series_at(trace, x, y, a) - series_at(target, x, y, a));
                        if (dev > rep.max_deviation || std::isnan(dev)) {
                            rep.max_deviation = dev;
                            std::ostringstream os;
                            os << name << "[" << h << "] " << (upper ? "upper" : "lower") << " at ("
                               << x << ", " << y << "), alpha=" << a;
                            rep.worst = os.str();
                        }
                    }
                }
            }
        }
    };
    run(Var::X, p.x_ics, "x_ics");
    run(Var::Y, p.y_ics, "y_ics");
    rep.pass = rep.max_deviation <= opts.tol;
    return rep;
}

namespace {

/// int_L^inf t^r e^{-s t} dt
double tail_moment(unsigned r, double s, double L) {
    double sum = 0.0, term_fact = 1.0;  // r!/j!
    for (unsigned j = r + 1; j-- > 0;) {
        sum += term_fact * std::pow(L, j) / std::pow(s, static_cast<double>(r - j + 1));
        term_fact *= j;
    }
    return std::exp(-s * L) * sum;
}

double full_moment(unsigned r, double s) { return std::tgamma(r + 1.0) / std::pow(s, r + 1.0); }

}  // namespace

ForwardCheck numeric_forward_check(const ExpPolyExpr& f, double u, double v, int n, double cutoff,
                                   unsigned panels_per_unit) {
    for (const auto& [k, c] : f.terms())
        if (k.a.re().sign() >= 0 || k.b.re().sign() >= 0)
            throw Error(ErrorKind::NonDecayingIntegrand,
                        "rates (" + k.a.str() + ", " + k.b.str() + ") need negative real parts");
    const double un = std::pow(u, n), vn = std::pow(v, n);
    const CompiledExpPoly cf(f);
    const std::complex<double> I(0.0, 1.0);
    ForwardCheck out;
    const unsigned panels = std::max(1u, static_cast<unsigned>(std::ceil(cutoff * panels_per_unit)));
    out.numeric = quad2d([&](double x, double y) { return cf(x, y) * std::exp(-I * (un * x + vn * y)); }, cutoff,
                         cutoff, panels, panels);
    out.exact = forward(f).eval(I * un, I * vn);
    out.gap = std::abs(out.numeric - out.exact);
    for (const auto& [k, c] : f.terms()) {
        const double sx = -k.a.re().to_double(), sy = -k.b.re().to_double();
        const double mag = std::abs(c.to_complex());
        out.tail_bound += mag * (tail_moment(k.r, sx, cutoff) * full_moment(k.m, sy) +
                                 full_moment(k.r, sx) * tail_moment(k.m, sy, cutoff));
    }
    return out;
}

}  // namespace dfee
