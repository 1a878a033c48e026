#pragma once

#include <complex>
#include <functional>
#include <string>
#include <vector>

#include "dfee/solver.hpp"

namespace dfee {

/// Composite tensor Gauss-Legendre rule, 8 nodes per panel and axis, on
/// [0, x1] x [0, y1]. Degenerate regions integrate to 0.
double quad2d(const std::function<double(double, double)>& f, double x1, double y1, unsigned panels);
std::complex<double> quad2d(const std::function<std::complex<double>(double, double)>& f, double x1, double y1,
                            unsigned panels_x, unsigned panels_y);

struct VerifyOptions {
    std::vector<double> xs{0.1, 0.3, 0.5, 0.7, 0.9};
    std::vector<double> ys{0.1, 0.3, 0.5, 0.7, 0.9};
    std::vector<double> alphas{0.0, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0};
    unsigned panels = 4;
    double tol = 1e-7;
    bool parallel = true;
};

struct SideResidual {
    double max = 0.0;
    double mean = 0.0;
    double worst_x = 0.0;
    double worst_y = 0.0;
    double worst_alpha = 0.0;
};

struct ResidualReport {
    SideResidual lower;
    SideResidual upper;
    std::string rule = "gauss-legendre-8";
    unsigned panels = 0;
    std::size_t points = 0;
    double tol = 0.0;
    bool pass = false;
};

/// Substitutes w into the equation: derivatives exact (ep_diff), the
/// convolution K ** w by quad2d at every (x, y, alpha), independently of the
/// closed-form convolution.
ResidualReport residual(const ProblemSpec& p, const FuzzyFunction& w, const VerifyOptions& opts = {});
/// Same computation, single-threaded loop; reference for the parallel one.
ResidualReport residual_serial(const ProblemSpec& p, const FuzzyFunction& w, const VerifyOptions& opts = {});

struct IcReport {
    double max_deviation = 0.0;
    std::string worst;  // which condition, side and point
    double tol = 0.0;
    bool pass = false;
};

/// Derivative traces of w at x = 0 (resp. y = 0) against the initial
/// conditions on the grid; case (ii) pairs each side with the opposite-side
/// conditions.
IcReport check_ics(const ProblemSpec& p, const FuzzyFunction& w, const VerifyOptions& opts = {});

struct ForwardCheck {
    std::complex<double> numeric;
    std::complex<double> exact;
    double gap = 0.0;
    /// Bound on the integral outside [0, cutoff]^2.
    double tail_bound = 0.0;
};

/// Truncated quadrature of f(x, y) e^{-i(u^n x + v^n y)} against the image
/// evaluated at U = iu^n, V = iv^n. Throws NonDecayingIntegrand unless every
/// rate has negative real part.
ForwardCheck numeric_forward_check(const ExpPolyExpr& f, double u, double v, int n, double cutoff = 40.0,
                                   unsigned panels_per_unit = 2);

}  // namespace dfee
