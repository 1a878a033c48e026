#pragma once

#include <optional>
#include <string>

#include "dfee/ratfunc.hpp"
#include "dfee/symexpr.hpp"

namespace dfee {

/// Renders in the input grammar, grouping alpha-weights per spatial term and
/// recombining conjugate exponentials into e^(..)*cos(..) / sin(..). The
/// output re-parses to the same series. Throws ResidualImaginaryPart if a
/// complex term has no conjugate partner.
std::string render_series(const AlphaSeries& s);
std::string render_exp_poly(const ExpPolyExpr& f);
/// Grammar rendering that keeps complex coefficients and rates as written,
/// e.g. "(1/2*i)*e^(i*x)"; used when a function is not real-valued.
std::string render_complex(const ExpPolyExpr& f);

/// Rewrites an image in u^n, v^n after clearing conjugate factors from the
/// denominator, e.g. "(1 + iu^n)(1 + iv^n)/((1+u^{2n})(1+v^{2n}))". With no n
/// the exponent stays symbolic; a given n is substituted.
std::string render_paper(const TransformExpr& t, std::optional<int> n = std::nullopt);

/// The image as a rational function of P = u^n, Q = v^n (U = iP, V = iQ).
BiRat to_paper_vars(const TransformExpr& t);

}  // namespace dfee
