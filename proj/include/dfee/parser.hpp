#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "dfee/scalar.hpp"
#include "dfee/symexpr.hpp"

namespace dfee {

enum class FuncKind { Exp, Sin, Cos, Sinh, Cosh };

/// Parsed surface expression. Function nodes keep their argument already
/// reduced to the affine form rate_x * x + rate_y * y; an argument whose
/// rates depend on alpha is accepted here and rejected when lowering.
struct SurfaceExpr {
    enum class Kind { Const, X, Y, Alpha, Add, Mul, Neg, Pow, Func };

    Kind kind = Kind::Const;
    GaussRat value;               // Const
    unsigned exponent = 0;        // Pow
    FuncKind func = FuncKind::Exp;
    GaussRat rate_x;              // Func
    GaussRat rate_y;              // Func
    bool alpha_in_argument = false;
    std::vector<SurfaceExpr> children;

    bool contains_alpha() const;
};

/// Grammar:
///   expr   := term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := ('+'|'-') factor | base ('^' uint)?
///   base   := number | 'x' | 'y' | 'alpha' | 'i' | '(' expr ')'
///           | 'e^(' affine ')' | fn '(' affine ')'
///   fn     := 'sin' | 'cos' | 'sinh' | 'cosh' | 'exp'
/// Numbers are exact: 3, 1/2, 2.5. Throws SyntaxError (with byte offset) or
/// NonAffineArgument.
SurfaceExpr parse_expr(std::string_view text);

/// Expands into alpha-polynomial form; sin/cos/sinh/cosh go through Euler's
/// identities. Throws AlphaInExponent if alpha reaches a function argument.
AlphaSeries lower_with_alpha(const SurfaceExpr& ast);

/// Lowering for alpha-free expressions; throws AlphaNotAllowed otherwise.
ExpPolyExpr lower_to_exp_poly(const SurfaceExpr& ast);

/// parse_expr followed by lower_to_exp_poly.
ExpPolyExpr parse_exp_poly(std::string_view text);

}  // namespace dfee
