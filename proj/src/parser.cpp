#include "dfee/parser.hpp"

#include <cctype>

#include "dfee/error.hpp"

namespace dfee {

bool SurfaceExpr::contains_alpha() const {
    if (kind == Kind::Alpha || alpha_in_argument) return true;
    for (const auto& c : children)
        if (c.contains_alpha()) return true;
    return false;
}

namespace {

SurfaceExpr make(SurfaceExpr::Kind kind, std::vector<SurfaceExpr> children = {}) {
    SurfaceExpr e;
    e.kind = kind;
    e.children = std::move(children);
    return e;
}

SurfaceExpr constant(const GaussRat& v) {
    SurfaceExpr e;
    e.kind = SurfaceExpr::Kind::Const;
    e.value = v;
    return e;
}

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    SurfaceExpr run() {
        SurfaceExpr e = expr();
        skip_ws();
        if (pos_ != text_.size()) throw SyntaxError(pos_, std::string("unexpected '") + text_[pos_] + "'");
        return e;
    }

private:
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool peek(char c) {
        skip_ws();
        return pos_ < text_.size() && text_[pos_] == c;
    }

    bool accept(char c) {
        if (!peek(c)) return false;
        ++pos_;
        return true;
    }

    void expect(char c) {
        if (!accept(c)) {
            skip_ws();
            throw SyntaxError(pos_, std::string("expected '") + c + "'");
        }
    }

    SurfaceExpr expr() {
        std::vector<SurfaceExpr> parts;
        parts.push_back(term());
        for (;;) {
            if (accept('+')) {
                parts.push_back(term());
            } else if (accept('-')) {
                parts.push_back(make(SurfaceExpr::Kind::Neg, {term()}));
            } else {
                break;
            }
        }
        if (parts.size() == 1) return std::move(parts.front());
        return make(SurfaceExpr::Kind::Add, std::move(parts));
    }

    SurfaceExpr term() {
        std::vector<SurfaceExpr> parts;
        parts.push_back(factor());
        while (accept('*')) parts.push_back(factor());
        if (parts.size() == 1) return std::move(parts.front());
        return make(SurfaceExpr::Kind::Mul, std::move(parts));
    }

    SurfaceExpr factor() {
        if (accept('-')) return make(SurfaceExpr::Kind::Neg, {factor()});
        if (accept('+')) return factor();
        SurfaceExpr b = base();
        if (accept('^')) {
            SurfaceExpr p = make(SurfaceExpr::Kind::Pow, {std::move(b)});
            p.exponent = uint_literal();
            return p;
        }
        return b;
    }

    unsigned uint_literal() {
        skip_ws();
        bool paren = accept('(');
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) throw SyntaxError(start, "expected non-negative integer exponent");
        if (pos_ - start > 3) throw SyntaxError(start, "exponent too large");
        unsigned v = static_cast<unsigned>(std::stoul(std::string(text_.substr(start, pos_ - start))));
        if (paren) expect(')');
        return v;
    }

    SurfaceExpr number() {
        std::size_t start = pos_;
        auto digits = [&] {
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        };
        digits();
        if (pos_ < text_.size() && text_[pos_] == '.') {
            ++pos_;
            digits();
        }
        if (pos_ + 1 < text_.size() && text_[pos_] == '/' &&
            std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))) {
            ++pos_;
            digits();
        }
        try {
            return constant(GaussRat(Rational::parse(text_.substr(start, pos_ - start))));
        } catch (const SyntaxError&) {
            throw SyntaxError(start, "malformed number");
        }
    }

    std::string identifier() {
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        return std::string(text_.substr(start, pos_ - start));
    }

    SurfaceExpr function_node(FuncKind kind, std::size_t at) {
        SurfaceExpr arg = expr();
        SurfaceExpr node = make(SurfaceExpr::Kind::Func);
        node.func = kind;
        // The argument has to be rate_x * x + rate_y * y; alpha-dependent rates
        // are kept (and flagged) so fuzzy construction can report them.
        AlphaSeries lowered;
        try {
            lowered = lower_with_alpha(arg);
        } catch (const Error& e) {
            if (e.kind() == ErrorKind::AlphaInExponent) {
                node.alpha_in_argument = true;
                return node;
            }
            throw Error(ErrorKind::NonAffineArgument, "function argument at offset " + std::to_string(at));
        }
        for (std::size_t k = 0; k < lowered.parts().size(); ++k) {
            for (const auto& [key, c] : lowered.parts()[k].terms()) {
                if (key.r + key.m != 1 || !key.a.is_zero() || !key.b.is_zero())
                    throw Error(ErrorKind::NonAffineArgument,
                                "argument at offset " + std::to_string(at) +
                                    " is not of the form a*x + b*y");
                if (k > 0) node.alpha_in_argument = true;
            }
        }
        const ExpPolyExpr rates = lowered.part(0);
        for (const auto& [key, c] : rates.terms()) (key.r == 1 ? node.rate_x : node.rate_y) = c;
        return node;
    }

    SurfaceExpr base() {
        skip_ws();
        if (pos_ >= text_.size()) throw SyntaxError(pos_, "unexpected end of input");
        const std::size_t at = pos_;
        const char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
        if (c == '(') {
            ++pos_;
            SurfaceExpr e = expr();
            expect(')');
            return e;
        }
        if (!std::isalpha(static_cast<unsigned char>(c))) throw SyntaxError(at, std::string("unexpected '") + c + "'");

        const std::string id = identifier();
        if (id == "x") return make(SurfaceExpr::Kind::X);
        if (id == "y") return make(SurfaceExpr::Kind::Y);
        if (id == "alpha") return make(SurfaceExpr::Kind::Alpha);
        if (id == "i") return constant(GaussRat::i());
        if (id == "e") {
            expect('^');
            expect('(');
            SurfaceExpr node = function_node(FuncKind::Exp, at);
            expect(')');
            return node;
        }
        FuncKind kind;
        if (id == "sin") kind = FuncKind::Sin;
        else if (id == "cos") kind = FuncKind::Cos;
        else if (id == "sinh") kind = FuncKind::Sinh;
        else if (id == "cosh") kind = FuncKind::Cosh;
        else if (id == "exp") kind = FuncKind::Exp;
        else throw SyntaxError(at, "unknown identifier '" + id + "'");
        expect('(');
        SurfaceExpr node = function_node(kind, at);
        expect(')');
        return node;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

AlphaSeries lower_function(const SurfaceExpr& node) {
    if (node.alpha_in_argument)
        throw Error(ErrorKind::AlphaInExponent, "alpha may only appear as a polynomial weight");
    const GaussRat& a = node.rate_x;
    const GaussRat& b = node.rate_y;
    const GaussRat i = GaussRat::i();
    const GaussRat half = GaussRat(Rational(1, 2));
    auto e = [](const GaussRat& ra, const GaussRat& rb) { return ExpPolyExpr::exp(ra, rb); };
    switch (node.func) {
        case FuncKind::Exp:
            return AlphaSeries(e(a, b));
        case FuncKind::Sin: {
            // (e^{i t} - e^{-i t}) / (2i)
            const GaussRat k = GaussRat(1) / (GaussRat(2) * i);
            return AlphaSeries(ep_scale(e(i * a, i * b), k) - ep_scale(e(-i * a, -i * b), k));
        }
        case FuncKind::Cos:
            return AlphaSeries(ep_scale(e(i * a, i * b), half) + ep_scale(e(-i * a, -i * b), half));
        case FuncKind::Sinh:
            return AlphaSeries(ep_scale(e(a, b), half) - ep_scale(e(-a, -b), half));
        case FuncKind::Cosh:
            return AlphaSeries(ep_scale(e(a, b), half) + ep_scale(e(-a, -b), half));
    }
    return {};
}

}  // namespace

SurfaceExpr parse_expr(std::string_view text) { return Parser(text).run(); }

AlphaSeries lower_with_alpha(const SurfaceExpr& ast) {
    using K = SurfaceExpr::Kind;
    switch (ast.kind) {
        case K::Const: return AlphaSeries(ExpPolyExpr(ast.value));
        case K::X: return AlphaSeries(ExpPolyExpr::x());
        case K::Y: return AlphaSeries(ExpPolyExpr::y());
        case K::Alpha: return AlphaSeries::alpha();
        case K::Add: {
            AlphaSeries sum;
            for (const auto& c : ast.children) sum = sum + lower_with_alpha(c);
            return sum;
        }
        case K::Mul: {
            AlphaSeries prod(ExpPolyExpr(GaussRat(1)));
            for (const auto& c : ast.children) prod = prod * lower_with_alpha(c);
            return prod;
        }
        case K::Neg: return AlphaSeries() - lower_with_alpha(ast.children.front());
        case K::Pow: {
            const AlphaSeries base = lower_with_alpha(ast.children.front());
            AlphaSeries out(ExpPolyExpr(GaussRat(1)));
            for (unsigned k = 0; k < ast.exponent; ++k) out = out * base;
            return out;
        }
        case K::Func: return lower_function(ast);
    }
    return {};
}

ExpPolyExpr lower_to_exp_poly(const SurfaceExpr& ast) {
    if (ast.contains_alpha()) throw Error(ErrorKind::AlphaNotAllowed, "crisp expression may not contain alpha");
    return lower_with_alpha(ast).part(0);
}

ExpPolyExpr parse_exp_poly(std::string_view text) { return lower_to_exp_poly(parse_expr(text)); }

}  // namespace dfee
