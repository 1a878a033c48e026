#pragma once

#include <string>
#include <vector>

#include "dfee/fuzzy.hpp"
#include "dfee/ratfunc.hpp"
#include "dfee/roots.hpp"
#include "dfee/symexpr.hpp"

namespace dfee {

enum class DiffCase { I, II };

/// sum_h a_h d^h w/dx^h + sum_j b_j d^j w/dy^j + c w = g + K ** w, with
/// d^h w/dx^h (0, y) = x_ics[h] and d^j w/dy^j (x, 0) = y_ics[j].
struct ProblemSpec {
    std::vector<Rational> a;  // a_1 .. a_l
    std::vector<Rational> b;  // b_1 .. b_m
    Rational c;
    ExpPolyExpr kernel;
    FuzzyFunction forcing;
    std::vector<FuzzyFunction> x_ics;  // functions of y
    std::vector<FuzzyFunction> y_ics;  // functions of x
    DiffCase diff_case = DiffCase::I;
    int n_display = 1;

    unsigned l() const { return static_cast<unsigned>(a.size()); }
    unsigned m() const { return static_cast<unsigned>(b.size()); }
    /// Every fuzzy input with lower and upper exchanged.
    ProblemSpec swapped() const;
};

struct SpecLimits {
    unsigned max_order = 4;
    FuzzyGrid grid = FuzzyGrid::standard();
};

struct SpecReport {
    bool ok = true;
    std::string condition;  // e.g. "NegativeCoefficient", "KernelNotPositive"
    std::string message;

    explicit operator bool() const { return ok; }
};

SpecReport validate_spec(const ProblemSpec& p, const SpecLimits& limits = {});

/// sum a_h U^h + sum b_j V^j + c - K_hat. Throws ZeroDenominator.
BiRat assemble_denominator(const ProblemSpec& p);

/// Image of one side of the solution, one entry per power of alpha.
std::vector<BiRat> assemble(const ProblemSpec& p, bool upper_side);

struct SolveOptions {
    SnapOptions snap;
    /// Run the independent (side, alpha power) sub-solves concurrently.
    bool parallel = true;
    /// Reject outputs that are not fuzzy numbers (InvalidFuzzyResult).
    bool check_output = true;
    FuzzyGrid grid = FuzzyGrid::standard();
};

struct Solution {
    FuzzyFunction value;
    /// Separated images per alpha power, for audit.
    std::vector<TransformExpr> lower_images;
    std::vector<TransformExpr> upper_images;
};

Solution solve(const ProblemSpec& p, const SolveOptions& opts = {});

/// Confirms every complex term has its conjugate partner, so the function is
/// real-valued. Returns f unchanged; throws ResidualImaginaryPart otherwise.
ExpPolyExpr realify(const ExpPolyExpr& f);

}  // namespace dfee
