#include "dfee/table.hpp"

#include "dfee/parser.hpp"
#include "dfee/render.hpp"
#include "dfee/transform.hpp"

namespace dfee {

namespace {

std::string replace_all(std::string s, const std::string& from, const std::string& to) {
    for (std::size_t pos = 0; (pos = s.find(from, pos)) != std::string::npos; pos += to.size())
        s.replace(pos, from.size(), to);
    return s;
}

struct Entry {
    int rule;
    const char* function;
    const char* input;       // A, B are substituted
    const char* closed;      // in u = u^n, v = v^n; A, B substituted
    const char* reference;   // display form
};

// Closed forms are written in P = u^n, Q = v^n, so "u^2" stands for u^{2n}.
const Entry kEntries[] = {
    {3, "e^(ax+by)", "e^(A*x+B*y)", "(A+i*u)*(B+i*v)/((A^2+u^2)*(B^2+v^2))",
     "(a+iu^n)(b+iv^n)/((a^2+u^{2n})(b^2+v^{2n}))"},
    {4, "e^(-(ax+by))", "e^(-(A*x+B*y))", "(A-i*u)*(B-i*v)/((A^2+u^2)*(B^2+v^2))",
     "(a-iu^n)(b-iv^n)/((a^2+u^{2n})(b^2+v^{2n}))"},
    {5, "e^(i(ax+by))", "e^(i*(A*x+B*y))", "-1/((u-A)*(v-B))", "-1/((u^n-a)(v^n-b))"},
    {6, "e^(-i(ax+by))", "e^(-i*(A*x+B*y))", "-1/((u+A)*(v+B))", "-1/((u^n+a)(v^n+b))"},
    {7, "sin(ax+by)", "sin(A*x+B*y)", "i*(B*u+A*v)/((u^2-A^2)*(v^2-B^2))",
     "i(bu^n+av^n)/((u^{2n}-a^2)(v^{2n}-b^2))"},
    {8, "cos(ax+by)", "cos(A*x+B*y)", "-(u*v+A*B)/((u^2-A^2)*(v^2-B^2))",
     "-((uv)^n+ab)/((u^{2n}-a^2)(v^{2n}-b^2))"},
    {9, "sinh(ax+by)", "sinh(A*x+B*y)", "i*(A*v+B*u)/((A^2+u^2)*(B^2+v^2))",
     "i(av^n+bu^n)/((a^2+u^{2n})(b^2+v^{2n}))"},
    {10, "cosh(ax+by)", "cosh(A*x+B*y)", "(A*B-u*v)/((A^2+u^2)*(B^2+v^2))",
     "(ab-(uv)^n)/((a^2+u^{2n})(b^2+v^{2n}))"},
};

const std::pair<const char*, const char*> kParams[] = {{"1", "1"}, {"2", "3"}, {"1/2", "5/2"}, {"3", "1/3"}};
const std::pair<unsigned, unsigned> kPowers[] = {{0, 0}, {1, 2}, {2, 1}, {3, 3}};

TableRow evaluate(int rule, const std::string& function, const std::string& instance, const std::string& input,
                  const std::string& closed, const std::string& reference, std::optional<int> n) {
    TableRow row;
    row.rule = rule;
    row.function = function;
    row.instance = instance;
    row.input = input;
    row.reference = reference;
    const TransformExpr t = forward(parse_exp_poly(input));
    row.canonical = t.str();
    row.engine = render_paper(t, n);
    row.match = to_paper_vars(t) == parse_birat(closed, "u", "v");
    return row;
}

}  // namespace

std::vector<TableRow> rule_table(std::optional<int> n) {
    std::vector<TableRow> rows;
    rows.push_back(evaluate(1, "1", "", "1", "(-i/u)*(-i/v)", "(-i/u^n)(-i/v^n)", n));

    for (auto [r, m] : kPowers) {
        const std::string rs = std::to_string(r), ms = std::to_string(m);
        const std::string input = "x^" + rs + "*y^" + ms;
        const std::string closed = factorial(r).str() + "/(i*u)^" + std::to_string(r + 1) + "*" +
                                   factorial(m).str() + "/(i*v)^" + std::to_string(m + 1);
        TableRow row = evaluate(2, "x^r y^m", "r=" + rs + ", m=" + ms, input, closed,
                                "r!/(iu^n)^{r+1} * m!/(iv^n)^{m+1}", n);
        row.note = "printed exponent (iu)^{(r+1)n} read as (iu^n)^{r+1}; the two agree only at n=1";
        rows.push_back(std::move(row));
    }

    for (const auto& e : kEntries) {
        for (auto [a, b] : kParams) {
            const std::string A = std::string("(") + a + ")", B = std::string("(") + b + ")";
            auto sub = [&](const char* text) { return replace_all(replace_all(text, "A", A), "B", B); };
            rows.push_back(evaluate(e.rule, e.function, std::string("a=") + a + ", b=" + b, sub(e.input),
                                    sub(e.closed), e.reference, n));
        }
    }
    return rows;
}

}  // namespace dfee
