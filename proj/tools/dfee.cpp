// Command-line front end: solve, verify, transform, table.
//
// Exit codes: 0 ok, 2 parse/schema, 3 validation, 4 not solvable in the
// exponential-polynomial class, 5 residual check failed.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "dfee/error.hpp"
#include "dfee/parser.hpp"
#include "dfee/problem.hpp"
#include "dfee/render.hpp"
#include "dfee/solver.hpp"
#include "dfee/table.hpp"
#include "dfee/transform.hpp"
#include "dfee/verify.hpp"

using nlohmann::json;
using namespace dfee;

namespace {

constexpr const char* kVersion = "dfee 0.1.0";

enum Exit { kOk = 0, kParse = 2, kInvalid = 3, kNotSolvable = 4, kResidual = 5 };

/// Thrown to leave a command with a given exit code and a JSON diagnostic.
struct Failure {
    int code;
    std::string kind;
    std::string message;
};

int emit(const json& doc, const std::optional<std::string>& out_path = std::nullopt) {
    const std::string text = doc.dump(2);
    std::cout << text << "\n";
    if (out_path) {
        std::ofstream f(*out_path);
        f << text << "\n";
    }
    return 0;
}

int report_failure(const std::string& command, const Failure& f) {
    json doc;
    doc["command"] = command;
    doc["tool_version"] = kVersion;
    doc["error"] = {{"kind", f.kind}, {"message", f.message}};
    doc["exit_code"] = f.code;
    emit(doc);
    std::cerr << command << ": " << f.message << "\n";
    return f.code;
}

/// Runs fn, turning engine errors into a Failure with the given exit code.
template <typename F>
auto phase(int code, F&& fn) {
    try {
        return fn();
    } catch (const Error& e) {
        throw Failure{code, std::string(to_string(e.kind())), e.what()};
    }
}

ProblemFile load(const std::string& path) { return phase(kParse, [&] { return load_problem(path); }); }

void validate(const ProblemSpec& spec) {
    if (auto rep = validate_spec(spec); !rep) throw Failure{kInvalid, rep.condition, rep.message};
}

Solution run_solver(const ProblemSpec& spec) {
    try {
        return solve(spec);
    } catch (const Error& e) {
        std::string msg = e.what();
        if (is_not_solvable(e.kind())) msg = "not solvable in the exponential-polynomial class: " + msg;
        throw Failure{kNotSolvable, std::string(to_string(e.kind())), msg};
    }
}

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

json side_json(const SideResidual& s) {
    return {{"max", s.max}, {"mean", s.mean}, {"worst", {{"x", s.worst_x}, {"y", s.worst_y}, {"alpha", s.worst_alpha}}}};
}

json residual_json(const ResidualReport& r, const VerifyOptions& opts) {
    return {{"lower", side_json(r.lower)},
            {"upper", side_json(r.upper)},
            {"quadrature", {{"rule", r.rule}, {"panels", r.panels}}},
            {"grid", {{"xs", opts.xs}, {"ys", opts.ys}, {"alphas", opts.alphas}}},
            {"points", r.points},
            {"tol", r.tol},
            {"pass", r.pass}};
}

json ics_json(const IcReport& r) {
    return {{"max_deviation", r.max_deviation}, {"worst", r.worst}, {"tol", r.tol}, {"pass", r.pass}};
}

json images_json(const std::vector<TransformExpr>& images, int n) {
    json arr = json::array();
    for (std::size_t k = 0; k < images.size(); ++k)
        arr.push_back({{"alpha_power", k}, {"canonical", images[k].str()}, {"paper", render_paper(images[k], n)}});
    return arr;
}

void summarize(const ResidualReport& r, const IcReport& ics) {
    std::cerr << "residual: lower max " << r.lower.max << ", upper max " << r.upper.max << " over " << r.points
              << " points (tol " << r.tol << ") " << (r.pass ? "PASS" : "FAIL") << "\n";
    std::cerr << "initial conditions: max deviation " << ics.max_deviation << " " << (ics.pass ? "PASS" : "FAIL")
              << "\n";
}

int cmd_solve(const std::string& path, const std::optional<std::string>& out, std::optional<double> tol) {
    const ProblemFile file = load(path);
    validate(file.spec);
    VerifyOptions vopts = file.verify;
    if (tol) vopts.tol = *tol;

    const auto t0 = std::chrono::steady_clock::now();
    const Solution sol = run_solver(file.spec);
    const double solve_ms = ms_since(t0);

    const std::string lower = render_series(sol.value.lower), upper = render_series(sol.value.upper);
    const auto t1 = std::chrono::steady_clock::now();
    const ResidualReport res = residual(file.spec, sol.value, vopts);
    const IcReport ics = check_ics(file.spec, sol.value, vopts);
    const double verify_ms = ms_since(t1);

    json doc;
    doc["command"] = "solve";
    doc["tool_version"] = kVersion;
    doc["problem"] = path;
    doc["case"] = file.spec.diff_case == DiffCase::I ? "i" : "ii";
    doc["solution"] = {{"lower", lower}, {"upper", upper}};
    doc["transform_domain"] = {{"lower", images_json(sol.lower_images, file.spec.n_display)},
                               {"upper", images_json(sol.upper_images, file.spec.n_display)}};
    doc["residual"] = residual_json(res, vopts);
    doc["initial_conditions"] = ics_json(ics);
    doc["timing"] = {{"solve_ms", solve_ms}, {"verify_ms", verify_ms}};
    const bool pass = res.pass && ics.pass;
    doc["exit_code"] = pass ? kOk : kResidual;
    emit(doc, out);

    std::cerr << "lower: " << lower << "\nupper: " << upper << "\n";
    summarize(res, ics);
    return pass ? kOk : kResidual;
}

FuzzyFunction load_solution(const std::string& path) {
    return phase(kParse, [&] {
        std::ifstream in(path);
        if (!in) throw Error(ErrorKind::Schema, "cannot open " + path);
        json doc;
        try {
            doc = json::parse(in);
        } catch (const json::parse_error& e) {
            throw Error(ErrorKind::Schema, std::string("malformed JSON: ") + e.what());
        }
        // Accept either {"lower", "upper"} or a solve output document.
        const json& s = doc.contains("solution") ? doc["solution"] : doc;
        if (!s.is_object() || !s.contains("lower") || !s.contains("upper") || !s["lower"].is_string() ||
            !s["upper"].is_string())
            throw Error(ErrorKind::Schema, "solution file needs string keys 'lower' and 'upper'");
        return parse_fuzzy_unchecked(s["lower"].get<std::string>(), s["upper"].get<std::string>());
    });
}

int cmd_verify(const std::string& path, const std::optional<std::string>& solution_path, std::optional<double> tol,
               std::optional<unsigned> panels) {
    const ProblemFile file = load(path);
    validate(file.spec);
    VerifyOptions vopts = file.verify;
    if (tol) vopts.tol = *tol;
    if (panels) vopts.panels = *panels;

    const FuzzyFunction w = solution_path ? load_solution(*solution_path) : run_solver(file.spec).value;
    const auto t0 = std::chrono::steady_clock::now();
    const ResidualReport res = residual(file.spec, w, vopts);
    const IcReport ics = check_ics(file.spec, w, vopts);

    json doc;
    doc["command"] = "verify";
    doc["tool_version"] = kVersion;
    doc["problem"] = path;
    doc["solution_source"] = solution_path ? *solution_path : "solver";
    doc["residual"] = residual_json(res, vopts);
    doc["initial_conditions"] = ics_json(ics);
    doc["timing"] = {{"verify_ms", ms_since(t0)}};
    const bool pass = res.pass && ics.pass;
    doc["exit_code"] = pass ? kOk : kResidual;
    emit(doc);
    summarize(res, ics);
    return pass ? kOk : kResidual;
}

int cmd_transform(const std::string& expr, const std::string& dir, std::optional<int> n) {
    json doc;
    doc["command"] = "transform";
    doc["tool_version"] = kVersion;
    doc["direction"] = dir;
    doc["input"] = expr;
    if (n) doc["n"] = *n;
    if (dir == "forward") {
        const ExpPolyExpr f = phase(kParse, [&] { return parse_exp_poly(expr); });
        const TransformExpr t = forward(f);
        doc["canonical"] = t.str();
        doc["paper"] = render_paper(t, n);
        emit(doc);
        std::cerr << "U, V:      " << t.str() << "\nu^n, v^n:  " << render_paper(t, n) << "\n";
        return kOk;
    }
    const BiRat r = phase(kParse, [&] { return parse_birat(expr, "U", "V"); });
    const TransformExpr t = phase(kNotSolvable, [&] { return separate(r); });
    const ExpPolyExpr f = inverse(t);
    std::string text;
    try {
        text = render_exp_poly(f);
    } catch (const Error&) {
        text = render_complex(f);
    }
    doc["canonical"] = t.str();
    doc["paper"] = render_paper(t, n);
    doc["function"] = text;
    emit(doc);
    std::cerr << "separated: " << t.str() << "\nfunction:  " << text << "\n";
    return kOk;
}

int cmd_table(std::optional<int> n) {
    const auto rows = rule_table(n);
    json arr = json::array();
    bool all = true;
    for (const auto& r : rows) {
        json row = {{"rule", r.rule},         {"function", r.function}, {"instance", r.instance},
                    {"input", r.input},       {"canonical", r.canonical}, {"engine", r.engine},
                    {"reference", r.reference}, {"match", r.match}};
        if (!r.note.empty()) row["note"] = r.note;
        arr.push_back(row);
        all = all && r.match;
        std::cerr << (r.match ? "ok  " : "BAD ") << r.rule << "  " << r.function;
        if (!r.instance.empty()) std::cerr << " [" << r.instance << "]";
        std::cerr << "\n      engine:    " << r.engine << "\n      reference: " << r.reference
                  << (r.note.empty() ? "" : " (*)") << "\n";
    }
    std::cerr << "(*) " << rows[1].note << "\n";
    json doc;
    doc["command"] = "table";
    doc["tool_version"] = kVersion;
    doc["rows"] = arr;
    doc["all_match"] = all;
    emit(doc);
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Closed-form solver for fuzzy Volterra integro-differential equations"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    std::string path, solution, expr, dir = "forward";
    std::optional<std::string> out;
    std::optional<double> tol;
    std::optional<unsigned> panels;
    std::optional<int> n;

    auto* solve_cmd = app.add_subcommand("solve", "solve a problem file and verify the result");
    solve_cmd->add_option("file", path, "problem JSON")->required();
    solve_cmd->add_option("--out", out, "also write the output document here");
    solve_cmd->add_option("--tol", tol, "residual tolerance");

    auto* verify_cmd = app.add_subcommand("verify", "check a solution against the equation");
    verify_cmd->add_option("file", path, "problem JSON")->required();
    auto* sol_opt = verify_cmd->add_option("--solution", solution, "JSON with lower/upper expressions");
    verify_cmd->add_option("--tol", tol, "residual tolerance");
    verify_cmd->add_option("--panels", panels, "quadrature panels per axis")->check(CLI::PositiveNumber);

    auto* transform_cmd = app.add_subcommand("transform", "forward or inverse transform of one expression");
    transform_cmd->add_option("expr", expr, "expression in x, y (forward) or U, V (inverse)")->required();
    transform_cmd->add_option("--dir", dir, "forward or inverse")->check(CLI::IsMember({"forward", "inverse"}));
    transform_cmd->add_option("--n", n, "substitute this n in the u^n, v^n rendering");

    auto* table_cmd = app.add_subcommand("table", "regenerate the table of transform pairs");
    table_cmd->add_option("--n", n, "substitute this n in the rendering");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kParse;
    }

    const std::string command = app.get_subcommands().front()->get_name();
    try {
        if (*solve_cmd) return cmd_solve(path, out, tol);
        if (*verify_cmd)
            return cmd_verify(path, *sol_opt ? std::optional<std::string>(solution) : std::nullopt, tol, panels);
        if (*transform_cmd) return cmd_transform(expr, dir, n);
        if (*table_cmd) return cmd_table(n);
    } catch (const Failure& f) {
        return report_failure(command, f);
    }
    return kParse;
}
