#include "dfee/problem.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "dfee/error.hpp"
#include "dfee/parser.hpp"

namespace dfee {

using nlohmann::json;

namespace {

[[noreturn]] void schema(const std::string& where, const std::string& what) {
    throw Error(ErrorKind::Schema, where + ": " + what);
}

const json& need(const json& obj, const char* key, const std::string& where) {
    auto it = obj.find(key);
    if (it == obj.end()) schema(where, std::string("missing key '") + key + "'");
    return *it;
}

Rational rational(const json& v, const std::string& where) {
    if (v.is_number_integer()) return Rational(v.get<long>());
    if (!v.is_string()) schema(where, "rationals are written as strings, e.g. \"1/2\"");
    try {
        return Rational::parse(v.get<std::string>());
    } catch (const Error& e) {
        schema(where, e.detail());
    }
}

std::string text(const json& v, const std::string& where) {
    if (!v.is_string()) schema(where, "expected an expression string");
    return v.get<std::string>();
}

/// Expression errors keep their kind; the key is prepended to the message.
template <typename F>
auto located(const std::string& where, F&& fn) {
    try {
        return fn();
    } catch (const Error& e) {
        throw Error(e.kind(), where + ": " + e.detail());
    }
}

FuzzyFunction fuzzy(const json& v, const std::string& where) {
    if (!v.is_object()) schema(where, "expected {\"lower\": ..., \"upper\": ...}");
    const std::string lo = text(need(v, "lower", where), where + ".lower");
    const std::string hi = text(need(v, "upper", where), where + ".upper");
    return located(where, [&] { return parse_fuzzy_unchecked(lo, hi); });
}

std::vector<double> doubles(const json& v, const std::string& where) {
    if (!v.is_array() || v.empty()) schema(where, "expected a non-empty array of numbers");
    std::vector<double> out;
    for (const auto& e : v) {
        if (!e.is_number()) schema(where, "expected numbers");
        out.push_back(e.get<double>());
    }
    return out;
}

}  // namespace

FuzzyFunction parse_fuzzy_unchecked(std::string_view lower, std::string_view upper) {
    return {lower_with_alpha(parse_expr(lower)), lower_with_alpha(parse_expr(upper))};
}

ProblemFile parse_problem(std::string_view json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw Error(ErrorKind::Schema, std::string("malformed JSON: ") + e.what());
    }
    if (!doc.is_object()) schema("document", "expected a JSON object");

    ProblemFile out;
    ProblemSpec& p = out.spec;
    if (auto it = doc.find("n"); it != doc.end()) {
        if (!it->is_number_integer()) schema("n", "expected an integer");
        p.n_display = it->get<int>();
    }
    if (auto it = doc.find("case"); it != doc.end()) {
        const std::string c = it->is_string() ? it->get<std::string>() : "";
        if (c == "i") p.diff_case = DiffCase::I;
        else if (c == "ii") p.diff_case = DiffCase::II;
        else schema("case", "expected \"i\" or \"ii\"");
    }

    auto order = [&](const char* key) {
        const json& v = need(doc, key, "document");
        if (!v.is_number_integer() || v.get<long>() < 1) schema(key, "expected a positive integer");
        return static_cast<std::size_t>(v.get<long>());
    };
    const std::size_t l = order("x_order"), m = order("y_order");

    auto coeffs = [&](const char* key, std::size_t count) {
        const json& v = need(doc, key, "document");
        if (!v.is_array() || v.size() != count)
            schema(key, "expected an array of " + std::to_string(count) + " rationals");
        std::vector<Rational> out;
        for (std::size_t k = 0; k < v.size(); ++k) out.push_back(rational(v[k], std::string(key) + "[" + std::to_string(k) + "]"));
        return out;
    };
    p.a = coeffs("a", l);
    p.b = coeffs("b", m);
    p.c = rational(need(doc, "c", "document"), "c");

    const std::string kernel = text(need(doc, "kernel", "document"), "kernel");
    p.kernel = located("kernel", [&] { return parse_exp_poly(kernel); });
    p.forcing = fuzzy(need(doc, "g", "document"), "g");

    auto ics = [&](const char* key, std::size_t count) {
        const json& v = need(doc, key, "document");
        if (!v.is_array() || v.size() != count)
            schema(key, "expected an array of " + std::to_string(count) + " fuzzy functions");
        std::vector<FuzzyFunction> out;
        for (std::size_t k = 0; k < v.size(); ++k) out.push_back(fuzzy(v[k], std::string(key) + "[" + std::to_string(k) + "]"));
        return out;
    };
    p.x_ics = ics("x_ics", l);
    p.y_ics = ics("y_ics", m);

    if (auto it = doc.find("verify"); it != doc.end()) {
        const json& v = *it;
        if (!v.is_object()) schema("verify", "expected an object");
        if (auto t = v.find("tol"); t != v.end()) {
            if (!t->is_number() || t->get<double>() <= 0) schema("verify.tol", "expected a positive number");
            out.verify.tol = t->get<double>();
        }
        if (auto t = v.find("panels"); t != v.end()) {
            if (!t->is_number_integer() || t->get<long>() < 1) schema("verify.panels", "expected a positive integer");
            out.verify.panels = static_cast<unsigned>(t->get<long>());
        }
        if (auto g = v.find("grid"); g != v.end()) {
            if (!g->is_object()) schema("verify.grid", "expected an object");
            if (auto e = g->find("xs"); e != g->end()) out.verify.xs = doubles(*e, "verify.grid.xs");
            if (auto e = g->find("ys"); e != g->end()) out.verify.ys = doubles(*e, "verify.grid.ys");
            if (auto e = g->find("alphas"); e != g->end()) out.verify.alphas = doubles(*e, "verify.grid.alphas");
        }
    }
    return out;
}

ProblemFile load_problem(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::Schema, "cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_problem(buf.str());
}

}  // namespace dfee
