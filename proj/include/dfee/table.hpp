#pragma once

#include <optional>
#include <string>
#include <vector>

namespace dfee {

/// One instantiation of a tabulated transform pair, engine against the
/// reference closed form.
struct TableRow {
    int rule = 0;
    std::string function;   // symbolic, e.g. "sin(ax+by)"
    std::string instance;   // e.g. "a=1, b=2"
    std::string input;      // the expression fed to the engine
    std::string canonical;  // engine image in U, V
    std::string engine;     // engine image in u^n, v^n
    std::string reference;  // closed form with symbolic parameters
    bool match = false;     // exact rational-function equality
    std::string note;
};

/// Regenerates the ten transform pairs, each at several rational
/// parameter values. n only affects the rendered exponents.
std::vector<TableRow> rule_table(std::optional<int> n = std::nullopt);

}  // namespace dfee
