#pragma once

#include <string>
#include <string_view>

#include "dfee/solver.hpp"
#include "dfee/verify.hpp"

namespace dfee {

struct ProblemFile {
    ProblemSpec spec;
    /// Defaults with the file's "verify" overrides applied.
    VerifyOptions verify;
};

/// Reads the JSON problem document. Schema problems throw Error(Schema) with
/// the offending key; expression errors propagate from the parser. Fuzzy
/// validity is left to validate_spec.
ProblemFile parse_problem(std::string_view json_text);
ProblemFile load_problem(const std::string& path);

/// Lowers both bounds without the fuzzy validity check.
FuzzyFunction parse_fuzzy_unchecked(std::string_view lower, std::string_view upper);

}  // namespace dfee
