#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rzeta/group.hpp"

namespace rzeta {

class jobspec_error : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Optional golden values inside an instance file, checked by `verify`.
struct Expectations {
    std::optional<std::vector<RNumber>> rnumbers;      // for m = 1, 2, ...
    std::optional<std::vector<mpz_class>> numerator;   // zeta coefficients, ascending
    std::optional<std::vector<mpz_class>> denominator;
};

/// One instance: {"n": int, "holonomy_rank": int, "D": [[int]], "d": [int]}
/// plus an optional "expect" block.
struct JobSpec {
    DiagZ2Group g;
    AffineAut aut;
    Expectations expect;
};

JobSpec parse_jobspec(const std::string& json_text);
JobSpec load_jobspec(const std::string& path);  // throws jobspec_error on I/O

}  // namespace rzeta
