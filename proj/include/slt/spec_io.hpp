#pragma once

#include <string>

#include "slt/problem.hpp"

namespace slt {

/// Parse a problem description from JSON text. Schema:
///   {"interval": {"a": num, "b": num, "c": num},   // optional, default -pi..pi, c=0
///    "alpha": num, "beta": num,                    // radians
///    "transmission": [[a1,a2,a3,a4],[b1,b2,b3,b4]],
///    "potential": {"left": [c0,...], "right": [c0,...]}}
/// Throws Error(ParseError) with location information on malformed input.
ProblemSpec parse_problem(const std::string& json_text);

/// Read and parse a problem file.
ProblemSpec load_problem(const std::string& path);

}  // namespace slt
