#pragma once

#include <string>

#include "floquet/operator_model.hpp"

namespace floquet {

// Operator spec files: {"p": 2, "q1": [[n, re, im], ...], "q2": [...]}.
// Missing coefficients are zero; amplitudes are mirrored to n -> -n.
OperatorSpec parse_spec_json(const std::string& text);

// Flat TOML subset with the same keys: p = 2, q2 = [[1, 0.5, 0.0]].
OperatorSpec parse_spec_toml(const std::string& text);

// Dispatches on the file extension (.toml, otherwise JSON).
OperatorSpec load_spec(const std::string& path);

std::string spec_to_json(const OperatorSpec& spec);

}  // namespace floquet
