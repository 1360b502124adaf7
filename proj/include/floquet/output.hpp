#pragma once

// Deterministic serialization: sorted keys, every float as %.12e.

#include <string>
#include <vector>

#include <json.hpp>

#include "floquet/operator_model.hpp"

namespace floquet {

std::string format_float(double x);

// Compact-free, two-space indented JSON with objects in key order.
std::string dump_json(const nlohmann::json& value);

nlohmann::json complex_json(Complex z);  // [re, im]

struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<nlohmann::json>> rows;  // numbers, strings or booleans
};

std::string dump_csv(const CsvTable& table);

}  // namespace floquet
