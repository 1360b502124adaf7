#include "floquet/output.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace floquet {

namespace {

void write(std::ostringstream& out, const nlohmann::json& v, int depth) {
    const std::string pad(2 * (depth + 1), ' ');
    const std::string close(2 * depth, ' ');
    switch (v.type()) {
        case nlohmann::json::value_t::object: {
            if (v.empty()) {
                out << "{}";
                return;
            }
            out << "{\n";
            bool first = true;
            for (const auto& [key, item] : v.items()) {  // std::map storage: sorted
                if (!first) out << ",\n";
                first = false;
                out << pad << nlohmann::json(key).dump() << ": ";
                write(out, item, depth + 1);
            }
            out << "\n" << close << "}";
            return;
        }
        case nlohmann::json::value_t::array: {
            if (v.empty()) {
                out << "[]";
                return;
            }
            // short arrays of scalars stay on one line
            bool flat = v.size() <= 4;
            for (const auto& item : v) flat = flat && !item.is_structured();
            if (flat) {
                out << "[";
                for (size_t i = 0; i < v.size(); ++i) {
                    if (i) out << ", ";
                    write(out, v[i], depth + 1);
                }
                out << "]";
                return;
            }
            out << "[\n";
            for (size_t i = 0; i < v.size(); ++i) {
                if (i) out << ",\n";
                out << pad;
                write(out, v[i], depth + 1);
            }
            out << "\n" << close << "]";
            return;
        }
        case nlohmann::json::value_t::number_float: {
            const double x = v.get<double>();
            if (std::isfinite(x)) out << format_float(x);
            else out << "\"" << format_float(x) << "\"";
            return;
        }
        default:
            out << v.dump();
    }
}

std::string csv_cell(const nlohmann::json& v) {
    if (v.is_number_float()) return format_float(v.get<double>());
    if (v.is_string()) {
        const std::string s = v.get<std::string>();
        if (s.find_first_of(",\"\n") == std::string::npos) return s;
        std::string quoted = "\"";
        for (char c : s) quoted += c == '"' ? std::string("\"\"") : std::string(1, c);
        return quoted + "\"";
    }
    return v.dump();
}

}  // namespace

std::string format_float(double x) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12e", x == 0.0 ? 0.0 : x);  // no negative zero
    return buf;
}

std::string dump_json(const nlohmann::json& value) {
    std::ostringstream out;
    write(out, value, 0);
    out << "\n";
    return out.str();
}

nlohmann::json complex_json(Complex z) { return nlohmann::json::array({z.real(), z.imag()}); }

std::string dump_csv(const CsvTable& table) {
    std::ostringstream out;
    for (size_t i = 0; i < table.header.size(); ++i) out << (i ? "," : "") << table.header[i];
    out << "\n";
    for (const auto& row : table.rows) {
        for (size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_cell(row[i]);
        out << "\n";
    }
    return out.str();
}

}  // namespace floquet
