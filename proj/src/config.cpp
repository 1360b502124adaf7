#include "floquet/config.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "floquet/errors.hpp"

namespace floquet {

using nlohmann::json;

namespace {

OperatorSpec spec_from_json(const json& doc) {
    if (!doc.is_object() || !doc.contains("p")) throw ConfigError("spec must be an object with key 'p'");
    if (!doc["p"].is_number_integer()) throw ConfigError("'p' must be an integer");
    const int p = doc["p"].get<int>();
    if (p < 2) throw InvalidOrder("order parameter p must be at least 2, got " + std::to_string(p));

    for (const auto& [key, value] : doc.items()) {
        if (key == "p" || key == "name" || key == "description") continue;
        bool known = key.size() > 1 && key[0] == 'q';
        if (known) {
            try {
                int j = std::stoi(key.substr(1));
                known = j >= 1 && j <= p && std::to_string(j) == key.substr(1);
            } catch (const std::exception&) {
                known = false;
            }
        }
        if (!known) throw ConfigError("unexpected key '" + key + "'");
    }

    std::vector<TrigPoly> coeffs;
    for (int j = 1; j <= p; ++j) {
        const std::string key = "q" + std::to_string(j);
        std::map<int, Complex> amps;
        if (doc.contains(key)) {
            const json& rows = doc[key];
            if (!rows.is_array()) throw ConfigError("'" + key + "' must be an array of [n, re, im]");
            for (const auto& row : rows) {
                if (!row.is_array() || row.size() < 2 || row.size() > 3 || !row[0].is_number_integer())
                    throw ConfigError("entries of '" + key + "' must be [n, re, im]");
                const int n = row[0].get<int>();
                const double re = row[1].get<double>();
                const double im = row.size() == 3 ? row[2].get<double>() : 0.0;
                if (amps.count(n)) throw ConfigError("duplicate harmonic " + std::to_string(n) + " in " + key);
                amps[n] = Complex(re, im);
            }
        }
        coeffs.push_back(TrigPoly::mirrored(amps));
    }
    return OperatorSpec(p, std::move(coeffs));
}

// Minimal TOML reader: bare keys, numbers, and (nested, possibly multi-line) arrays.
class TomlReader {
public:
    explicit TomlReader(const std::string& text) : s_(strip_comments(text)) {}

    json parse() {
        json out = json::object();
        skip_ws();
        while (pos_ < s_.size()) {
            std::string key = read_key();
            skip_ws();
            expect('=');
            skip_ws();
            if (out.contains(key)) fail("duplicate key '" + key + "'");
            out[key] = read_value();
            skip_ws();
        }
        return out;
    }

private:
    static std::string strip_comments(const std::string& text) {
        std::string out;
        bool in_comment = false, in_string = false;
        for (char c : text) {
            if (c == '\n') in_comment = false;
            if (!in_comment && c == '"') in_string = !in_string;
            if (!in_string && c == '#') in_comment = true;
            if (!in_comment) out.push_back(c);
        }
        return out;
    }

    [[noreturn]] void fail(const std::string& msg) const {
        throw ConfigError("TOML parse error at offset " + std::to_string(pos_) + ": " + msg);
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    void expect(char c) {
        if (pos_ >= s_.size() || s_[pos_] != c) fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    std::string read_key() {
        size_t start = pos_;
        while (pos_ < s_.size() &&
               (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_' || s_[pos_] == '-'))
            ++pos_;
        if (start == pos_) fail("expected a key");
        return s_.substr(start, pos_ - start);
    }

    json read_value() {
        if (pos_ >= s_.size()) fail("missing value");
        if (s_[pos_] == '[') {
            ++pos_;
            json arr = json::array();
            skip_ws();
            while (pos_ < s_.size() && s_[pos_] != ']') {
                arr.push_back(read_value());
                skip_ws();
                if (pos_ < s_.size() && s_[pos_] == ',') {
                    ++pos_;
                    skip_ws();
                }
            }
            expect(']');
            return arr;
        }
        if (s_[pos_] == '"') {
            size_t end = s_.find('"', pos_ + 1);
            if (end == std::string::npos) fail("unterminated string");
            std::string v = s_.substr(pos_ + 1, end - pos_ - 1);
            pos_ = end + 1;
            return v;
        }
        size_t start = pos_;
        while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) ||
                                    s_[pos_] == '.' || s_[pos_] == '-' || s_[pos_] == '+' || s_[pos_] == '_'))
            ++pos_;
        std::string tok = s_.substr(start, pos_ - start);
        tok.erase(std::remove(tok.begin(), tok.end(), '_'), tok.end());
        if (tok.empty()) fail("expected a number");
        try {
            size_t used = 0;
            if (tok.find_first_of(".eE") == std::string::npos || tok == "inf" || tok == "nan") {
                long long v = std::stoll(tok, &used);
                if (used == tok.size()) return v;
            }
            double v = std::stod(tok, &used);
            if (used != tok.size()) fail("bad number '" + tok + "'");
            return v;
        } catch (const std::invalid_argument&) {
            fail("bad number '" + tok + "'");
        } catch (const std::out_of_range&) {
            fail("number out of range '" + tok + "'");
        }
    }

    std::string s_;
    size_t pos_ = 0;
};

}  // namespace

OperatorSpec parse_spec_json(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("JSON parse error: ") + e.what());
    }
    try {
        return spec_from_json(doc);
    } catch (const json::type_error& e) {
        throw ConfigError(std::string("bad value type: ") + e.what());
    }
}

OperatorSpec parse_spec_toml(const std::string& text) {
    json doc = TomlReader(text).parse();
    try {
        return spec_from_json(doc);
    } catch (const json::type_error& e) {
        throw ConfigError(std::string("bad value type: ") + e.what());
    }
}

OperatorSpec load_spec(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open spec file '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    const bool toml = path.size() >= 5 && path.substr(path.size() - 5) == ".toml";
    return toml ? parse_spec_toml(buf.str()) : parse_spec_json(buf.str());
}

std::string spec_to_json(const OperatorSpec& spec) {
    json doc;
    doc["p"] = spec.p();
    for (int j = 1; j <= spec.p(); ++j) {
        json rows = json::array();
        for (const auto& [n, a] : spec.q(j).amplitudes())
            if (n >= 0) rows.push_back({n, a.real(), a.imag()});
        doc["q" + std::to_string(j)] = rows;
    }
    return doc.dump();
}

}  // namespace floquet
