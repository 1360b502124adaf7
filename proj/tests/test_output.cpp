#include <doctest.h>

#include <cmath>
#include <limits>

#include "floquet/output.hpp"

using namespace floquet;

TEST_CASE("float formatting") {
    CHECK(format_float(1.0) == "1.000000000000e+00");
    CHECK(format_float(-0.0) == "0.000000000000e+00");
    CHECK(format_float(std::numeric_limits<double>::quiet_NaN()) == "nan");
    CHECK(format_float(-std::numeric_limits<double>::infinity()) == "-inf");
}

TEST_CASE("JSON output is sorted and stable") {
    nlohmann::json j;
    j["zeta"] = 1.5;
    j["alpha"] = {{"b", 2}, {"a", "x"}};
    j["mid"] = complex_json(Complex(1.0, -2.0));
    const std::string s = dump_json(j);
    CHECK(s.find("\"alpha\"") < s.find("\"mid\""));
    CHECK(s.find("\"mid\"") < s.find("\"zeta\""));
    CHECK(s.find("1.500000000000e+00") != std::string::npos);
    CHECK(s == dump_json(nlohmann::json::parse(s)));
}

TEST_CASE("CSV output") {
    CsvTable t{{"n", "value", "ok"}, {{1, 0.25, true}, {2, "text", false}}};
    const std::string s = dump_csv(t);
    CHECK(s.rfind("n,value,ok\n", 0) == 0);
    CHECK(s.find("1,2.500000000000e-01,true") != std::string::npos);
}
