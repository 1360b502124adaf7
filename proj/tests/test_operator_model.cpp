#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>

#include "floquet/acceptance.hpp"
#include "floquet/config.hpp"
#include "floquet/errors.hpp"
#include "floquet/operator_model.hpp"

using namespace floquet;

namespace {

const TrigPoly kCos = TrigPoly({{1, 0.5}, {-1, 0.5}});

}  // namespace

TEST_CASE("evaluate_coefficient on simple polynomials") {
    CHECK(evaluate_coefficient(TrigPoly({{0, 1.0}}), 0.37) == doctest::Approx(1.0));
    CHECK(evaluate_coefficient(kCos, 0.0) == doctest::Approx(1.0));
    CHECK(std::abs(evaluate_coefficient(kCos, 0.25)) < 1e-15);
}

TEST_CASE("fourier_coeff") {
    CHECK(std::abs(fourier_coeff(TrigPoly({{0, 3.0}}), 0) - Complex(3.0)) < 1e-15);
    CHECK(std::abs(fourier_coeff(kCos, 1) - Complex(0.5)) < 1e-15);
    CHECK(std::abs(fourier_coeff(kCos, 2)) == 0.0);
    CHECK(kCos == TrigPoly::cosine(1, 1.0));
}

TEST_CASE("Hermitian polynomials evaluate to real values") {
    TrigPoly q = TrigPoly::mirrored({{0, 0.3}, {1, {0.4, -1.2}}, {3, {2.0, 0.7}}, {5, {-0.1, 0.05}}});
    double max_re = 0.0, max_im = 0.0;
    for (int i = 0; i < 64; ++i) {
        Complex v = q.evaluate_complex(i / 64.0);
        max_re = std::max(max_re, std::abs(v.real()));
        max_im = std::max(max_im, std::abs(v.imag()));
    }
    CHECK(max_im < 1e-12 * (1.0 + max_re));
    CHECK(q.sup_bound() >= max_re);
}

TEST_CASE("non-Hermitian amplitudes are rejected") {
    CHECK_THROWS_AS(TrigPoly({{1, 0.5}}), ImaginaryResidue);
    CHECK_THROWS_AS(TrigPoly({{1, {0.5, 0.1}}, {-1, {0.5, 0.1}}}), ImaginaryResidue);
    CHECK_THROWS_AS(TrigPoly::mirrored({{0, {1.0, 0.5}}}), ConfigError);
}

TEST_CASE("trigonometric arithmetic") {
    TrigPoly s = TrigPoly::sine(1, 1.0);
    TrigPoly prod = kCos * s;  // sin(4 pi t) / 2
    CHECK(prod.evaluate(0.125) == doctest::Approx(0.5));
    TrigPoly d = kCos.derivative();  // -2 pi sin(2 pi t)
    CHECK(d.evaluate(0.25) == doctest::Approx(-2.0 * M_PI));
    CHECK((kCos - kCos).is_zero());
    CHECK(kCos.l1_norm() == doctest::Approx(2.0 / M_PI).epsilon(1e-3));
}

TEST_CASE("OperatorSpec validation") {
    CHECK_THROWS_AS(OperatorSpec(1, {TrigPoly()}), InvalidOrder);
    CHECK_THROWS_AS(OperatorSpec(2, {TrigPoly()}), InvalidOrder);
    OperatorSpec s(2, {TrigPoly(), TrigPoly::constant(1.5) + TrigPoly::cosine(1, 1.0)});
    CHECK(s.mu() == doctest::Approx(1.5));
    CHECK_FALSE(s.is_free());
    CHECK_FALSE(s.is_constant());
    CHECK(s.max_harmonic() == 1);
    CHECK_THROWS_AS(s.q(3), IndexOutOfRange);
    CHECK(OperatorSpec::zero(3).is_free());
}

TEST_CASE("spec files round-trip through JSON and TOML") {
    const OperatorSpec mixed = mixed_spec();
    OperatorSpec back = parse_spec_json(spec_to_json(mixed));
    CHECK(back.p() == 2);
    CHECK(back.q(1) == mixed.q(1));
    CHECK(back.q(2) == mixed.q(2));

    OperatorSpec t = parse_spec_toml("# comment\np = 2\nq2 = [[1, 1.0, 0.0]]\n");
    CHECK(t.q(2) == cosine_spec().q(2));
    CHECK(t.q(1).is_zero());

    CHECK_THROWS_AS(parse_spec_json("{\"p\": 2, \"q3\": []}"), ConfigError);
    CHECK_THROWS_AS(parse_spec_json("{\"p\": 2, \"q2\": [[1]]}"), ConfigError);
    CHECK_THROWS_AS(parse_spec_json("not json"), ConfigError);
    CHECK_THROWS_AS(parse_spec_json("{\"p\": 1}"), InvalidOrder);
    CHECK_THROWS_AS(parse_spec_toml("p = 2\nq2 = [[1, 1.0"), ConfigError);
}

TEST_CASE("bundled spec files match the built-in specs") {
    const std::filesystem::path dir = FLOQUET_SPEC_DIR;
    CHECK(load_spec((dir / "cosine_p2.json").string()).q(2) == cosine_spec().q(2));
    OperatorSpec mixed = load_spec((dir / "mixed_p2.json").string());
    CHECK(mixed.q(1) == mixed_spec().q(1));
    CHECK(mixed.q(2) == mixed_spec().q(2));
    OperatorSpec decaying = load_spec((dir / "decaying_p2.json").string());
    for (int n = 0; n <= 20; ++n)
        CHECK(std::abs(fourier_coeff(decaying.q(2), n) - fourier_coeff(decaying_spec(2).q(2), n)) < 1e-15);
    CHECK(load_spec((dir / "chebyshev_p2.toml").string()).p() == 2);
    CHECK_THROWS_AS(load_spec((dir / "missing.json").string()), ConfigError);
}
