#include <doctest.h>

#include <cmath>
#include <numbers>

#include "floquet/acceptance.hpp"
#include "floquet/reference.hpp"

using namespace floquet;
using std::numbers::pi;

namespace {

bool near(Complex a, Complex b, double tol = 1e-12) { return std::abs(a - b) <= tol * (1.0 + std::abs(b)); }

}  // namespace

TEST_CASE("root system") {
    RootSystem r2 = root_system(2);
    CHECK(near(r2.w(1), 1.0));
    CHECK(near(r2.w(2), Complex(0, -1)));
    CHECK(near(r2.w(3), Complex(0, 1)));
    CHECK(near(r2.w(4), -1.0));
    CHECK(r2.c[1] == doctest::Approx(std::sqrt(0.5)));

    RootSystem r3 = root_system(3);
    CHECK(near(r3.w(4), Complex(0, 1)));
    CHECK(near(r3.w(3), Complex(0, -1)));
    // unperturbed pairing: cosh(z w_{p-j+1}) = cosh(-z w_{p+j})
    for (int p = 2; p <= 5; ++p) {
        RootSystem r = root_system(p);
        for (int j = 1; j <= p; ++j) CHECK(near(r.w(p - j + 1), -r.w(p + j)));
    }
}

TEST_CASE("sector root and Omega") {
    CHECK(near(sector_root(16.0, 2), 2.0));
    CHECK(near(sector_root(-16.0, 2), 2.0 * std::polar(1.0, pi / 4)));
    CHECK(near(sector_root(std::pow(pi, 4), 2), pi));

    auto up = sector_omega(Complex(1, 1), 2);
    auto down = sector_omega(Complex(1, -1), 2);
    CHECK(near(up[0], 1.0));
    CHECK(near(up[1], Complex(0, -1)));
    CHECK(near(up[2], Complex(0, 1)));
    CHECK(near(up[3], -1.0));
    CHECK(near(down[0], 1.0));
    CHECK(near(down[1], Complex(0, 1)));
    CHECK(near(down[2], Complex(0, -1)));
    CHECK(near(down[3], -1.0));

    for (int p = 2; p <= 6; ++p) {
        const Complex z = sector_root(Complex(0, 1), p);
        auto om = sector_omega(Complex(0, 1), p);
        const double a = 2.0 * root_system(p).c[p - 1] * std::sin(pi / (4 * p));
        double worst = 1e300;
        for (int j = 0; j + 2 < 2 * p; ++j) worst = std::min(worst, (z * (om[j] - om[j + 2])).real());
        CHECK(worst > a * std::abs(z));
    }
}

TEST_CASE("unperturbed Lyapunov functions") {
    auto d = unperturbed_lyapunov(std::pow(pi, 4), 2);
    CHECK(near(d[0], std::cosh(pi)));
    CHECK(near(d[1], -1.0));
    auto d0 = unperturbed_lyapunov(0.0, 2);
    CHECK(near(d0[0], 1.0));
    CHECK(near(d0[1], 1.0));
    auto d3 = unperturbed_lyapunov(std::pow(2 * pi, 6), 3);
    CHECK(near(d3[2], 1.0, 1e-10));
}

TEST_CASE("unperturbed and mu ramifications") {
    CHECK(unperturbed_ramification(1, 1, 2) == doctest::Approx(-4 * std::pow(pi, 4)));
    CHECK(unperturbed_ramification(1, 1, 2) == doctest::Approx(-389.636).epsilon(1e-5));
    CHECK(unperturbed_ramification(2, 0, 3) == 0.0);
    CHECK(unperturbed_ramification(2, 1, 3) == doctest::Approx(std::pow(2 * pi, 6)));

    CHECK(mu_periodic_eigenvalue(1, Sign::plus, 1.0, 2) == doctest::Approx(std::pow(pi, 4) - pi * pi));
    CHECK(mu_periodic_eigenvalue(0, Sign::plus, 3.0, 3) == 0.0);
    CHECK(mu_periodic_eigenvalue(1, Sign::minus, 2.0, 3) == doctest::Approx(std::pow(pi, 6) + 2 * std::pow(pi, 4)));

    for (int n = 1; n <= 4; ++n)
        CHECK(mu_ramification_asymptotic(1, n, 0.0, 2).value.real() == doctest::Approx(unperturbed_ramification(1, n, 2)));
    CHECK(mu_ramification_asymptotic(1, 1, 1.0, 2).value.real() ==
          doctest::Approx(-4 * std::pow(pi, 4) * (1 - 0.5 / (pi * pi))));
    const double c1 = std::cos(pi / 6);
    CHECK(mu_ramification_asymptotic(1, 2, 1.0, 3).value.real() ==
          doctest::Approx(-std::pow(2 * pi / c1, 6) * (1 + c1 * c1 / std::pow(2 * pi, 2))));
}

TEST_CASE("eigenvalue and ramification asymptotics for q_2 = cos") {
    OperatorSpec zero = OperatorSpec::zero(2);
    CHECK(eigenvalue_asymptotic(zero, 3, Sign::plus).value.real() == doctest::Approx(std::pow(3 * pi, 4)));

    OperatorSpec c(2, {TrigPoly(), TrigPoly::cosine(1, 1.0)});
    const double pi4 = std::pow(pi, 4);
    CHECK(eigenvalue_asymptotic(c, 1, Sign::plus).value.real() == doctest::Approx(pi4 * (1 + 0.5 / (pi * pi))));
    CHECK(eigenvalue_asymptotic(c, 1, Sign::minus).value.real() == doctest::Approx(pi4 * (1 - 0.5 / (pi * pi))));
    CHECK(gap_width_prediction(c, 1) == doctest::Approx(pi * pi));

    const double r2 = std::sqrt(0.5);
    for (Sign s : {Sign::plus, Sign::minus}) {
        const double expect = -4 * pi4 * (1 + 0.5 / (pi * pi) * (sign_value(s) * r2 * 0.5));
        CHECK(ramification_asymptotic(c, 1, 1, s).value.real() == doctest::Approx(expect));
    }
    CHECK(ramification_split_prediction(c, 1, 1) == doctest::Approx(2 * (pi * pi / 0.5) * r2 * 0.5));
    CHECK(ramification_split_leading(c, 1, 1) / ramification_split_prediction(c, 1, 1) == doctest::Approx(2.0));

    OperatorSpec mu(2, {TrigPoly(), TrigPoly::constant(0.7)});
    for (int n = 2; n <= 5; ++n)
        CHECK(ramification_asymptotic(mu, 1, n, Sign::plus).value.real() ==
              doctest::Approx(mu_ramification_asymptotic(1, n, 0.7, 2).value.real()));
}
