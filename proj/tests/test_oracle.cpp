#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "floquet/errors.hpp"
#include "floquet/lyapunov.hpp"
#include "floquet/oracle.hpp"
#include "floquet/reference.hpp"

using namespace floquet;
using std::numbers::pi;

namespace {

double set_distance(std::vector<Complex> a, std::vector<Complex> b) {
    double worst = 0.0;
    for (Complex x : a) {
        auto it = std::min_element(b.begin(), b.end(),
                                   [&](Complex u, Complex v) { return std::abs(u - x) < std::abs(v - x); });
        worst = std::max(worst, std::abs(*it - x) / std::max(1.0, std::abs(x)));
        b.erase(it);
    }
    return worst;
}

}  // namespace

TEST_CASE("Galerkin matrix") {
    GalerkinProblem g = galerkin_problem(OperatorSpec(2, {TrigPoly::cosine(1, 0.5), TrigPoly::sine(2, 1.0)}),
                                         Parity::antiperiodic, 16);
    CHECK(g.matrix.rows() == 32);
    CHECK((g.matrix - g.matrix.adjoint()).cwiseAbs().maxCoeff() < 1e-12);
    CHECK(galerkin_problem(OperatorSpec::zero(2), Parity::periodic, 16).matrix.rows() == 33);
}

TEST_CASE("Galerkin eigenvalues of simple operators") {
    auto free = galerkin_eigs(OperatorSpec::zero(2), Parity::periodic, 32);
    CHECK(free[0] == 0.0);
    for (int n = 1; n <= 3; ++n) {
        CHECK(free[2 * n - 1] == doctest::Approx(std::pow(2 * pi * n, 4)));
        CHECK(free[2 * n] == doctest::Approx(std::pow(2 * pi * n, 4)));
    }
    const double mu = 3.0;
    OperatorSpec m(2, {TrigPoly(), TrigPoly::constant(mu)});
    auto eigs = galerkin_eigs(m, Parity::periodic, 128);
    std::vector<double> expect = {mu_periodic_eigenvalue(0, Sign::plus, mu, 2)};
    for (int n = 1; n <= 5; ++n)
        for (Sign s : {Sign::minus, Sign::plus}) expect.push_back(mu_periodic_eigenvalue(2 * n, s, mu, 2));
    std::sort(expect.begin(), expect.end());
    for (int i = 0; i < 10; ++i) CHECK(std::abs(eigs[i] - expect[i]) <= 1e-10 * std::max(1.0, std::abs(expect[i])));

    // first antiperiodic pair of q_2 = 2 cos splits like the leading gap formula
    OperatorSpec c(2, {TrigPoly(), TrigPoly::cosine(1, 2.0)});
    auto ap = galerkin_eigs(c, Parity::antiperiodic, 256);
    CHECK(ap[1] - ap[0] == doctest::Approx(2 * pi * pi).epsilon(0.5));
}

TEST_CASE("Galerkin truncation check") {
    CHECK_THROWS_AS(galerkin_eigs(OperatorSpec::zero(2), Parity::periodic, 4), ConfigError);
    OperatorSpec rough(2, {TrigPoly(), TrigPoly::cosine(6, 1e4)});
    CHECK_THROWS_AS(galerkin_eigs(rough, Parity::periodic, 8), TruncationTooSmall);
}

TEST_CASE("constant coefficient multipliers") {
    auto free = constant_coeff_multipliers({0.0, 0.0}, std::pow(pi, 4));
    CHECK(set_distance(free, {-1.0, -1.0, std::exp(pi), std::exp(-pi)}) < 1e-12);

    for (int p : {2, 3}) {
        OperatorSpec cheb = chebyshev_spec(p);
        std::vector<double> q;
        for (int j = 1; j <= p; ++j) q.push_back(cheb.q(j).amplitude(0).real());
        for (Complex t : constant_coeff_multipliers(q, 0.5)) CHECK(std::abs(t) == doctest::Approx(1.0).epsilon(1e-10));
        for (Complex l : {Complex(0.5), Complex(-30.0, 4.0), Complex(200.0)})
            CHECK(set_distance(constant_coeff_multipliers(q, l), matrix_eigenvalues(monodromy(cheb, l))) < 1e-7);
    }
}

TEST_CASE("Hill power branches") {
    for (Complex l : {Complex(20.0), Complex(-50.0, 10.0)}) {
        auto b = hill_power_branches(TrigPoly(), 2, l);
        CHECK(set_distance(b, unperturbed_lyapunov(l, 2)) < 1e-9);
    }

    // p odd at large real lambda: one real branch
    TrigPoly q = TrigPoly::cosine(1, 1.0);
    auto odd = hill_power_branches(q, 3, 5e4);
    int real = 0;
    for (Complex d : odd)
        if (std::abs(d.imag()) < 1e-7 * (1 + std::abs(d))) ++real;
    CHECK(real == 1);

    OperatorSpec square = hill_square_spec(q);
    for (Complex l : {Complex(10.0), Complex(150.0), Complex(-40.0), Complex(60.0, 15.0), Complex(800.0)}) {
        auto expect = branches(square, l).branches;
        CHECK(set_distance(hill_power_branches(q, 2, l), expect) < 1e-6);
    }
}
