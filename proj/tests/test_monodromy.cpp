#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "floquet/acceptance.hpp"
#include "floquet/errors.hpp"
#include "floquet/monodromy.hpp"
#include "floquet/reference.hpp"

using namespace floquet;
using std::numbers::pi;

namespace {

// Classical RK4 with step halving and Richardson extrapolation, independent of the engines.
CMatrix rk4_monodromy(const OperatorSpec& spec, Complex lambda, int steps) {
    auto run = [&](int n) {
        const int d = 2 * spec.p();
        const double h = 1.0 / n;
        CMatrix y = CMatrix::Identity(d, d);
        for (int i = 0; i < n; ++i) {
            const double t = i * h;
            const CMatrix a0 = build_generator(spec, lambda, t);
            const CMatrix am = build_generator(spec, lambda, t + h / 2);
            const CMatrix a1 = build_generator(spec, lambda, t + h);
            const CMatrix k1 = a0 * y;
            const CMatrix k2 = am * (y + h / 2 * k1);
            const CMatrix k3 = am * (y + h / 2 * k2);
            const CMatrix k4 = a1 * (y + h * k3);
            y += h / 6 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        }
        return y;
    };
    const CMatrix coarse = run(steps);
    const CMatrix fine = run(2 * steps);
    return (16.0 * fine - coarse) / 15.0;
}

CMatrix full_matrix(const MonodromyResult& r) { return r.matrix * std::exp(r.log_scale); }

double rel_diff(const CMatrix& a, const CMatrix& b) { return (a - b).norm() / b.norm(); }

// Greedy nearest matching of two eigenvalue sets, worst relative error.
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

OperatorSpec random_spec(std::mt19937& rng, int p) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<TrigPoly> q;
    for (int j = 0; j < p; ++j)
        q.push_back(TrigPoly::constant(u(rng)) + TrigPoly::cosine(1, u(rng)) + TrigPoly::sine(2, u(rng)));
    return OperatorSpec(p, q);
}

}  // namespace

TEST_CASE("generator entries") {
    CMatrix a = build_generator(OperatorSpec::zero(2), 5.0, 0.3);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            Complex expect = (j == i + 1) ? 1.0 : 0.0;
            if (i == 3 && j == 0) expect = 5.0;
            CHECK(std::abs(a(i, j) - expect) == 0.0);
        }
    CMatrix b = build_generator(OperatorSpec::constant(2, {0.0, 1.0}), 0.0, 0.0);
    CHECK(std::abs(b(2, 1) - Complex(-1.0)) < 1e-15);
    CMatrix c = build_generator(OperatorSpec::constant(3, {1.0, 0.0, 0.0}), 0.0, 0.0);
    CHECK(std::abs(c(5, 0) - Complex(1.0)) < 1e-15);
}

TEST_CASE("symplectic form") {
    for (int p = 2; p <= 5; ++p) {
        RMatrix j = symplectic_form(p);
        CHECK((j.transpose() + j).cwiseAbs().maxCoeff() == 0.0);
        CHECK((j * j.transpose() - RMatrix::Identity(2 * p, 2 * p)).cwiseAbs().maxCoeff() == 0.0);
    }
}

TEST_CASE("free monodromy") {
    const double lambda = std::pow(pi, 4);
    MonodromyResult r = monodromy(OperatorSpec::zero(2), lambda);
    std::vector<Complex> expect = {std::exp(pi), std::exp(-pi), -1.0, -1.0};
    CHECK(set_distance(matrix_eigenvalues(r), expect) < 1e-8);

    for (Complex l : {Complex(1.0), Complex(-50.0, 7.0), Complex(300.0, -20.0), Complex(2e3)}) {
        CHECK(rel_diff(full_matrix(monodromy(OperatorSpec::zero(2), l)), free_monodromy(2, l, false)) < 1e-9);
        CHECK(rel_diff(full_matrix(scaled_monodromy(OperatorSpec::zero(2), l)), free_monodromy(2, l, true)) < 1e-9);
    }
    CHECK(symplectic_defect(monodromy(OperatorSpec::zero(2), 1.0)) < 1e-10);
}

TEST_CASE("engines agree with an independent RK4 integration") {
    OperatorSpec spec(2, {TrigPoly(), TrigPoly::cosine(1, 1.0)});
    const CMatrix oracle = rk4_monodromy(spec, 10.0, 2000);
    MonodromyOptions rk;
    rk.engine = Engine::runge_kutta;
    CHECK(rel_diff(full_matrix(monodromy(spec, 10.0)), oracle) < 1e-8);
    CHECK(rel_diff(full_matrix(monodromy(spec, 10.0, rk)), oracle) < 1e-8);

    OperatorSpec mixed = mixed_spec();
    CHECK(rel_diff(full_matrix(monodromy(mixed, Complex(-30.0, 4.0))), rk4_monodromy(mixed, Complex(-30.0, 4.0), 2000)) <
          1e-8);
}

TEST_CASE("classical fundamental matrix is similar to the monodromy") {
    OperatorSpec spec = mixed_spec();
    const Complex l(40.0, 3.0);
    std::vector<Complex> a = matrix_eigenvalues(monodromy(spec, l));
    Eigen::ComplexEigenSolver<CMatrix> es(classical_monodromy(spec, l));
    std::vector<Complex> b(es.eigenvalues().data(), es.eigenvalues().data() + es.eigenvalues().size());
    CHECK(set_distance(a, b) < 1e-7);
}

TEST_CASE("symplectic structure and conjugate symmetry") {
    OperatorSpec spec(2, {TrigPoly::sine(2, 1.0), TrigPoly::cosine(1, 1.0)});
    MonodromyOptions o;
    o.tol = 1e-10;
    CHECK(symplectic_defect(monodromy(spec, Complex(-50.0, 7.0), o)) < 1e-8);

    std::mt19937 rng(11);
    for (int p : {2, 3}) {
        OperatorSpec s = random_spec(rng, p);
        const Complex l(120.0, 35.0);
        MonodromyResult up = monodromy(s, l);
        MonodromyResult down = monodromy(s, std::conj(l));
        CHECK(rel_diff(full_matrix(down), full_matrix(up).conjugate()) < 1e-10);
        CHECK(symplectic_defect(up) == doctest::Approx(symplectic_defect(down)).epsilon(1e-3));
        CHECK(std::abs(monodromy_determinant(up) - Complex(1.0)) < 1e-8);

        // multipliers pair up as tau, 1/tau
        std::vector<Complex> ev = matrix_eigenvalues(up);
        std::vector<Complex> inv;
        for (Complex t : ev) inv.push_back(1.0 / t);
        CHECK(set_distance(ev, inv) < 1e-6);
    }
}

TEST_CASE("scaled monodromy") {
    OperatorSpec spec(2, {TrigPoly(), TrigPoly::cosine(1, 1.0)});
    const std::vector<Complex> a = matrix_eigenvalues(monodromy(spec, 1e3));
    const std::vector<Complex> b = matrix_eigenvalues(scaled_monodromy(spec, 1e3));
    CHECK(set_distance(a, b) < 1e-7);

    std::mt19937 rng(5);
    std::uniform_real_distribution<double> logr(0.0, 4.0), arg(-pi, pi);
    for (int p : {2, 3}) {
        OperatorSpec s = random_spec(rng, p);
        double kappa = 0.0;
        for (int j = 1; j <= p; ++j) kappa = std::max(kappa, s.q(j).l1_norm());
        for (int i = 0; i < 10; ++i) {
            const Complex l = std::polar(std::pow(10.0, logr(rng)), arg(rng));
            MonodromyResult r = scaled_monodromy(s, l);
            CHECK(r.scale_applied);
            const double bound = 2 * p * std::exp(growth_exponent(l, p) + kappa);
            CHECK(max_row_sum(r.matrix) * std::exp(r.log_scale) <= bound);
        }
    }
}

TEST_CASE("regime guard") {
    CHECK_THROWS_AS(monodromy(OperatorSpec::zero(2), 1e40), OverflowRegime);
    CHECK(working_precision(2, 1e8) > working_precision(2, 1e2));
}
