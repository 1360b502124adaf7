#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>

#include "floquet/acceptance.hpp"
#include "floquet/errors.hpp"
#include "floquet/lyapunov.hpp"
#include "floquet/poly.hpp"
#include "floquet/ramifications.hpp"
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

std::vector<Complex> to_std(const std::vector<hp::Complex>& v) {
    std::vector<Complex> out;
    for (const auto& x : v) out.push_back(x.to_std());
    return out;
}

// Coefficients (of tau^j) of a degree-d polynomial from its values on a circle of radius r.
std::vector<Complex> interpolate(const std::function<Complex(Complex)>& f, int d, double r) {
    const int m = d + 1;
    std::vector<Complex> vals(m), coeffs(m);
    for (int k = 0; k < m; ++k) vals[k] = f(std::polar(r, 2 * pi * k / m));
    for (int j = 0; j < m; ++j) {
        Complex acc = 0.0;
        for (int k = 0; k < m; ++k) acc += vals[k] * std::polar(1.0, -2 * pi * j * k / m);
        coeffs[j] = acc / (static_cast<double>(m) * std::pow(r, j));
    }
    return coeffs;
}

Complex det_shifted(const CMatrix& m, Complex tau) {
    return (m - tau * CMatrix::Identity(m.rows(), m.cols())).determinant();
}

CMatrix full_matrix(const MonodromyResult& r) { return r.matrix * std::exp(r.log_scale); }

}  // namespace

TEST_CASE("characteristic polynomial of simple matrices") {
    auto k = to_std(newton_kappa(hp::Matrix::identity(4), 4));
    const std::vector<double> expect = {1, -4, 6, -4, 1};
    for (int i = 0; i <= 4; ++i) CHECK(std::abs(k[i] - expect[i]) < 1e-14);

    CharPoly cp{2, {1, -4, 6, -4, 1}, {}};
    auto f = nu_reduce(cp);
    CHECK(std::abs(f[0] - Complex(-2.0)) < 1e-14);
    CHECK(std::abs(f[1] - Complex(1.0)) < 1e-14);

    CharPoly bad{2, {1, -4, 6, -3, 1}, {}};
    CHECK_THROWS_AS(nu_reduce(bad), PalindromeViolation);
}

TEST_CASE("free operator at lambda = pi^4") {
    const double l = std::pow(pi, 4);
    MonodromyResult m = monodromy(OperatorSpec::zero(2), l);
    CharPoly cp = char_poly(m);
    CHECK(cp.kappa[1].real() == doctest::Approx(-(2 * std::cosh(pi) - 2)));
    CHECK(cp.kappa[1].real() == doctest::Approx(-21.1839).epsilon(1e-5));
    auto f = nu_reduce(cp);
    auto roots = companion_roots({1.0, f[0], f[1]});
    CHECK(set_distance(roots, {std::cosh(pi), -1.0}) < 1e-10);
}

TEST_CASE("kappa and Phi against direct determinants") {
    OperatorSpec spec = mixed_spec();
    for (Complex l : {Complex(25.0), Complex(-80.0, 12.0)}) {
        MonodromyResult m = monodromy(spec, l);
        const CMatrix M = full_matrix(m);
        CharPoly cp = char_poly(m);
        auto coeffs = interpolate([&](Complex t) { return det_shifted(M, t); }, 4, 1.0);
        double scale = 0.0;
        for (Complex c : cp.kappa) scale = std::max(scale, std::abs(c));
        for (int k = 0; k <= 4; ++k) CHECK(std::abs(coeffs[4 - k] - cp.kappa[k]) < 1e-8 * scale);

        auto f = nu_reduce(cp);
        for (Complex tau : {Complex(0.3, 0.8), Complex(-1.7, 0.2), Complex(2.5, -1.0), Complex(0.9), Complex(-0.4, -2.2)}) {
            const Complex nu = (tau + 1.0 / tau) / 2.0;
            const Complex phi = horner(std::vector<Complex>{1.0, f[0], f[1]}, nu);
            const Complex lhs = phi * std::pow(2.0 * tau, 2);
            const Complex rhs = det_shifted(M, tau);
            CHECK(std::abs(lhs - rhs) <= 1e-6 * std::abs(rhs));
        }
    }
}

TEST_CASE("branches of the free operator") {
    const double l = std::pow(2 * pi, 6);
    LyapunovSample s = branches(OperatorSpec::zero(3), l);
    RootSystem r = root_system(3);
    std::vector<Complex> expect = {std::cosh(2 * pi * r.w(1)), std::cosh(2 * pi * r.w(2)), 1.0};
    CHECK(set_distance(s.branches, expect) < 1e-8);

    // periodic eigenvalue of the free operator: a double multiplier pair at 1
    LyapunovSample e = branches(OperatorSpec::zero(2), std::pow(2 * pi, 4));
    CHECK(set_distance(e.branches, {std::cosh(2 * pi), 1.0}) < 1e-8);
}

TEST_CASE("band branches for q_2 = 2 cos") {
    OperatorSpec spec = cosine_spec();
    for (double l : {50.0, 300.0, 2000.0}) {
        LyapunovSample s = branches(spec, l);
        int in_band = 0;
        for (Complex d : s.branches)
            if (std::abs(d.imag()) < 1e-7 && std::abs(d.real()) <= 1.0) ++in_band;
        CHECK(in_band <= 2);
    }
}

TEST_CASE("label matching") {
    OperatorSpec spec = cosine_spec();
    std::vector<LyapunovSample> same(4, branches(spec, Complex(120.0, 5.0)));
    match_labels(same);
    for (const auto& s : same) CHECK(s.labels == same.front().labels);

    // q = 0 along the real axis: label p stays the cos-type branch
    std::vector<LyapunovSample> path;
    for (int i = 0; i <= 40; ++i) path.push_back(branches(OperatorSpec::zero(2), std::pow(10.0, 4.0 * i / 40)));
    match_labels(path);
    for (const auto& s : path) {
        const double z = std::pow(s.lambda.real(), 0.25);
        CHECK(std::abs(branch_value(s, 2) - std::cos(z)) < 1e-7);
        CHECK(std::abs(branch_value(s, 1) - std::cosh(z)) < 1e-7 * std::cosh(z));
    }
}

TEST_CASE("loop around a ramification swaps two labels") {
    OperatorSpec spec = cosine_spec();
    auto found = find_ramifications(spec, make_box(2, 1, 1, 0.6));
    REQUIRE(found.size() == 2);
    const Complex r = found[0].location;
    const double radius = std::abs(found[1].location - r) / 3.0;
    std::vector<LyapunovSample> loop;
    for (int i = 0; i <= 16; ++i) loop.push_back(branches(spec, r + std::polar(radius, 2 * pi * i / 16)));
    match_labels(loop);
    const auto& a = loop.front();
    const auto& b = loop.back();
    int swapped = 0;
    for (int j = 1; j <= 2; ++j) {
        const Complex start = branch_value(a, j);
        const Complex end = branch_value(b, j);
        const Complex other = branch_value(a, 3 - j);
        if (std::abs(end - other) < 1e-6 * (1 + std::abs(other)) && std::abs(end - start) > 1e-3) ++swapped;
    }
    CHECK(swapped == 2);
}

TEST_CASE("real-axis invariants") {
    OperatorSpec spec = mixed_spec();
    for (double l : {-200.0, 15.0, 900.0}) {
        LyapunovSample s = branches(spec, l);
        for (Complex f : s.nu_coeffs) CHECK(std::abs(f.imag()) < 1e-8 * (1 + std::abs(f)));
        CHECK(std::abs(s.rho.imag()) < 1e-8 * (1 + std::abs(s.rho)));
        CHECK(std::abs(s.rho - s.rho_resultant) < 1e-8 * (1 + std::abs(s.rho)));
        for (Complex d : s.branches) {
            if (std::abs(d.imag()) < 1e-7 * (1 + std::abs(d))) continue;
            double best = 1e300;
            for (Complex e : s.branches) best = std::min(best, std::abs(e - std::conj(d)));
            CHECK(best < 1e-7 * (1 + std::abs(d)));
        }
        for (const auto& [t, u] : s.multipliers) CHECK(std::abs(t * u - 1.0) < 1e-6);
        Complex dp = 1.0, dm = 1.0;
        for (Complex d : s.branches) {
            dp *= d - 1.0;
            dm *= d + 1.0;
        }
        CHECK(std::abs(s.d_plus - dp) < 1e-8 * (1 + std::abs(dp)));
        CHECK(std::abs(s.d_minus - dm) < 1e-8 * (1 + std::abs(dm)));
    }
}
