#include "floquet/oracle.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <array>
#include <boost/numeric/odeint.hpp>
#include <cmath>
#include <cstdio>
#include <string>
#include <numbers>

#include "floquet/errors.hpp"
#include "floquet/poly.hpp"
#include "floquet/reference.hpp"

namespace floquet {

namespace {

constexpr double kPi = std::numbers::pi;

std::vector<double> solve(const CMatrix& m) {
    Eigen::SelfAdjointEigenSolver<CMatrix> es(m, Eigen::EigenvaluesOnly);
    const Eigen::VectorXd ev = es.eigenvalues();
    std::vector<double> out(ev.data(), ev.data() + ev.size());
    std::sort(out.begin(), out.end());
    return out;
}

std::string format_shift(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", x);
    return buf;
}

}  // namespace

GalerkinProblem galerkin_problem(const OperatorSpec& spec, Parity parity, int truncation) {
    if (truncation < 1) throw ConfigError("truncation must be positive");
    const int p = spec.p();
    const int sigma = parity == Parity::periodic ? 0 : 1;
    const int lo = -truncation;
    const int hi = parity == Parity::periodic ? truncation : truncation - 1;
    const int size = hi - lo + 1;

    GalerkinProblem g{spec, parity, truncation, CMatrix::Zero(size, size)};
    std::vector<double> k(size);
    for (int i = 0; i < size; ++i) k[i] = kPi * (2 * (lo + i) + sigma);
    for (int a = 0; a < size; ++a) {
        g.matrix(a, a) += std::pow(k[a], 2 * p);
        for (int j = 0; j < p; ++j) {
            const TrigPoly& q = spec.q(j + 1);
            if (q.is_zero()) continue;
            for (const auto& [h, amp] : q.amplitudes()) {
                const int b = a - h;  // m - n = h
                if (b < 0 || b >= size) continue;
                const double w = (j % 2 == 0 ? 1.0 : -1.0) * std::pow(k[a], j) * std::pow(k[b], j);
                g.matrix(a, b) += w * amp;
            }
        }
    }
    return g;
}

std::vector<double> galerkin_eigs(const OperatorSpec& spec, Parity parity, int truncation) {
    if (truncation < 8) throw ConfigError("galerkin truncation must be at least 8");
    const std::vector<double> full = solve(galerkin_problem(spec, parity, truncation).matrix);
    const std::vector<double> half = solve(galerkin_problem(spec, parity, truncation / 2).matrix);
    const size_t first = static_cast<size_t>(std::floor(0.9 * static_cast<double>(half.size())));
    for (size_t i = first; i < half.size(); ++i) {
        const double shift = std::abs(full[i] - half[i]) / std::max(1.0, std::abs(full[i]));
        if (shift > 1e-8)
            throw TruncationTooSmall("eigenvalue " + std::to_string(i) + " moved by " + format_shift(shift) +
                                     " relative between truncations " + std::to_string(truncation / 2) + " and " +
                                     std::to_string(truncation));
    }
    return full;
}

std::vector<Complex> constant_coeff_multipliers(const std::vector<double>& q, Complex lambda) {
    const int p = static_cast<int>(q.size());
    if (p < 2) throw InvalidOrder("constant_coeff_multipliers needs p >= 2");
    // leading-first coefficients of P(w) - lambda
    std::vector<Complex> c(p + 1);
    c[0] = 1.0;
    for (int j = 0; j < p; ++j) c[p - j] = (j % 2 == 0 ? 1.0 : -1.0) * q[j];
    c[p] -= lambda;
    std::vector<Complex> out;
    for (const Complex& w : companion_roots(c)) {
        const Complex zeta = std::sqrt(w);
        out.push_back(std::exp(Complex(0, 1) * zeta));
        out.push_back(std::exp(-Complex(0, 1) * zeta));
    }
    return out;
}

OperatorSpec chebyshev_spec(int p) {
    if (p < 2) throw InvalidOrder("chebyshev_spec needs p >= 2");
    const std::vector<long long> t = chebyshev_t(p);  // lowest degree first
    const double a = std::pow(2.0, (1.0 - p) / p);
    // P(w) = sum_m t_m (a w - 1)^m, expanded binomially
    std::vector<double> coeff(p + 1, 0.0);
    for (int m = 0; m <= p; ++m) {
        if (t[m] == 0) continue;
        double binom = 1.0;
        for (int i = 0; i <= m; ++i) {
            const double sign = (m - i) % 2 == 0 ? 1.0 : -1.0;
            coeff[i] += static_cast<double>(t[m]) * binom * std::pow(a, i) * sign;
            binom = binom * (m - i) / (i + 1);
        }
    }
    std::vector<double> q(p);
    for (int j = 0; j < p; ++j) q[j] = (j % 2 == 0 ? 1.0 : -1.0) * coeff[j];
    return OperatorSpec::constant(p, q);
}

Complex hill_discriminant(const TrigPoly& q, Complex energy, double tol) {
    using State = std::array<Complex, 4>;  // (y1, y1', y2, y2')
    namespace ode = boost::numeric::odeint;
    auto rhs = [&](const State& s, State& d, double t) {
        const Complex v = q.evaluate(t) - energy;
        d[0] = s[1];
        d[1] = v * s[0];
        d[2] = s[3];
        d[3] = v * s[2];
    };
    State s{Complex(1), Complex(0), Complex(0), Complex(1)};
    const double h0 = 0.1 / (1.0 + std::sqrt(std::abs(energy)));
    ode::integrate_adaptive(ode::make_controlled<ode::runge_kutta_dopri5<State, double, State, double,
                                                                          ode::array_algebra>>(tol, tol),
                            rhs, s, 0.0, 1.0, h0);
    return 0.5 * (s[0] + s[3]);
}

std::vector<Complex> hill_power_branches(const TrigPoly& hill_q, int p, Complex lambda, double tol) {
    if (p < 2) throw InvalidOrder("hill_power_branches needs p >= 2");
    const Complex z = std::abs(lambda) == 0.0 ? Complex(0) : sector_root(lambda, p);
    const std::vector<Complex> omega = sector_omega(lambda, p);
    std::vector<Complex> out(p);
    for (int j = 0; j < p; ++j) out[j] = hill_discriminant(hill_q, -z * z * omega[j] * omega[j], tol);
    return out;
}

OperatorSpec hill_square_spec(const TrigPoly& hill_q) {
    return OperatorSpec(2, {hill_q * hill_q - hill_q.derivative(2), hill_q * -2.0});
}

}  // namespace floquet
