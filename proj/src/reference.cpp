#include "floquet/reference.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "floquet/errors.hpp"

namespace floquet {

namespace {

constexpr double kPi = std::numbers::pi;

void check_k(int k, int p) {
    if (k < 1 || k > p - 1)
        throw IndexOutOfRange("k must lie in 1.." + std::to_string(p - 1) + ", got " + std::to_string(k));
}

void check_p(int p) {
    if (p < 2) throw InvalidOrder("order parameter p must be at least 2, got " + std::to_string(p));
}

// partner index l(j) for Im lambda < 0
int lower_partner(int j, int p) {
    if (p % 2 == 1) return j % 2 == 1 ? j + 1 : j - 1;
    if (j == 1 || j == 2 * p) return j;
    return j % 2 == 0 ? j + 1 : j - 1;
}

}  // namespace

RootSystem root_system(int p) {
    check_p(p);
    RootSystem rs;
    rs.p = p;
    rs.omega.assign(2 * p, Complex());
    for (int j = 1; j <= p; ++j) {
        double angle = p % 2 == 0 ? -kPi * j / p : kPi * (2 * j - 1) / (2.0 * p);
        Complex w = std::polar(1.0, angle);
        rs.omega[2 * j - 1] = w;                 // w_{2j}
        rs.omega[2 * (p - j + 1) - 2] = -w;      // w_{2(p-j+1)-1} = -w_{2j}
    }
    // exact values where the labeling lands on the axes
    for (auto& w : rs.omega) {
        if (std::abs(w.real()) < 1e-15) w = Complex(0.0, w.imag() > 0 ? 1.0 : -1.0);
        if (std::abs(w.imag()) < 1e-15) w = Complex(w.real() > 0 ? 1.0 : -1.0, 0.0);
    }
    rs.c.resize(p);
    rs.eta.resize(p);
    for (int k = 0; k < p; ++k) {
        rs.c[k] = std::cos(kPi * k / (2.0 * p));
        rs.eta[k] = k % 2 == 0 ? Complex(1.0, 0.0) : std::polar(1.0, kPi / (2.0 * p));
    }
    return rs;
}

Complex sector_root(Complex lambda, int p) {
    check_p(p);
    if (lambda == Complex(0.0, 0.0)) throw ZeroInput("sector root of zero");
    double arg = std::arg(lambda);
    if (arg <= -kPi) arg = kPi;
    if (lambda.imag() == 0.0 && lambda.real() < 0.0) arg = kPi;
    return std::polar(std::pow(std::abs(lambda), 1.0 / (2 * p)), arg / (2 * p));
}

std::vector<Complex> sector_omega(Complex lambda, int p) {
    RootSystem rs = root_system(p);
    if (lambda.imag() >= 0.0) return rs.omega;
    std::vector<Complex> out(2 * p);
    for (int j = 1; j <= 2 * p; ++j) out[j - 1] = rs.w(lower_partner(j, p));
    return out;
}

double growth_exponent(Complex lambda, int p) {
    if (lambda == Complex(0.0, 0.0)) return 0.0;
    Complex z = sector_root(lambda, p);
    RootSystem rs = root_system(p);
    double g = 0.0;
    for (const auto& w : rs.omega) g = std::max(g, std::abs((z * w).real()));
    return g;
}

std::vector<Complex> unperturbed_lyapunov(Complex lambda, int p) {
    check_p(p);
    if (lambda == Complex(0.0, 0.0)) return std::vector<Complex>(p, Complex(1.0, 0.0));
    Complex z = sector_root(lambda, p);
    std::vector<Complex> om = sector_omega(lambda, p);
    std::vector<Complex> out(p);
    for (int j = 0; j < p; ++j) out[j] = std::cosh(z * om[j]);
    return out;
}

std::vector<Complex> unperturbed_multipliers(Complex lambda, int p) {
    check_p(p);
    if (lambda == Complex(0.0, 0.0)) return std::vector<Complex>(2 * p, Complex(1.0, 0.0));
    Complex z = sector_root(lambda, p);
    std::vector<Complex> om = sector_omega(lambda, p);
    std::vector<Complex> out(2 * p);
    for (int j = 0; j < 2 * p; ++j) out[j] = std::exp(z * om[j]);
    return out;
}

double unperturbed_ramification(int k, int n, int p) {
    check_p(p);
    check_k(k, p);
    if (n < 0) throw IndexOutOfRange("n must be nonnegative");
    double ck = std::cos(kPi * k / (2.0 * p));
    double v = std::pow(kPi * n / ck, 2 * p);
    return k % 2 == 0 ? v : -v;
}

double mu_periodic_eigenvalue(int n, Sign sign, double mu, int p) {
    check_p(p);
    if (n < 0) throw IndexOutOfRange("n must be nonnegative");
    if (n == 0) {
        if (sign == Sign::minus) throw IndexOutOfRange("lambda_0 has only the + label");
        return 0.0;
    }
    double x = kPi * n;
    double parity = p % 2 == 0 ? 1.0 : -1.0;
    return std::pow(x, 2 * p) - parity * mu * std::pow(x, 2 * p - 2);
}

AsymptoticPrediction mu_ramification_asymptotic(int k, int n, double mu, int p) {
    check_p(p);
    check_k(k, p);
    if (n < 1) throw IndexOutOfRange("n must be at least 1");
    double ck = std::cos(kPi * k / (2.0 * p));
    double x = kPi * n;
    double sgn_p1 = p % 2 == 0 ? -1.0 : 1.0;  // (-1)^{p+1}
    double r0 = unperturbed_ramification(k, n, p);
    AsymptoticPrediction out;
    out.value = r0 * (1.0 + sgn_p1 * mu * ck * ck / (x * x));
    out.error_order = 2 * p - 4;
    out.kind = AsymptoticPrediction::Kind::ramification;
    out.k = k;
    out.n = n;
    return out;
}

AsymptoticPrediction eigenvalue_asymptotic(const OperatorSpec& spec, int n, Sign sign) {
    if (n < 1) throw IndexOutOfRange("n must be at least 1");
    const int p = spec.p();
    const double x = kPi * n;
    const double sgn_p1 = p % 2 == 0 ? -1.0 : 1.0;
    const double q0 = spec.q(p).amplitude(0).real();
    const double qn = std::abs(spec.q(p).amplitude(n));
    AsymptoticPrediction out;
    out.value = std::pow(x, 2 * p) * (1.0 + (sgn_p1 * q0 + sign_value(sign) * qn) / (x * x));
    out.error_order = 2 * p - 3;
    out.kind = AsymptoticPrediction::Kind::eigenvalue;
    out.n = n;
    out.sign = sign;
    return out;
}

AsymptoticPrediction ramification_asymptotic(const OperatorSpec& spec, int k, int n, Sign sign) {
    const int p = spec.p();
    check_k(k, p);
    if (n < 1) throw IndexOutOfRange("n must be at least 1");
    const double ck = std::cos(kPi * k / (2.0 * p));
    const double x = kPi * n;
    const double sgn_p1 = p % 2 == 0 ? -1.0 : 1.0;
    const double q0 = spec.q(p).amplitude(0).real();
    const double qn = std::abs(spec.q(p).amplitude(n));
    AsymptoticPrediction out;
    out.value = unperturbed_ramification(k, n, p) *
                (1.0 + ck * ck / (x * x) * (sgn_p1 * q0 + sign_value(sign) * ck * qn));
    out.error_order = 2 * p - 3;
    out.kind = AsymptoticPrediction::Kind::ramification;
    out.k = k;
    out.n = n;
    out.sign = sign;
    return out;
}

double gap_width_prediction(const OperatorSpec& spec, int n) {
    const int p = spec.p();
    return 2.0 * std::pow(kPi * n, 2 * p - 2) * std::abs(spec.q(p).amplitude(n));
}

double ramification_split_prediction(const OperatorSpec& spec, int k, int n) {
    const int p = spec.p();
    check_k(k, p);
    const double ck = std::cos(kPi * k / (2.0 * p));
    return 2.0 * std::pow(kPi * n / ck, 2 * p - 2) * ck * std::abs(spec.q(p).amplitude(n));
}

double ramification_split_leading(const OperatorSpec& spec, int k, int n) {
    const int p = spec.p();
    check_k(k, p);
    const double ck = std::cos(kPi * k / (2.0 * p));
    return 2.0 * std::pow(kPi * n / ck, 2 * p - 2) / ck * std::abs(spec.q(p).amplitude(n));
}

}  // namespace floquet
