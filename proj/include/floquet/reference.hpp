#pragma once

#include <complex>
#include <vector>

#include "floquet/operator_model.hpp"

namespace floquet {

enum class Sign { minus = -1, plus = 1 };

inline int sign_value(Sign s) { return s == Sign::plus ? 1 : -1; }
inline const char* sign_name(Sign s) { return s == Sign::plus ? "+" : "-"; }

struct RootSystem {
    int p = 0;
    std::vector<Complex> omega;  // omega[j-1] = w_j, j = 1..2p
    std::vector<double> c;       // c[k] = cos(pi k / 2p), k = 0..p-1
    std::vector<Complex> eta;    // eta[k], k = 0..p-1: 1 for even k, e^{i pi / 2p} for odd k

    const Complex& w(int j) const { return omega.at(j - 1); }
};

RootSystem root_system(int p);

// z = lambda^{1/2p} with arg z in (-pi/2p, pi/2p].
Complex sector_root(Complex lambda, int p);

// Omega_j(lambda), j = 1..2p; the real axis uses the upper half-plane limit.
std::vector<Complex> sector_omega(Complex lambda, int p);

// max_j |Re z w_j|: exponential growth rate of the fastest multiplier.
double growth_exponent(Complex lambda, int p);

std::vector<Complex> unperturbed_lyapunov(Complex lambda, int p);

// Unperturbed multipliers e^{z Omega_j}, j = 1..2p.
std::vector<Complex> unperturbed_multipliers(Complex lambda, int p);

double unperturbed_ramification(int k, int n, int p);

double mu_periodic_eigenvalue(int n, Sign sign, double mu, int p);

struct AsymptoticPrediction {
    enum class Kind { eigenvalue, ramification };

    Complex value;
    int error_order = 0;  // remainder is O(n^error_order)
    Kind kind = Kind::eigenvalue;
    int k = 0;
    int n = 0;
    Sign sign = Sign::plus;
};

AsymptoticPrediction mu_ramification_asymptotic(int k, int n, double mu, int p);
AsymptoticPrediction eigenvalue_asymptotic(const OperatorSpec& spec, int n, Sign sign);
AsymptoticPrediction ramification_asymptotic(const OperatorSpec& spec, int k, int n, Sign sign);

// lambda_n^+ - lambda_n^- to leading order
double gap_width_prediction(const OperatorSpec& spec, int n);
// |r_{k,n}^+ - r_{k,n}^-| to leading order
double ramification_split_prediction(const OperatorSpec& spec, int k, int n);
// Same split with the first-order shift of z carried through z^{2p} directly:
// 2 (pi n / c_k)^{2p-2} |q_{p,n}| / c_k. Differs from the above by the factor 1/c_k^2.
double ramification_split_leading(const OperatorSpec& spec, int k, int n);

}  // namespace floquet
