#pragma once

// Independent ground truth: Fourier-Galerkin eigenvalues, constant-coefficient multipliers
// and the squared Hill operator.

#include <vector>

#include "floquet/monodromy.hpp"
#include "floquet/operator_model.hpp"
#include "floquet/spectrum.hpp"

namespace floquet {

struct GalerkinProblem {
    OperatorSpec spec;
    Parity parity = Parity::periodic;
    int truncation = 0;
    CMatrix matrix;  // modes m = -N..N (periodic) or -N..N-1 (antiperiodic)
};

// <e_m, H e_n> with e_m = exp(i pi (2m + sigma) t).
GalerkinProblem galerkin_problem(const OperatorSpec& spec, Parity parity, int truncation);

// Sorted eigenvalues of the truncated matrix. Throws TruncationTooSmall when the top 10% of
// the half-truncation eigenvalues move by more than 1e-8 relative at full truncation.
std::vector<double> galerkin_eigs(const OperatorSpec& spec, Parity parity, int truncation);

// Constant coefficients: q holds the constant coefficients q_1..q_p; P(w) = w^p + sum (-1)^j q_{j+1} w^j.
// Returns e^{i zeta_j}, e^{-i zeta_j} for the roots w_j = zeta_j^2 of P(w) = lambda.
std::vector<Complex> constant_coeff_multipliers(const std::vector<double>& q, Complex lambda);

// Constant spec with P(w) = T_p(a w - 1), a = 2^{(1-p)/p}, so that P is monic.
// Its spectrum is [-1, inf) with multiplicity 2p on (-1, 1).
OperatorSpec chebyshev_spec(int p);

// Hill discriminant (y1(1) + y2'(1)) / 2 of -y'' + q y = E y.
Complex hill_discriminant(const TrigPoly& q, Complex energy, double tol = 1e-12);

// Powers of a Hill operator: branches Delta~(-z^2 Omega_j^2), j = 1..p, of (-d^2 + q)^p.
std::vector<Complex> hill_power_branches(const TrigPoly& hill_q, int p, Complex lambda, double tol = 1e-12);

// (-d^2 + q)^2 written as d^4 + d q_2 d + q_1: q_2 = -2q, q_1 = q^2 - q''.
OperatorSpec hill_square_spec(const TrigPoly& hill_q);

}  // namespace floquet
