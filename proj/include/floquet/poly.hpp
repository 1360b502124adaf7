#pragma once

// Polynomial helpers. Coefficient vectors are leading-first: c[0] x^n + c[1] x^{n-1} + ... + c[n].

#include <vector>

#include "floquet/hp.hpp"
#include "floquet/operator_model.hpp"

namespace floquet {

// Coefficients of the first-kind Chebyshev polynomial T_m, lowest degree first.
std::vector<long long> chebyshev_t(int m);

// All roots of a polynomial with nonzero leading coefficient, by Aberth iteration at the
// precision of the coefficients. Starting points come from the Newton polygon.
std::vector<hp::Complex> aberth_roots(const std::vector<hp::Complex>& coeffs, int max_iter = 500);

// Double-precision roots via the companion matrix.
std::vector<Complex> companion_roots(const std::vector<Complex>& coeffs);

hp::Complex horner(const std::vector<hp::Complex>& coeffs, const hp::Complex& x);
Complex horner(const std::vector<Complex>& coeffs, Complex x);

// Discriminant prod_{i<j} (r_i - r_j)^2 of a monic polynomial from its coefficients,
// through the Sylvester resultant with the derivative.
hp::Complex resultant_discriminant(const std::vector<hp::Complex>& monic);

}  // namespace floquet
