#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "floquet/hp.hpp"
#include "floquet/monodromy.hpp"
#include "floquet/operator_model.hpp"

namespace floquet {

// Characteristic polynomial det(M - tau) = sum kappa_k tau^{2p-k}.
struct CharPoly {
    int p = 0;
    std::vector<Complex> kappa;   // kappa_0..kappa_2p
    std::vector<Complex> traces;  // T_1..T_p, T_k = Tr M^k / 2p
};

// Multiprecision counterpart carried through the whole Lyapunov pipeline.
struct PreciseLyapunov {
    int p = 0;
    mpfr_prec_t bits = 0;
    std::vector<hp::Complex> kappa;   // kappa_0..kappa_2p
    std::vector<hp::Complex> phi;     // monic Phi, leading-first: 1, f_1, ..., f_p
    std::vector<hp::Complex> delta;   // roots of Phi (unordered)
};

CharPoly char_poly(const MonodromyResult& m);
// Monic Phi coefficients f_1..f_p. Throws PalindromeViolation on a broken kappa symmetry.
std::vector<Complex> nu_reduce(const CharPoly& cp);

PreciseLyapunov precise_lyapunov(const MonodromyResult& m);
// kappa_0..kappa_p of an arbitrary matrix, by traces of its powers
std::vector<hp::Complex> newton_kappa(const hp::Matrix& m, int count);
std::vector<hp::Complex> chebyshev_reduce(const std::vector<hp::Complex>& kappa, int p);

hp::Complex product_discriminant(const std::vector<hp::Complex>& delta);
// prod (delta_j - shift)
hp::Complex shifted_product(const std::vector<hp::Complex>& delta, double shift);

struct LyapunovSample {
    Complex lambda;
    double z0 = 0.0;                            // growth exponent max |Re z w_j|
    std::vector<Complex> nu_coeffs;             // f_1..f_p
    std::vector<Complex> branches;              // Delta, in label order
    std::vector<int> labels;                    // labels[i]: branch index j (1-based) of branches[i]
    std::vector<std::pair<Complex, Complex>> multipliers;  // (tau, 1/tau) with |tau| >= 1
    Complex rho;
    Complex rho_resultant;
    Complex d_plus;                             // prod (Delta_j - 1)
    Complex d_minus;                            // prod (Delta_j + 1)
    bool degenerate = false;                    // some |Delta_i - Delta_j| < 1e-7
    double min_separation = 0.0;
};

LyapunovSample branches(const OperatorSpec& spec, Complex lambda, const MonodromyOptions& options);
LyapunovSample branches(const OperatorSpec& spec, Complex lambda, double tol = 1e-12);
LyapunovSample sample_from(const MonodromyResult& m);

// Relabels in place. The first sample is anchored to cosh(z Omega_j); each later one is
// matched to its predecessor. Throws AmbiguousMatching when the best two pairings are
// within 10% in total cost.
void match_labels(std::vector<LyapunovSample>& path);

// Branch j (1-based label) of a labeled sample.
Complex branch_value(const LyapunovSample& s, int label);

}  // namespace floquet
