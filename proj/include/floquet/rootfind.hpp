#pragma once

// Real-axis root isolation for the real entire functions D_+, D_- and rho.

#include <functional>
#include <vector>

namespace floquet {

struct RealRoot {
    double x = 0.0;
    int multiplicity = 1;    // 2 when the function touches zero without a sign change
    double residual = 0.0;   // |f(x)|
};

struct RealRootOptions {
    double rel_tol = 1e-13;       // bracket width relative to (1 + |x|)
    double dip_threshold = 1e-9;  // |f| dip (relative to neighbours) accepted as a double root
};

// Roots of f on [nodes.front(), nodes.back()], isolated by sign changes between consecutive
// nodes plus a local search around every same-sign local minimum of |f|.
std::vector<RealRoot> real_roots(const std::function<double(double)>& f, const std::vector<double>& nodes,
                                 const RealRootOptions& options = {});

// Same, with f already sampled at the nodes.
std::vector<RealRoot> real_roots(const std::function<double(double)>& f, const std::vector<double>& nodes,
                                 const std::vector<double>& values, const RealRootOptions& options = {});

// Bracketed root of f (fa, fb of opposite signs).
double bracketed_root(const std::function<double(double)>& f, double a, double b, double fa, double fb,
                      double rel_tol);

// Golden-section minimiser on [a, b]; returns x with g(x) minimal, stores g(x) in *value.
double golden_minimum(const std::function<double(double)>& g, double a, double b, double rel_tol, double* value);

}  // namespace floquet
