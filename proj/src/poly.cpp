#include "floquet/poly.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "floquet/errors.hpp"

namespace floquet {

namespace {

// natural log of |x|, -inf for zero
double log_magnitude(const hp::Complex& x) {
    auto one = [](const hp::Real& r) {
        if (r.is_zero()) return -std::numeric_limits<double>::infinity();
        long e = 0;
        double m = mpfr_get_d_2exp(&e, r.get(), MPFR_RNDN);
        return std::log(std::abs(m)) + e * std::numbers::ln2;
    };
    double a = one(x.re), b = one(x.im);
    double hi = std::max(a, b), lo = std::min(a, b);
    if (std::isinf(hi)) return hi;
    return hi + 0.5 * std::log1p(std::exp(2.0 * (lo - hi)));
}

// Starting points on circles whose radii come from the upper convex hull of (i, log|a_i|).
std::vector<hp::Complex> newton_polygon_guesses(const std::vector<hp::Complex>& coeffs) {
    const int n = static_cast<int>(coeffs.size()) - 1;
    std::vector<double> la(n + 1);
    for (int i = 0; i <= n; ++i) la[i] = log_magnitude(coeffs[n - i]);  // la[i] ~ coefficient of x^i
    int start = 0;
    while (start < n && std::isinf(la[start])) ++start;
    std::vector<int> hull{start};
    for (int i = start + 1; i <= n; ++i) {
        if (std::isinf(la[i])) continue;
        while (hull.size() >= 2) {
            int a = hull[hull.size() - 2], b = hull.back();
            // drop b if it lies on or below the chord a -> i
            if ((la[b] - la[a]) * (i - a) <= (la[i] - la[a]) * (b - a)) hull.pop_back();
            else break;
        }
        hull.push_back(i);
    }
    std::vector<hp::Complex> guesses;
    double smallest = std::numeric_limits<double>::infinity();
    int edge = 0;
    for (size_t h = 0; h + 1 < hull.size(); ++h, ++edge) {
        const int i0 = hull[h], i1 = hull[h + 1];
        const int count = i1 - i0;
        const double log_r = (la[i0] - la[i1]) / count;
        smallest = std::min(smallest, log_r);
        for (int m = 0; m < count; ++m) {
            const double angle = 2.0 * std::numbers::pi * m / count + 0.7 + 1.3 * edge;
            hp::Real r(0.0);
            hp::Real lr(log_r);
            mpfr_exp(r.get(), lr.get(), MPFR_RNDN);
            guesses.push_back(hp::polar(r, hp::Real(angle)));
        }
    }
    // exact zero roots
    for (int m = 0; m < start; ++m) {
        double r = std::isinf(smallest) ? 1e-8 : std::exp(smallest) * 1e-6;
        guesses.push_back(hp::Complex(std::polar(r * (1 + m), 0.3 + m)));
    }
    return guesses;
}

}  // namespace

std::vector<long long> chebyshev_t(int m) {
    if (m < 0) throw IndexOutOfRange("Chebyshev degree must be nonnegative");
    std::vector<long long> prev{1}, cur{0, 1};
    if (m == 0) return prev;
    for (int k = 1; k < m; ++k) {
        std::vector<long long> next(k + 2, 0);
        for (int i = 0; i <= k; ++i) next[i + 1] += 2 * cur[i];
        for (size_t i = 0; i < prev.size(); ++i) next[i] -= prev[i];
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

hp::Complex horner(const std::vector<hp::Complex>& coeffs, const hp::Complex& x) {
    hp::Complex acc = coeffs[0];
    for (size_t i = 1; i < coeffs.size(); ++i) acc = acc * x + coeffs[i];
    return acc;
}

Complex horner(const std::vector<Complex>& coeffs, Complex x) {
    Complex acc = coeffs[0];
    for (size_t i = 1; i < coeffs.size(); ++i) acc = acc * x + coeffs[i];
    return acc;
}

std::vector<hp::Complex> aberth_roots(const std::vector<hp::Complex>& coeffs, int max_iter) {
    const int n = static_cast<int>(coeffs.size()) - 1;
    if (n < 1) return {};
    if (coeffs[0].is_zero()) throw ConfigError("leading coefficient is zero");
    const mpfr_prec_t bits = coeffs[0].re.precision();
    hp::PrecisionScope scope(bits);
    std::vector<hp::Complex> roots = newton_polygon_guesses(coeffs);
    if (n == 1) return {-(coeffs[1] / coeffs[0])};

    std::vector<hp::Complex> deriv(n);
    for (int i = 0; i < n; ++i) deriv[i] = coeffs[i] * static_cast<double>(n - i);
    const double converged = std::ldexp(1.0, -static_cast<int>(bits) + 12);
    std::vector<bool> done(n, false);
    const hp::Complex one(Complex(1.0, 0.0));
    for (int it = 0; it < max_iter; ++it) {
        bool all = true;
        for (int i = 0; i < n; ++i) {
            if (done[i]) continue;
            hp::Complex f = horner(coeffs, roots[i]);
            if (f.is_zero()) {
                done[i] = true;
                continue;
            }
            hp::Complex df = horner(deriv, roots[i]);
            hp::Complex ratio = df.is_zero() ? hp::Complex(Complex(1e-3, 1e-3)) : f / df;
            hp::Complex sum;
            for (int j = 0; j < n; ++j) {
                if (j == i) continue;
                hp::Complex d = roots[i] - roots[j];
                if (!d.is_zero()) sum += one / d;
            }
            hp::Complex denom = one - ratio * sum;
            hp::Complex w = denom.is_zero() ? ratio : ratio / denom;
            roots[i] -= w;
            const double step = std::exp(log_magnitude(w) - log_magnitude(roots[i]));
            if (step < converged) done[i] = true;
            else all = false;
        }
        if (all) break;
    }
    return roots;
}

std::vector<Complex> companion_roots(const std::vector<Complex>& coeffs) {
    const int n = static_cast<int>(coeffs.size()) - 1;
    if (n < 1) return {};
    if (coeffs[0] == Complex(0.0, 0.0)) throw ConfigError("leading coefficient is zero");
    Eigen::MatrixXcd c = Eigen::MatrixXcd::Zero(n, n);
    for (int j = 0; j < n; ++j) c(0, j) = -coeffs[j + 1] / coeffs[0];
    for (int i = 1; i < n; ++i) c(i, i - 1) = 1.0;
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(c, false);
    std::vector<Complex> out(n);
    for (int i = 0; i < n; ++i) out[i] = es.eigenvalues()(i);
    return out;
}

hp::Complex resultant_discriminant(const std::vector<hp::Complex>& monic) {
    const int n = static_cast<int>(monic.size()) - 1;
    if (n < 2) return hp::Complex(Complex(1.0, 0.0));
    const int size = 2 * n - 1;
    hp::Matrix s(size);
    for (int r = 0; r < n - 1; ++r)
        for (int i = 0; i <= n; ++i) s(r, r + i) = monic[i];
    for (int r = 0; r < n; ++r)
        for (int i = 0; i < n; ++i) s(n - 1 + r, r + i) = monic[i] * static_cast<double>(n - i);
    hp::Complex res = s.determinant() / monic[0];
    if ((n * (n - 1) / 2) % 2 == 1) res = -res;
    return res;
}

}  // namespace floquet
