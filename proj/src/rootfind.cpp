#include "floquet/rootfind.hpp"

#include <boost/math/tools/toms748_solve.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>

namespace floquet {

double bracketed_root(const std::function<double(double)>& f, double a, double b, double fa, double fb,
                      double rel_tol) {
    if (fa == 0.0) return a;
    if (fb == 0.0) return b;
    auto tol = [rel_tol](double lo, double hi) {
        return std::abs(hi - lo) <= rel_tol * (1.0 + std::min(std::abs(lo), std::abs(hi)));
    };
    std::uintmax_t iters = 200;
    auto r = boost::math::tools::toms748_solve(f, a, b, fa, fb, tol, iters);
    return 0.5 * (r.first + r.second);
}

double golden_minimum(const std::function<double(double)>& g, double a, double b, double rel_tol, double* value) {
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double gc = g(c), gd = g(d);
    while (std::abs(b - a) > rel_tol * (1.0 + std::abs(c))) {
        if (gc <= gd) {
            b = d;
            d = c;
            gd = gc;
            c = b - inv_phi * (b - a);
            gc = g(c);
        } else {
            a = c;
            c = d;
            gc = gd;
            d = a + inv_phi * (b - a);
            gd = g(d);
        }
        if (c == d) break;
    }
    if (gc <= gd) {
        if (value) *value = gc;
        return c;
    }
    if (value) *value = gd;
    return d;
}

std::vector<RealRoot> real_roots(const std::function<double(double)>& f, const std::vector<double>& nodes,
                                 const RealRootOptions& options) {
    std::vector<double> values(nodes.size());
    for (size_t i = 0; i < nodes.size(); ++i) values[i] = f(nodes[i]);
    return real_roots(f, nodes, values, options);
}

std::vector<RealRoot> real_roots(const std::function<double(double)>& f, const std::vector<double>& nodes,
                                 const std::vector<double>& values, const RealRootOptions& options) {
    std::vector<RealRoot> roots;
    const size_t n = nodes.size();
    auto sgn = [](double v) { return (v > 0.0) - (v < 0.0); };
    for (size_t i = 0; i < n; ++i) {
        if (values[i] == 0.0) {
            int left = i > 0 ? sgn(values[i - 1]) : 0;
            int right = i + 1 < n ? sgn(values[i + 1]) : 0;
            roots.push_back({nodes[i], left * right > 0 ? 2 : 1, 0.0});
            continue;
        }
        if (i + 1 < n && values[i + 1] != 0.0 && sgn(values[i]) != sgn(values[i + 1])) {
            double x = bracketed_root(f, nodes[i], nodes[i + 1], values[i], values[i + 1], options.rel_tol);
            roots.push_back({x, 1, std::abs(f(x))});
        }
        if (i == 0 || i + 1 >= n) continue;
        const int s = sgn(values[i]);
        if (sgn(values[i - 1]) != s || sgn(values[i + 1]) != s) continue;
        if (std::abs(values[i]) > std::abs(values[i - 1]) || std::abs(values[i]) > std::abs(values[i + 1])) continue;
        // same-sign dip: either two close roots, a double root, or nothing
        auto g = [&](double x) { return s * f(x); };
        double gmin = 0.0;
        double xm = golden_minimum(g, nodes[i - 1], nodes[i + 1], options.rel_tol, &gmin);
        if (gmin < 0.0) {
            double fm = s * gmin;
            double x1 = bracketed_root(f, nodes[i - 1], xm, values[i - 1], fm, options.rel_tol);
            double x2 = bracketed_root(f, xm, nodes[i + 1], fm, values[i + 1], options.rel_tol);
            roots.push_back({x1, 1, std::abs(f(x1))});
            roots.push_back({x2, 1, std::abs(f(x2))});
        } else if (gmin <= options.dip_threshold * std::max(std::abs(values[i - 1]), std::abs(values[i + 1]))) {
            roots.push_back({xm, 2, gmin});
        }
    }
    std::sort(roots.begin(), roots.end(), [](const RealRoot& a, const RealRoot& b) { return a.x < b.x; });
    return roots;
}

}  // namespace floquet
