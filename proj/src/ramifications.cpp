#include "floquet/ramifications.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <numeric>

#include "floquet/errors.hpp"
#include "floquet/lyapunov.hpp"
#include "floquet/parallel.hpp"
#include "floquet/rootfind.hpp"

namespace floquet {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kNewtonIterations = 50;

double arg_step(Complex from, Complex to) { return std::arg(to / from); }

double median(std::vector<double> v) {
    if (v.empty()) return 0.0;
    std::nth_element(v.begin(), v.begin() + v.size() / 2, v.end());
    return v[v.size() / 2];
}

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

// closed rectangle contour with `per_side` nodes per side
std::vector<Complex> rectangle(double x0, double x1, double y0, double y1, int per_side) {
    std::vector<Complex> out;
    for (int i = 0; i < per_side; ++i) out.emplace_back(x0 + (x1 - x0) * i / per_side, y0);
    for (int i = 0; i < per_side; ++i) out.emplace_back(x1, y0 + (y1 - y0) * i / per_side);
    for (int i = 0; i < per_side; ++i) out.emplace_back(x1 - (x1 - x0) * i / per_side, y1);
    for (int i = 0; i < per_side; ++i) out.emplace_back(x0, y1 - (y1 - y0) * i / per_side);
    return out;
}

struct Cell {
    double x0, x1, y0, y1;
    int count;
};

Complex newton_polish(const OperatorSpec& spec, Complex start, double scale, double target, double tol,
                      double* residual) {
    Complex x = start;
    const Complex h(1e-4 * scale, 0.0);
    for (int it = 0; it < kNewtonIterations; ++it) {
        const Complex f = discriminant(spec, x, tol);
        if (std::abs(f) <= target) {
            *residual = std::abs(f);
            return x;
        }
        const Complex df = (discriminant(spec, x + h, tol) - discriminant(spec, x - h, tol)) / (2.0 * h);
        if (df == Complex(0.0, 0.0)) break;
        Complex step = f / df;
        // keep the iterate inside the isolating cell scale
        if (std::abs(step) > scale) step *= scale / std::abs(step);
        x -= step;
        if (std::abs(step) <= 1e-15 * (1.0 + std::abs(x))) {
            *residual = std::abs(discriminant(spec, x, tol));
            return x;
        }
    }
    throw NewtonDivergence("no convergence near " + std::to_string(start.real()) + "+" +
                           std::to_string(start.imag()) + "i after 50 iterations");
}

}  // namespace

Complex SearchBox::center_lambda(int p) const { return std::pow(center_z, 2 * p); }

SearchBox make_box(int p, int k, int n, double beta, int nodes) {
    if (beta <= 0.0) throw ConfigError("beta must be positive");
    if (n < 0) throw IndexOutOfRange("n must be nonnegative");
    const RootSystem rs = root_system(p);
    if (k < 1 || k > p - 1) throw IndexOutOfRange("k must lie in 1..p-1");
    SearchBox b;
    b.k = k;
    b.n = n;
    b.radius_beta = beta;
    b.center_z = kPi * n * rs.eta[k] / rs.c[k];
    for (int i = 0; i < nodes; ++i) {
        const double theta = 2.0 * kPi * i / nodes;
        if (n == 0) b.polygon.push_back(std::polar(std::pow(beta, 2 * p), theta));
        else b.polygon.push_back(std::pow(b.center_z + std::polar(beta, theta), 2 * p));
    }
    return b;
}

std::vector<SearchBox> build_boxes(int p, int n_lo, int n_hi, double beta) {
    if (n_lo < 0 || n_hi < n_lo) throw IndexOutOfRange("invalid n range");
    std::vector<SearchBox> out;
    for (int n = n_lo; n <= n_hi; ++n)
        for (int k = 1; k <= p - 1; ++k) out.push_back(make_box(p, k, n, beta));
    return out;
}

ClusterLayout cluster_boxes(int p, const std::vector<SearchBox>& boxes, bool enforce_parity) {
    const size_t m = boxes.size();
    UnionFind uf(m);
    const Complex rot = std::polar(1.0, kPi / p);
    for (size_t a = 0; a < m; ++a)
        for (size_t b = a + 1; b < m; ++b) {
            const double reach = boxes[a].radius_beta + boxes[b].radius_beta;
            double d = std::abs(boxes[a].center_z - boxes[b].center_z);
            // sides of the sector are identified: z ~ z e^{i pi / p}
            d = std::min({d, std::abs(boxes[a].center_z - boxes[b].center_z * rot),
                          std::abs(boxes[a].center_z * rot - boxes[b].center_z)});
            if (d < reach) uf.unite(static_cast<int>(a), static_cast<int>(b));
        }
    std::map<int, std::vector<size_t>> groups;
    for (size_t i = 0; i < m; ++i) groups[uf.find(static_cast<int>(i))].push_back(i);

    std::vector<Cluster> zero, positive, negative;
    for (auto& [root, idx] : groups) {
        Cluster c;
        bool has_zero = false, has_even = false, has_odd = false;
        c.re_min = std::numeric_limits<double>::infinity();
        c.re_max = -std::numeric_limits<double>::infinity();
        for (size_t i : idx) {
            const SearchBox& b = boxes[i];
            c.members.emplace_back(b.k, b.n);
            const double re = b.center_lambda(p).real();
            c.re_min = std::min(c.re_min, re);
            c.re_max = std::max(c.re_max, re);
            if (b.n == 0) has_zero = true;
            else if (b.k % 2 == 0) has_even = true;
            else has_odd = true;
        }
        std::sort(c.members.begin(), c.members.end());
        if (enforce_parity && ((has_even && has_odd) || (has_zero && (has_even || has_odd))))
            throw ParityViolation("cluster mixes parities; beta too large");
        if (has_zero) zero.push_back(c);
        else if (has_even && !has_odd) positive.push_back(c);
        else if (has_odd && !has_even) negative.push_back(c);
        else (0.5 * (c.re_min + c.re_max) >= 0.0 ? positive : negative).push_back(c);
    }
    auto by_re = [](const Cluster& a, const Cluster& b) { return a.re_min < b.re_min; };
    std::sort(positive.begin(), positive.end(), by_re);
    std::sort(negative.begin(), negative.end(), by_re);
    ClusterLayout layout;
    for (size_t i = 0; i < negative.size(); ++i) {
        negative[i].id = -static_cast<int>(negative.size() - i);
        layout.clusters.push_back(negative[i]);
    }
    for (auto& c : zero) layout.clusters.push_back(c);
    for (size_t i = 0; i < positive.size(); ++i) {
        positive[i].id = static_cast<int>(i + 1);
        layout.clusters.push_back(positive[i]);
    }
    std::stable_sort(layout.clusters.begin(), layout.clusters.end(), by_re);
    for (size_t i = 0; i + 1 < layout.clusters.size(); ++i)
        layout.separators.push_back(0.5 * (layout.clusters[i].re_max + layout.clusters[i + 1].re_min));
    return layout;
}

Complex discriminant(const OperatorSpec& spec, Complex lambda, double tol) { return branches(spec, lambda, tol).rho; }

WindingResult count_zeros(const OperatorSpec& spec, const std::vector<Complex>& contour,
                          const RamificationOptions& options) {
    if (contour.size() < 3) throw ConfigError("contour needs at least 3 vertices");
    // subdivide edges linearly until the node count reaches the minimum
    std::vector<Complex> nodes = contour;
    while (static_cast<int>(nodes.size()) < options.contour_nodes) {
        std::vector<Complex> finer;
        for (size_t i = 0; i < nodes.size(); ++i) {
            finer.push_back(nodes[i]);
            finer.push_back(0.5 * (nodes[i] + nodes[(i + 1) % nodes.size()]));
        }
        nodes = std::move(finer);
    }
    std::vector<Complex> values(nodes.size());
    parallel_for(nodes.size(), [&](size_t i) { values[i] = discriminant(spec, nodes[i], options.tol); });
    WindingResult res;
    res.evaluations = static_cast<int>(nodes.size());

    for (int pass = 0; pass < options.max_refinements; ++pass) {
        std::vector<size_t> coarse;
        for (size_t i = 0; i < nodes.size(); ++i)
            if (std::abs(arg_step(values[i], values[(i + 1) % nodes.size()])) > kPi / 2) coarse.push_back(i);
        if (coarse.empty()) break;
        std::vector<Complex> mids(coarse.size()), mid_values(coarse.size());
        for (size_t c = 0; c < coarse.size(); ++c)
            mids[c] = 0.5 * (nodes[coarse[c]] + nodes[(coarse[c] + 1) % nodes.size()]);
        parallel_for(mids.size(), [&](size_t c) { mid_values[c] = discriminant(spec, mids[c], options.tol); });
        res.evaluations += static_cast<int>(mids.size());
        std::vector<Complex> n2, v2;
        size_t c = 0;
        for (size_t i = 0; i < nodes.size(); ++i) {
            n2.push_back(nodes[i]);
            v2.push_back(values[i]);
            if (c < coarse.size() && coarse[c] == i) {
                n2.push_back(mids[c]);
                v2.push_back(mid_values[c]);
                ++c;
            }
        }
        nodes = std::move(n2);
        values = std::move(v2);
    }
    std::vector<double> mags;
    double total = 0.0;
    for (size_t i = 0; i < nodes.size(); ++i) {
        mags.push_back(std::abs(values[i]));
        total += arg_step(values[i], values[(i + 1) % nodes.size()]);
    }
    res.min_abs = *std::min_element(mags.begin(), mags.end());
    res.median_abs = median(mags);
    if (!(res.min_abs > 1e3 * options.newton_rel * res.median_abs))
        throw ContourTooClose("min |rho| on the contour is " + std::to_string(res.min_abs) + " against median " +
                              std::to_string(res.median_abs));
    res.winding = static_cast<int>(std::lround(total / (2.0 * kPi)));
    return res;
}

std::pair<double, double> box_real_segment(int p, const SearchBox& box) {
    if (box.n == 0) {
        const double r = std::pow(box.radius_beta, 2 * p);
        return {-r, r};
    }
    const double mod = std::abs(box.center_z);
    const double sign = box.center_lambda(p).real() >= 0.0 ? 1.0 : -1.0;
    const double a = sign * std::pow(mod - box.radius_beta, 2 * p);
    const double b = sign * std::pow(mod + box.radius_beta, 2 * p);
    return {std::min(a, b), std::max(a, b)};
}

std::vector<Ramification> find_ramifications(const OperatorSpec& spec, const SearchBox& box,
                                             const RamificationOptions& options) {
    const int p = spec.p();
    const WindingResult wr = count_zeros(spec, box.polygon, options);
    std::vector<Ramification> out;
    if (wr.winding < 1) return out;
    const double target = options.newton_rel * wr.median_abs;

    // real zeros: rho is real on the real axis
    const auto [a, b] = box_real_segment(p, box);
    std::vector<double> nodes(options.real_nodes);
    for (int i = 0; i < options.real_nodes; ++i) nodes[i] = a + (b - a) * i / (options.real_nodes - 1);
    auto f = [&](double x) { return discriminant(spec, Complex(x, 0.0), options.tol).real(); };
    std::vector<double> values(nodes.size());
    parallel_for(nodes.size(), [&](size_t i) { values[i] = f(nodes[i]); });
    std::vector<RealRoot> real = real_roots(f, nodes, values);
    int found = 0;
    for (const auto& r : real) {
        Ramification ram;
        ram.location = Complex(r.x, 0.0);
        ram.k = box.k;
        ram.n = box.n;
        ram.winding_certificate = wr.winding;
        ram.newton_residual = r.residual;
        ram.contour_median = wr.median_abs;
        ram.is_real = true;
        ram.multiplicity = r.multiplicity;
        found += r.multiplicity;
        out.push_back(ram);
    }

    // remaining zeros come in conjugate pairs; isolate those in the upper half by bisection
    int remaining = wr.winding - found;
    if (remaining > 0) {
        double x0 = std::numeric_limits<double>::infinity(), x1 = -x0, y1 = 0.0;
        for (const auto& v : box.polygon) {
            x0 = std::min(x0, v.real());
            x1 = std::max(x1, v.real());
            y1 = std::max(y1, v.imag());
        }
        const double eps = 1e-9 * (b - a);
        std::vector<Cell> stack;
        auto count_cell = [&](double cx0, double cx1, double cy0, double cy1) {
            RamificationOptions o = options;
            o.contour_nodes = 64;
            return count_zeros(spec, rectangle(cx0, cx1, cy0, cy1, 16), o).winding;
        };
        stack.push_back({x0, x1, eps, y1, count_cell(x0, x1, eps, y1)});
        std::vector<Complex> upper;
        int guard = 0;
        while (!stack.empty() && ++guard < 200) {
            Cell c = stack.back();
            stack.pop_back();
            if (c.count <= 0) continue;
            const double w = c.x1 - c.x0, h = c.y1 - c.y0;
            if (c.count == 1 && std::max(w, h) < 0.05 * (b - a)) {
                double resid = 0.0;
                Complex root = newton_polish(spec, Complex(0.5 * (c.x0 + c.x1), 0.5 * (c.y0 + c.y1)),
                                             std::max(w, h), target, options.tol, &resid);
                upper.push_back(root);
                Ramification ram;
                ram.location = root;
                ram.k = box.k;
                ram.n = box.n;
                ram.winding_certificate = wr.winding;
                ram.newton_residual = resid;
                ram.contour_median = wr.median_abs;
                out.push_back(ram);
                continue;
            }
            // split the longer side, nudged off-centre to avoid symmetric zeros on the cut
            if (w >= h) {
                const double xm = c.x0 + 0.4871 * w;
                int left = count_cell(c.x0, xm, c.y0, c.y1);
                stack.push_back({c.x0, xm, c.y0, c.y1, left});
                stack.push_back({xm, c.x1, c.y0, c.y1, c.count - left});
            } else {
                const double ym = c.y0 + 0.4871 * h;
                int low = count_cell(c.x0, c.x1, c.y0, ym);
                stack.push_back({c.x0, c.x1, c.y0, ym, low});
                stack.push_back({c.x0, c.x1, ym, c.y1, c.count - low});
            }
        }
        // conjugate partners
        const size_t base = out.size();
        for (size_t i = 0; i < base; ++i) {
            if (out[i].is_real || out[i].location.imag() <= 0.0) continue;
            Ramification partner = out[i];
            partner.location = std::conj(out[i].location);
            partner.newton_residual = std::abs(discriminant(spec, partner.location, options.tol));
            partner.sign = Sign::minus;
            out[i].sign = Sign::plus;
            out[i].conjugate_partner = out.size();
            partner.conjugate_partner = i;
            out.push_back(partner);
        }
    }

    for (auto& r : out) r.is_real = std::abs(r.location.imag()) <= 1e-8 * (1.0 + std::abs(r.location));

    // real labels: (-1)^k r- < (-1)^k r+
    std::vector<size_t> simple_real;
    for (size_t i = 0; i < out.size(); ++i)
        if (out[i].is_real && out[i].multiplicity == 1) simple_real.push_back(i);
    std::sort(simple_real.begin(), simple_real.end(),
              [&](size_t i, size_t j) { return out[i].location.real() < out[j].location.real(); });
    const bool even = box.k % 2 == 0;
    for (size_t r = 0; r < simple_real.size(); ++r) {
        const bool lower_half = r < simple_real.size() / 2 || simple_real.size() == 1;
        out[simple_real[r]].sign = (lower_half == even) ? Sign::minus : Sign::plus;
        if (simple_real.size() == 1) out[simple_real[r]].sign = Sign::plus;
    }
    return out;
}

}  // namespace floquet
