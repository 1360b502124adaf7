#include "floquet/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>

#include "floquet/errors.hpp"
#include "floquet/lyapunov.hpp"
#include "floquet/parallel.hpp"
#include "floquet/rootfind.hpp"

namespace floquet {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kGrowthCap = 300.0;
constexpr double kUnresolved = 1e-5;

struct RealSample {
    double d_plus = 0.0;
    double d_minus = 0.0;
    double rho = 0.0;
    int count = 0;
};

double real_part_checked(Complex v, double scale, const char* what) {
    if (std::abs(v.imag()) > 1e-8 * std::max(scale, std::abs(v.real())))
        throw ImaginaryResidue(std::string(what) + " has imaginary part " + std::to_string(v.imag()));
    return v.real();
}

LyapunovSample real_sample(const OperatorSpec& spec, double lambda, const SpectrumOptions& options) {
    MonodromyOptions mo;
    mo.tol = options.tol;
    return branches(spec, Complex(lambda, 0.0), mo);
}

int count_in_band(const LyapunovSample& s, const SpectrumOptions& options) {
    int c = 0;
    for (const auto& d : s.branches)
        if (std::abs(d.imag()) < options.imag_threshold && std::abs(d.real()) <= 1.0 + options.band_slack) ++c;
    return c;
}

double product_scale(const LyapunovSample& s) {
    double scale = 1.0;
    for (const auto& d : s.branches) scale *= 1.0 + std::abs(d);
    return scale;
}

RealSample evaluate(const OperatorSpec& spec, double lambda, const SpectrumOptions& options) {
    LyapunovSample s = real_sample(spec, lambda, options);
    const double scale = product_scale(s);
    RealSample r;
    r.d_plus = real_part_checked(s.d_plus, scale, "D_+");
    r.d_minus = real_part_checked(s.d_minus, scale, "D_-");
    r.rho = real_part_checked(s.rho, scale * scale, "rho");
    r.count = count_in_band(s, options);
    return r;
}

// lambda where the growth exponent reaches the cap on the positive (or negative) axis
double growth_limit(int p, double direction) {
    const double g1 = growth_exponent(Complex(direction, 0.0), p);
    return direction * std::pow(kGrowthCap / g1, 2 * p);
}

std::vector<double> sample_all(const std::vector<double>& nodes,
                               const std::function<double(double)>& f) {
    std::vector<double> values(nodes.size());
    parallel_for(nodes.size(), [&](size_t i) { values[i] = f(nodes[i]); });
    return values;
}

}  // namespace

const char* parity_name(Parity p) { return p == Parity::periodic ? "periodic" : "antiperiodic"; }

const char* edge_kind_name(EdgeKind k) {
    switch (k) {
        case EdgeKind::periodic_eig: return "periodic_eig";
        case EdgeKind::antiperiodic_eig: return "antiperiodic_eig";
        case EdgeKind::ramification: return "ramification";
        case EdgeKind::unresolved: break;
    }
    return "unresolved";
}

double d_plus_minus(const OperatorSpec& spec, double lambda, Sign sign, double tol) {
    SpectrumOptions o;
    o.tol = tol;
    LyapunovSample s = real_sample(spec, lambda, o);
    const Complex v = sign == Sign::plus ? s.d_plus : s.d_minus;
    return real_part_checked(v, product_scale(s), sign == Sign::plus ? "D_+" : "D_-");
}

double spectral_lower_bound(const OperatorSpec& spec) {
    const int p = spec.p();
    std::vector<double> s(p);
    double total = 0.0;
    for (int j = 0; j < p; ++j) {
        for (const auto& [n, a] : spec.q(j + 1).amplitudes()) s[j] += std::abs(a);
        total += s[j];
    }
    // min over x = k^2 >= 0 of x^p - sum_j s_j x^j; the minimum lies below x = 1 + total
    const double xmax = 1.0 + total;
    double best = 0.0;
    const int samples = 4000;
    for (int i = 0; i <= samples; ++i) {
        const double x = xmax * i / samples;
        double g = std::pow(x, p);
        for (int j = 0; j < p; ++j) g -= s[j] * std::pow(x, j);
        best = std::min(best, g);
    }
    // sampling slack
    return best - 1e-3 * (1.0 + std::abs(best)) - 1.0;
}

std::vector<double> energy_nodes(double lo, double hi, int count, int p) {
    auto to_u = [p](double l) { return std::copysign(std::pow(std::abs(l), 1.0 / (2 * p)), l); };
    auto to_l = [p](double u) { return std::copysign(std::pow(std::abs(u), 2 * p), u); };
    const double ulo = to_u(lo), uhi = to_u(hi);
    std::vector<double> out(count);
    for (int i = 0; i < count; ++i) out[i] = to_l(ulo + (uhi - ulo) * i / (count - 1));
    out.front() = lo;
    out.back() = hi;
    return out;
}

std::vector<EndpointClassification> periodic_eigenvalues(const OperatorSpec& spec, int n_max, Parity parity,
                                                         const SpectrumOptions& options) {
    if (n_max < 1) throw IndexOutOfRange("n_max must be at least 1");
    const int p = spec.p();
    const int sigma = parity == Parity::periodic ? 0 : 1;
    const int m_max = 2 * n_max + sigma;
    const Sign sign = parity == Parity::periodic ? Sign::plus : Sign::minus;

    const double low = std::min(spectral_lower_bound(spec), -std::pow(kPi / 2, 2 * p));
    const double u_lo = -std::pow(-low, 1.0 / (2 * p));
    const double u_hi = kPi * (m_max + 0.5);
    const int count = static_cast<int>(std::ceil((u_hi - u_lo) / kPi * options.nodes_per_disk)) + 1;
    std::vector<double> nodes = energy_nodes(low, std::pow(u_hi, 2 * p), count, p);
    auto f = [&](double l) { return d_plus_minus(spec, l, sign, options.tol); };
    std::vector<double> values = sample_all(nodes, f);
    RealRootOptions ro;
    ro.rel_tol = options.root_rel_tol;
    std::vector<RealRoot> roots = real_roots(f, nodes, values, ro);

    std::map<int, std::vector<RealRoot>> disks;
    for (const auto& r : roots) {
        int m = sigma;
        if (r.x > 0.0) {
            const double z = std::pow(r.x, 1.0 / (2 * p));
            m = sigma + 2 * static_cast<int>(std::lround((z / kPi - sigma) / 2.0));
            m = std::max(m, sigma);
        }
        for (int k = 0; k < r.multiplicity; ++k) disks[m].push_back(r);
    }
    std::vector<EndpointClassification> out;
    for (auto& [m, list] : disks) {
        if (m > options.n_min && static_cast<int>(list.size()) != 2)
            throw RootCountMismatch("disk m=" + std::to_string(m) + " holds " + std::to_string(list.size()) +
                                    " roots of D_" + (sign == Sign::plus ? "+" : "-"));
        for (size_t i = 0; i < list.size(); ++i) {
            EndpointClassification e;
            e.kind = parity == Parity::periodic ? EdgeKind::periodic_eig : EdgeKind::antiperiodic_eig;
            e.location = list[i].x;
            e.residual = list[i].residual;
            e.index = m;
            e.multiplicity = list[i].multiplicity;
            if (m == 0 && list.size() == 1) e.sign = Sign::plus;
            else e.sign = i % 2 == 0 ? Sign::minus : Sign::plus;
            out.push_back(e);
        }
    }
    for (int m = sigma + 2 * (options.n_min / 2 + 1); m <= m_max; m += 2)
        if (!disks.count(m) && m > options.n_min)
            throw RootCountMismatch("disk m=" + std::to_string(m) + " holds no roots");
    return out;
}

std::vector<int> disk_counts(const std::vector<EndpointClassification>& eigs, int m_max, Parity parity) {
    std::vector<int> counts(m_max + 1, 0);
    const int sigma = parity == Parity::periodic ? 0 : 1;
    for (const auto& e : eigs)
        if (e.index >= 0 && e.index <= m_max && (e.index - sigma) % 2 == 0) ++counts[e.index];
    return counts;
}

int band_count(const OperatorSpec& spec, double lambda, const SpectrumOptions& options) {
    return count_in_band(real_sample(spec, lambda, options), options);
}

EndpointClassification classify_endpoint(const OperatorSpec& spec, double lambda, double step,
                                         const SpectrumOptions& options) {
    const RealSample c = evaluate(spec, lambda, options);
    const RealSample l = evaluate(spec, lambda - step, options);
    const RealSample r = evaluate(spec, lambda + step, options);
    auto normalized = [](double at, double a, double b) {
        const double scale = std::max(std::abs(a), std::abs(b));
        return scale == 0.0 ? 1.0 : std::abs(at) / scale;
    };
    const double rp = normalized(c.d_plus, l.d_plus, r.d_plus);
    const double rm = normalized(c.d_minus, l.d_minus, r.d_minus);
    const double rr = normalized(c.rho, l.rho, r.rho);
    EndpointClassification e;
    e.location = lambda;
    // An edge where D_+ or D_- vanishes is an eigenvalue even if rho also vanishes there
    // (double eigenvalues are ramifications too).
    if (std::min(rp, rm) <= kUnresolved || std::min(rp, rm) <= rr) {
        e.kind = rp <= rm ? EdgeKind::periodic_eig : EdgeKind::antiperiodic_eig;
        e.residual = std::min(rp, rm);
    } else {
        e.kind = EdgeKind::ramification;
        e.residual = rr;
    }
    if (e.residual > kUnresolved) e.kind = EdgeKind::unresolved;
    return e;
}

BandScan band_scan(const OperatorSpec& spec, double lo, double hi, int grid, const SpectrumOptions& options) {
    if (!(lo < hi)) throw ConfigError("band_scan needs lo < hi");
    if (grid < 2) throw ConfigError("band_scan needs grid >= 2");
    const int p = spec.p();
    hi = std::min(hi, growth_limit(p, 1.0));
    lo = std::max(lo, growth_limit(p, -1.0));
    if (!(lo < hi)) throw OverflowRegime("scan range lies beyond the validated growth regime");

    BandScan scan;
    std::vector<double> nodes = energy_nodes(lo, hi, grid, p);
    std::vector<RealSample> samples(nodes.size());
    parallel_for(nodes.size(), [&](size_t i) { samples[i] = evaluate(spec, nodes[i], options); });
    scan.evaluations = static_cast<int>(nodes.size());

    RealRootOptions ro;
    ro.rel_tol = options.root_rel_tol;
    std::vector<double> candidates;
    auto collect = [&](double RealSample::*field) {
        std::vector<double> values(nodes.size());
        for (size_t i = 0; i < nodes.size(); ++i) values[i] = samples[i].*field;
        auto f = [&](double l) {
            ++scan.evaluations;
            return evaluate(spec, l, options).*field;
        };
        for (const auto& r : real_roots(f, nodes, values, ro))
            if (r.x > lo && r.x < hi) candidates.push_back(r.x);
    };
    collect(&RealSample::d_plus);
    collect(&RealSample::d_minus);
    collect(&RealSample::rho);
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end(),
                                 [](double a, double b) { return std::abs(a - b) <= 1e-12 * (1.0 + std::abs(a)); }),
                     candidates.end());

    // intervals between candidate edges, each with a constant branch count
    std::vector<double> bounds{lo};
    bounds.insert(bounds.end(), candidates.begin(), candidates.end());
    bounds.push_back(hi);
    const size_t intervals = bounds.size() - 1;
    std::vector<int> counts(intervals, -1);
    size_t node = 0;
    for (size_t k = 0; k < intervals; ++k) {
        while (node < nodes.size() && nodes[node] <= bounds[k]) ++node;
        size_t first = node;
        // nodes sitting on an edge (to rounding) carry the edge's ambiguous count
        auto near = [](double x, double edge) { return std::abs(x - edge) <= 1e-9 * (1.0 + std::abs(edge)); };
        while (node < nodes.size() && nodes[node] < bounds[k + 1]) {
            if (near(nodes[node], bounds[k]) || near(nodes[node], bounds[k + 1])) {
                ++node;
                continue;
            }
            if (counts[k] < 0) counts[k] = samples[node].count;
            else if (counts[k] != samples[node].count)
                throw GridTooCoarse("branch count changes inside (" + std::to_string(bounds[k]) + ", " +
                                    std::to_string(bounds[k + 1]) + ") without a detected edge");
            ++node;
        }
        node = first;
        if (counts[k] < 0) {
            counts[k] = band_count(spec, 0.5 * (bounds[k] + bounds[k + 1]), options);
            ++scan.evaluations;
        }
    }

    auto local_step = [&](double x) {
        auto it = std::lower_bound(nodes.begin(), nodes.end(), x);
        size_t i = std::clamp<size_t>(static_cast<size_t>(it - nodes.begin()), 1, nodes.size() - 1);
        const double h = nodes[i] - nodes[i - 1];
        return std::min(h, 0.25 * (bounds.back() - bounds.front()));
    };
    EndpointClassification open_lo;
    open_lo.location = lo;
    size_t k = 0;
    while (k < intervals) {
        size_t j = k;
        while (j + 1 < intervals && counts[j + 1] == counts[k]) ++j;
        const double a = bounds[k], b = bounds[j + 1];
        if (counts[k] > 0) {
            SpectralBand band;
            band.lo = a;
            band.hi = b;
            band.multiplicity = 2 * counts[k];
            if (k == 0) band.edge_lo = open_lo;
            else band.edge_lo = classify_endpoint(spec, a, local_step(a), options);
            if (j + 1 == intervals) band.edge_hi.location = hi;
            else band.edge_hi = classify_endpoint(spec, b, local_step(b), options);
            scan.bands.push_back(band);
        } else {
            scan.gaps.push_back({a, b});
        }
        k = j + 1;
    }
    return scan;
}

}  // namespace floquet
