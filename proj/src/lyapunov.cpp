#include "floquet/lyapunov.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "floquet/errors.hpp"
#include "floquet/poly.hpp"
#include "floquet/reference.hpp"

namespace floquet {

namespace {

constexpr double kPalindromeTol = 1e-8;
constexpr double kDegenerate = 1e-7;

// relative pairing distance; keeps the exponentially large branch from dominating
double pair_cost(Complex a, Complex b) { return std::abs(a - b) / (1.0 + std::abs(a) + std::abs(b)); }

struct Assignment {
    std::vector<int> perm;  // perm[i]: target index for source i
    double best = std::numeric_limits<double>::infinity();
    double second = std::numeric_limits<double>::infinity();
};

Assignment best_assignment(const std::vector<Complex>& source, const std::vector<Complex>& target) {
    const int p = static_cast<int>(source.size());
    std::vector<int> perm(p);
    std::iota(perm.begin(), perm.end(), 0);
    Assignment out;
    do {
        double c = 0.0;
        for (int i = 0; i < p; ++i) c += pair_cost(source[i], target[perm[i]]);
        if (c < out.best) {
            out.second = out.best;
            out.best = c;
            out.perm = perm;
        } else if (c < out.second) {
            out.second = c;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

// put the sample's branches in the order given by perm (source i -> label perm[i] + 1)
void apply_labels(LyapunovSample& s, const std::vector<int>& perm) {
    const size_t p = s.branches.size();
    std::vector<Complex> br(p);
    std::vector<std::pair<Complex, Complex>> mult(p);
    for (size_t i = 0; i < p; ++i) {
        br[perm[i]] = s.branches[i];
        mult[perm[i]] = s.multipliers[i];
    }
    s.branches = std::move(br);
    s.multipliers = std::move(mult);
    s.labels.resize(p);
    std::iota(s.labels.begin(), s.labels.end(), 1);
}

}  // namespace

std::vector<hp::Complex> newton_kappa(const hp::Matrix& m, int count) {
    std::vector<hp::Complex> s(count + 1);
    hp::Matrix power = m;
    for (int k = 1; k <= count; ++k) {
        if (k > 1) power = power * m;
        s[k] = power.trace();
    }
    std::vector<hp::Complex> kappa(count + 1);
    kappa[0] = hp::Complex(Complex(1.0, 0.0));
    for (int k = 1; k <= count; ++k) {
        hp::Complex acc;
        for (int j = 0; j < k; ++j) acc += s[k - j] * kappa[j];
        kappa[k] = acc * (-1.0 / k);
    }
    return kappa;
}

std::vector<hp::Complex> chebyshev_reduce(const std::vector<hp::Complex>& kappa, int p) {
    // ascending coefficients of T_p + sum_{k<p} kappa_k T_{p-k} + kappa_p / 2
    std::vector<hp::Complex> asc(p + 1);
    for (int k = 0; k < p; ++k) {
        std::vector<long long> t = chebyshev_t(p - k);
        for (size_t i = 0; i < t.size(); ++i)
            if (t[i] != 0) asc[i] += kappa[k] * static_cast<double>(t[i]);
    }
    asc[0] += kappa[p] * 0.5;
    const double norm = std::ldexp(1.0, 1 - p);
    std::vector<hp::Complex> phi(p + 1);
    for (int i = 0; i <= p; ++i) phi[p - i] = asc[i] * norm;
    return phi;
}

hp::Complex product_discriminant(const std::vector<hp::Complex>& delta) {
    hp::Complex acc(Complex(1.0, 0.0));
    for (size_t i = 0; i < delta.size(); ++i)
        for (size_t j = i + 1; j < delta.size(); ++j) {
            hp::Complex d = delta[i] - delta[j];
            acc = acc * (d * d);
        }
    return acc;
}

hp::Complex shifted_product(const std::vector<hp::Complex>& delta, double shift) {
    hp::Complex acc(Complex(1.0, 0.0));
    const hp::Complex s(Complex(shift, 0.0));
    for (const auto& d : delta) acc = acc * (d - s);
    return acc;
}

CharPoly char_poly(const MonodromyResult& m) {
    const PreciseLyapunov pl = precise_lyapunov(m);
    CharPoly cp;
    cp.p = m.p;
    for (const auto& k : pl.kappa) cp.kappa.push_back(k.to_std());
    // traces from the recursion inverted: s_k = -k kappa_k - sum_{j=1}^{k-1} s_{k-j} kappa_j
    std::vector<Complex> s(m.p + 1);
    for (int k = 1; k <= m.p; ++k) {
        Complex acc = -static_cast<double>(k) * cp.kappa[k];
        for (int j = 1; j < k; ++j) acc -= s[k - j] * cp.kappa[j];
        s[k] = acc;
        cp.traces.push_back(acc / (2.0 * m.p));
    }
    return cp;
}

std::vector<Complex> nu_reduce(const CharPoly& cp) {
    const int p = cp.p;
    if (static_cast<int>(cp.kappa.size()) != 2 * p + 1) throw ConfigError("kappa must hold 2p+1 values");
    double scale = 0.0;
    for (const auto& k : cp.kappa) scale = std::max(scale, std::abs(k));
    for (int j = 0; j <= p; ++j)
        if (std::abs(cp.kappa[2 * p - j] - cp.kappa[j]) > kPalindromeTol * scale)
            throw PalindromeViolation("kappa_" + std::to_string(2 * p - j) + " != kappa_" + std::to_string(j));
    hp::PrecisionScope scope(128);
    std::vector<hp::Complex> kappa;
    for (const auto& k : cp.kappa) kappa.emplace_back(k);
    std::vector<hp::Complex> phi = chebyshev_reduce(kappa, p);
    std::vector<Complex> out;
    for (int i = 1; i <= p; ++i) out.push_back(phi[i].to_std());
    return out;
}

PreciseLyapunov precise_lyapunov(const MonodromyResult& m) {
    PreciseLyapunov pl;
    pl.p = m.p;
    pl.bits = working_precision(m.p, m.lambda);
    hp::PrecisionScope scope(pl.bits);
    const hp::Matrix mat = precise_matrix(m, pl.bits);
    std::vector<hp::Complex> head = newton_kappa(mat, m.p);
    pl.kappa.resize(2 * m.p + 1);
    for (int k = 0; k <= m.p; ++k) {
        pl.kappa[k] = head[k];
        pl.kappa[2 * m.p - k] = head[k];
    }
    pl.phi = chebyshev_reduce(pl.kappa, m.p);
    pl.delta = aberth_roots(pl.phi);
    return pl;
}

LyapunovSample sample_from(const MonodromyResult& m) {
    const PreciseLyapunov pl = precise_lyapunov(m);
    hp::PrecisionScope scope(pl.bits);
    LyapunovSample s;
    s.lambda = m.lambda;
    s.z0 = growth_exponent(m.lambda, m.p);
    for (int i = 1; i <= m.p; ++i) s.nu_coeffs.push_back(pl.phi[i].to_std());

    std::vector<size_t> order(pl.delta.size());
    std::iota(order.begin(), order.end(), 0);
    std::vector<Complex> approx;
    for (const auto& d : pl.delta) approx.push_back(d.to_std());
    std::stable_sort(order.begin(), order.end(),
                     [&](size_t a, size_t b) { return approx[a].real() > approx[b].real(); });

    const hp::Complex one(Complex(1.0, 0.0));
    for (size_t idx : order) {
        const hp::Complex& d = pl.delta[idx];
        s.branches.push_back(d.to_std());
        hp::Complex root = hp::sqrt(d * d - one);
        hp::Complex tau = d + root;
        if (hp::abs(tau) < hp::Real(1.0)) tau = d - root;
        hp::Complex inv = one / tau;
        s.multipliers.emplace_back(tau.to_std(), inv.to_std());
    }
    s.labels.resize(m.p);
    std::iota(s.labels.begin(), s.labels.end(), 1);

    s.rho = product_discriminant(pl.delta).to_std();
    s.rho_resultant = resultant_discriminant(pl.phi).to_std();
    s.d_plus = shifted_product(pl.delta, 1.0).to_std();
    s.d_minus = shifted_product(pl.delta, -1.0).to_std();
    double sep = std::numeric_limits<double>::infinity();
    for (size_t i = 0; i < pl.delta.size(); ++i)
        for (size_t j = i + 1; j < pl.delta.size(); ++j)
            sep = std::min(sep, hp::abs(pl.delta[i] - pl.delta[j]).to_double());
    s.min_separation = sep;
    s.degenerate = sep < kDegenerate;
    return s;
}

LyapunovSample branches(const OperatorSpec& spec, Complex lambda, const MonodromyOptions& options) {
    return sample_from(monodromy(spec, lambda, options));
}

LyapunovSample branches(const OperatorSpec& spec, Complex lambda, double tol) {
    MonodromyOptions o;
    o.tol = tol;
    return branches(spec, lambda, o);
}

void match_labels(std::vector<LyapunovSample>& path) {
    if (path.empty()) return;
    const int p = static_cast<int>(path.front().branches.size());
    {
        LyapunovSample& first = path.front();
        std::vector<Complex> anchor = unperturbed_lyapunov(first.lambda, p);
        apply_labels(first, best_assignment(first.branches, anchor).perm);
    }
    for (size_t i = 1; i < path.size(); ++i) {
        Assignment a = best_assignment(path[i].branches, path[i - 1].branches);
        if (a.second > 1e-14 && a.second - a.best < 0.1 * a.second)
            throw AmbiguousMatching("pairings within 10% at path point " + std::to_string(i) +
                                    "; refine the path");
        apply_labels(path[i], a.perm);
    }
}

Complex branch_value(const LyapunovSample& s, int label) {
    for (size_t i = 0; i < s.labels.size(); ++i)
        if (s.labels[i] == label) return s.branches[i];
    throw IndexOutOfRange("no branch with label " + std::to_string(label));
}

}  // namespace floquet
