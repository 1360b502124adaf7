#include "floquet/monodromy.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>

#include "floquet/errors.hpp"
#include "floquet/reference.hpp"

namespace floquet {

namespace {

constexpr double kPi = std::numbers::pi;
// |A| h per Taylor segment
constexpr double kSegmentReach = 3.0;
constexpr int kMaxTaylorOrder = 90;
constexpr double kRenormThreshold = 1e100;
constexpr double kOverflowGrowth = 300.0;
constexpr double kMaxRootModulus = 1e6;

const dd::Real kTwoPiDD(6.283185307179586, 2.4492935982947064e-16);

double parity(int p) { return p % 2 == 0 ? 1.0 : -1.0; }

// z for the diagonal conjugation; 1 below |lambda| = 1
Complex conjugation_root(Complex lambda, int p) {
    if (std::abs(lambda) < 1.0) return Complex(1.0, 0.0);
    return sector_root(lambda, p);
}

// s^e in multiprecision, rounded to double-double
dd::Complex dd_power(const hp::Complex& s, int e) {
    hp::Complex r(Complex(1.0, 0.0));
    hp::Complex base = s;
    if (e < 0) {
        base = hp::Complex(Complex(1.0, 0.0)) / s;
        e = -e;
    }
    for (int i = 0; i < e; ++i) r = r * base;
    auto split = [](const hp::Real& x) {
        double hi = x.to_double();
        hp::Real rest = x - hp::Real(hi, x.precision());
        return dd::Real(hi, rest.to_double());
    };
    return {split(r.re), split(r.im)};
}

dd::Complex dd_from(const hp::Complex& x) { return dd_power(x, 1); }

// sector root of lambda at multiprecision
hp::Complex precise_root(Complex lambda, int p) {
    double arg = std::arg(lambda);
    if (lambda.imag() == 0.0 && lambda.real() < 0.0) arg = kPi;
    hp::PrecisionScope scope(160);
    hp::Real modulus(std::abs(lambda));
    hp::Real root(0.0, 160);
    mpfr_rootn_ui(root.get(), modulus.get(), 2 * p, MPFR_RNDN);
    hp::Real angle(arg);
    mpfr_div_ui(angle.get(), angle.get(), 2 * p, MPFR_RNDN);
    // arg itself is only double accurate; refine the root by one Newton step on z^{2p} = lambda
    hp::Complex z = hp::polar(root, angle);
    hp::Complex lam{hp::Real(lambda.real()), hp::Real(lambda.imag())};
    for (int it = 0; it < 3; ++it) {
        hp::Complex zp(Complex(1.0, 0.0));
        for (int i = 0; i < 2 * p - 1; ++i) zp = zp * z;
        hp::Complex f = zp * z - lam;
        hp::Complex df = zp * static_cast<double>(2 * p);
        z = z - f / df;
    }
    return z;
}

// Variable entry of the conjugated generator: row, col, constant factor, coefficient.
struct VariableEntry {
    int row;
    int col;
    dd::Complex factor;
    const TrigPoly* q;
};

struct ConjugatedSystem {
    int dim;
    dd::Complex super;   // superdiagonal value s
    dd::Complex corner;  // (-1)^p lambda s^{1-2p}
    std::vector<VariableEntry> variables;
    double rate;         // bound on |A| plus the harmonic bandwidth
};

ConjugatedSystem conjugated_system(const OperatorSpec& spec, Complex lambda, Complex scale) {
    const int p = spec.p();
    ConjugatedSystem sys;
    sys.dim = 2 * p;
    hp::PrecisionScope scope(160);
    hp::Complex s = scale == Complex(1.0, 0.0) ? hp::Complex(scale) : precise_root(lambda, p);
    hp::Complex lam{hp::Real(lambda.real()), hp::Real(lambda.imag())};
    sys.super = dd_from(s);
    dd::Complex inv = dd_power(s, 1 - 2 * p);
    hp::Complex corner = lam * hp::Complex(inv) * parity(p);
    sys.corner = dd_from(corner);
    double rate = std::max(std::abs(sys.super.to_std()), std::abs(sys.corner.to_std()));
    for (int i = 1; i <= p; ++i) {
        const TrigPoly& q = spec.q(p + 1 - i);
        if (q.is_zero()) continue;
        dd::Complex f = dd_power(s, 1 - 2 * i);
        f = f * dd::Real(-parity(p));  // (-1)^{p+1}
        sys.variables.push_back({p + i - 1, p - i, f, &q});
        rate += std::abs(f.to_std()) * q.sup_bound();
    }
    rate += 2.0 * kPi * spec.max_harmonic();
    sys.rate = std::max(rate, 1.0);
    return sys;
}

// Scaled Taylor coefficients r_l = h^l q^(l)(t0) / l!, l = 0..order.
std::vector<dd::Real> coefficient_taylor(const TrigPoly& q, const dd::Complex& base_phase, const dd::Real& h,
                                         int order) {
    std::vector<dd::Real> r(order + 1, dd::Real(0.0));
    r[0] = dd::Real(q.amplitude(0).real());
    const int nmax = q.max_harmonic();
    dd::Complex phase(dd::Real(1.0), dd::Real(0.0));
    for (int n = 1; n <= nmax; ++n) {
        phase = phase * base_phase;
        Complex a = q.amplitude(n);
        if (a == Complex(0.0, 0.0)) continue;
        // term_l = 2 a e^{i 2 pi n t0} (i 2 pi n h)^l / l!
        dd::Complex term = phase * dd::Complex(a) * dd::Real(2.0);
        const dd::Real theta = kTwoPiDD * h * static_cast<double>(n);
        for (int l = 0; l <= order; ++l) {
            r[l] += term.re;
            // multiply by i theta / (l + 1)
            dd::Real re = -(term.im * theta) / static_cast<double>(l + 1);
            dd::Real im = (term.re * theta) / static_cast<double>(l + 1);
            term = {re, im};
            if (std::abs(term.re.hi) + std::abs(term.im.hi) == 0.0) break;
        }
    }
    return r;
}

std::shared_ptr<PropagatorChain> taylor_chain(const OperatorSpec& spec, Complex lambda, Complex scale,
                                              double* max_tail) {
    const ConjugatedSystem sys = conjugated_system(spec, lambda, scale);
    const int n = sys.dim;
    const int segments = std::max(1, static_cast<int>(std::ceil(sys.rate / kSegmentReach)));
    const dd::Real h = dd::Real(1.0) / static_cast<double>(segments);
    auto chain = std::make_shared<PropagatorChain>(n, scale);
    const dd::Complex hs = sys.super * h;
    const dd::Complex hc = sys.corner * h;

    std::vector<dd::Complex> hf;
    for (const auto& v : sys.variables) hf.push_back(v.factor * h);

    const size_t nn = static_cast<size_t>(n) * n;
    std::vector<std::vector<dd::Complex>> terms;
    terms.reserve(kMaxTaylorOrder + 1);
    std::vector<dd::Complex> acc(n);
    double tail_worst = 0.0;

    hp::PrecisionScope scope(160);
    for (int seg = 0; seg < segments; ++seg) {
        // e^{i 2 pi t0}
        dd::Complex base_phase(dd::Real(1.0), dd::Real(0.0));
        if (!sys.variables.empty()) {
            hp::Real angle = hp::pi() * (2.0 * seg);
            mpfr_div_si(angle.get(), angle.get(), segments, MPFR_RNDN);
            base_phase = dd_from(hp::polar(hp::Real(1.0), angle));
        }
        std::vector<std::vector<dd::Real>> coeffs;
        for (const auto& v : sys.variables)
            coeffs.push_back(coefficient_taylor(*v.q, base_phase, h, kMaxTaylorOrder));

        terms.clear();
        std::vector<dd::Complex> x0(nn);
        for (int i = 0; i < n; ++i) x0[static_cast<size_t>(i) * n + i] = dd::Complex(dd::Real(1.0));
        std::vector<dd::Complex> phi = x0;
        terms.push_back(std::move(x0));
        double phi_norm = 1.0;
        double prev_norm = 1.0;
        double tail = 0.0;
        for (int k = 0; k < kMaxTaylorOrder; ++k) {
            const std::vector<dd::Complex>& xk = terms[k];
            std::vector<dd::Complex> next(nn);
            for (int r = 0; r + 1 < n; ++r)
                for (int c = 0; c < n; ++c) next[r * n + c] = hs * xk[(r + 1) * n + c];
            for (int c = 0; c < n; ++c) next[(n - 1) * n + c] = hc * xk[c];
            for (size_t e = 0; e < sys.variables.size(); ++e) {
                const auto& v = sys.variables[e];
                std::fill(acc.begin(), acc.end(), dd::Complex());
                for (int l = 0; l <= k; ++l) {
                    const dd::Real& rl = coeffs[e][l];
                    if (rl.hi == 0.0) continue;
                    const std::vector<dd::Complex>& xs = terms[k - l];
                    for (int c = 0; c < n; ++c) acc[c] += xs[v.col * n + c] * rl;
                }
                for (int c = 0; c < n; ++c) next[v.row * n + c] += hf[e] * acc[c];
            }
            double norm = 0.0;
            for (auto& x : next) {
                x = x / static_cast<double>(k + 1);
                norm = std::max(norm, dd::abs_approx(x));
            }
            for (size_t i = 0; i < nn; ++i) phi[i] += next[i];
            for (const auto& x : phi) phi_norm = std::max(phi_norm, dd::abs_approx(x));
            terms.push_back(std::move(next));
            tail = norm / phi_norm;
            if (k > kSegmentReach && tail < 1e-34 && prev_norm / phi_norm < 1e-33) break;
            prev_norm = norm;
        }
        tail_worst = std::max(tail_worst, tail);
        chain->append(std::move(phi));
    }
    if (max_tail) *max_tail = tail_worst;
    return chain;
}

// Dormand-Prince 5(4) on Y' = A(t) Y, Y(0) = I.
struct RkOutcome {
    CMatrix y;
    int steps = 0;
    double error = 0.0;
    double log_scale = 0.0;
};

RkOutcome integrate_rk(int dim, const std::function<void(double, CMatrix&)>& fill, double tol, double hmax,
                       bool allow_renormalization) {
    static const double c[7] = {0.0, 1.0 / 5, 3.0 / 10, 4.0 / 5, 8.0 / 9, 1.0, 1.0};
    static const double a[7][6] = {
        {},
        {1.0 / 5},
        {3.0 / 40, 9.0 / 40},
        {44.0 / 45, -56.0 / 15, 32.0 / 9},
        {19372.0 / 6561, -25360.0 / 2187, 64448.0 / 6561, -212.0 / 729},
        {9017.0 / 3168, -355.0 / 33, 46732.0 / 5247, 49.0 / 176, -5103.0 / 18656},
        {35.0 / 384, 0.0, 500.0 / 1113, 125.0 / 192, -2187.0 / 6784, 11.0 / 84},
    };
    static const double e[7] = {71.0 / 57600,  0.0, -71.0 / 16695, 71.0 / 1920, -17253.0 / 339200,
                                22.0 / 525, -1.0 / 40};

    RkOutcome out;
    out.y = CMatrix::Identity(dim, dim);
    CMatrix A(dim, dim);
    std::vector<CMatrix> k(7, CMatrix(dim, dim));
    double t = 0.0;
    double h = std::min(hmax, 0.01);
    fill(0.0, A);
    k[0] = A * out.y;
    while (t < 1.0) {
        if (t + h > 1.0) h = 1.0 - t;
        CMatrix ytmp(dim, dim);
        for (int s = 1; s < 7; ++s) {
            ytmp = out.y;
            for (int j = 0; j < s; ++j)
                if (a[s][j] != 0.0) ytmp += (h * a[s][j]) * k[j];
            fill(t + c[s] * h, A);
            k[s] = A * ytmp;
        }
        // ytmp now holds the 5th-order solution (row 6 of the tableau is b)
        CMatrix err = CMatrix::Zero(dim, dim);
        for (int s = 0; s < 7; ++s)
            if (e[s] != 0.0) err += (h * e[s]) * k[s];
        const double scale = std::max(out.y.cwiseAbs().maxCoeff(), ytmp.cwiseAbs().maxCoeff());
        const double ratio = err.cwiseAbs().maxCoeff() / (tol * std::max(scale, 1e-300));
        if (ratio <= 1.0 || h <= 1e-12) {
            if (ratio > 1.0) throw StepUnderflow("step size fell below 1e-12 at t=" + std::to_string(t));
            t += h;
            out.y = ytmp;
            k[0] = k[6];
            ++out.steps;
            out.error = std::max(out.error, ratio * tol);
            const double rs = max_row_sum(out.y);
            if (rs > kRenormThreshold) {
                if (!allow_renormalization) throw OverflowRegime("monodromy entries exceed 1e100");
                out.y /= rs;
                k[0] /= rs;
                out.log_scale += std::log(rs);
            }
        }
        double factor = ratio == 0.0 ? 5.0 : 0.9 * std::pow(ratio, -0.2);
        h = std::min(hmax, h * std::clamp(factor, 0.2, 5.0));
        if (h < 1e-12 && t < 1.0) throw StepUnderflow("step size fell below 1e-12 at t=" + std::to_string(t));
    }
    return out;
}

CMatrix to_double(const hp::Matrix& m) {
    CMatrix out(m.size(), m.size());
    for (int i = 0; i < m.size(); ++i)
        for (int j = 0; j < m.size(); ++j) out(i, j) = m(i, j).to_std();
    return out;
}

void check_regime(Complex lambda, int p, const MonodromyOptions& options) {
    // both engines take O(|z|) steps; beyond this neither finishes in reasonable time
    if (lambda != Complex(0.0, 0.0) && std::abs(sector_root(lambda, p)) > kMaxRootModulus)
        throw OverflowRegime("|z| = |lambda|^{1/2p} exceeds 1e6");
    if (!options.allow_renormalization && growth_exponent(lambda, p) > kOverflowGrowth)
        throw OverflowRegime("|Re z w_1| exceeds 300 and renormalization is disabled");
}

}  // namespace

GeneratorMatrices generator_matrices(const OperatorSpec& spec, Complex lambda, double t) {
    const int p = spec.p();
    const int n = 2 * p;
    GeneratorMatrices g;
    g.P = CMatrix::Zero(n, n);
    for (int r = 0; r + 1 < n; ++r) g.P(r, r + 1) = 1.0;
    g.P(n - 1, 0) = parity(p) * lambda;
    g.Q = RMatrix::Zero(n, n);
    for (int i = 1; i <= p; ++i) g.Q(p + i - 1, p - i) = -parity(p) * spec.q(p + 1 - i).evaluate(t);
    return g;
}

CMatrix build_generator(const OperatorSpec& spec, Complex lambda, double t) {
    GeneratorMatrices g = generator_matrices(spec, lambda, t);
    return g.P + g.Q.cast<Complex>();
}

RMatrix symplectic_form(int p) {
    if (p < 2) throw InvalidOrder("order parameter p must be at least 2");
    RMatrix jp = RMatrix::Zero(p, p);
    for (int i = 0; i < p; ++i) jp(i, p - 1 - i) = i % 2 == 0 ? 1.0 : -1.0;
    RMatrix j = RMatrix::Zero(2 * p, 2 * p);
    j.block(0, p, p, p) = jp;
    j.block(p, 0, p, p) = parity(p) * jp;
    return j;
}

RMatrix quasi_derivative_similarity(const OperatorSpec& spec, double t) {
    const int p = spec.p();
    const int n = 2 * p;
    // rows[k][i]: coefficient of y^(i) in the k-th quasi-derivative
    std::vector<std::vector<TrigPoly>> rows(n, std::vector<TrigPoly>(n));
    rows[0][0] = TrigPoly::constant(1.0);
    auto differentiate = [&](const std::vector<TrigPoly>& row) {
        std::vector<TrigPoly> out(n);
        for (int i = 0; i < n; ++i) {
            if (row[i].is_zero()) continue;
            out[i] = out[i] + row[i].derivative();
            if (i + 1 < n) out[i + 1] = out[i + 1] + row[i];
        }
        return out;
    };
    for (int k = 1; k <= p; ++k) rows[k] = differentiate(rows[k - 1]);
    for (int m = 1; m <= p - 1; ++m) {
        std::vector<TrigPoly> r = differentiate(rows[p + m - 1]);
        const TrigPoly& q = spec.q(p + 1 - m);
        const std::vector<TrigPoly>& low = rows[p - m];
        for (int i = 0; i < n; ++i)
            if (!low[i].is_zero()) r[i] = r[i] + low[i] * q * parity(p);
        rows[p + m] = r;
    }
    RMatrix s(n, n);
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i) s(k, i) = rows[k][i].evaluate(t);
    return s;
}

hp::Matrix PropagatorChain::product(mpfr_prec_t bits) const {
    hp::PrecisionScope scope(bits);
    hp::Matrix m = hp::Matrix::identity(dim_);
    for (const auto& f : factors_) {
        hp::Matrix fm(dim_);
        for (int i = 0; i < dim_; ++i)
            for (int j = 0; j < dim_; ++j) fm(i, j) = hp::Complex(f[static_cast<size_t>(i) * dim_ + j]);
        m = fm * m;
    }
    return m;
}

mpfr_prec_t working_precision(int p, Complex lambda) {
    const double g = growth_exponent(lambda, p);
    const double bits = 128.0 + p * g / std::numbers::ln2;
    return static_cast<mpfr_prec_t>(std::ceil(bits / 64.0) * 64.0);
}

MonodromyResult monodromy(const OperatorSpec& spec, Complex lambda, const MonodromyOptions& options) {
    const int p = spec.p();
    const int n = 2 * p;
    if (!(options.tol > 0.0)) throw ConfigError("tolerance must be positive");
    check_regime(lambda, p, options);
    MonodromyResult res;
    res.p = p;
    res.lambda = lambda;
    const Complex scale = options.scaled ? conjugation_root(lambda, p) : Complex(1.0, 0.0);
    res.scale_applied = options.scaled;
    res.scale_root = scale;

    if (options.engine == Engine::runge_kutta) {
        const double zabs = lambda == Complex(0.0, 0.0) ? 0.0 : std::abs(sector_root(lambda, p));
        double hmax = 1.0 / (8.0 * (1.0 + zabs));
        if (spec.max_harmonic() > 0) hmax = std::min(hmax, 1.0 / (8.0 * 2.0 * kPi * spec.max_harmonic()));
        // entries of Z^{-1} A Z are A_rc s^{c-r}
        std::vector<Complex> spow(2 * n + 1);
        for (int e = -n; e <= n; ++e) spow[e + n] = std::pow(scale, e);
        auto fill = [&](double t, CMatrix& a) {
            a = build_generator(spec, lambda, t);
            if (scale != Complex(1.0, 0.0))
                for (int r = 0; r < n; ++r)
                    for (int c = 0; c < n; ++c)
                        if (a(r, c) != Complex(0.0, 0.0)) a(r, c) *= spow[c - r + n];
        };
        RkOutcome rk = integrate_rk(n, fill, options.tol, hmax, options.allow_renormalization);
        res.matrix = rk.y;
        res.step_count = rk.steps;
        res.local_error_estimate = rk.error;
        res.log_scale = rk.log_scale;
        return res;
    }

    const Complex chain_scale = conjugation_root(lambda, p);
    double tail = 0.0;
    auto chain = taylor_chain(spec, lambda, chain_scale, &tail);
    res.step_count = static_cast<int>(chain->segments());
    res.local_error_estimate = tail;
    const mpfr_prec_t bits = working_precision(p, lambda);
    hp::PrecisionScope scope(bits);
    hp::Matrix m = chain->product(bits);
    res.conjugated = std::make_shared<const hp::Matrix>(m);
    if (!options.scaled && chain_scale != Complex(1.0, 0.0)) {
        // M = Z Mhat Z^{-1}: entry (i, j) picks up s^{i-j}
        hp::Complex s = precise_root(lambda, p);
        std::vector<hp::Complex> pw(2 * n + 1);
        pw[n] = hp::Complex(Complex(1.0, 0.0));
        hp::Complex inv = hp::Complex(Complex(1.0, 0.0)) / s;
        for (int e = 1; e <= n; ++e) {
            pw[n + e] = pw[n + e - 1] * s;
            pw[n - e] = pw[n - e + 1] * inv;
        }
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m(i, j) = m(i, j) * pw[i - j + n];
    }
    const double log2max = m.log2_max_entry();
    if (log2max > std::log2(kRenormThreshold)) {
        if (!options.allow_renormalization) throw OverflowRegime("monodromy entries exceed 1e100");
        CMatrix approx(n, n);
        // row sums evaluated at reduced magnitude
        const long shift = static_cast<long>(log2max);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) approx(i, j) = hp::ldexp(m(i, j), -shift).to_std();
        const double rs = max_row_sum(approx);
        res.log_scale = shift * std::numbers::ln2 + std::log(rs);
        res.matrix = approx / rs;
    } else {
        res.matrix = to_double(m);
    }
    res.chain = std::move(chain);
    return res;
}

MonodromyResult monodromy(const OperatorSpec& spec, Complex lambda, double tol) {
    MonodromyOptions o;
    o.tol = tol;
    return monodromy(spec, lambda, o);
}

MonodromyResult scaled_monodromy(const OperatorSpec& spec, Complex lambda, double tol) {
    if (std::abs(lambda) < 1.0) throw ConfigError("scaled monodromy requires |lambda| >= 1");
    MonodromyOptions o;
    o.tol = tol;
    o.scaled = true;
    return monodromy(spec, lambda, o);
}

double symplectic_defect(const MonodromyResult& result) {
    // Z J Z is a multiple of J, so the conjugated matrix obeys the same identity.
    const RMatrix j = symplectic_form(result.p);
    const CMatrix jc = j.cast<Complex>();
    const CMatrix& m = result.matrix;
    const double target = std::exp(-2.0 * result.log_scale);
    const CMatrix d = m.transpose() * jc * m - target * jc;
    const double nm = m.norm();
    return d.norm() / (nm * nm);
}

Complex monodromy_determinant(const MonodromyResult& result) {
    if (result.chain) {
        const mpfr_prec_t bits = working_precision(result.p, result.lambda);
        hp::PrecisionScope scope(bits);
        return precise_matrix(result, bits).determinant().to_std();
    }
    const int n = 2 * result.p;
    return result.matrix.determinant() * std::exp(n * result.log_scale);
}

std::vector<Complex> matrix_eigenvalues(const MonodromyResult& result) {
    Eigen::ComplexEigenSolver<CMatrix> es(result.matrix, false);
    std::vector<Complex> out;
    const double f = std::exp(result.log_scale);
    for (int i = 0; i < es.eigenvalues().size(); ++i) out.push_back(es.eigenvalues()(i) * f);
    return out;
}

hp::Matrix precise_matrix(const MonodromyResult& result, mpfr_prec_t bits) {
    hp::PrecisionScope scope(bits);
    if (result.conjugated && result.conjugated->size() > 0 && (*result.conjugated)(0, 0).re.precision() >= bits)
        return *result.conjugated;
    if (result.chain) return result.chain->product(bits);
    const int n = 2 * result.p;
    hp::Matrix m(n);
    hp::Real f(0.0, bits);
    hp::Real l(result.log_scale, bits);
    mpfr_exp(f.get(), l.get(), MPFR_RNDN);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = hp::Complex(result.matrix(i, j)) * f;
    return m;
}

CMatrix free_monodromy(int p, Complex lambda, bool scaled) {
    const int n = 2 * p;
    if (lambda == Complex(0.0, 0.0)) {
        // P is nilpotent at lambda = 0
        CMatrix pm = CMatrix::Zero(n, n);
        for (int r = 0; r + 1 < n; ++r) pm(r, r + 1) = 1.0;
        CMatrix out = CMatrix::Identity(n, n), term = CMatrix::Identity(n, n);
        for (int k = 1; k < n; ++k) {
            term = term * pm / static_cast<double>(k);
            out += term;
        }
        return out;
    }
    const RootSystem rs = root_system(p);
    const Complex z = sector_root(lambda, p);
    CMatrix c(n, n), cinv(n, n);
    for (int k = 0; k < n; ++k)
        for (int j = 0; j < n; ++j) c(k, j) = std::pow(rs.omega[j], k);
    cinv = c.adjoint() / static_cast<double>(n);
    CMatrix e = CMatrix::Zero(n, n);
    for (int j = 0; j < n; ++j) e(j, j) = std::exp(z * rs.omega[j]);
    CMatrix mhat = c * e * cinv;
    if (scaled) return mhat;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) mhat(i, j) *= std::pow(z, i - j);
    return mhat;
}

CMatrix classical_monodromy(const OperatorSpec& spec, Complex lambda, double tol) {
    const int p = spec.p();
    const int n = 2 * p;
    // coefficient of y^(m) in y^(2p) = (-1)^p [lambda y - sum_j sum_i C(j,i) q_{j+1}^{(j-i)} y^{(j+i)}]
    std::vector<std::vector<TrigPoly>> terms(n);
    for (int j = 0; j < p; ++j) {
        for (int i = 0; i <= j; ++i) {
            double binom = 1.0;
            for (int b = 0; b < i; ++b) binom = binom * (j - b) / (b + 1);
            terms[j + i].push_back(spec.q(j + 1).derivative(j - i) * binom);
        }
    }
    auto fill = [&](double t, CMatrix& a) {
        a = CMatrix::Zero(n, n);
        for (int r = 0; r + 1 < n; ++r) a(r, r + 1) = 1.0;
        a(n - 1, 0) += parity(p) * lambda;
        for (int m = 0; m < n; ++m)
            for (const auto& q : terms[m]) a(n - 1, m) -= parity(p) * q.evaluate(t);
    };
    const double zabs = lambda == Complex(0.0, 0.0) ? 0.0 : std::abs(sector_root(lambda, p));
    double hmax = 1.0 / (8.0 * (1.0 + zabs));
    if (spec.max_harmonic() > 0) hmax = std::min(hmax, 1.0 / (16.0 * kPi * spec.max_harmonic()));
    RkOutcome rk = integrate_rk(n, fill, tol, hmax, false);
    return rk.y;
}

double max_row_sum(const CMatrix& a) { return a.cwiseAbs().rowwise().sum().maxCoeff(); }

double max_col_sum(const CMatrix& a) { return a.cwiseAbs().colwise().sum().maxCoeff(); }

}  // namespace floquet
