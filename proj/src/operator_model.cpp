#include "floquet/operator_model.hpp"

#include <cmath>
#include <initializer_list>
#include <numbers>

#include "floquet/errors.hpp"

namespace floquet {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

}  // namespace

TrigPoly::TrigPoly(std::map<int, Complex> amplitudes) : amp_(std::move(amplitudes)) {
    prune();
    for (const auto& [n, a] : amp_) {
        Complex partner = amplitude(-n);
        double scale = 1.0 + std::abs(a);
        if (std::abs(partner - std::conj(a)) > 1e-14 * scale) {
            throw ImaginaryResidue("amplitudes at n=" + std::to_string(n) +
                                   " break Hermitian symmetry");
        }
    }
}

TrigPoly TrigPoly::mirrored(const std::map<int, Complex>& amplitudes) {
    std::map<int, Complex> full;
    for (const auto& [n, a] : amplitudes) {
        if (n == 0) {
            if (std::abs(a.imag()) > 1e-14 * (1.0 + std::abs(a.real())))
                throw ConfigError("mean amplitude must be real");
            full[0] = Complex(a.real(), 0.0);
            continue;
        }
        for (auto [m, v] : {std::pair{n, a}, std::pair{-n, std::conj(a)}}) {
            auto it = full.find(m);
            if (it != full.end() && std::abs(it->second - v) > 1e-14 * (1.0 + std::abs(v)))
                throw ConfigError("conflicting amplitudes for harmonic " + std::to_string(m));
            full[m] = v;
        }
    }
    return TrigPoly(std::move(full));
}

TrigPoly TrigPoly::constant(double value) { return TrigPoly({{0, Complex(value, 0.0)}}); }

TrigPoly TrigPoly::cosine(int n, double amplitude) {
    if (n == 0) return constant(amplitude);
    return TrigPoly({{n, 0.5 * amplitude}, {-n, 0.5 * amplitude}});
}

TrigPoly TrigPoly::sine(int n, double amplitude) {
    if (n == 0) return TrigPoly();
    // sin x = (e^{ix} - e^{-ix}) / 2i
    return TrigPoly({{n, Complex(0.0, -0.5 * amplitude)}, {-n, Complex(0.0, 0.5 * amplitude)}});
}

void TrigPoly::prune() {
    for (auto it = amp_.begin(); it != amp_.end();) {
        if (it->second == Complex(0.0, 0.0))
            it = amp_.erase(it);
        else
            ++it;
    }
}

Complex TrigPoly::amplitude(int n) const {
    auto it = amp_.find(n);
    return it == amp_.end() ? Complex(0.0, 0.0) : it->second;
}

int TrigPoly::max_harmonic() const {
    int m = 0;
    for (const auto& [n, a] : amp_) m = std::max(m, std::abs(n));
    return m;
}

Complex TrigPoly::evaluate_complex(double t) const {
    Complex sum(0.0, 0.0);
    for (const auto& [n, a] : amp_) sum += a * std::polar(1.0, kTwoPi * n * t);
    return sum;
}

double TrigPoly::evaluate(double t) const {
    Complex v = evaluate_complex(t);
    if (std::abs(v.imag()) >= 1e-12 * (1.0 + std::abs(v.real())))
        throw ImaginaryResidue("coefficient evaluates to a complex value at t=" + std::to_string(t));
    return v.real();
}

double TrigPoly::sup_bound() const {
    double s = 0.0;
    for (const auto& [n, a] : amp_) s += std::abs(a);
    return s;
}

double TrigPoly::l1_norm() const {
    if (amp_.empty()) return 0.0;
    const int samples = 64 * (max_harmonic() + 1);
    double s = 0.0;
    for (int i = 0; i < samples; ++i) s += std::abs(evaluate_complex((i + 0.5) / samples).real());
    return s / samples;
}

TrigPoly TrigPoly::derivative(int order) const {
    std::map<int, Complex> out;
    for (const auto& [n, a] : amp_) {
        Complex f(1.0, 0.0);
        for (int k = 0; k < order; ++k) f *= Complex(0.0, kTwoPi * n);
        out[n] = a * f;
    }
    TrigPoly d;
    d.amp_ = std::move(out);
    d.prune();
    return d;
}

TrigPoly TrigPoly::operator+(const TrigPoly& other) const {
    TrigPoly r = *this;
    for (const auto& [n, a] : other.amp_) r.amp_[n] += a;
    r.prune();
    return r;
}

TrigPoly TrigPoly::operator-(const TrigPoly& other) const { return *this + other * -1.0; }

TrigPoly TrigPoly::operator*(const TrigPoly& other) const {
    TrigPoly r;
    for (const auto& [n, a] : amp_)
        for (const auto& [m, b] : other.amp_) r.amp_[n + m] += a * b;
    r.prune();
    return r;
}

TrigPoly TrigPoly::operator*(double s) const {
    TrigPoly r = *this;
    for (auto& [n, a] : r.amp_) a *= s;
    r.prune();
    return r;
}

double evaluate_coefficient(const TrigPoly& poly, double t) { return poly.evaluate(t); }

Complex fourier_coeff(const TrigPoly& poly, int n) { return poly.amplitude(n); }

OperatorSpec::OperatorSpec(int p, std::vector<TrigPoly> coefficients)
    : p_(p), coeffs_(std::move(coefficients)) {
    if (p < 2) throw InvalidOrder("order parameter p must be at least 2, got " + std::to_string(p));
    if (static_cast<int>(coeffs_.size()) != p)
        throw InvalidOrder("expected " + std::to_string(p) + " coefficients, got " +
                           std::to_string(coeffs_.size()));
    mu_ = coeffs_.back().amplitude(0).real();
}

OperatorSpec OperatorSpec::zero(int p) {
    return OperatorSpec(p, std::vector<TrigPoly>(std::max(p, 0)));
}

OperatorSpec OperatorSpec::constant(int p, const std::vector<double>& values) {
    std::vector<TrigPoly> c;
    for (double v : values) c.push_back(TrigPoly::constant(v));
    return OperatorSpec(p, std::move(c));
}

const TrigPoly& OperatorSpec::q(int j) const {
    if (j < 1 || j > p_) throw IndexOutOfRange("coefficient index " + std::to_string(j));
    return coeffs_[j - 1];
}

bool OperatorSpec::is_free() const {
    for (const auto& c : coeffs_)
        if (!c.is_zero()) return false;
    return true;
}

bool OperatorSpec::is_constant() const { return max_harmonic() == 0; }

int OperatorSpec::max_harmonic() const {
    int m = 0;
    for (const auto& c : coeffs_) m = std::max(m, c.max_harmonic());
    return m;
}

}  // namespace floquet
