#pragma once

#include <complex>
#include <map>
#include <string>
#include <vector>

namespace floquet {

using Complex = std::complex<double>;

// Real 1-periodic trigonometric polynomial, stored as sparse Fourier amplitudes.
class TrigPoly {
public:
    TrigPoly() = default;

    // Amplitudes must already be Hermitian: a(-n) == conj(a(n)).
    explicit TrigPoly(std::map<int, Complex> amplitudes);

    // Fills in a(-n) = conj(a(n)) for every supplied n. Conflicting pairs throw ConfigError.
    static TrigPoly mirrored(const std::map<int, Complex>& amplitudes);
    static TrigPoly constant(double value);
    static TrigPoly cosine(int n, double amplitude);  // amplitude * cos(2 pi n t)
    static TrigPoly sine(int n, double amplitude);    // amplitude * sin(2 pi n t)

    Complex amplitude(int n) const;
    const std::map<int, Complex>& amplitudes() const { return amp_; }
    int max_harmonic() const;
    bool is_zero() const { return amp_.empty(); }

    Complex evaluate_complex(double t) const;
    double evaluate(double t) const;

    // sum |a_n|, an upper bound for max_t |q(t)|
    double sup_bound() const;
    // integral of |q| over one period (sampled)
    double l1_norm() const;

    TrigPoly derivative(int order = 1) const;

    TrigPoly operator+(const TrigPoly& other) const;
    TrigPoly operator-(const TrigPoly& other) const;
    TrigPoly operator*(const TrigPoly& other) const;
    TrigPoly operator*(double s) const;
    bool operator==(const TrigPoly& other) const { return amp_ == other.amp_; }

private:
    void prune();
    std::map<int, Complex> amp_;
};

double evaluate_coefficient(const TrigPoly& poly, double t);
Complex fourier_coeff(const TrigPoly& poly, int n);

class OperatorSpec {
public:
    // coefficients holds q_1..q_p in order.
    OperatorSpec(int p, std::vector<TrigPoly> coefficients);

    static OperatorSpec zero(int p);
    // constant coefficients q_1..q_p
    static OperatorSpec constant(int p, const std::vector<double>& values);

    int p() const { return p_; }
    double mu() const { return mu_; }
    const TrigPoly& q(int j) const;  // 1-based, 1 <= j <= p
    const std::vector<TrigPoly>& coefficients() const { return coeffs_; }
    bool is_free() const;
    bool is_constant() const;
    int max_harmonic() const;

private:
    int p_;
    std::vector<TrigPoly> coeffs_;
    double mu_;
};

}  // namespace floquet
