#pragma once

// Multiprecision real/complex scalars and small dense matrices on top of MPFR.

#include <mpfr.h>

#include <complex>
#include <string>
#include <vector>

#include "floquet/double_double.hpp"

namespace floquet::hp {

mpfr_prec_t default_precision();

// Sets the default precision for newly created values on this thread.
class PrecisionScope {
public:
    explicit PrecisionScope(mpfr_prec_t bits);
    ~PrecisionScope();
    PrecisionScope(const PrecisionScope&) = delete;
    PrecisionScope& operator=(const PrecisionScope&) = delete;

private:
    mpfr_prec_t saved_;
};

class Real {
public:
    Real();
    explicit Real(double v);
    Real(double v, mpfr_prec_t prec);
    explicit Real(const dd::Real& v);
    Real(const Real& other);
    Real(Real&& other) noexcept;
    Real& operator=(const Real& other);
    Real& operator=(Real&& other) noexcept;
    Real& operator=(double v);
    ~Real();

    mpfr_ptr get() { return v_; }
    mpfr_srcptr get() const { return v_; }
    mpfr_prec_t precision() const { return mpfr_get_prec(v_); }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }
    // base-2 exponent (x = m * 2^e with 0.5 <= |m| < 1); very negative for zero
    long exponent() const;

private:
    mpfr_t v_;
};

Real operator+(const Real& a, const Real& b);
Real operator-(const Real& a, const Real& b);
Real operator*(const Real& a, const Real& b);
Real operator/(const Real& a, const Real& b);
Real operator-(const Real& a);
Real operator*(const Real& a, double b);
Real& operator+=(Real& a, const Real& b);
Real& operator-=(Real& a, const Real& b);
Real& operator*=(Real& a, const Real& b);
bool operator<(const Real& a, const Real& b);
Real abs(const Real& a);
Real sqrt(const Real& a);
Real hypot(const Real& a, const Real& b);
Real pi();
std::string to_string(const Real& a, int digits = 20);

struct Complex {
    Real re;
    Real im;

    Complex() = default;
    Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
    explicit Complex(std::complex<double> z);
    explicit Complex(const dd::Complex& z);

    std::complex<double> to_std() const { return {re.to_double(), im.to_double()}; }
    bool is_zero() const { return re.is_zero() && im.is_zero(); }
};

Complex operator+(const Complex& a, const Complex& b);
Complex operator-(const Complex& a, const Complex& b);
Complex operator-(const Complex& a);
Complex operator*(const Complex& a, const Complex& b);
Complex operator*(const Complex& a, const Real& b);
Complex operator*(const Complex& a, double b);
Complex operator/(const Complex& a, const Complex& b);
Complex& operator+=(Complex& a, const Complex& b);
Complex& operator-=(Complex& a, const Complex& b);
Complex& operator*=(Complex& a, const Complex& b);
Complex conj(const Complex& a);
Real abs(const Complex& a);
Real norm(const Complex& a);  // |a|^2
// max(|re|, |im|) as a cheap magnitude estimate
double magnitude_approx(const Complex& a);
Complex sqrt(const Complex& a);
Complex polar(const Real& r, const Real& theta);
// 2^(ilog2) scaling, exact
Complex ldexp(const Complex& a, long e);

// Row-major square complex matrix.
class Matrix {
public:
    Matrix() = default;
    explicit Matrix(int n);
    static Matrix identity(int n);

    int size() const { return n_; }
    Complex& operator()(int i, int j) { return a_[static_cast<size_t>(i) * n_ + j]; }
    const Complex& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * n_ + j]; }

    Complex trace() const;
    Matrix operator*(const Matrix& other) const;
    // Determinant by partially pivoted elimination.
    Complex determinant() const;
    // Largest |entry| (approximate), as a double in log2 scale
    double log2_max_entry() const;

private:
    int n_ = 0;
    std::vector<Complex> a_;
};

}  // namespace floquet::hp
