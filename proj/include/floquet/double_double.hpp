#pragma once

// Double-double arithmetic (unevaluated sum hi + lo, ~106-bit significand).
// Error-free transforms after Dekker/Knuth, products via fma.

#include <cmath>
#include <complex>

namespace floquet::dd {

struct Real {
    double hi = 0.0;
    double lo = 0.0;

    constexpr Real() = default;
    constexpr Real(double h) : hi(h), lo(0.0) {}
    constexpr Real(double h, double l) : hi(h), lo(l) {}

    explicit operator double() const { return hi + lo; }
};

inline Real quick_two_sum(double a, double b) {
    double s = a + b;
    return {s, b - (s - a)};
}

inline Real two_sum(double a, double b) {
    double s = a + b;
    double bb = s - a;
    return {s, (a - (s - bb)) + (b - bb)};
}

inline Real two_prod(double a, double b) {
    double p = a * b;
    return {p, std::fma(a, b, -p)};
}

inline Real operator+(const Real& a, const Real& b) {
    Real s = two_sum(a.hi, b.hi);
    Real t = two_sum(a.lo, b.lo);
    s.lo += t.hi;
    s = quick_two_sum(s.hi, s.lo);
    s.lo += t.lo;
    return quick_two_sum(s.hi, s.lo);
}

inline Real operator-(const Real& a) { return {-a.hi, -a.lo}; }
inline Real operator-(const Real& a, const Real& b) { return a + (-b); }

inline Real operator*(const Real& a, const Real& b) {
    Real p = two_prod(a.hi, b.hi);
    p.lo += a.hi * b.lo + a.lo * b.hi;
    return quick_two_sum(p.hi, p.lo);
}

inline Real operator*(const Real& a, double b) {
    Real p = two_prod(a.hi, b);
    p.lo += a.lo * b;
    return quick_two_sum(p.hi, p.lo);
}

inline Real operator/(const Real& a, double b) {
    double q1 = a.hi / b;
    Real p = two_prod(q1, b);
    double r = ((a.hi - p.hi) - p.lo + a.lo) / b;
    return quick_two_sum(q1, r);
}

inline Real& operator+=(Real& a, const Real& b) { return a = a + b; }
inline Real& operator-=(Real& a, const Real& b) { return a = a - b; }
inline Real& operator*=(Real& a, const Real& b) { return a = a * b; }

inline double abs_approx(const Real& a) { return std::abs(a.hi); }

struct Complex {
    Real re;
    Real im;

    constexpr Complex() = default;
    constexpr Complex(Real r, Real i = Real()) : re(r), im(i) {}
    Complex(std::complex<double> z) : re(z.real()), im(z.imag()) {}

    std::complex<double> to_std() const { return {static_cast<double>(re), static_cast<double>(im)}; }
};

inline Complex operator+(const Complex& a, const Complex& b) { return {a.re + b.re, a.im + b.im}; }
inline Complex operator-(const Complex& a, const Complex& b) { return {a.re - b.re, a.im - b.im}; }
inline Complex operator*(const Complex& a, const Complex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
inline Complex operator*(const Complex& a, const Real& s) { return {a.re * s, a.im * s}; }
inline Complex operator/(const Complex& a, double s) { return {a.re / s, a.im / s}; }
inline Complex& operator+=(Complex& a, const Complex& b) { return a = a + b; }

inline double abs_approx(const Complex& a) { return std::abs(a.re.hi) + std::abs(a.im.hi); }

}  // namespace floquet::dd
