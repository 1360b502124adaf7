#include "floquet/hp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace floquet::hp {

namespace {

thread_local mpfr_prec_t g_precision = 256;

mpfr_prec_t max_prec(const Real& a, const Real& b) { return std::max(a.precision(), b.precision()); }

}  // namespace

mpfr_prec_t default_precision() { return g_precision; }

PrecisionScope::PrecisionScope(mpfr_prec_t bits) : saved_(g_precision) {
    g_precision = std::clamp<mpfr_prec_t>(bits, MPFR_PREC_MIN, 1 << 20);
}

PrecisionScope::~PrecisionScope() { g_precision = saved_; }

Real::Real() {
    mpfr_init2(v_, g_precision);
    mpfr_set_zero(v_, 1);
}

Real::Real(double v) {
    mpfr_init2(v_, g_precision);
    mpfr_set_d(v_, v, MPFR_RNDN);
}

Real::Real(double v, mpfr_prec_t prec) {
    mpfr_init2(v_, prec);
    mpfr_set_d(v_, v, MPFR_RNDN);
}

Real::Real(const dd::Real& v) {
    mpfr_init2(v_, g_precision);
    mpfr_set_d(v_, v.hi, MPFR_RNDN);
    mpfr_add_d(v_, v_, v.lo, MPFR_RNDN);
}

Real::Real(const Real& other) {
    mpfr_init2(v_, other.precision());
    mpfr_set(v_, other.v_, MPFR_RNDN);
}

Real::Real(Real&& other) noexcept {
    mpfr_init2(v_, other.precision());
    mpfr_swap(v_, other.v_);
}

Real& Real::operator=(const Real& other) {
    if (this != &other) {
        if (precision() < other.precision()) mpfr_set_prec(v_, other.precision());
        mpfr_set(v_, other.v_, MPFR_RNDN);
    }
    return *this;
}

Real& Real::operator=(Real&& other) noexcept {
    if (this != &other) {
        if (precision() <= other.precision())
            mpfr_swap(v_, other.v_);
        else
            mpfr_set(v_, other.v_, MPFR_RNDN);
    }
    return *this;
}

Real& Real::operator=(double v) {
    mpfr_set_d(v_, v, MPFR_RNDN);
    return *this;
}

Real::~Real() { mpfr_clear(v_); }

long Real::exponent() const {
    if (mpfr_zero_p(v_)) return std::numeric_limits<long>::min() / 2;
    return mpfr_get_exp(v_);
}

Real operator+(const Real& a, const Real& b) {
    Real r(0.0, max_prec(a, b));
    mpfr_add(r.get(), a.get(), b.get(), MPFR_RNDN);
    return r;
}

Real operator-(const Real& a, const Real& b) {
    Real r(0.0, max_prec(a, b));
    mpfr_sub(r.get(), a.get(), b.get(), MPFR_RNDN);
    return r;
}

Real operator*(const Real& a, const Real& b) {
    Real r(0.0, max_prec(a, b));
    mpfr_mul(r.get(), a.get(), b.get(), MPFR_RNDN);
    return r;
}

Real operator/(const Real& a, const Real& b) {
    Real r(0.0, max_prec(a, b));
    mpfr_div(r.get(), a.get(), b.get(), MPFR_RNDN);
    return r;
}

Real operator-(const Real& a) {
    Real r(0.0, a.precision());
    mpfr_neg(r.get(), a.get(), MPFR_RNDN);
    return r;
}

Real operator*(const Real& a, double b) {
    Real r(0.0, a.precision());
    mpfr_mul_d(r.get(), a.get(), b, MPFR_RNDN);
    return r;
}

Real& operator+=(Real& a, const Real& b) {
    mpfr_add(a.get(), a.get(), b.get(), MPFR_RNDN);
    return a;
}

Real& operator-=(Real& a, const Real& b) {
    mpfr_sub(a.get(), a.get(), b.get(), MPFR_RNDN);
    return a;
}

Real& operator*=(Real& a, const Real& b) {
    mpfr_mul(a.get(), a.get(), b.get(), MPFR_RNDN);
    return a;
}

bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.get(), b.get()) != 0; }

Real abs(const Real& a) {
    Real r(0.0, a.precision());
    mpfr_abs(r.get(), a.get(), MPFR_RNDN);
    return r;
}

Real sqrt(const Real& a) {
    Real r(0.0, a.precision());
    mpfr_sqrt(r.get(), a.get(), MPFR_RNDN);
    return r;
}

Real hypot(const Real& a, const Real& b) {
    Real r(0.0, max_prec(a, b));
    mpfr_hypot(r.get(), a.get(), b.get(), MPFR_RNDN);
    return r;
}

Real pi() {
    Real r;
    mpfr_const_pi(r.get(), MPFR_RNDN);
    return r;
}

std::string to_string(const Real& a, int digits) {
    char* s = nullptr;
    mpfr_asprintf(&s, "%.*Re", digits, a.get());
    std::string out(s);
    mpfr_free_str(s);
    return out;
}

Complex::Complex(std::complex<double> z) : re(z.real()), im(z.imag()) {}

Complex::Complex(const dd::Complex& z) : re(z.re), im(z.im) {}

Complex operator+(const Complex& a, const Complex& b) { return {a.re + b.re, a.im + b.im}; }
Complex operator-(const Complex& a, const Complex& b) { return {a.re - b.re, a.im - b.im}; }
Complex operator-(const Complex& a) { return {-a.re, -a.im}; }

Complex operator*(const Complex& a, const Complex& b) {
    const mpfr_prec_t prec = std::max(a.re.precision(), b.re.precision());
    Complex r{Real(0.0, prec), Real(0.0, prec)};
    mpfr_fmms(r.re.get(), a.re.get(), b.re.get(), a.im.get(), b.im.get(), MPFR_RNDN);
    mpfr_fmma(r.im.get(), a.re.get(), b.im.get(), a.im.get(), b.re.get(), MPFR_RNDN);
    return r;
}

Complex operator*(const Complex& a, const Real& b) { return {a.re * b, a.im * b}; }
Complex operator*(const Complex& a, double b) { return {a.re * b, a.im * b}; }

Complex operator/(const Complex& a, const Complex& b) {
    Real d = norm(b);
    Complex num = a * conj(b);
    return {num.re / d, num.im / d};
}

Complex& operator+=(Complex& a, const Complex& b) {
    a.re += b.re;
    a.im += b.im;
    return a;
}

Complex& operator-=(Complex& a, const Complex& b) {
    a.re -= b.re;
    a.im -= b.im;
    return a;
}

Complex& operator*=(Complex& a, const Complex& b) { return a = a * b; }

Complex conj(const Complex& a) { return {a.re, -a.im}; }

Real abs(const Complex& a) { return hypot(a.re, a.im); }

Real norm(const Complex& a) {
    Real r(0.0, a.re.precision());
    mpfr_fmma(r.get(), a.re.get(), a.re.get(), a.im.get(), a.im.get(), MPFR_RNDN);
    return r;
}

double magnitude_approx(const Complex& a) {
    return std::max(std::abs(a.re.to_double()), std::abs(a.im.to_double()));
}

Complex sqrt(const Complex& a) {
    // principal branch, stable form
    if (a.is_zero()) return a;
    Real m = abs(a);
    Real t = sqrt((m + abs(a.re)) * 0.5);
    Real half(0.5, t.precision());
    if (a.re.sign() >= 0) return {t, a.im / t * half};
    Real u = abs(a.im) / t * half;
    return {u, a.im.sign() >= 0 ? t : -t};
}

Complex polar(const Real& r, const Real& theta) {
    Real s(0.0, theta.precision()), c(0.0, theta.precision());
    mpfr_sin_cos(s.get(), c.get(), theta.get(), MPFR_RNDN);
    return {r * c, r * s};
}

Complex ldexp(const Complex& a, long e) {
    Complex r = a;
    mpfr_mul_2si(r.re.get(), a.re.get(), e, MPFR_RNDN);
    mpfr_mul_2si(r.im.get(), a.im.get(), e, MPFR_RNDN);
    return r;
}

Matrix::Matrix(int n) : n_(n), a_(static_cast<size_t>(n) * n) {}

Matrix Matrix::identity(int n) {
    Matrix m(n);
    for (int i = 0; i < n; ++i) m(i, i).re = 1.0;
    return m;
}

Complex Matrix::trace() const {
    Complex t;
    for (int i = 0; i < n_; ++i) t += (*this)(i, i);
    return t;
}

Matrix Matrix::operator*(const Matrix& other) const {
    const int n = n_;
    Matrix c(n);
    // dot products over (re, im) parts: re = sum(ar*br) + sum(ai*(-bi)), im = sum(ar*bi) + sum(ai*br)
    std::vector<Real> neg_im(static_cast<size_t>(n) * n);
    for (int k = 0; k < n; ++k)
        for (int j = 0; j < n; ++j) neg_im[static_cast<size_t>(k) * n + j] = -other(k, j).im;
    std::vector<mpfr_ptr> x(2 * n), y_re(2 * n), y_im(2 * n);
    for (int i = 0; i < n; ++i) {
        for (int k = 0; k < n; ++k) {
            x[k] = const_cast<mpfr_ptr>((*this)(i, k).re.get());
            x[n + k] = const_cast<mpfr_ptr>((*this)(i, k).im.get());
        }
        for (int j = 0; j < n; ++j) {
            for (int k = 0; k < n; ++k) {
                y_re[k] = const_cast<mpfr_ptr>(other(k, j).re.get());
                y_re[n + k] = neg_im[static_cast<size_t>(k) * n + j].get();
                y_im[k] = const_cast<mpfr_ptr>(other(k, j).im.get());
                y_im[n + k] = const_cast<mpfr_ptr>(other(k, j).re.get());
            }
            Complex& out = c(i, j);
            const mpfr_prec_t prec = std::max((*this)(i, 0).re.precision(), other(0, j).re.precision());
            mpfr_set_prec(out.re.get(), prec);
            mpfr_set_prec(out.im.get(), prec);
            mpfr_dot(out.re.get(), x.data(), y_re.data(), 2 * n, MPFR_RNDN);
            mpfr_dot(out.im.get(), x.data(), y_im.data(), 2 * n, MPFR_RNDN);
        }
    }
    return c;
}

Complex Matrix::determinant() const {
    Matrix m = *this;
    const int n = n_;
    Complex det{Real(1.0), Real(0.0)};
    for (int col = 0; col < n; ++col) {
        int piv = col;
        double best = -1.0;
        for (int r = col; r < n; ++r) {
            double v = abs(m(r, col)).to_double();
            if (v > best) {
                best = v;
                piv = r;
            }
        }
        if (best == 0.0) return Complex{Real(0.0), Real(0.0)};
        if (piv != col) {
            for (int j = 0; j < n; ++j) std::swap(m(piv, j), m(col, j));
            det = -det;
        }
        det *= m(col, col);
        for (int r = col + 1; r < n; ++r) {
            Complex f = m(r, col) / m(col, col);
            for (int j = col; j < n; ++j) m(r, j) -= f * m(col, j);
        }
    }
    return det;
}

double Matrix::log2_max_entry() const {
    long e = std::numeric_limits<long>::min() / 2;
    for (const auto& v : a_) e = std::max({e, v.re.exponent(), v.im.exponent()});
    return static_cast<double>(e);
}

}  // namespace floquet::hp
