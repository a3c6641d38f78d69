/* Minimal complex arithmetic over the MPFR-backed Real.
 * std::complex<Real> is not usable (Real is not a standard floating type)
 * and libmpc is unavailable, so the handful of operations needed here are
 * written out directly.  Principal branches throughout.
 */
#ifndef PCF_COMPLEX_HPP
#define PCF_COMPLEX_HPP

#include "pcf/precision.hpp"

namespace pcf {

struct Complex {
    Real re, im;

    Complex() : re(0), im(0) {}
    Complex(const Real& r) : re(r), im(0) {}
    Complex(double r) : re(r), im(0) {}
    Complex(const Real& r, const Real& i) : re(r), im(i) {}

    Complex operator-() const { return {-re, -im}; }
};

inline Complex operator+(const Complex& a, const Complex& b) { return {a.re + b.re, a.im + b.im}; }
inline Complex operator-(const Complex& a, const Complex& b) { return {a.re - b.re, a.im - b.im}; }
inline Complex operator*(const Complex& a, const Complex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
inline Complex operator*(const Real& a, const Complex& b) { return {a * b.re, a * b.im}; }
inline Complex operator*(const Complex& a, const Real& b) { return {a.re * b, a.im * b}; }
inline Complex operator/(const Complex& a, const Real& b) { return {a.re / b, a.im / b}; }
inline Complex operator/(const Complex& a, const Complex& b) {
    Real d = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}
inline Complex& operator+=(Complex& a, const Complex& b) { a = a + b; return a; }
inline Complex& operator-=(Complex& a, const Complex& b) { a = a - b; return a; }
inline Complex& operator*=(Complex& a, const Complex& b) { a = a * b; return a; }

inline Complex pinned(const Complex& a) { return {pinned(a.re), pinned(a.im)}; }

inline Complex conj(const Complex& a) { return {a.re, -a.im}; }
inline Real abs(const Complex& a) { return hypot(a.re, a.im); }
inline Real arg(const Complex& a) { return atan2(a.im, a.re); }

inline Complex exp(const Complex& a) {
    Real m = exp(a.re);
    return {m * cos(a.im), m * sin(a.im)};
}

/* principal logarithm */
inline Complex log(const Complex& a) { return {log(abs(a)), arg(a)}; }

/* principal square root */
inline Complex sqrt(const Complex& a) {
    if (a.im == 0 && a.re >= 0) return {sqrt(a.re), Real(0)};
    Real m = sqrt(abs(a)), h = arg(a) / 2;
    return {m * cos(h), m * sin(h)};
}

/* principal power z^p */
inline Complex pow(const Complex& a, const Complex& p) {
    return exp(p * log(a));
}
inline Complex pow(const Complex& a, const Real& p) {
    return exp(p * log(a));
}

inline Complex polar(const Real& r, const Real& theta) {
    return {r * cos(theta), r * sin(theta)};
}

/* value v with separated magnitude exponent: true value = v * e^logscale */
struct Scaled {
    Complex v;
    Real logscale;

    Scaled() : v(), logscale(0) {}
    Scaled(const Complex& val, const Real& ls) : v(val), logscale(ls) {}

    /* collapse to a plain complex (safe: MPFR exponent range is huge) */
    Complex unscaled() const { return v * exp(logscale); }
};

/* combine: a*b with logscales added */
inline Scaled operator*(const Scaled& a, const Scaled& b) {
    return {a.v * b.v, a.logscale + b.logscale};
}
inline Scaled operator/(const Scaled& a, const Scaled& b) {
    return {a.v / b.v, a.logscale - b.logscale};
}

} // namespace pcf

#endif
