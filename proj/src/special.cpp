#include "pcf/special.hpp"
#include "pcf/quadrature.hpp"
#include <stdexcept>

namespace pcf {

Real gamma_fn(const Real& x, const PrecisionContext& ctx)
{
    ScopedPrecision guard(ctx);
    if (x <= 0 && floor(x) == x)
        throw std::domain_error("gamma_fn: pole at nonpositive integer");
    Real xx = pinned(x);     /* re-round into working precision */
    return tgamma(xx);
}

/* Complex gamma via the reflection formula plus a Spouge series whose
 * term count is chosen from the working precision.  Accuracy of the
 * Spouge sum with parameter a is about a*log10(2pi)/2 digits. */
static Complex gamma_spouge(const Complex& z, unsigned digits)
{
    /* need (a-1)! coefficients; a ~ digits / log10(2*pi) + 3 */
    unsigned a = (unsigned)(digits / 0.7981 + 4);
    Real ra(a);
    Complex zm1 = z - Complex(Real(1));
    Complex acc(sqrt(2 * pi_v()));
    Real fact(1);
    for (unsigned k = 1; k < a; ++k) {
        /* c_k = (-1)^(k-1)/(k-1)! * (a-k)^(k-1/2) e^(a-k) */
        Real amk = ra - k;
        Real ck = pow(amk, Real(k) - Real(0.5)) * exp(amk) / fact;
        if ((k - 1) % 2 == 1) ck = -ck;
        acc += Complex(ck) / (zm1 + Complex(Real(k)));
        fact *= k;
    }
    Complex base = zm1 + Complex(ra);
    return pow(base, zm1 + Complex(Real(0.5))) * exp(-base) * acc;
}

Complex gamma_fn(const Complex& z0, const PrecisionContext& ctx)
{
    ScopedPrecision guard(ctx);
    Complex z = pinned(z0);
    if (z.im == 0) {
        if (z.re > 0 || floor(z.re) != z.re)
            return Complex(gamma_fn(z.re, ctx));
        throw std::domain_error("gamma_fn: pole at nonpositive integer");
    }
    if (z.re < Real(0.5)) {
        /* reflection: Gamma(z) = pi / (sin(pi z) Gamma(1-z)) */
        Real pi = pi_v();
        Complex s{sin(pi * z.re) * cosh(pi * z.im),
                  cos(pi * z.re) * sinh(pi * z.im)};
        return Complex(pi) / (s * gamma_spouge(Complex(Real(1)) - z, ctx.digits));
    }
    return gamma_spouge(z, ctx.digits);
}

Real erfc_ref(const Real& x, const PrecisionContext& ctx)
{
    ScopedPrecision guard(ctx);
    Real xx = pinned(x);
    return erfc(xx);
}

Real chi_fn(unsigned n, const PrecisionContext& ctx)
{
    ScopedPrecision guard(ctx);
    Real h = Real(n) / 2;
    return sqrt(pi_v()) * tgamma(h + 1) / tgamma(h + Real(0.5));
}

Real hyp2f1_half(unsigned n, const Real& x0, const PrecisionContext& ctx)
{
    ScopedPrecision guard(ctx);
    Real x = pinned(x0);
    if (x < 0 || x > 1)
        throw std::domain_error("hyp2f1_half: argument outside [0,1]");
    if (x <= Real(0.75)) {
        /* power series: sum_k (n/2)_k (1/2)_k / ((n/2+1)_k k!) x^k */
        Real a = Real(n) / 2;
        Real term(1), sum(1);
        Real tol = Real("1e-1");
        for (unsigned i = 0; i < ctx.digits + 6; ++i) tol /= 10;
        for (unsigned k = 0; k < 100000; ++k) {
            term *= (a + k) * (Real(0.5) + k) / ((a + 1 + k) * (k + 1)) * x;
            sum += term;
            if (term < tol * sum) return sum;
        }
        throw std::runtime_error("hyp2f1_half: series not converged");
    }
    /* near x = 1: standard continuation at unit argument.  With
     * (a,b,c) = (n/2, 1/2, n/2+1) it collapses to
     *   F = chi(n) x^{-n/2} - n sqrt(y) F(1, n/2+1/2; 3/2; y),  y = 1-x. */
    Real y = 1 - x;
    Real b = Real(n) / 2 + Real(0.5);
    Real term(1), sum(1);
    Real tol = Real("1e-1");
    for (unsigned i = 0; i < ctx.digits + 6; ++i) tol /= 10;
    for (unsigned k = 0; k < 100000; ++k) {
        term *= (b + k) / (Real(1.5) + k) * y;
        sum += term;
        if (term < tol * sum)
            return chi_fn(n, ctx) * pow(x, -Real(n) / 2) - n * sqrt(y) * sum;
    }
    throw std::runtime_error("hyp2f1_half: continuation series not converged");
}

Real variation_integral(unsigned n, const Real& cos_psi, const PrecisionContext& ctx)
{
    ScopedPrecision guard(ctx);
    Real c = pinned(cos_psi);
    if (c < 0) {
        Real s2 = 1 - c * c;
        return 2 * chi_fn(n, ctx) / pow(s2, Real(n) / 2)
               - hyp2f1_half(n, s2, ctx);
    }
    /* u = v/(1-v) maps [0,inf) to [0,1); the transformed integrand
     * (1-v)^{n-1} (v^2 + 2c v(1-v) + (1-v)^2)^{-(n+1)/2} is smooth there */
    Real expo = -(Real(n) + 1) / 2;
    auto f = [&](const Real& v) -> Complex {
        Real om = 1 - v;
        Real base = v * v + 2 * c * v * om + om * om;
        return Complex(pow(om, Real(n) - 1) * pow(base, expo));
    };
    QuadResult q = quad_finite(f, Real(0), Real(1), ctx);
    return Real(n) * q.value.re;
}

} // namespace pcf
