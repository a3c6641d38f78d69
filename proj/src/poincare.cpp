#include "pcf/poincare.hpp"
#include "pcf/special.hpp"
#include "pcf/oracle.hpp"
#include <stdexcept>

namespace pcf {

const char* region_name(RegionLabel r)
{
    switch (r) {
    case RegionLabel::R1: return "R1";
    case RegionLabel::R1ext: return "R1ext";
    case RegionLabel::R2: return "R2";
    case RegionLabel::R2ext: return "R2ext";
    case RegionLabel::R4: return "R4";
    default: return "Outside";
    }
}

Real pochhammer(const Real& x, unsigned m)
{
    Real r(1);
    for (unsigned i = 0; i < m; ++i) r *= x + Real(i);
    return r;
}

/* a_s = (-1)^s (a+1/2)_{2s} / (4^s s!) of the Whittaker series */
static Real whit_coeff(const Real& a, unsigned s)
{
    Real c = pochhammer(a + Real(0.5), 2 * s);
    for (unsigned i = 1; i <= s; ++i) c /= 4 * Real(i);
    return (s & 1) ? -c : c;
}

Scaled u_series_partial(const Real& a0_, const Complex& z0, unsigned n,
                        const PrecisionContext& ctx)
{
    ScopedPrecision guard(ctx);
    Real a = pinned(a0_);
    Complex z = pinned(z0);
    if (abs(z) == 0) throw std::invalid_argument("u_series_partial: z = 0");
    Real ph = arg(z);
    if (!(abs(ph) < 3 * pi_v() / 4))
        throw std::domain_error("u_series_partial: |ph z| >= 3pi/4");
    Complex z2i = Complex(Real(1)) / (Real(2) * (z * z));   /* 1/(2z^2) */
    Complex sum(Real(0)), pw(Real(1));
    for (unsigned s = 0; s < n; ++s) {
        Real c = pochhammer(a + Real(0.5), 2 * s);
        for (unsigned i = 1; i <= s; ++i) c /= Real(i);
        sum += ((s & 1) ? -c : c) * pw;
        pw *= z2i;
    }
    Complex lg = (-a - Real(0.5)) * log(z) - (z * z) / Real(4);
    return {polar(Real(1), lg.im) * sum, lg.re};
}

Scaled v_series_partial(const Real& a0_, const Complex& z0, unsigned n,
                        const PrecisionContext& ctx)
{
    ScopedPrecision guard(ctx);
    Real a = pinned(a0_);
    Complex z = pinned(z0);
    if (abs(z) == 0) throw std::invalid_argument("v_series_partial: z = 0");
    if (!(abs(arg(z)) < pi_v() / 4))
        throw std::domain_error("v_series_partial: |ph z| >= pi/4");
    Complex z2i = Complex(Real(1)) / (Real(2) * (z * z));
    Complex sum(Real(0)), pw(Real(1));
    for (unsigned s = 0; s < n; ++s) {
        Real c = pochhammer(-a + Real(0.5), 2 * s);
        for (unsigned i = 1; i <= s; ++i) c /= Real(i);
        sum += c * pw;
        pw *= z2i;
    }
    Complex lg = (a - Real(0.5)) * log(z) + (z * z) / Real(4);
    Real pre = sqrt(2 / pi_v());
    return {pre * polar(Real(1), lg.im) * sum, lg.re};
}

Scaled u_compound(const Real& a0_, const Complex& z0,
                  unsigned n_plus, unsigned n_minus,
                  const PrecisionContext& ctx)
{
    ScopedPrecision guard(ctx);
    Real a = pinned(a0_);
    Complex z = pinned(z0);
    Real ph = arg(z);
    Real pi = pi_v();
    if (!(abs(ph) > pi / 4 && abs(ph) < 5 * pi / 4))
        throw std::domain_error("u_compound: ph z outside (pi/4, 5pi/4)");
    Real g = gamma_fn(a + Real(0.5), ctx);
    if (!(boost::multiprecision::isfinite(g)) || g == 0)
        throw std::domain_error("u_compound: Gamma(a+1/2) pole");

    /* recessive series, as in the plain expansion */
    Complex z2i = Complex(Real(1)) / (Real(2) * (z * z));
    Complex s1(Real(0)), pw(Real(1));
    for (unsigned s = 0; s < n_plus; ++s) {
        Real c = pochhammer(a + Real(0.5), 2 * s);
        for (unsigned i = 1; i <= s; ++i) c /= Real(i);
        s1 += ((s & 1) ? -c : c) * pw;
        pw *= z2i;
    }
    Complex l1 = (-a - Real(0.5)) * log(z) - (z * z) / Real(4);

    /* dominant series with the +-i e^{-+ a pi i} connection factor */
    Complex s2(Real(0));
    pw = Complex(Real(1));
    for (unsigned s = 0; s < n_minus; ++s) {
        Real c = pochhammer(-a + Real(0.5), 2 * s);
        for (unsigned i = 1; i <= s; ++i) c /= Real(i);
        s2 += c * pw;
        pw *= z2i;
    }
    Complex l2 = (a - Real(0.5)) * log(z) + (z * z) / Real(4);
    Real sgn = ph > 0 ? Real(1) : Real(-1);       /* E3 upper, E4 lower */
    Complex fac = Complex(Real(0), sgn) * polar(Real(1), -sgn * a * pi)
                  * (sqrt(2 * pi) / g);

    Real L = fmax(l1.re, l2.re);
    Complex v = polar(Real(1), l1.im) * s1 * exp(l1.re - L)
              + fac * polar(Real(1), l2.im) * s2 * exp(l2.re - L);
    return {v, L};
}

RegionLabel classify_region(const Real& a, const Complex& z)
{
    Real kap = abs(Complex(a));
    Real r = abs(z), x = z.re, y = abs(z.im);
    if (r == 0) throw std::invalid_argument("classify_region: z = 0");
    if (x >= kap) return RegionLabel::R1;
    if (r >= 2 * kap && y <= kap) return RegionLabel::R4;
    if (y >= kap && r >= kap) return RegionLabel::R2;
    if (x > fmax(Real(0), -a)) return RegionLabel::R1ext;
    /* closed boundary so that theta = pi with real a stays covered */
    if (y >= fmax(Real(0), Real(0) /* Im(-a) for real a */))
        return RegionLabel::R2ext;
    return RegionLabel::Outside;
}

BoundQuantities bound_quantities(const Real& a0_, const Complex& z0,
                                 RegionLabel region,
                                 const PrecisionContext& ctx)
{
    ScopedPrecision guard(ctx);
    Real a = pinned(a0_);
    Complex z = pinned(z0);
    BoundQuantities q;
    Real r = abs(z);
    q.kappa = abs(Complex(a));
    q.sigma = q.kappa / r;
    if (!(q.sigma < 1))
        throw std::domain_error("bound_quantities: z too small relative to |a|");
    q.theta = arg(z);
    q.phi = acos(q.sigma);
    q.v = Real(1) / sqrt(Real(0.5) + sqrt(1 - 4 * q.sigma * q.sigma) / 2);

    Real se = q.sigma, zi = 1 / r;
    if (region == RegionLabel::R4) {           /* sigma -> v sigma, 1/|z| -> v/|z| */
        se = q.v * q.sigma;
        zi = q.v / r;
        if (!(se < 1))
            throw std::domain_error("bound_quantities: v*sigma >= 1 in R4");
    }
    q.alpha = 1 / (1 - se);
    q.beta = Real(0.5) + se / 2 + se * zi / (2 * (1 - se));
    q.delta = abs(a * a / 4 + Real(3) / 16)
              + se * (1 + se / 4) / ((1 - se) * (1 - se));
    return q;
}

Real variation_bound(unsigned n, const Real& a0_, const Complex& z0,
                     RegionLabel region, const PrecisionContext& ctx)
{
    ScopedPrecision guard(ctx);
    Real a = pinned(a0_);
    Complex z = pinned(z0);
    Real r = abs(z);
    Real rn = pow(r, -Real((int)n));
    switch (region) {
    case RegionLabel::R1:
    case RegionLabel::R1ext:
        return rn;
    case RegionLabel::R2:
    case RegionLabel::R2ext:
        return chi_fn(n, ctx) * rn;
    case RegionLabel::R4: {
        Real sig = abs(Complex(a)) / r;
        Real v = Real(1) / sqrt(Real(0.5) + sqrt(1 - 4 * sig * sig) / 2);
        return (chi_fn(n, ctx) + sig * v * v * n) * pow(v, Real((int)n)) * rn;
    }
    default:
        throw std::domain_error("variation_bound: region Outside");
    }
}

Real variation_2f1(unsigned n, const Real& a0_, const Complex& z0,
                   const PrecisionContext& ctx)
{
    ScopedPrecision guard(ctx);
    Real a = pinned(a0_);
    Complex z = pinned(z0);
    Real r = abs(z);
    Real sig = abs(Complex(a)) / r;
    if (!(sig <= 1)) throw std::domain_error("variation_2f1: sigma > 1");
    Real psi = abs(arg(z)) - acos(sig);
    Real s = sin(psi);
    return pow(r, -Real((int)n)) * hyp2f1_half(n, s * s, ctx);
}

/* V_P(t^{-n}) in hyp2f1 mode: the chi(n) of the piecewise bounds replaced
 * by the variation integral at angle theta-phi (analytically continued
 * past psi = pi/2), same region logic otherwise */
static Real variation_refined(unsigned n, const Real& a, const Complex& z,
                              RegionLabel region, const PrecisionContext& ctx)
{
    Real r = abs(z);
    Real rn = pow(r, -Real((int)n));
    if (region == RegionLabel::R1 || region == RegionLabel::R1ext)
        return rn;
    Real sig = abs(Complex(a)) / r;
    Real psi = abs(arg(z)) - acos(sig);
    Real base = variation_integral(n, cos(psi), ctx);
    if (region == RegionLabel::R4) {
        Real v = Real(1) / sqrt(Real(0.5) + sqrt(1 - 4 * sig * sig) / 2);
        return (base + sig * v * v * n) * pow(v, Real((int)n)) * rn;
    }
    return base * rn;
}

PoincareReport remainder_bound(const Real& a0_, const Complex& z0, unsigned n,
                               BoundMode mode, bool with_oracle,
                               const PrecisionContext& ctx)
{
    ScopedPrecision guard(ctx);
    Real a = pinned(a0_);
    Complex z = pinned(z0);
    PoincareReport rep;
    rep.n = n;
    rep.region = classify_region(a, z);
    if (rep.region == RegionLabel::Outside)
        throw std::domain_error("remainder_bound: z outside all regions");
    rep.q = bound_quantities(a, z, rep.region, ctx);

    Real k = -a / 2;
    Complex lg = k * log(z) - z / Real(2);
    Real an = whit_coeff(a, n);
    Real vn, v1;
    if (mode == BoundMode::piecewise) {
        vn = variation_bound(n, a, z, rep.region, ctx);
        v1 = variation_bound(1, a, z, rep.region, ctx);
    } else {
        vn = variation_refined(n, a, z, rep.region, ctx);
        v1 = variation_refined(1, a, z, rep.region, ctx);
    }
    /* the |z|^{-n} lives inside V_P(t^{-n}), not in the |a_n| factor */
    Real mag = exp(lg.re) * abs(an);
    rep.bound = 2 * rep.q.alpha * mag * vn * exp(2 * rep.q.alpha * rep.q.delta * v1);

    /* partial sum of the Whittaker series, mantissa + log prefactor */
    Complex zi = Complex(Real(1)) / z;
    Complex sum(Real(0)), pw(Real(1));
    for (unsigned s = 0; s < n; ++s) {
        sum += whit_coeff(a, s) * pw;
        pw *= zi;
    }
    rep.partial = polar(Real(1), lg.im) * sum;
    rep.prefactor_log = lg.re;

    rep.exact_remainder = Real(-1);
    rep.ratio = Real(-1);
    if (with_oracle) {
        Scaled w = whittaker_ref(k, z, ctx);
        fill_exact(rep, w);
    }
    return rep;
}

void fill_exact(PoincareReport& rep, const Scaled& w)
{
    Complex eps = w.unscaled() - rep.partial * exp(rep.prefactor_log);
    rep.exact_remainder = abs(eps);
    rep.ratio = rep.exact_remainder / rep.bound;
}

std::vector<std::vector<Real>> table_poincare(BoundMode mode,
                                              const PrecisionContext& ctx)
{
    ScopedPrecision guard(ctx);
    Real a(0.5);
    unsigned ns[3] = {5, 10, 15};
    std::vector<std::vector<Real>> grid(3);
    for (int j = 0; j <= 8; ++j) {
        Complex z = polar(Real(10), j * pi_v() / 8);
        Scaled w = whittaker_ref(-a / 2, z, ctx);   /* one oracle call per column */
        for (int i = 0; i < 3; ++i) {
            PoincareReport rep =
                remainder_bound(a, z, ns[i], mode, false, ctx);
            fill_exact(rep, w);
            grid[i].push_back(rep.ratio);
        }
    }
    return grid;
}

} // namespace pcf
