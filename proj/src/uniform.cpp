#include "pcf/uniform.hpp"
#include "pcf/oracle.hpp"
#include <stdexcept>

namespace pcf {

CoeffTable gen_coeffs(unsigned N)
{
    CoeffTable ct;
    ct.phi.push_back(RationalPoly({1}));
    /* -4 tau^2 (tau+1)^2 and (1/4)(20u^2+20u+3) pieces of the recursion */
    RationalPoly w({0, 0, -4, -8, -4});
    RationalPoly q({3, 20, 20});
    for (unsigned s = 0; s < N; ++s) {
        const RationalPoly& p = ct.phi.back();
        RationalPoly next = w * p.derivative()
                          - Rational(1, 4) * (q * p).antiderivative();
        ct.phi.push_back(next);
    }
    ct.psi.push_back(RationalPoly({1}));
    RationalPoly a({0, 2, 6, 4});        /* 2 tau (tau+1)(2tau+1) */
    RationalPoly b({0, 0, 8, 16, 8});    /* 8 tau^2 (tau+1)^2 */
    for (unsigned s = 1; s <= N; ++s)
        ct.psi.push_back(ct.phi[s] + a * ct.phi[s - 1]
                         + b * ct.phi[s - 1].derivative());
    return ct;
}

void map_pos(const Real& t0_, Real& tau, Real& xi, const PrecisionContext& ctx)
{
    ScopedPrecision guard(ctx);
    Real t = pinned(t0_);
    Real r = sqrt(t * t + 1);
    tau = (t / r - 1) / 2;
    xi = t * r / 2 + log(t + r) / 2;
}

void map_neg(const Real& t0_, Real& tau, Real& xi, const PrecisionContext& ctx)
{
    ScopedPrecision guard(ctx);
    Real t = pinned(t0_);
    if (!(t > 1)) throw std::domain_error("map_neg: t <= 1");
    Real r = sqrt(t * t - 1);
    tau = (t / r - 1) / 2;
    xi = t * r / 2 - log(t + r) / 2;
}

Real h_mu_log(const Real& mu0_, const PrecisionContext& ctx)
{
    ScopedPrecision guard(ctx);
    Real mu = pinned(mu0_);
    if (!(mu > 0)) throw std::domain_error("h_mu_log: mu <= 0");
    Real a = mu * mu / 2;
    return -log(Real(2)) / 2 - a / 2 + (a / 2 - Real(0.25)) * log(a);
}

Real variation_phi(unsigned s, const Real& tau0_, Branch branch,
                   const CoeffTable& ct, const PrecisionContext& ctx)
{
    ScopedPrecision guard(ctx);
    Real tau = pinned(tau0_);
    if (s >= ct.phi.size())
        throw std::invalid_argument("variation_phi: s beyond table");
    switch (branch) {
    case Branch::pos_z:
        return poly_variation(ct.phi[s], tau, Real(0), ctx);
    case Branch::neg_z:
        return poly_variation(ct.phi[s], Real(-1), tau, ctx);
    default:
        /* tau >= 0: all coefficients share the sign (-1)^s, so the
         * variation over [0,tau] telescopes to |phi_s(tau)| */
        return abs(ct.phi[s].eval(tau));
    }
}

Real variation_majorant(unsigned s, const Real& tau)
{
    Real t2 = tau * tau;
    switch (s) {
    case 1: return -3 * tau / (4 * (1 + Real("4.8") * t2));
    case 2: return 105 * t2 / (32 * (1 + 18 * t2));
    case 3: return -3465 * t2 * tau / (128 * (1 + 52 * t2));
    default:
        throw std::invalid_argument("variation_majorant: s not in {1,2,3}");
    }
}

Real remainder_bound_uniform(const Real& mu0_, const Real& tau0_, unsigned n,
                             Branch branch, const CoeffTable& ct,
                             const PrecisionContext& ctx)
{
    ScopedPrecision guard(ctx);
    Real mu = pinned(mu0_), tau = pinned(tau0_);
    if (n < 1) throw std::invalid_argument("remainder_bound_uniform: n < 1");
    Real v1 = variation_phi(1, tau, branch, ct, ctx);
    Real vn = variation_phi(n, tau, branch, ct, ctx);
    Real mu2 = mu * mu;
    return exp(2 * v1 / mu2) * vn / pow(mu2, Real((int)n));
}

static Real series_sum(const std::vector<RationalPoly>& polys,
                       const Real& tau, const Real& mu, unsigned n,
                       bool alternating)
{
    Real mu2 = mu * mu, sum(0), pw(1);
    for (unsigned s = 0; s < n; ++s) {
        Real term = polys[s].eval(tau) / pw;
        sum += (alternating && (s & 1)) ? -term : term;
        pw *= mu2;
    }
    return sum;
}

UniformReport eval_pos_z(const Real& a0_, const Real& t0_, unsigned n,
                         const CoeffTable& ct, bool with_oracle,
                         const PrecisionContext& ctx)
{
    ScopedPrecision guard(ctx);
    Real a = pinned(a0_), t = pinned(t0_);
    if (!(a > 0) || t < 0)
        throw std::domain_error("eval_pos_z: need a > 0, t >= 0");
    UniformReport rep;
    rep.n = n;
    rep.mu = sqrt(2 * a);
    map_pos(t, rep.tau, rep.xi, ctx);
    rep.partial = series_sum(ct.phi, rep.tau, rep.mu, n, true);
    rep.deriv_partial = series_sum(ct.psi, rep.tau, rep.mu, n, true);
    Real hl = h_mu_log(rep.mu, ctx);
    rep.prefactor_log = -rep.mu * rep.mu * rep.xi - log(sqrt(Real(2)) * rep.mu)
                        - hl - log(t * t + 1) / 4;
    rep.bound = remainder_bound_uniform(rep.mu, rep.tau, n, Branch::pos_z, ct, ctx);
    rep.exact = rep.remainder = rep.ratio = Real(-1);
    if (with_oracle) {
        Scaled u = u_quadrature(a, Complex(rep.mu * t * sqrt(Real(2))), ctx);
        rep.exact = u.v.re * exp(u.logscale - rep.prefactor_log);
        rep.remainder = abs(rep.exact - rep.partial);
        rep.ratio = rep.remainder / rep.bound;
    }
    return rep;
}

UniformReport eval_neg_z(const Real& a0_, const Real& t0_, unsigned n,
                         const CoeffTable& ct, bool with_oracle,
                         const PrecisionContext& ctx)
{
    ScopedPrecision guard(ctx);
    Real a = pinned(a0_), t = pinned(t0_);
    if (!(a > 0) || t < 0)
        throw std::domain_error("eval_neg_z: need a > 0, t >= 0");
    UniformReport rep;
    rep.n = n;
    rep.mu = sqrt(2 * a);
    map_pos(t, rep.tau, rep.xi, ctx);
    rep.partial = series_sum(ct.phi, rep.tau, rep.mu, n, false);
    rep.deriv_partial = series_sum(ct.psi, rep.tau, rep.mu, n, false);
    Real hl = h_mu_log(rep.mu, ctx);
    rep.prefactor_log = log(sqrt(2 * pi_v())) - lgamma(a + Real(0.5))
                        + hl + rep.mu * rep.mu * rep.xi - log(1 + t * t) / 4;
    rep.bound = remainder_bound_uniform(rep.mu, rep.tau, n, Branch::neg_z, ct, ctx);
    rep.exact = rep.remainder = rep.ratio = Real(-1);
    if (with_oracle) {
        Scaled u = u_quadrature(a, Complex(-rep.mu * t * sqrt(Real(2))), ctx);
        rep.exact = u.v.re * exp(u.logscale - rep.prefactor_log);
        rep.remainder = abs(rep.exact - rep.partial);
        rep.ratio = rep.remainder / rep.bound;
    }
    return rep;
}

UniformReport eval_neg_a(const Real& a0_, const Real& t0_, unsigned n,
                         const CoeffTable& ct, bool with_oracle,
                         const PrecisionContext& ctx)
{
    ScopedPrecision guard(ctx);
    Real a = pinned(a0_), t = pinned(t0_);
    if (!(a < 0)) throw std::domain_error("eval_neg_a: need a < 0");
    UniformReport rep;
    rep.n = n;
    rep.mu = sqrt(-2 * a);
    map_neg(t, rep.tau, rep.xi, ctx);
    rep.partial = series_sum(ct.phi, rep.tau, rep.mu, n, false);
    rep.deriv_partial = series_sum(ct.psi, rep.tau, rep.mu, n, false);
    Real hl = h_mu_log(rep.mu, ctx);
    rep.prefactor_log = hl - rep.mu * rep.mu * rep.xi - log(t * t - 1) / 4;
    rep.bound = remainder_bound_uniform(rep.mu, rep.tau, n, Branch::neg_a, ct, ctx);
    rep.exact = rep.remainder = rep.ratio = Real(-1);
    if (with_oracle) {
        Scaled u = u_ref(a, rep.mu * t * sqrt(Real(2)), ctx);
        rep.exact = u.v.re * exp(u.logscale - rep.prefactor_log);
        rep.remainder = abs(rep.exact - rep.partial);
        rep.ratio = rep.remainder / rep.bound;
    }
    return rep;
}

NegASeries neg_a_series(const Real& a0_, const Real& t0_, unsigned n,
                        const CoeffTable& ct, const PrecisionContext& ctx)
{
    ScopedPrecision guard(ctx);
    Real a = pinned(a0_), t = pinned(t0_);
    if (!(a < 0)) throw std::domain_error("neg_a_series: need a < 0");
    Real mu = sqrt(-2 * a), tau, xi;
    map_neg(t, tau, xi, ctx);
    NegASeries s;
    s.F = series_sum(ct.phi, tau, mu, n, false);
    s.P = series_sum(ct.phi, tau, mu, n, true);
    s.G = series_sum(ct.psi, tau, mu, n, false);
    s.Q = series_sum(ct.psi, tau, mu, n, true);
    return s;
}

Factors extract_factors(const Real& a0_, const Real& t0_, const PrecisionContext& ctx)
{
    ScopedPrecision guard(ctx);
    Real a = pinned(a0_), t = pinned(t0_);
    if (!(a > 0)) throw std::domain_error("extract_factors: need a > 0");
    Real mu = sqrt(2 * a), tau, xi;
    map_pos(t, tau, xi, ctx);
    Real hl = h_mu_log(mu, ctx);
    Real z = mu * t * sqrt(Real(2));
    Real mu2xi = mu * mu * xi;
    Real lq = log(1 + t * t) / 4;
    Real lgam = lgamma(a + Real(0.5));

    Scaled u = u_quadrature(a, Complex(z), ctx);
    Scaled du = uprime_quadrature(a, Complex(z), ctx);
    Scaled um = u_quadrature(a, Complex(-z), ctx);
    Scaled dum = uprime_quadrature(a, Complex(-z), ctx);

    Factors f;
    f.F = u.v.re * exp(u.logscale + mu2xi + log(sqrt(Real(2)) * mu) + hl + lq);
    f.G = -du.v.re * exp(du.logscale + mu2xi + log(Real(2)) + hl - lq);
    f.P = um.v.re * exp(um.logscale + lgam - log(sqrt(2 * pi_v())) - hl - mu2xi + lq);
    f.Q = -dum.v.re * exp(dum.logscale + lgam - log(sqrt(pi_v()) * mu) - hl - mu2xi - lq);
    return f;
}

std::vector<std::vector<Real>> tables_uniform(int which,
                                              const PrecisionContext& ctx)
{
    ScopedPrecision guard(ctx);
    static const double amag[5] = {1, 5, 10, 50, 100};
    CoeffTable ct = gen_coeffs(3);
    std::vector<std::vector<Real>> grid;
    for (double am : amag) {
        std::vector<Real> row;
        if (which == 3 || which == 4) {
            static const char* ts[7] = {"0", "1", "2.5", "5", "10", "25", "50"};
            for (auto* s : ts) {
                Real t(s);
                UniformReport r = which == 3
                    ? eval_pos_z(Real(am), t, 3, ct, true, ctx)
                    : eval_neg_z(Real(am), t, 3, ct, true, ctx);
                row.push_back(r.ratio);
            }
        } else if (which == 5) {
            static const char* ts[7] = {"1.5", "2", "3", "5", "10", "20", "50"};
            for (auto* s : ts)
                row.push_back(eval_neg_a(Real(-am), Real(s), 3, ct, true, ctx).ratio);
        } else {
            throw std::invalid_argument("tables_uniform: which not in {3,4,5}");
        }
        grid.push_back(row);
    }
    return grid;
}

} // namespace pcf
