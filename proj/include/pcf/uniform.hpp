/* Uniform asymptotic expansions of U(a, mu t sqrt(2)) in elementary
 * functions for large |a|: exact-rational coefficient polynomials
 * phi_s, psi_s, the t <-> tau <-> xi maps for both signs of a, the
 * evaluators behind Tables 3-5, and the variation-based error bounds
 *   |R_n| <= exp[2 V(phi_1)/mu^2] V(phi_n)/mu^(2n).
 */
#ifndef PCF_UNIFORM_HPP
#define PCF_UNIFORM_HPP

#include "pcf/complex.hpp"
#include "pcf/rational_poly.hpp"
#include <vector>

namespace pcf {

struct CoeffTable {
    std::vector<RationalPoly> phi;   /* phi_0 .. phi_N */
    std::vector<RationalPoly> psi;   /* psi_0 .. psi_N */
};

/* phi_{s+1} = -4 tau^2(tau+1)^2 phi_s' - (1/4) Int_0^tau (20u^2+20u+3) phi_s,
 * psi_s = phi_s + 2 tau(tau+1)(2tau+1) phi_{s-1} + 8 tau^2(tau+1)^2 phi_{s-1}',
 * all coefficients exact rationals */
CoeffTable gen_coeffs(unsigned N);

enum class Branch { pos_z, neg_z, neg_a };

/* a > 0 branch: tau = (t/sqrt(t^2+1)-1)/2, xi = t sqrt(t^2+1)/2 + ln(t+sqrt(t^2+1))/2 */
void map_pos(const Real& t, Real& tau, Real& xi, const PrecisionContext& ctx);
/* a < 0 branch, t > 1: tau = (t/sqrt(t^2-1)-1)/2, xi = t sqrt(t^2-1)/2 - ln(t+sqrt(t^2-1))/2 */
void map_neg(const Real& t, Real& tau, Real& xi, const PrecisionContext& ctx);

/* log of h(mu) = 2^(-1/2) e^(-a/2) a^(a/2-1/4), a = mu^2/2 */
Real h_mu_log(const Real& mu, const PrecisionContext& ctx);

struct UniformReport {
    Real partial;          /* partial sum of the slowly varying factor */
    Real deriv_partial;    /* matching psi-series partial sum */
    unsigned n = 0;
    Real bound;            /* bound on |R_n| of the factor series */
    Real exact;            /* oracle-extracted factor; -1 when not requested */
    Real remainder;        /* |exact - partial|; -1 when not requested */
    Real ratio;            /* remainder / bound; -1 when not requested */
    Real prefactor_log;    /* log prefactor multiplying the factor in U itself */
    Real tau, xi, mu;
};

/* U(mu^2/2, mu t sqrt(2)) = e^{-mu^2 xi}/(sqrt(2) mu h(mu) (t^2+1)^(1/4)) F,
 * F ~ Sum (-1)^s phi_s(tau)/mu^(2s) */
UniformReport eval_pos_z(const Real& a, const Real& t, unsigned n,
                         const CoeffTable& ct, bool with_oracle,
                         const PrecisionContext& ctx);

/* U(mu^2/2, -mu t sqrt(2)) = sqrt(2 pi)/Gamma(1/2+a) h(mu) e^{mu^2 xi}
 * (1+t^2)^(-1/4) P,  P ~ Sum phi_s(tau)/mu^(2s) */
UniformReport eval_neg_z(const Real& a, const Real& t, unsigned n,
                         const CoeffTable& ct, bool with_oracle,
                         const PrecisionContext& ctx);

/* U(-mu^2/2, mu t sqrt(2)) = h(mu) e^{-mu^2 xi} (t^2-1)^(-1/4) F,
 * F ~ Sum phi_s(tau)/mu^(2s), t > 1 */
UniformReport eval_neg_a(const Real& a, const Real& t, unsigned n,
                         const CoeffTable& ct, bool with_oracle,
                         const PrecisionContext& ctx);

/* the four series partial sums for a < 0, t > 1:
 * F (U), P (V), G (U'), Q (V') per the negative-a expansion set */
struct NegASeries { Real F, P, G, Q; };
NegASeries neg_a_series(const Real& a, const Real& t, unsigned n,
                        const CoeffTable& ct, const PrecisionContext& ctx);

/* oracle-extracted slowly varying factors for a > 0 (exact relation
 * F Q + G P = 2 holds for the true factors) */
struct Factors { Real F, G, P, Q; };
Factors extract_factors(const Real& a, const Real& t, const PrecisionContext& ctx);

/* V(phi_s) over [tau,0] (pos_z), [-1,tau] (neg_z), |phi_s(tau)| (neg_a) */
Real variation_phi(unsigned s, const Real& tau, Branch branch,
                   const CoeffTable& ct, const PrecisionContext& ctx);

/* closed-form majorants of the pos_z variation, s = 1,2,3, tau in [-1/2,0] */
Real variation_majorant(unsigned s, const Real& tau);

Real remainder_bound_uniform(const Real& mu, const Real& tau, unsigned n,
                             Branch branch, const CoeffTable& ct,
                             const PrecisionContext& ctx);

/* ratio grids of Tables 3-5 (rows a in {1,5,10,50,100} resp. negated) */
std::vector<std::vector<Real>> tables_uniform(int which,
                                              const PrecisionContext& ctx);

} // namespace pcf

#endif
