/* Poincare-type expansions of U(a,z), V(a,z) for large |z| with a fixed,
 * and Olver-style bounds for the remainder of the Whittaker-form series
 *
 *   W_{k,1/4}(z) = z^k e^{-z/2} Sum_{s<n} a_s z^{-s} + eps_n(z),
 *   a_s = (-1)^s (a+1/2)_{2s} / (4^s s!),  k = -a/2,
 *
 * in the regions R1, R2, R4 of the z = w^2/2 plane, with either the
 * piecewise chi(n) variation bounds or the hypergeometric refinement.
 */
#ifndef PCF_POINCARE_HPP
#define PCF_POINCARE_HPP

#include "pcf/complex.hpp"
#include <vector>

namespace pcf {

enum class RegionLabel { R1, R1ext, R2, R2ext, R4, Outside };
enum class BoundMode { piecewise, hyp2f1 };

const char* region_name(RegionLabel r);

struct BoundQuantities {
    Real kappa, sigma, alpha, beta, delta, v, theta, phi;
};

struct PoincareReport {
    Complex partial;        /* mantissa; true value = partial * e^prefactor_log */
    Real prefactor_log;
    unsigned n = 0;
    Real bound;             /* bound on |eps_n| of the Whittaker series */
    Real exact_remainder;   /* |eps_n| from the oracle; -1 when not requested */
    Real ratio;             /* |eps_n| / bound; -1 when not requested */
    RegionLabel region = RegionLabel::Outside;
    BoundQuantities q;
};

/* rising factorial (x)_m as a running product */
Real pochhammer(const Real& x, unsigned m);

/* partial sum of the U-expansion: e^{-z^2/4} z^{-a-1/2}
 * Sum_{s<n} (-1)^s (a+1/2)_{2s} / (s! (2z^2)^s), |ph z| < 3pi/4 */
Scaled u_series_partial(const Real& a, const Complex& z, unsigned n,
                        const PrecisionContext& ctx);

/* partial sum of the V-expansion: sqrt(2/pi) e^{z^2/4} z^{a-1/2}
 * Sum_{s<n} (-a+1/2)_{2s} / (s! (2z^2)^s), |ph z| < pi/4 */
Scaled v_series_partial(const Real& a, const Complex& z, unsigned n,
                        const PrecisionContext& ctx);

/* compound two-series expansion of U for pi/4 < |ph z| < 5pi/4 */
Scaled u_compound(const Real& a, const Complex& z,
                  unsigned n_plus, unsigned n_minus,
                  const PrecisionContext& ctx);

/* classification in the Whittaker z-variable (z = w^2/2) */
RegionLabel classify_region(const Real& a, const Complex& z);

BoundQuantities bound_quantities(const Real& a, const Complex& z,
                                 RegionLabel region,
                                 const PrecisionContext& ctx);

/* piecewise variation bounds for V_P(t^{-n}):
 * |z|^{-n} (R1), chi(n)|z|^{-n} (R2), [chi(n)+sigma v^2 n] v^n |z|^{-n} (R4) */
Real variation_bound(unsigned n, const Real& a, const Complex& z,
                     RegionLabel region, const PrecisionContext& ctx);

/* hypergeometric refinement: |z|^{-n} F(n/2,1/2;n/2+1;sin^2(theta-phi)) */
Real variation_2f1(unsigned n, const Real& a, const Complex& z,
                   const PrecisionContext& ctx);

/* remainder bound 2 alpha |z^k e^{-z/2} a_n| V_P(t^{-n}) exp[2 alpha delta
 * V_P(t^{-1})]; with_oracle also fills in |eps_n| and the ratio */
PoincareReport remainder_bound(const Real& a, const Complex& z, unsigned n,
                               BoundMode mode, bool with_oracle,
                               const PrecisionContext& ctx);

/* fill exact_remainder and ratio from a precomputed Whittaker value */
void fill_exact(PoincareReport& rep, const Scaled& w);

/* ratio grids for a=1/2, |z|=10, theta=j pi/8 (j=0..8), n in {5,10,15} */
std::vector<std::vector<Real>> table_poincare(BoundMode mode,
                                              const PrecisionContext& ctx);

} // namespace pcf

#endif
