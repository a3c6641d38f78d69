/* Gamma, complementary error function, chi(n), and the 2F1 special case
 * F(n/2, 1/2; n/2+1; x) needed by the variation bounds.
 */
#ifndef PCF_SPECIAL_HPP
#define PCF_SPECIAL_HPP

#include "pcf/complex.hpp"

namespace pcf {

Real gamma_fn(const Real& x, const PrecisionContext& ctx);
Complex gamma_fn(const Complex& z, const PrecisionContext& ctx);
Real erfc_ref(const Real& x, const PrecisionContext& ctx);

/* chi(n) = sqrt(pi) Gamma(n/2+1) / Gamma(n/2+1/2) */
Real chi_fn(unsigned n, const PrecisionContext& ctx);

/* F(n/2, 1/2; n/2+1; x), 0 <= x <= 1.  Power series for x <= 3/4,
 * quadrature of n*Int_0^inf du/(u^2+2*sqrt(1-x)*u+1)^((n+1)/2) above. */
Real hyp2f1_half(unsigned n, const Real& x, const PrecisionContext& ctx);

/* The same variation integral with cos psi = c allowed in (-1, 1]:
 * n*Int_0^inf du/(u^2+2cu+1)^((n+1)/2).  Equals hyp2f1_half(n, 1-c^2)
 * for c >= 0 and 2*chi(n)/(1-c^2)^(n/2) - hyp2f1_half(n, 1-c^2) for c < 0. */
Real variation_integral(unsigned n, const Real& cos_psi, const PrecisionContext& ctx);

} // namespace pcf

#endif
