/* Extended-precision reference values for the parabolic cylinder functions
 * U(a,z), V(a,z) and derivatives, used as ground truth when measuring exact
 * remainders of the asymptotic expansions.
 *
 * U for a > -1/2 comes from the integral representation
 *   U(a,z) = e^(-z^2/4)/Gamma(a+1/2) * Int_0^inf w^(a-1/2) e^(-w^2/2-zw) dw;
 * U for a <= -1/2 from downward recurrence in a (the stable direction),
 * seeded by two quadrature values; V from the connection formula
 *   pi V(a,z) = Gamma(1/2+a) [sin(pi a) U(a,z) + U(a,-z)].
 * All results carry a logscale (true value = v * e^logscale) so that the
 * e^(+-z^2/4) factors at z ~ 10^3 never leave representable range.
 */
#ifndef PCF_ORACLE_HPP
#define PCF_ORACLE_HPP

#include "pcf/complex.hpp"
#include <vector>

namespace pcf {

Scaled u_quadrature(const Real& a, const Complex& z, const PrecisionContext& ctx);
Scaled uprime_quadrature(const Real& a, const Complex& z, const PrecisionContext& ctx);

/* any real a; dispatches to quadrature or recurrence */
Scaled u_ref(const Real& a, const Real& z, const PrecisionContext& ctx);
Scaled u_negative_a(const Real& a, const Real& z, const PrecisionContext& ctx);
Scaled uprime_ref(const Real& a, const Real& z, const PrecisionContext& ctx);

Scaled v_ref(const Real& a, const Real& z, const PrecisionContext& ctx);
Scaled vprime_ref(const Real& a, const Real& z, const PrecisionContext& ctx);

/* W_{k,1/4}(z) = 2^(a/2) w^(1/2) U(a,w), a = -2k, z = w^2/2, Re w >= 0 */
Scaled whittaker_ref(const Real& k, const Complex& z, const PrecisionContext& ctx);

/* relative residuals of the five connection identities (I16)-(I20) */
std::vector<Real> connection_residuals(const Real& a, const Complex& z,
                                       const PrecisionContext& ctx);

/* Wronskians, as relative residuals:
 * [0] U(a,z)V'(a,z) - U'(a,z)V(a,z) - sqrt(2/pi)
 * [1] U(a,z) dU(a,-z)/dz - U'(a,z)U(a,-z) - sqrt(2pi)/Gamma(a+1/2) */
std::vector<Real> wronskian_residuals(const Real& a, const Real& z,
                                      const PrecisionContext& ctx);

} // namespace pcf

#endif
