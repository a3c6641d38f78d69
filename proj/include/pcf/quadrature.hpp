/* Adaptive quadrature on finite and semi-infinite intervals.
 *
 * Double-exponential (tanh-sinh / exp-sinh) rules absorb algebraic endpoint
 * singularities such as w^(a-1/2); both return an error estimate.  Complex
 * integrands are handled by integrating real and imaginary parts.
 */
#ifndef PCF_QUADRATURE_HPP
#define PCF_QUADRATURE_HPP

#include "pcf/complex.hpp"
#include <functional>

namespace pcf {

struct QuadResult {
    Complex value;
    Real error;     /* estimated absolute error */
};

/* Integral over (a, b), finite interval. */
QuadResult quad_finite(const std::function<Complex(const Real&)>& f,
                       const Real& a, const Real& b,
                       const PrecisionContext& ctx);

/* Integral over (0, inf).  The integrand must decay; an integrable
 * singularity at 0 is allowed.  Throws on non-convergence. */
QuadResult quad_semi_infinite(const std::function<Complex(const Real&)>& f,
                              const PrecisionContext& ctx);

} // namespace pcf

#endif
