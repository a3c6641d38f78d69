#include "pcf/quadrature.hpp"
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <boost/math/quadrature/exp_sinh.hpp>
#include <stdexcept>

namespace pcf {

/* Integrate the real and imaginary parts separately; each call carries
 * its own error estimate and the larger is reported. */

QuadResult quad_finite(const std::function<Complex(const Real&)>& f,
                       const Real& a0_, const Real& b0_,
                       const PrecisionContext& ctx)
{
    ScopedPrecision guard(ctx);
    Real a = pinned(a0_), b = pinned(b0_);
    boost::math::quadrature::tanh_sinh<Real> integ(15, min_complement());
    Real tol = ctx.quad_tol;
    Real e1(0), e2(0), l1(0);
    Real re = integ.integrate([&](const Real& x) { return f(x).re; },
                              a, b, tol, &e1, &l1);
    Real im = integ.integrate([&](const Real& x) { return f(x).im; },
                              a, b, tol, &e2, &l1);
    return {Complex(re, im), fmax(e1 * fmax(abs(re), Real(1)),
                                  e2 * fmax(abs(im), Real(1)))};
}

QuadResult quad_semi_infinite(const std::function<Complex(const Real&)>& f,
                              const PrecisionContext& ctx)
{
    ScopedPrecision guard(ctx);
    boost::math::quadrature::exp_sinh<Real> integ(15);
    Real tol = ctx.quad_tol;
    Real e1(0), e2(0), l1(0);
    Real re, im;
    try {
        re = integ.integrate([&](const Real& x) { return f(x).re; },
                             tol, &e1, &l1);
        im = integ.integrate([&](const Real& x) { return f(x).im; },
                             tol, &e2, &l1);
    } catch (const std::exception& e) {
        throw std::runtime_error(std::string("quad_semi_infinite: ") + e.what());
    }
    Real err = fmax(e1 * fmax(abs(re), Real(1)), e2 * fmax(abs(im), Real(1)));
    if (!(err < sqrt(sqrt(tol))))
        throw std::runtime_error("quad_semi_infinite: not converged");
    return {Complex(re, im), err};
}

} // namespace pcf
