/* Extended-precision scalar substrate.
 *
 * Real is an MPFR-backed float whose working precision is set per call
 * through a PrecisionContext.  All routines in this library take an explicit
 * context; a ScopedPrecision guard installs ctx.digits as the thread's
 * default precision and restores the previous value on exit.
 */
#ifndef PCF_PRECISION_HPP
#define PCF_PRECISION_HPP

#include <boost/multiprecision/mpfr.hpp>
#include <boost/math/constants/constants.hpp>
#include <stdexcept>

namespace pcf {

using Real = boost::multiprecision::number<
    boost::multiprecision::mpfr_float_backend<0>,
    boost::multiprecision::et_off>;

struct PrecisionContext {
    unsigned digits = 60;      /* significant decimal digits */
    Real quad_tol;             /* relative quadrature tolerance */

    explicit PrecisionContext(unsigned d = 60) : digits(d) {
        if (d < 30) throw std::invalid_argument("PrecisionContext: digits < 30");
        quad_tol = Real("1e-8");
        /* default 10^(8-digits) */
        for (unsigned i = 16; i < d; ++i) quad_tol /= 10;
    }
};

/* Installs ctx.digits (plus guard digits) as default precision. */
class ScopedPrecision {
    unsigned saved_;
public:
    explicit ScopedPrecision(const PrecisionContext& ctx)
        : ScopedPrecision(ctx.digits) {}
    explicit ScopedPrecision(unsigned digits)
        : saved_(Real::default_precision()) {
        Real::default_precision(digits + 8);
    }
    ~ScopedPrecision() { Real::default_precision(saved_); }
    ScopedPrecision(const ScopedPrecision&) = delete;
    ScopedPrecision& operator=(const ScopedPrecision&) = delete;
};

inline Real pi_v() { return boost::math::constants::pi<Real>(); }

/* Copy of x raised to the current working precision.  Arithmetic results
 * inherit operand precision, so arguments built by a caller running at a
 * lower precision would silently cap the accuracy of everything computed
 * from them; entry points pin their inputs through this. */
inline Real pinned(Real x) {
    x.precision(Real::default_precision());
    return x;
}

/* Smallest distance-to-endpoint for tanh_sinh rules.  The library default
 * derives it from min_value(), which is 0 for variable-precision MPFR and
 * breaks the rule's initialization, so supply one scaled to the precision. */
inline Real min_complement() {
    Real m(1);
    unsigned d = Real::default_precision();
    for (unsigned i = 0; i < 2 * d + 20; ++i) m /= 10;
    return m;
}

} // namespace pcf

#endif
