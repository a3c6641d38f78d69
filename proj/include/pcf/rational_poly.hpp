/* Dense univariate polynomials with exact rational coefficients,
 * real-root isolation by Sturm sequences, and total variation
 * V(p; [a,b]) = Int_a^b |p'| computed exactly from the critical points.
 */
#ifndef PCF_RATIONAL_POLY_HPP
#define PCF_RATIONAL_POLY_HPP

#include "pcf/precision.hpp"
#include <boost/multiprecision/gmp.hpp>
#include <vector>

namespace pcf {

using Rational = boost::multiprecision::mpq_rational;

class RationalPoly {
public:
    /* coefficients in ascending degree order; normalized (no trailing zeros) */
    std::vector<Rational> c;

    RationalPoly() {}
    RationalPoly(std::initializer_list<Rational> coeffs) : c(coeffs) { trim(); }
    explicit RationalPoly(std::vector<Rational> coeffs) : c(std::move(coeffs)) { trim(); }

    static RationalPoly constant(const Rational& v) { return RationalPoly({v}); }
    static RationalPoly x() { return RationalPoly({0, 1}); }

    bool is_zero() const { return c.empty(); }
    int degree() const { return (int)c.size() - 1; }   /* -1 for zero poly */
    void trim() { while (!c.empty() && c.back() == 0) c.pop_back(); }

    Rational operator()(const Rational& v) const;      /* exact evaluation */
    Real eval(const Real& v) const;                    /* Horner in Real */

    RationalPoly derivative() const;
    RationalPoly antiderivative() const;               /* constant term 0 */
    Rational integrate(const Rational& a, const Rational& b) const;

    friend RationalPoly operator+(const RationalPoly&, const RationalPoly&);
    friend RationalPoly operator-(const RationalPoly&, const RationalPoly&);
    friend RationalPoly operator*(const RationalPoly&, const RationalPoly&);
    friend RationalPoly operator*(const Rational&, const RationalPoly&);
    friend bool operator==(const RationalPoly&, const RationalPoly&);
};

/* All real roots of p in [lo, hi], ascending, refined to ctx.digits. */
std::vector<Real> poly_real_roots(const RationalPoly& p,
                                  const Rational& lo, const Rational& hi,
                                  const PrecisionContext& ctx);

/* Int_lo^hi |p'(x)| dx via the sign partition of p' */
Real poly_variation(const RationalPoly& p,
                    const Rational& lo, const Rational& hi,
                    const PrecisionContext& ctx);

/* same, with irrational endpoints */
Real poly_variation(const RationalPoly& p,
                    const Real& lo, const Real& hi,
                    const PrecisionContext& ctx);

} // namespace pcf

#endif
