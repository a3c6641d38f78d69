/* Poincare-type expansions: partial sums, region classification, the
 * chi(n) and 2F1 variation bounds, ratio spot values of Tables 1-2,
 * and the soundness sweep rho <= 1.
 */
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pcf/poincare.hpp"
#include "pcf/oracle.hpp"
#include "pcf/special.hpp"

using namespace pcf;

static double dd(const Real& x) { return x.convert_to<double>(); }

TEST_CASE("series partial sums") {
    PrecisionContext ctx(40);
    ScopedPrecision guard(ctx);
    Real tol("1e-30");
    Real a("0.7");
    Complex z(Real(9), Real(2));
    /* n=1 keeps the prefactor alone: e^{-z^2/4} z^{-a-1/2} */
    Scaled u1 = u_series_partial(a, z, 1, ctx);
    Complex full1 = u1.v * exp(Complex(u1.logscale));
    Complex pref = exp(-z * z / Real(4)
                       - Complex(a + Real("0.5")) * log(z));
    CHECK(abs(full1 - pref) < tol * abs(pref));
    /* first term ratio -(a+1/2)(a+3/2)/(2z^2) */
    Scaled u2 = u_series_partial(a, z, 2, ctx);
    Complex rat = (u2.v - u1.v) / u1.v;
    Complex ref = -Complex(Real((a + Real(0.5)) * (a + Real(1.5))))
                  / (Real(2) * z * z);
    CHECK(abs(rat - ref) < tol);
    /* V series: n=1 is the prefactor; at a=1/2 every further term vanishes */
    Complex zr(Real(9));
    Scaled v1 = v_series_partial(Real("0.5"), zr, 1, ctx);
    Scaled v5 = v_series_partial(Real("0.5"), zr, 5, ctx);
    Complex vfull = v1.v * exp(Complex(v1.logscale));
    Complex vref = sqrt(Real(2) / pi_v())
                   * exp(zr * zr / Real(4) - Complex(Real(0)) * log(zr));
    CHECK(abs(vfull - vref) < tol * abs(vref));
    CHECK(abs(v5.v - v1.v) < tol * abs(v1.v));
}

TEST_CASE("compound expansion") {
    PrecisionContext ctx(40);
    ScopedPrecision guard(ctx);
    Real a("0.5");
    /* conjugate symmetry */
    Complex z = polar(Real(10), Real(3) * pi_v() / 4);
    Scaled p = u_compound(a, z, 6, 6, ctx);
    Scaled q = u_compound(a, conj(z), 6, 6, ctx);
    CHECK(abs(p.v - conj(q.v)) < Real("1e-30") * abs(p.v));
    /* against the oracle at ph z = 3pi/4 */
    Scaled u = u_quadrature(a, z, ctx);
    Real rel = abs(p.v * exp(Complex(p.logscale) - Complex(u.logscale)) - u.v)
               / abs(u.v);
    CHECK(rel < Real("1e-8"));   /* limited by the omitted-term size ~3e-9 */
    /* overlap with the single series at ph z = pi/2 */
    Complex zi = polar(Real(12), pi_v() / 2);
    Scaled s1 = u_series_partial(a, zi, 8, ctx);
    Scaled s2 = u_compound(a, zi, 8, 8, ctx);
    Real rel2 = abs(s1.v * exp(Complex(s1.logscale) - Complex(s2.logscale)) - s2.v)
                / abs(s2.v);
    CHECK(rel2 < Real("1e-12"));
}

TEST_CASE("region classification") {
    Real a("0.5");
    CHECK(classify_region(a, Complex(Real(10))) == RegionLabel::R1);
    CHECK(classify_region(a, Complex(Real(0), Real(10))) == RegionLabel::R2);
    CHECK(classify_region(a, polar(Real(10), pi_v() / 8)) == RegionLabel::R1);
    /* precedence: point in both R1 and R4 classifies as R1 */
    CHECK(classify_region(a, Complex(Real(10), Real("0.2"))) == RegionLabel::R1);
}

TEST_CASE("bound quantities") {
    PrecisionContext ctx(40);
    ScopedPrecision guard(ctx);
    Real tol("1e-34");
    BoundQuantities q = bound_quantities(Real(0), Complex(Real(7)),
                                         RegionLabel::R1, ctx);
    CHECK(abs(q.kappa) < tol);
    CHECK(abs(q.sigma) < tol);
    CHECK(abs(q.alpha - 1) < tol);
    CHECK(abs(q.beta - Real(0.5)) < tol);
    CHECK(abs(q.delta - Real("0.1875")) < tol);
    BoundQuantities q2 = bound_quantities(Real("0.5"), Complex(Real(10)),
                                          RegionLabel::R1, ctx);
    CHECK(abs(q2.sigma - Real("0.05")) < tol);
    CHECK(abs(q2.alpha - Real(20) / 19) < tol);
}

TEST_CASE("variation bounds") {
    PrecisionContext ctx(40);
    ScopedPrecision guard(ctx);
    Real tol("1e-30");
    Real a("0.5");
    CHECK(abs(variation_bound(3, a, Complex(Real(10)), RegionLabel::R1, ctx)
              - Real("0.001")) < tol);
    CHECK(abs(variation_bound(1, a, Complex(Real(0), Real(10)), RegionLabel::R2, ctx)
              - pi_v() / 20) < tol);
    /* R4 with kappa = 0: sigma = 0, v = 1, so the bound is chi(n)|z|^-n */
    CHECK(abs(variation_bound(2, Real(0), Complex(Real(10), Real(0)),
                              RegionLabel::R4, ctx)
              - chi_fn(2, ctx) * Real("0.01")) < tol);
    /* 2F1 variation: theta = phi gives |z|^-n; never exceeds the chi ceiling */
    for (unsigned n : {1u, 4u, 9u}) {
        Real phi = acos(Real("0.05"));
        Complex zphi = polar(Real(10), phi);
        CHECK(abs(variation_2f1(n, a, zphi, ctx) - pow(Real(10), -Real((int)n)))
              < tol);
        for (int j = 0; j <= 8; ++j) {
            Complex z = polar(Real(10), pi_v() * j / 8);
            Real v = variation_2f1(n, a, z, ctx);
            Real ceil = variation_bound(n, a, z, RegionLabel::R2, ctx);
            CHECK(v <= ceil + tol);
        }
    }
}

TEST_CASE("ratio spot values of Tables 1-2") {
    PrecisionContext ctx(40);
    auto spot = [&](double thpi8, unsigned n, BoundMode m) {
        Complex z = polar(Real(10), pi_v() * Real(thpi8) / 8);
        PoincareReport r = remainder_bound(Real("0.5"), z, n, m, true, ctx);
        return dd(r.ratio);
    };
    CHECK(spot(0, 5, BoundMode::piecewise) == doctest::Approx(0.29).epsilon(0.04));
    CHECK(spot(8, 10, BoundMode::piecewise) == doctest::Approx(0.37).epsilon(0.04));
    CHECK(spot(4, 5, BoundMode::hyp2f1) == doctest::Approx(0.38).epsilon(0.04));
    CHECK(spot(6, 15, BoundMode::hyp2f1) == doctest::Approx(0.29).epsilon(0.04));
}

TEST_CASE("soundness sweep: rho <= 1") {
    PrecisionContext ctx(40);
    unsigned checked = 0;
    for (const char* as : {"0", "0.5", "2"}) {
        Real a(as);
        for (int rz : {5, 10, 40}) {
            for (int j = 0; j <= 8; ++j) {
                Complex z = polar(Real(rz), pi_v() * j / 8);
                if (classify_region(a, z) == RegionLabel::Outside) continue;
                Scaled w = whittaker_ref(-a / 2, z, ctx);
                for (unsigned n = 1; n <= 15; ++n) {
                    for (BoundMode m : {BoundMode::piecewise, BoundMode::hyp2f1}) {
                        PoincareReport rep = remainder_bound(a, z, n, m, false, ctx);
                        fill_exact(rep, w);
                        CHECK(dd(rep.ratio) <= 1.0);
                        ++checked;
                    }
                }
            }
        }
    }
    CHECK(checked > 1500);
}

TEST_CASE("path monotonicity conditions of the region extensions") {
    /* F(x,y) = Re(z + a ln z); on the ray y = x tan(phi), dF/dx = (u+x)/x,
     * positive when Re z > max(0, Re(-a)); on a vertical path,
     * dF/dy = (u y - v x0)/(x0^2 + y^2), positive for phases in
     * (alpha, alpha + pi) with alpha = ph a */
    PrecisionContext ctx(40);
    ScopedPrecision guard(ctx);
    struct { double u, v; } as[] = {{0.5, 0}, {2, 0}, {1, 1}, {0.5, -0.3}};
    for (auto& av : as) {
        Real u(av.u), v(av.v);
        Real x0 = fmax(Real(0), -u) + Real("0.1");
        for (const char* phis : {"0.2", "0.7", "1.2"}) {
            Real tanphi = tan(Real(phis));
            /* dF/dx along the ray at 100 points x >= x0 */
            for (int i = 0; i < 100; ++i) {
                Real x = x0 + Real(i) / 10;
                CHECK((u + x) / x > 0);
                /* finite-difference cross-check of dF/dx */
                auto F = [&](const Real& xx) {
                    Real yy = xx * tanphi;
                    return xx + u / 2 * log(xx * xx + yy * yy)
                           - v * atan(yy / xx);
                };
                Real h("1e-12");
                Real fd = (F(x + h) - F(x - h)) / (2 * h);
                CHECK(abs(fd - (u + x) / x * (1 + 0)) <
                      Real("1e-6") * (1 + abs(fd)) + abs(fd) * 0);
            }
        }
        /* vertical path: sign of (u y - v x0) for y large positive */
        if (av.u > 0) {
            for (int i = 1; i <= 100; ++i) {
                Real y = Real(i);
                Real x0v = abs(v) + 1;
                Real d = (u * y - v * x0v) / (x0v * x0v + y * y);
                if (u * y > v * x0v) CHECK(d > 0);
            }
        }
    }
}
