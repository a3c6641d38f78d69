/* Integration-by-parts expansion of U(a,z) for z large, uniform in
 * a in [0,inf), from the representation
 *
 *   U(a,z) = e^{-z^2/4-Az^2} z^{-a-1/2} (1+4L)^{-1/4}
 *            [ Sum_{k<n} f_k(L)/z^{2k} + R_n/z^{2n} ],   L = a/z^2,
 *
 * with the saddle-point mapping phi(w) = s - L ln s + A, the functions
 * f_n(s) computed as Cauchy-type contour integrals with the exact
 * rational kernels Q_n(sigma,L,s), the weight-function remainder bound
 * |R_n| <= [|f_n(L)| + M_n(L)] S_n(a,z), and the vertical-line bounds
 * of the Q_n kernels.
 */
#ifndef PCF_INTEGRAL_METHOD_HPP
#define PCF_INTEGRAL_METHOD_HPP

#include "pcf/complex.hpp"
#include "pcf/rational_poly.hpp"
#include <map>
#include <array>
#include <vector>

namespace pcf {

/* saddle points of phi(w) = w + w^2/2 - lambda ln w and the mapping
 * constant A; s_minus is the (negative) image of the negative saddle */
struct SaddleData {
    Real lambda;
    Real w0;        /* (sqrt(1+4L)-1)/2 */
    Real w_minus;   /* -1 - w0 */
    Real s_minus;   /* image of w_minus, < 0 */
    Real A;         /* w0^2/2 + w0 - L ln w0 - L + L ln L; 0 at L = 0 */
};

SaddleData saddle(const Real& lambda, const PrecisionContext& ctx);

/* the transformation w + w^2/2 - L ln w = s - L ln s + A on the real
 * branch w > w_minus, s > s_minus (logarithms of -w, -s when negative) */
Real map_s_of_w(const Real& w, const SaddleData& sd, const PrecisionContext& ctx);
Real map_w_of_s(const Real& s, const SaddleData& sd, const PrecisionContext& ctx);
/* complex inverse, Newton seeded by continuation from `seed` */
Complex map_w_of_s(const Complex& s, const SaddleData& sd, const Complex& seed,
                   const PrecisionContext& ctx);

/* f(s) = (1+4L)^{1/4} sqrt(w/s) (s-L)/(w^2+w-L), f(L) = 1; near s = L the
 * removable singularity is evaluated by a small Cauchy circle */
Real f_map(const Real& s, const SaddleData& sd, const PrecisionContext& ctx);
Complex f_map(const Complex& s, const SaddleData& sd, const Complex& wseed,
              const PrecisionContext& ctx);

/* trivariate polynomial in (sigma, lambda, s) with exact coefficients */
struct TriPoly {
    /* exponents (i,j,k) of sigma^i lambda^j s^k */
    std::map<std::array<unsigned, 3>, Rational> c;

    void add_term(unsigned i, unsigned j, unsigned k, const Rational& v);
    TriPoly dsigma() const;                    /* d/dsigma */
    TriPoly times_sigma() const;
    TriPoly times_p() const;                   /* * (sigma - s) */
    TriPoly times_q() const;                   /* * (sigma - lambda) */
    bool divide_q(TriPoly& quot) const;        /* exact division by sigma - lambda */
    Complex eval(const Complex& sigma, const Real& lambda, const Complex& s) const;
};

TriPoly operator+(const TriPoly& a, const TriPoly& b);
TriPoly operator*(const Rational& r, const TriPoly& a);
bool operator==(const TriPoly& a, const TriPoly& b);

/* Q_n = num / ((sigma-lambda)^qexp (sigma-s)^pexp); Q_0 = 1/(sigma-s),
 * Q_n = -[Q_{n-1} + 2 sigma dQ_{n-1}/dsigma]/(2(sigma-lambda)) */
struct CauchyKernel {
    TriPoly num;
    unsigned qexp = 0, pexp = 1;
};

CauchyKernel cauchy_kernel(unsigned n);

/* circular contour |sigma - center| = radius (center real) with f
 * precomputed at the trapezoid nodes of the upper half circle */
struct Contour {
    Real center, radius;
    unsigned N = 0;                 /* full node count, even */
    std::vector<Complex> sigma;     /* theta_j = 2 pi j / N, j = 0..N/2 */
    std::vector<Complex> fval;      /* f(sigma_j) */
};

struct CauchyConfig {
    Real sigma0;        /* vertical-line abscissa, 0 < sigma0 < |s_minus| */
    unsigned nodes = 32;
};

/* circle through -sigma0 and s_right enclosing lambda and every s used */
Contour build_contour(const SaddleData& sd, const Real& s_right,
                      const Real& sigma0, unsigned N, const PrecisionContext& ctx);

/* (1/2 pi i) contour integral of Q_n(sigma,L,s) f(sigma) */
Real f_n_on_contour(const CauchyKernel& ker, const Contour& con,
                    const Real& lambda, const Real& s, const PrecisionContext& ctx);

/* f_n(s) with automatic contour and node doubling until stabilized */
Real f_n(const Real& s, const Real& lambda, unsigned n,
         const CauchyConfig& cfg, const PrecisionContext& ctx);

/* default sigma0 = max(0.3, |s_minus|/2), always < |s_minus| */
Real choose_sigma0(const SaddleData& sd, const PrecisionContext& ctx);

/* |phi_k(tau~) - (-1)^k (2L)^k f_k(L)|, tau~ = (1/sqrt(4L+1)-1)/2 */
Real coeff_bridge(unsigned k, const Real& lambda, const PrecisionContext& ctx);

/* partial sum of the expansion: mantissa = Sum_{k<n} f_k(L)/z^{2k},
 * logscale = -z^2/4 - A z^2 - (a+1/2) ln z - ln(1+4L)/4 */
Scaled expansion_ibp(const Real& a, const Real& z, unsigned n,
                     const CauchyConfig& cfg, const PrecisionContext& ctx);

/* R_n(a,z) = z^{2a+1}/Gamma(a+1/2) Int_0^inf s^{a-1/2} e^{-z^2 s} f_n(s) ds */
Real remainder_exact_ibp(const Real& a, const Real& z, unsigned n,
                         const CauchyConfig& cfg, const PrecisionContext& ctx);

/* z^{2n} (U_oracle / prefactor - partial sum): independent cross-check */
Real remainder_oracle_ibp(const Real& a, const Real& z, unsigned n,
                          const CauchyConfig& cfg, const PrecisionContext& ctx);

struct WeightConfig {
    Real sigma_n = Real(1);     /* weight exponent of (i17a) */
};

struct WeightBound {
    Real M;          /* M_n(lambda) */
    Real S;          /* S_n(a,z) */
    Real bound;      /* [|f_n(L)| + M_n] S_n */
    Real fn_lambda;  /* f_n(L) */
};

/* S_n(a,z) = a^{Ls} e^{-Ls} (1 - s_n/z^2)^{Ls-a-1/2}
 *            Gamma(a+1/2-Ls)/Gamma(a+1/2),  Ls = lambda sigma_n */
Real weight_S(const Real& a, const Real& z, const Real& sigma_n,
              const PrecisionContext& ctx);

WeightBound weight_bound(const Real& a, const Real& z, unsigned n,
                         const CauchyConfig& cfg, const WeightConfig& wcfg,
                         const PrecisionContext& ctx);

/* |R_n| bounds on the line Re sigma = -sigma0, n in {1,2,3}:
 *   M (4L+3 pi s0)/(4 pi s0^2),
 *   M (9L^2+11 pi L s0+26 s0^2)/(16 pi s0^4),
 *   M (768L^3+549 pi L^2 s0+1376 L s0^2+243 pi s0^3)/(96 pi s0^6),
 * with M = max |f| over the line (numerically attained at s = -sigma0) */
Real cauchy_line_bound(const Real& a, const Real& z, unsigned n,
                       const Real& sigma0, const PrecisionContext& ctx);

} // namespace pcf

#endif
