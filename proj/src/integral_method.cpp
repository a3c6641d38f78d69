#include "pcf/integral_method.hpp"
#include "pcf/uniform.hpp"
#include "pcf/oracle.hpp"
#include "pcf/special.hpp"
#include "pcf/quadrature.hpp"
#include <stdexcept>
#include <algorithm>

namespace pcf {

/* ---- real mapping machinery ---- */

/* phi(w) = w + w^2/2 - L ln|w| on either real branch */
static Real phi_real(const Real& w, const Real& lam)
{
    return w + w * w / 2 - lam * log(abs(Real(w)));
}

/* target side g(s) = s - L ln|s| + A */
static Real g_real(const Real& s, const Real& lam, const Real& A)
{
    return s - lam * log(abs(Real(s))) + A;
}

/* safeguarded Newton for F(x) = 0 on a bracket with F(lo), F(hi) of
 * opposite sign; F monotone on the bracket in all uses here */
template <class F, class DF>
static Real newton_bracket(F f, DF df, Real lo, Real hi, const PrecisionContext& ctx)
{
    Real flo = f(lo), fhi = f(hi);
    if (flo == 0) return lo;
    if (fhi == 0) return hi;
    if ((flo > 0) == (fhi > 0))
        throw std::runtime_error("newton_bracket: no sign change");
    Real x = (lo + hi) / 2;
    Real tol = Real(1);
    for (unsigned i = 0; i < ctx.digits + 4; ++i) tol /= 10;
    for (int it = 0; it < 400; ++it) {
        Real fx = f(x);
        if (fx == 0) break;
        if ((fx > 0) == (fhi > 0)) hi = x; else lo = x;
        Real d = df(x);
        Real xn = d != 0 ? x - fx / d : (lo + hi) / 2;
        if (!(xn > lo) || !(xn < hi)) xn = (lo + hi) / 2;
        if (abs(xn - x) < tol * fmax(Real(1), abs(xn))) { x = xn; break; }
        x = xn;
    }
    return x;
}

SaddleData saddle(const Real& lambda0_, const PrecisionContext& ctx)
{
    ScopedPrecision guard(ctx);
    Real lam = pinned(lambda0_);
    if (lam < 0) throw std::domain_error("saddle: lambda < 0");
    SaddleData sd;
    sd.lambda = lam;
    sd.w0 = (sqrt(1 + 4 * lam) - 1) / 2;
    sd.w_minus = -1 - sd.w0;
    if (lam == 0) {
        sd.A = Real(0);
        sd.s_minus = Real(-0.5);
        return sd;
    }
    sd.A = sd.w0 * sd.w0 / 2 + sd.w0 - lam * log(sd.w0) - lam + lam * log(lam);
    /* s_minus solves s - L ln(-s) + A = phi(w_minus); the left side is
     * increasing on s < 0, from -inf up to +inf as s -> 0- */
    Real target = phi_real(sd.w_minus, lam);
    auto K = [&](const Real& s) { return g_real(s, lam, sd.A) - target; };
    auto dK = [&](const Real& s) { return 1 - lam / s; };
    Real hi = -lam * (Real("0.2785") + Real("0.4356") / sqrt(lam)) / 2 - Real("0.01");
    while (K(hi) < 0) hi /= 2;          /* push toward 0- until positive */
    Real lo = hi;
    while (K(lo) > 0) lo *= 2;          /* push toward -inf until negative */
    sd.s_minus = newton_bracket(K, dK, lo, hi, ctx);
    return sd;
}

Real map_s_of_w(const Real& w0_, const SaddleData& sd, const PrecisionContext& ctx)
{
    ScopedPrecision guard(ctx);
    Real w = pinned(w0_);
    Real lam = sd.lambda;
    if (!(w > sd.w_minus)) throw std::domain_error("map_s_of_w: w <= w_minus");
    if (lam == 0) return w * w / 2 + w;
    if (w == 0) return Real(0);
    if (w == sd.w0) return lam;
    Real T = phi_real(w, lam);
    auto F = [&](const Real& s) { return g_real(s, lam, sd.A) - T; };
    auto dF = [&](const Real& s) { return 1 - lam / s; };
    Real tiny = Real(1);
    for (unsigned i = 0; i < 2 * ctx.digits; ++i) tiny /= 10;
    if (w > sd.w0) {
        /* s > lambda, g increasing there */
        Real hi = lam + 1;
        while (F(hi) < 0) hi = lam + 2 * (hi - lam);
        return newton_bracket(F, dF, Real(lam), hi, ctx);
    }
    if (w > 0) {
        /* 0 < s < lambda, g decreasing: F(s->0+) = +inf, F(lam) <= 0 */
        Real lo = lam;
        for (int i = 0; i < 100000 && !(F(lo) > 0); ++i) lo /= 2;
        return newton_bracket(F, dF, lo, Real(lam), ctx);
    }
    /* w in (w_minus, 0): s in (s_minus, 0), g increasing */
    Real lo = sd.s_minus * (1 - tiny);
    Real hi = -tiny;
    while (!(F(hi) > 0)) hi /= 2;
    return newton_bracket(F, dF, lo, hi, ctx);
}

Real map_w_of_s(const Real& s0_, const SaddleData& sd, const PrecisionContext& ctx)
{
    ScopedPrecision guard(ctx);
    Real s = pinned(s0_);
    Real lam = sd.lambda;
    if (!(s > sd.s_minus)) throw std::domain_error("map_w_of_s: s <= s_minus");
    if (lam == 0) return -1 + sqrt(1 + 2 * s);
    if (s == 0) return Real(0);
    if (s == lam) return sd.w0;
    Real T = g_real(s, lam, sd.A);
    auto F = [&](const Real& w) { return phi_real(w, lam) - T; };
    auto dF = [&](const Real& w) { return (w * w + w - lam) / w; };
    Real tiny = Real(1);
    for (unsigned i = 0; i < 2 * ctx.digits; ++i) tiny /= 10;
    if (s > lam) {
        Real hi = sd.w0 + 1;
        while (F(hi) < 0) hi = sd.w0 + 2 * (hi - sd.w0);
        return newton_bracket(F, dF, Real(sd.w0), hi, ctx);
    }
    if (s > 0) {
        Real lo = sd.w0;
        for (int i = 0; i < 100000 && !(F(lo) > 0); ++i) lo /= 2;
        return newton_bracket(F, dF, lo, Real(sd.w0), ctx);
    }
    /* s < 0: w in (w_minus, 0), phi increasing there */
    Real lo = sd.w_minus * (1 - tiny);
    Real hi = -tiny;
    while (!(F(hi) > 0)) hi /= 2;
    return newton_bracket(F, dF, lo, hi, ctx);
}

static bool newton_complex(const Complex& s, const Real& lam, const Real& A,
                           Complex& w, const PrecisionContext& ctx)
{
    /* H(w) = phi(w) - s + L Log s - A, H'(w) = (w^2+w-L)/w.  For
     * Re s < 0 both s and w approach the negative real axis, so use
     * logarithms of -s and -w there: the i pi L terms cancel and the
     * branch cut moves to the positive axis, away from the iterates */
    bool neg = s.re < 0;
    Complex rhs = s - lam * log(neg ? -s : s) + Complex(A);
    Real tol = Real(1);
    for (unsigned i = 0; i < ctx.digits + 6; ++i) tol /= 10;
    Complex x = w;
    for (int it = 0; it < 100; ++it) {
        Complex H = x + (x * x) / Real(2) - lam * log(neg ? -x : x) - rhs;
        Complex dH = (x * x + x - Complex(lam)) / x;
        Complex step = H / dH;
        /* damp large steps to stay on the continuation branch */
        Real m = abs(step), cap = fmax(abs(x) / 2, Real("0.05"));
        bool damped = m > cap;
        if (damped) step = step * (cap / m);
        x = x - step;
        if (!damped && abs(step) < tol * fmax(Real(1), abs(x))) {
            w = x;
            return true;
        }
    }
    return false;
}

/* continuation along the segment from s_from (root w) to s_to, bisecting
 * the step whenever Newton loses the branch */
static Complex trace_w(const Complex& s_from, const Complex& w_from,
                       const Complex& s_to, const Real& lam, const Real& A,
                       int depth, const PrecisionContext& ctx)
{
    Complex w = w_from;
    /* accept only roots near the seed: Newton can converge to a root on
     * another branch when the step in s is large */
    if (newton_complex(s_to, lam, A, w, ctx) &&
        abs(w - w_from) < (abs(w_from) + 1) / 4)
        return w;
    if (depth <= 0)
        throw std::runtime_error("map_w_of_s: complex Newton not converged");
    Complex mid = (s_from + s_to) / Real(2);
    Complex wm = trace_w(s_from, w_from, mid, lam, A, depth - 1, ctx);
    return trace_w(mid, wm, s_to, lam, A, depth - 1, ctx);
}

Complex map_w_of_s(const Complex& s0_, const SaddleData& sd, const Complex& seed,
                   const PrecisionContext& ctx)
{
    ScopedPrecision guard(ctx);
    Complex s = pinned(s0_);
    Real lam = sd.lambda;
    if (lam == 0)
        return sqrt(Complex(Real(1)) + Real(2) * s) - Complex(Real(1));
    Complex w = seed;
    if (newton_complex(s, lam, sd.A, w, ctx) &&
        abs(w - seed) < (abs(seed) + 1) / 4)
        return w;
    /* seed corresponds to a nearby s: bisect toward it.  The seed's own
     * s-value is unknown here, so walk from the real axis anchor instead */
    Complex s_anchor(abs(s) + sd.lambda + 1);
    Complex w_anchor(map_w_of_s(s_anchor.re, sd, ctx));
    return trace_w(s_anchor, w_anchor, s, lam, sd.A, 40, ctx);
}

/* ---- f(s) ---- */

static Complex f_formula(const Complex& s, const Complex& w, const Real& lam)
{
    Complex num = sqrt(w / s) * (s - Complex(lam));
    Complex den = w * w + w - Complex(lam);
    return pow(Real(1) + 4 * lam, Real(0.25)) * num / den;
}

/* f on a small circle around lambda averages to f at the center region;
 * used for the removable singularity at s = lambda */
static Real f_near_lambda(const Real& s, const SaddleData& sd,
                          const PrecisionContext& ctx)
{
    Real lam = sd.lambda;
    Real r = fmax(Real(1), lam) / 10;          /* inside |s_minus| >= 1/2 */
    unsigned N = 24 + 2 * ctx.digits;          /* trapezoid nodes, upper half */
    Complex sum(Real(0));
    Real pi = pi_v();
    /* f(sigma)/(sigma - s) integrated over the circle; conjugate symmetry */
    Complex sprev(lam + r);
    Complex wprev = Complex(map_w_of_s(lam + r, sd, ctx));
    for (unsigned j = 0; j <= N; ++j) {
        Real th = pi * Real((int)j) / Real((int)N);
        Complex sig = Complex(lam) + polar(r, th);
        Complex w = trace_w(sprev, wprev, sig, lam, sd.A, 40, ctx);
        sprev = sig;
        wprev = w;
        Complex g = f_formula(sig, w, lam) * polar(r, th) / (sig - Complex(s));
        Real wt = (j == 0 || j == N) ? Real(0.5) : Real(1);
        sum += wt * g;
    }
    /* (1/2 pi i) * i dtheta sum * 2 (conjugate halves) -> real part / N */
    return sum.re / Real((int)N);
}

Real f_map(const Real& s0_, const SaddleData& sd, const PrecisionContext& ctx)
{
    ScopedPrecision guard(ctx);
    Real s = pinned(s0_);
    Real lam = sd.lambda;
    if (!(s > sd.s_minus)) throw std::domain_error("f_map: s <= s_minus");
    if (lam == 0) {
        /* closed form sqrt((1+sqrt(1+2s))/(2(1+2s))) */
        Real r = sqrt(1 + 2 * s);
        return sqrt((1 + r) / (2 * (1 + 2 * s)));
    }
    if (s == lam) return Real(1);
    if (abs(s - lam) < fmax(Real(1), lam) / 1000)
        return f_near_lambda(s, sd, ctx);
    if (s == 0) {
        /* w ~ (s w0/L) e^{(w0^2/2+w0-L)/L + ...}: use the limit via a small
         * positive s instead; f(0) is finite */
        Real eps = Real(1);
        for (unsigned i = 0; i < ctx.digits / 2; ++i) eps /= 10;
        s = eps * fmax(Real(1), lam);
    }
    Real w = map_w_of_s(s, sd, ctx);
    return f_formula(Complex(s), Complex(w), lam).re;
}

Complex f_map(const Complex& s, const SaddleData& sd, const Complex& wseed,
              const PrecisionContext& ctx)
{
    Complex w = map_w_of_s(s, sd, wseed, ctx);
    return f_formula(s, w, sd.lambda);
}

/* ---- exact rational kernels ---- */

void TriPoly::add_term(unsigned i, unsigned j, unsigned k, const Rational& v)
{
    auto key = std::array<unsigned, 3>{i, j, k};
    auto it = c.find(key);
    if (it == c.end()) { if (v != 0) c[key] = v; return; }
    it->second += v;
    if (it->second == 0) c.erase(it);
}

TriPoly TriPoly::dsigma() const
{
    TriPoly r;
    for (auto& [e, v] : c)
        if (e[0] > 0) r.add_term(e[0] - 1, e[1], e[2], Rational(e[0]) * v);
    return r;
}

TriPoly TriPoly::times_sigma() const
{
    TriPoly r;
    for (auto& [e, v] : c) r.add_term(e[0] + 1, e[1], e[2], v);
    return r;
}

TriPoly TriPoly::times_p() const
{
    TriPoly r;
    for (auto& [e, v] : c) {
        r.add_term(e[0] + 1, e[1], e[2], v);
        r.add_term(e[0], e[1], e[2] + 1, -v);
    }
    return r;
}

TriPoly TriPoly::times_q() const
{
    TriPoly r;
    for (auto& [e, v] : c) {
        r.add_term(e[0] + 1, e[1], e[2], v);
        r.add_term(e[0], e[1] + 1, e[2], -v);
    }
    return r;
}

bool TriPoly::divide_q(TriPoly& quot) const
{
    /* long division by (sigma - lambda) in the variable sigma */
    TriPoly rem = *this, q;
    while (!rem.c.empty()) {
        /* highest sigma-degree term */
        unsigned dmax = 0;
        for (auto& [e, v] : rem.c) dmax = std::max(dmax, e[0]);
        if (dmax == 0) return false;       /* nonzero remainder */
        TriPoly lead;
        for (auto& [e, v] : rem.c)
            if (e[0] == dmax) lead.add_term(dmax - 1, e[1], e[2], v);
        for (auto& [e, v] : lead.c) q.add_term(e[0], e[1], e[2], v);
        TriPoly sub = lead.times_q();
        for (auto& [e, v] : sub.c) rem.add_term(e[0], e[1], e[2], -v);
    }
    quot = q;
    return true;
}

Complex TriPoly::eval(const Complex& sigma, const Real& lambda, const Complex& s) const
{
    /* power caches */
    unsigned mi = 0, mj = 0, mk = 0;
    for (auto& [e, v] : c) {
        mi = std::max(mi, e[0]); mj = std::max(mj, e[1]); mk = std::max(mk, e[2]);
    }
    std::vector<Complex> ps(mi + 1), pk(mk + 1);
    std::vector<Real> pl(mj + 1);
    ps[0] = Complex(Real(1)); pk[0] = Complex(Real(1)); pl[0] = Real(1);
    for (unsigned i = 1; i <= mi; ++i) ps[i] = ps[i - 1] * sigma;
    for (unsigned j = 1; j <= mj; ++j) pl[j] = pl[j - 1] * lambda;
    for (unsigned k = 1; k <= mk; ++k) pk[k] = pk[k - 1] * s;
    Complex acc(Real(0));
    for (auto& [e, v] : c)
        acc += Real(v) * (ps[e[0]] * pl[e[1]] * pk[e[2]]);
    return acc;
}

TriPoly operator+(const TriPoly& a, const TriPoly& b)
{
    TriPoly r = a;
    for (auto& [e, v] : b.c) r.add_term(e[0], e[1], e[2], v);
    return r;
}

TriPoly operator*(const Rational& x, const TriPoly& a)
{
    TriPoly r;
    if (x == 0) return r;
    for (auto& [e, v] : a.c) r.c[e] = x * v;
    return r;
}

bool operator==(const TriPoly& a, const TriPoly& b) { return a.c == b.c; }

CauchyKernel cauchy_kernel(unsigned n)
{
    CauchyKernel ker;
    ker.num.add_term(0, 0, 0, Rational(1));
    ker.qexp = 0;
    ker.pexp = 1;
    for (unsigned m = 1; m <= n; ++m) {
        /* Q = N/(q^e p^f):
         * dQ/dsigma = [N' q p - N (e p + f q)]/(q^{e+1} p^{f+1})
         * Q_next = -[N q p + 2 sigma (N' q p - N (e p + f q))]/(2 q^{e+2} p^{f+1}) */
        const TriPoly& N = ker.num;
        TriPoly Np = N.dsigma();
        TriPoly inner = Np.times_q().times_p()
                      + Rational(-(long)ker.qexp) * N.times_p()
                      + Rational(-(long)ker.pexp) * N.times_q();
        TriPoly next = Rational(-1, 2) * (N.times_q().times_p()
                                          + Rational(2) * inner.times_sigma());
        ker.qexp += 2;
        ker.pexp += 1;
        /* cancel common factors of q */
        TriPoly quot;
        while (ker.qexp > 0 && next.divide_q(quot)) {
            next = quot;
            --ker.qexp;
        }
        ker.num = next;
    }
    return ker;
}

/* ---- contour machinery ---- */

Real choose_sigma0(const SaddleData& sd, const PrecisionContext& ctx)
{
    ScopedPrecision guard(ctx);
    return fmax(Real("0.3"), abs(Real(sd.s_minus)) / 2);
}

Contour build_contour(const SaddleData& sd, const Real& s_right,
                      const Real& sigma0, unsigned N, const PrecisionContext& ctx)
{
    ScopedPrecision guard(ctx);
    if (!(sigma0 > 0) || !(sigma0 < abs(Real(sd.s_minus))))
        throw std::domain_error("build_contour: sigma0 outside (0, |s_minus|)");
    if (N % 2) ++N;
    Contour con;
    con.center = (pinned(s_right) - pinned(sigma0)) / 2;
    con.radius = (pinned(s_right) + pinned(sigma0)) / 2;
    con.N = N;
    Real pi = pi_v();
    /* continuation around the upper half circle; start on the positive
     * real axis where the real solver provides the branch */
    Complex sprev(con.center + con.radius);
    Complex wprev = sd.lambda == 0 ? Complex()
                                   : Complex(map_w_of_s(sprev.re, sd, ctx));
    for (unsigned j = 0; j <= N / 2; ++j) {
        Real th = 2 * pi * Real((int)j) / Real((int)N);
        Complex sig = Complex(con.center) + polar(con.radius, th);
        con.sigma.push_back(sig);
        if (sd.lambda == 0) {
            con.fval.push_back(f_formula(sig, sqrt(Complex(Real(1)) + Real(2) * sig)
                                                  - Complex(Real(1)), Real(0)));
            continue;
        }
        /* theta = pi lands on the negative real axis: use the real branch */
        Complex w = (j == N / 2) ? Complex(map_w_of_s(sig.re, sd, ctx))
                                 : trace_w(sprev, wprev, sig, sd.lambda, sd.A, 40, ctx);
        sprev = sig;
        wprev = w;
        con.fval.push_back(f_formula(sig, w, sd.lambda));
    }
    return con;
}

Real f_n_on_contour(const CauchyKernel& ker, const Contour& con,
                    const Real& lambda, const Real& s, const PrecisionContext& ctx)
{
    ScopedPrecision guard(ctx);
    /* (1/2 pi i) sum f(sigma) Q_n(sigma) dsigma, dsigma = i r e^{i th} dth;
     * conjugate-symmetric, so twice the real part of the upper half */
    Complex acc(Real(0));
    unsigned half = con.N / 2;
    for (unsigned j = 0; j <= half; ++j) {
        const Complex& sig = con.sigma[j];
        Complex rad = sig - Complex(con.center);
        Complex num = ker.num.eval(sig, lambda, Complex(s));
        Complex q = sig - Complex(lambda), p = sig - Complex(s);
        Complex den(Real(1));
        for (unsigned i = 0; i < ker.qexp; ++i) den *= q;
        for (unsigned i = 0; i < ker.pexp; ++i) den *= p;
        Complex g = con.fval[j] * num / den * rad;
        Real wt = (j == 0 || j == half) ? Real(0.5) : Real(1);
        acc += wt * g;
    }
    return 2 * acc.re / Real((int)con.N);
}

Real f_n(const Real& s0_, const Real& lambda0_, unsigned n,
         const CauchyConfig& cfg, const PrecisionContext& ctx)
{
    ScopedPrecision guard(ctx);
    Real s = pinned(s0_), lambda = pinned(lambda0_);
    if (s < 0) throw std::domain_error("f_n: s < 0");
    SaddleData sd = saddle(lambda, ctx);
    if (n == 0) return f_map(s, sd, ctx);
    CauchyKernel ker = cauchy_kernel(n);
    Real s_right = Real("1.5") * fmax(s, lambda) + 1;
    Real tol = Real("1e5");
    for (unsigned i = 0; i < ctx.digits; ++i) tol /= 10;   /* 10^(5-digits) */
    Real prev(0);
    bool have_prev = false;
    for (unsigned N = cfg.nodes; N <= (1u << 16); N *= 2) {
        Contour con = build_contour(sd, s_right, cfg.sigma0, N, ctx);
        Real val = f_n_on_contour(ker, con, lambda, s, ctx);
        if (have_prev && abs(val - prev) <= tol * fmax(Real(1), abs(Real(val))))
            return val;
        prev = val;
        have_prev = true;
    }
    throw std::runtime_error("f_n: contour integral not stabilized");
}

/* ---- coefficients and expansion ---- */

Real coeff_bridge(unsigned k, const Real& lambda0_, const PrecisionContext& ctx)
{
    ScopedPrecision guard(ctx);
    Real lambda = pinned(lambda0_);
    SaddleData sd = saddle(lambda, ctx);
    CauchyConfig cfg{choose_sigma0(sd, ctx), 32};
    Real fk = f_n(lambda, lambda, k, cfg, ctx);
    CoeffTable ct = gen_coeffs(k);
    Real tau = (1 / sqrt(4 * lambda + 1) - 1) / 2;
    Real lhs = ct.phi[k].eval(tau);
    Real sign = (k % 2) ? Real(-1) : Real(1);
    return abs(lhs - sign * pow(2 * lambda, Real((int)k)) * fk);
}

Scaled expansion_ibp(const Real& a0_, const Real& z0_, unsigned n,
                     const CauchyConfig& cfg, const PrecisionContext& ctx)
{
    ScopedPrecision guard(ctx);
    Real a = pinned(a0_), z = pinned(z0_);
    if (a < 0 || !(z > 0))
        throw std::domain_error("expansion_ibp: need a >= 0, z > 0");
    Real lambda = a / (z * z);
    SaddleData sd = saddle(lambda, ctx);
    Real z2 = z * z;
    Real sum(0), zp(1);
    for (unsigned k = 0; k < n; ++k) {
        Real fk = k == 0 ? Real(1) : f_n(lambda, lambda, k, cfg, ctx);
        sum += fk / zp;
        zp *= z2;
    }
    Real ls = -z2 / 4 - sd.A * z2 - (a + Real(0.5)) * log(z)
              - log(1 + 4 * lambda) / 4;
    return {Complex(sum), ls};
}

Real remainder_oracle_ibp(const Real& a0_, const Real& z0_, unsigned n,
                          const CauchyConfig& cfg, const PrecisionContext& ctx)
{
    ScopedPrecision guard(ctx);
    Real a = pinned(a0_), z = pinned(z0_);
    Scaled part = expansion_ibp(a, z, n, cfg, ctx);
    Scaled u = u_quadrature(a, Complex(z), ctx);
    Real factor = u.v.re * exp(u.logscale - part.logscale);
    return pow(z, Real(2 * (int)n)) * (factor - part.v.re);
}

Real remainder_exact_ibp(const Real& a0_, const Real& z0_, unsigned n,
                         const CauchyConfig& cfg, const PrecisionContext& ctx)
{
    ScopedPrecision guard(ctx);
    Real a = pinned(a0_), z = pinned(z0_);
    if (!(a + Real(0.5) > 0) || !(z > 0))
        throw std::domain_error("remainder_exact_ibp: need a > -1/2, z > 0");
    Real lambda = a / (z * z);
    SaddleData sd = saddle(lambda, ctx);
    Real z2 = z * z;
    Real ln10 = log(Real(10));
    Real drop = (ctx.digits + 20) * ln10;

    /* dominant factor s^(a-1/2) e^(-z^2 s): peak and cutoff */
    Real nu = a - Real(0.5);
    auto lm = [&](const Real& s) { return nu * log(s) - z2 * s; };
    Real speak = nu > 0 ? nu / z2 : Real(0);
    Real Es = speak > 0 ? lm(speak) : Real(0);
    Real L = fmax(speak, lambda) + 1 / z2;
    while (lm(L) > Es - drop) L = 2 * L;

    /* one shared contour covering every s in [0, L] */
    Real s_right = Real("1.5") * L + 1;
    CauchyKernel ker = cauchy_kernel(n);
    Real tol = Real("1e5");
    for (unsigned i = 0; i < ctx.digits; ++i) tol /= 10;

    Real prev(0);
    bool have_prev = false;
    for (unsigned N = std::max(128u, cfg.nodes); N <= (1u << 17); N *= 2) {
        Contour con = build_contour(sd, s_right, cfg.sigma0, N, ctx);
        auto fn = [&](const Real& s) -> Complex {
            if (s <= 0 || lm(s) - Es < -drop) return Complex(Real(0));
            Real v = n == 0 ? f_map(s, sd, ctx)
                            : f_n_on_contour(ker, con, lambda, s, ctx);
            return Complex(exp(lm(s) - Es) * v);
        };
        std::vector<Real> brk{Real(0)};
        if (speak > 0) brk.push_back(speak);
        brk.push_back(L);
        Complex total(Real(0));
        for (size_t i = 0; i + 1 < brk.size(); ++i)
            total += quad_finite(fn, brk[i], brk[i + 1], ctx).value;
        Real pref = exp((2 * a + 1) * log(z) - lgamma(a + Real(0.5)) + Es);
        Real val = pref * total.re;
        if (have_prev && abs(val - prev) <= tol * fmax(Real(1), abs(Real(val))))
            return val;
        prev = val;
        have_prev = true;
    }
    throw std::runtime_error("remainder_exact_ibp: contour not stabilized");
}

/* ---- bounds ---- */

Real weight_S(const Real& a0_, const Real& z0_, const Real& sigma_n,
              const PrecisionContext& ctx)
{
    ScopedPrecision guard(ctx);
    Real a = pinned(a0_), z = pinned(z0_), sn = pinned(sigma_n);
    Real z2 = z * z;
    Real lam = a / z2;
    Real ls = lam * sn;
    if (!(z2 > sn) || !(a + Real(0.5) > ls))
        throw std::domain_error("weight_S: conditions z^2 > sigma_n, a+1/2 > lambda sigma_n");
    Real t1 = ls == 0 ? Real(0) : ls * (log(a) - 1);
    Real t2 = (ls - a - Real(0.5)) * log(1 - sn / z2);
    Real t3 = lgamma(a + Real(0.5) - ls) - lgamma(a + Real(0.5));
    return exp(t1 + t2 + t3);
}

WeightBound weight_bound(const Real& a0_, const Real& z0_, unsigned n,
                         const CauchyConfig& cfg, const WeightConfig& wcfg,
                         const PrecisionContext& ctx)
{
    ScopedPrecision guard(ctx);
    Real a = pinned(a0_), z = pinned(z0_);
    Real lambda = a / (z * z);
    SaddleData sd = saddle(lambda, ctx);
    CauchyKernel ker = cauchy_kernel(n);
    Real sn = pinned(wcfg.sigma_n);

    /* sup over s >= 0 of |f_n(s)|/w_n(s,lambda) via a log-spaced scan with
     * golden-section refinement around the best grid point */
    Real s_hi = 10 * fmax(Real(1), lambda) + 20;
    Real s_right = Real("1.5") * s_hi + 1;
    /* contour nodes: double until f_n(lambda) is stable.  A bound only
     * needs a handful of digits, so a fixed loose tolerance is enough */
    Real ntol("1e-10");
    Contour con2 = build_contour(sd, s_right, cfg.sigma0,
                                 std::max(256u, cfg.nodes), ctx);
    Real fn_lam = n == 0 ? Real(1) : f_n_on_contour(ker, con2, lambda, lambda, ctx);
    for (unsigned N = 2 * con2.N; n > 0 && N <= (1u << 16); N *= 2) {
        Contour next = build_contour(sd, s_right, cfg.sigma0, N, ctx);
        Real v = f_n_on_contour(ker, next, lambda, lambda, ctx);
        bool done = abs(v - fn_lam) <= ntol * fmax(Real(1), abs(Real(v)));
        con2 = next;
        fn_lam = v;
        if (done) break;
    }

    auto ratio = [&](const Real& s) -> Real {
        Real v = n == 0 ? f_map(s, sd, ctx)
                        : f_n_on_contour(ker, con2, lambda, s, ctx);
        Real lw = sn * (s - lambda);
        if (lambda > 0 && s > 0) lw -= sn * lambda * log(s / lambda);
        else if (lambda > 0 && s == 0) return Real(0);   /* w_n -> inf */
        return abs(Real(v)) * exp(-lw);
    };

    const int M = 200;
    Real lo = Real(1) / 1000000, best_s = lambda > 0 ? lambda : Real(1);
    Real best(-1);
    for (int i = 0; i <= M; ++i) {
        Real s = lo * pow(s_hi / lo, Real(i) / M);
        Real r = ratio(s);
        if (r > best) { best = r; best_s = s; }
    }
    {
        Real rr = ratio(Real(0));
        if (rr > best) { best = rr; best_s = Real(0); }
    }
    /* golden-section refinement on the bracketing grid cells */
    Real gl = best_s / pow(s_hi / lo, Real(1) / M);
    Real gh = best_s * pow(s_hi / lo, Real(1) / M);
    Real phi = (sqrt(Real(5)) - 1) / 2;
    Real x1 = gh - phi * (gh - gl), x2 = gl + phi * (gh - gl);
    Real f1 = ratio(x1), f2 = ratio(x2);
    for (int it = 0; it < 40 && gh - gl > gl * Real("1e-8"); ++it) {
        if (f1 < f2) {
            gl = x1; x1 = x2; f1 = f2;
            x2 = gl + phi * (gh - gl); f2 = ratio(x2);
        } else {
            gh = x2; x2 = x1; f2 = f1;
            x1 = gh - phi * (gh - gl); f1 = ratio(x1);
        }
    }
    best = fmax(best, fmax(f1, f2));

    WeightBound wb;
    wb.fn_lambda = fn_lam;
    wb.M = fmax(Real(0), best - abs(Real(fn_lam)));
    wb.S = weight_S(a, z, sn, ctx);
    wb.bound = (abs(Real(fn_lam)) + wb.M) * wb.S;
    return wb;
}

Real cauchy_line_bound(const Real& a0_, const Real& z0_, unsigned n,
                       const Real& sigma0_, const PrecisionContext& ctx)
{
    ScopedPrecision guard(ctx);
    Real a = pinned(a0_), z = pinned(z0_), s0 = pinned(sigma0_);
    if (n < 1 || n > 3)
        throw std::invalid_argument("cauchy_line_bound: n must be 1, 2 or 3");
    Real lambda = a / (z * z);
    SaddleData sd = saddle(lambda, ctx);
    if (!(s0 > 0) || !(s0 < abs(Real(sd.s_minus))))
        throw std::domain_error("cauchy_line_bound: sigma0 outside (0, |s_minus|)");

    /* M = max |f| on Re sigma = -sigma0; numerically the maximum sits at
     * sigma = -sigma0, confirmed against a scan of the upper half line */
    Real M = abs(Real(f_map(-s0, sd, ctx)));
    Real tau_hi = 10 * (s0 + lambda + 1);
    Complex sprev(-s0, Real(0));
    Complex wprev(map_w_of_s(-s0, sd, ctx));
    for (int i = 1; i <= 100; ++i) {
        Complex sig(-s0, tau_hi * Real(i) / 100);
        Complex f;
        if (sd.lambda == 0) {
            f = f_formula(sig, sqrt(Complex(Real(1)) + Real(2) * sig)
                                   - Complex(Real(1)), Real(0));
        } else {
            Complex w = trace_w(sprev, wprev, sig, sd.lambda, sd.A, 40, ctx);
            sprev = sig;
            wprev = w;
            f = f_formula(sig, w, sd.lambda);
        }
        M = fmax(M, abs(f));
    }

    Real pi = pi_v();
    Real L = lambda;
    switch (n) {
    case 1:
        return M * (4 * L + 3 * pi * s0) / (4 * pi * s0 * s0);
    case 2:
        return M * (9 * L * L + 11 * pi * L * s0 + 26 * s0 * s0)
               / (16 * pi * pow(s0, Real(4)));
    default:
        return M * (768 * L * L * L + 549 * pi * L * L * s0
                    + 1376 * L * s0 * s0 + 243 * pi * pow(s0, Real(3)))
               / (96 * pi * pow(s0, Real(6)));
    }
}

} // namespace pcf
