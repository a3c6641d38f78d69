#include "pcf/rational_poly.hpp"
#include <algorithm>
#include <stdexcept>

namespace pcf {

Rational RationalPoly::operator()(const Rational& v) const
{
    Rational r(0);
    for (size_t i = c.size(); i-- > 0;) r = r * v + c[i];
    return r;
}

Real RationalPoly::eval(const Real& v) const
{
    Real r(0);
    for (size_t i = c.size(); i-- > 0;)
        r = r * v + Real(c[i]);
    return r;
}

RationalPoly RationalPoly::derivative() const
{
    RationalPoly d;
    for (size_t i = 1; i < c.size(); ++i) d.c.push_back(Rational(i) * c[i]);
    d.trim();
    return d;
}

RationalPoly RationalPoly::antiderivative() const
{
    RationalPoly a;
    a.c.push_back(0);
    for (size_t i = 0; i < c.size(); ++i) a.c.push_back(c[i] / Rational(i + 1));
    a.trim();
    return a;
}

Rational RationalPoly::integrate(const Rational& a, const Rational& b) const
{
    RationalPoly F = antiderivative();
    return F(b) - F(a);
}

RationalPoly operator+(const RationalPoly& a, const RationalPoly& b)
{
    RationalPoly r;
    r.c.resize(std::max(a.c.size(), b.c.size()), Rational(0));
    for (size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) r.c[i] += b.c[i];
    r.trim();
    return r;
}

RationalPoly operator-(const RationalPoly& a, const RationalPoly& b)
{
    RationalPoly r;
    r.c.resize(std::max(a.c.size(), b.c.size()), Rational(0));
    for (size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) r.c[i] -= b.c[i];
    r.trim();
    return r;
}

RationalPoly operator*(const RationalPoly& a, const RationalPoly& b)
{
    if (a.is_zero() || b.is_zero()) return RationalPoly();
    RationalPoly r;
    r.c.resize(a.c.size() + b.c.size() - 1, Rational(0));
    for (size_t i = 0; i < a.c.size(); ++i)
        for (size_t j = 0; j < b.c.size(); ++j)
            r.c[i + j] += a.c[i] * b.c[j];
    r.trim();
    return r;
}

RationalPoly operator*(const Rational& s, const RationalPoly& p)
{
    RationalPoly r = p;
    for (auto& x : r.c) x *= s;
    r.trim();
    return r;
}

bool operator==(const RationalPoly& a, const RationalPoly& b) { return a.c == b.c; }

/* ---- root isolation: Sturm sequences over the rationals ---- */

static RationalPoly poly_rem(RationalPoly a, const RationalPoly& b)
{
    /* remainder of a / b */
    while (a.degree() >= b.degree() && !a.is_zero()) {
        Rational q = a.c.back() / b.c.back();
        int shift = a.degree() - b.degree();
        for (int i = 0; i <= b.degree(); ++i)
            a.c[i + shift] -= q * b.c[i];
        a.c.pop_back();
        a.trim();
    }
    return a;
}

static std::vector<RationalPoly> sturm_chain(const RationalPoly& p)
{
    std::vector<RationalPoly> s;
    s.push_back(p);
    s.push_back(p.derivative());
    while (!s.back().is_zero() && s.back().degree() > 0) {
        RationalPoly r = poly_rem(s[s.size() - 2], s.back());
        if (r.is_zero()) break;
        for (auto& x : r.c) x = -x;
        s.push_back(r);
    }
    return s;
}

static int sign_changes(const std::vector<RationalPoly>& chain, const Rational& x)
{
    int changes = 0, last = 0;
    for (const auto& p : chain) {
        Rational v = p(x);
        int s = v == 0 ? 0 : (v > 0 ? 1 : -1);
        if (s != 0) {
            if (last != 0 && s != last) ++changes;
            last = s;
        }
    }
    return changes;
}

/* square-free part: p / gcd(p, p') */
static RationalPoly square_free(const RationalPoly& p)
{
    RationalPoly a = p, b = p.derivative();
    /* Euclid for gcd */
    while (!b.is_zero() && b.degree() >= 0) {
        RationalPoly r = poly_rem(a, b);
        a = b;
        b = r;
        if (b.is_zero()) break;
    }
    if (a.degree() <= 0) return p;
    /* divide p by gcd a (exact) */
    RationalPoly q;
    RationalPoly rem = p;
    q.c.assign(p.c.size() - a.c.size() + 1, Rational(0));
    while (rem.degree() >= a.degree() && !rem.is_zero()) {
        Rational f = rem.c.back() / a.c.back();
        int shift = rem.degree() - a.degree();
        q.c[shift] = f;
        for (int i = 0; i <= a.degree(); ++i)
            rem.c[i + shift] -= f * a.c[i];
        rem.trim();
    }
    q.trim();
    return q.is_zero() ? p : q;
}

std::vector<Real> poly_real_roots(const RationalPoly& p,
                                  const Rational& lo, const Rational& hi,
                                  const PrecisionContext& ctx)
{
    ScopedPrecision guard(ctx);
    std::vector<Real> roots;
    if (p.is_zero() || p.degree() == 0) return roots;

    RationalPoly sf = square_free(p);
    auto chain = sturm_chain(sf);
    auto count = [&](const Rational& a, const Rational& b) {
        return sign_changes(chain, a) - sign_changes(chain, b);
    };

    /* endpoints that are themselves roots: Sturm counts roots in (a, b];
     * nudge the interval so that exact endpoint roots are captured. */
    Rational width = hi - lo;
    Rational eps = width / 1000000;
    Rational a = lo - (sf(lo) == 0 ? eps : Rational(0));
    Rational b = hi;

    struct Seg { Rational a, b; int n; };
    std::vector<Seg> stack{{a, b, count(a, b)}};
    std::vector<std::pair<Rational, Rational>> isolated;
    while (!stack.empty()) {
        Seg s = stack.back();
        stack.pop_back();
        if (s.n == 0) continue;
        if (s.n == 1 && sf(s.a) != 0) {
            isolated.push_back({s.a, s.b});
            continue;
        }
        Rational m = (s.a + s.b) / 2;
        if (sf(m) == 0) {
            /* midpoint is a root: peel it off with a tiny interval */
            Rational d = (s.b - s.a) / 1024;
            isolated.push_back({m - d, m + d});
            int nl = count(s.a, m - d), nr = count(m + d, s.b);
            if (nl) stack.push_back({s.a, m - d, nl});
            if (nr) stack.push_back({m + d, s.b, nr});
            continue;
        }
        int nl = count(s.a, m);
        if (nl) stack.push_back({s.a, m, nl});
        if (s.n - nl) stack.push_back({m, s.b, s.n - nl});
    }

    /* refine each isolating interval: rational bisection, then Newton */
    RationalPoly d = sf.derivative();
    Real tol = Real(1);
    for (unsigned i = 0; i < ctx.digits; ++i) tol /= 10;
    for (auto& iv : isolated) {
        Rational ra = iv.first, rb = iv.second;
        int sa = sf(ra) > 0 ? 1 : -1;
        for (int it = 0; it < 40 && rb - ra > 0; ++it) {
            Rational m = (ra + rb) / 2;
            Rational v = sf(m);
            if (v == 0) { ra = rb = m; break; }
            if ((v > 0 ? 1 : -1) == sa) ra = m; else rb = m;
        }
        Real x = (Real(ra) +
                  Real(rb)) / 2;
        Real xa = Real(ra);
        Real xb = Real(rb);
        for (int it = 0; it < 200; ++it) {
            Real fv = sf.eval(x), dv = d.eval(x);
            if (dv == 0) break;
            Real step = fv / dv;
            Real xn = x - step;
            if (xn < xa || xn > xb) xn = (xa + xb) / 2;  /* safeguard */
            if (sf.eval(xn) == 0) { x = xn; break; }
            if ((sf.eval(xn) > 0 ? 1 : -1) == sa) xa = xn; else xb = xn;
            if (abs(xn - x) < tol * fmax(Real(1), abs(xn))) { x = xn; break; }
            x = xn;
        }
        roots.push_back(x);
    }
    std::sort(roots.begin(), roots.end());
    /* clamp tiny excursions outside [lo, hi] from the endpoint nudge */
    Real rlo = Real(lo);
    Real rhi = Real(hi);
    std::vector<Real> out;
    for (auto& r : roots) {
        Real x = r;
        if (x < rlo) x = rlo;
        if (x > rhi) x = rhi;
        if (out.empty() || abs(out.back() - x) > tol * 100) out.push_back(x);
    }
    return out;
}

Real poly_variation(const RationalPoly& p,
                    const Rational& lo, const Rational& hi,
                    const PrecisionContext& ctx)
{
    ScopedPrecision guard(ctx);
    if (lo > hi) throw std::invalid_argument("poly_variation: lo > hi");
    if (p.degree() <= 0 || lo == hi) return Real(0);
    std::vector<Real> cuts = poly_real_roots(p.derivative(), lo, hi, ctx);
    std::vector<Real> pts;
    pts.push_back(Real(lo));
    for (auto& r : cuts)
        if (r > pts.back()) pts.push_back(r);
    Real rhi = Real(hi);
    if (rhi > pts.back()) pts.push_back(rhi);
    Real v(0);
    for (size_t i = 0; i + 1 < pts.size(); ++i)
        v += abs(p.eval(pts[i + 1]) - p.eval(pts[i]));
    return v;
}

Real poly_variation(const RationalPoly& p,
                    const Real& lo0_, const Real& hi0_,
                    const PrecisionContext& ctx)
{
    ScopedPrecision guard(ctx);
    Real lo = pinned(lo0_), hi = pinned(hi0_);
    if (lo > hi) throw std::invalid_argument("poly_variation: lo > hi");
    if (p.degree() <= 0 || lo == hi) return Real(0);
    /* isolate critical points over a rational enclosure, then partition
     * with the given (possibly irrational) endpoints */
    Rational rlo(floor(lo).convert_to<long long>() - 1);
    Rational rhi(ceil(hi).convert_to<long long>() + 1);
    std::vector<Real> cuts = poly_real_roots(p.derivative(), rlo, rhi, ctx);
    std::vector<Real> pts;
    pts.push_back(lo);
    for (auto& r : cuts)
        if (r > pts.back() && r < hi) pts.push_back(r);
    pts.push_back(hi);
    Real v(0);
    for (size_t i = 0; i + 1 < pts.size(); ++i)
        v += abs(p.eval(pts[i + 1]) - p.eval(pts[i]));
    return v;
}

} // namespace pcf
