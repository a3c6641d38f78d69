/* Command-line front end: evaluate U(a,z) and the asymptotic expansions,
 * compute remainder bounds and ratios, reproduce the published ratio
 * tables and figure data, and emit text, CSV or JSON reports.
 *
 * Exit codes: 0 success, 1 check failure, 2 invalid parameters,
 * 3 numeric failure.
 */
#include "pcf/oracle.hpp"
#include "pcf/poincare.hpp"
#include "pcf/uniform.hpp"
#include "pcf/integral_method.hpp"
#include "pcf/tables.hpp"
#include <CLI11.hpp>
#include <json.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace pcf;
using nlohmann::json;

namespace {

struct Options {
    unsigned digits = 40;
    std::string format = "text";
    std::string out;
    std::string method;
    std::string bound_mode = "piecewise";
    double a = 0, z = 0, t = 0, theta = 0;   /* theta in units of pi */
    bool has_z = false, has_t = false;
    unsigned n = 3;
    bool with_oracle = false;
    bool check = false;
    int which = 0;
};

std::ostream& open_out(const Options& opt, std::ofstream& file)
{
    if (opt.out.empty()) return std::cout;
    file.open(opt.out);
    if (!file) throw std::invalid_argument("cannot open output file " + opt.out);
    return file;
}

std::string fmt(const Real& x, unsigned digits) { return x.str(digits); }

std::string fmtc(const Complex& x, unsigned digits)
{
    std::string s = x.re.str(digits);
    if (x.im != 0) s += " + " + x.im.str(digits) + "i";
    return s;
}

/* ---- eval ---- */

int cmd_eval(const Options& opt)
{
    PrecisionContext ctx(opt.digits);
    ScopedPrecision guard(ctx);
    json rep;
    rep["method"] = opt.method;
    rep["digits"] = opt.digits;
    json& par = rep["params"];
    par["a"] = opt.a;
    unsigned d = opt.digits > 20 ? 20 : opt.digits;
    std::ostringstream text;

    if (opt.method == "oracle") {
        if (!opt.has_z) throw std::invalid_argument("oracle: --z required");
        par["z"] = opt.z;
        Scaled u = u_ref(Real(opt.a), Real(opt.z), ctx);
        rep["value"] = {{"mantissa", fmtc(u.v, d)}, {"logscale", fmt(u.logscale, d)}};
        text << "U(" << opt.a << ", " << opt.z << ") = " << fmtc(u.v, d)
             << " * exp(" << fmt(u.logscale, d) << ")\n";
    } else if (opt.method == "poincare") {
        if (!opt.has_z) throw std::invalid_argument("poincare: --z required");
        par["z"] = opt.z;
        par["theta"] = opt.theta;
        par["n"] = opt.n;
        BoundMode mode = opt.bound_mode == "2f1" ? BoundMode::hyp2f1
                                                 : BoundMode::piecewise;
        Complex z = polar(Real(opt.z), Real(opt.theta) * pi_v());
        PoincareReport pr = remainder_bound(Real(opt.a), z, opt.n, mode, true, ctx);
        rep["value"] = {{"mantissa", fmt(pr.partial.re, d) + (pr.partial.im == 0
                             ? std::string() : " + " + fmt(pr.partial.im, d) + "i")},
                        {"logscale", fmt(pr.prefactor_log, d)}};
        rep["bound"] = fmt(pr.bound, d);
        rep["exact_remainder"] = fmt(pr.exact_remainder, d);
        rep["ratio"] = fmt(pr.ratio, d);
        rep["region"] = region_name(pr.region);
        text << "partial = " << fmt(pr.partial.re, d);
        if (pr.partial.im != 0) text << " + " << fmt(pr.partial.im, d) << "i";
        text << " * exp(" << fmt(pr.prefactor_log, d) << ")\n"
             << "region  = " << region_name(pr.region) << "\n"
             << "bound   = " << fmt(pr.bound, 6) << "\n"
             << "|eps_n| = " << fmt(pr.exact_remainder, 6) << "\n"
             << "rho     = " << fmt(pr.ratio, 4) << "\n";
    } else if (opt.method == "uniform-pos" || opt.method == "uniform-negz" ||
               opt.method == "uniform-nega") {
        if (!opt.has_t) throw std::invalid_argument(opt.method + ": --t required");
        par["t"] = opt.t;
        par["n"] = opt.n;
        CoeffTable ct = gen_coeffs(opt.n);
        UniformReport ur;
        if (opt.method == "uniform-pos")
            ur = eval_pos_z(Real(opt.a), Real(opt.t), opt.n, ct, opt.with_oracle, ctx);
        else if (opt.method == "uniform-negz")
            ur = eval_neg_z(Real(opt.a), Real(opt.t), opt.n, ct, opt.with_oracle, ctx);
        else
            ur = eval_neg_a(Real(opt.a), Real(opt.t), opt.n, ct, opt.with_oracle, ctx);
        rep["value"] = {{"mantissa", fmt(ur.partial, d)},
                        {"logscale", fmt(ur.prefactor_log, d)}};
        rep["bound"] = fmt(ur.bound, d);
        text << "partial = " << fmt(ur.partial, d) << "\n"
             << "bound   = " << fmt(ur.bound, 6) << "\n";
        if (opt.with_oracle) {
            rep["exact"] = fmt(ur.exact, d);
            rep["exact_remainder"] = fmt(ur.remainder, d);
            rep["ratio"] = fmt(ur.ratio, d);
            text << "exact   = " << fmt(ur.exact, d) << "\n"
                 << "|R_n|   = " << fmt(ur.remainder, 6) << "\n"
                 << "rho     = " << fmt(ur.ratio, 4) << "\n";
        }
    } else if (opt.method == "ibp") {
        if (!opt.has_z) throw std::invalid_argument("ibp: --z required");
        par["z"] = opt.z;
        par["n"] = opt.n;
        Real a(opt.a), z(opt.z);
        Real lambda = a / (z * z);
        SaddleData sd = saddle(lambda, ctx);
        CauchyConfig cfg{choose_sigma0(sd, ctx), 32};
        Scaled val = expansion_ibp(a, z, opt.n, cfg, ctx);
        WeightConfig wc;
        WeightBound wb = weight_bound(a, z, opt.n, cfg, wc, ctx);
        Real lb = cauchy_line_bound(a, z, std::min(opt.n, 3u), cfg.sigma0, ctx);
        rep["value"] = {{"mantissa", fmtc(val.v, d)}, {"logscale", fmt(val.logscale, d)}};
        rep["bound"] = fmt(wb.bound, d);
        rep["line_bound"] = fmt(lb, d);
        text << "partial = " << fmtc(val.v, d)
             << " * exp(" << fmt(val.logscale, d) << ")\n"
             << "weight bound |R_n| <= " << fmt(wb.bound, 6) << "\n"
             << "line bound   |R_n| <= " << fmt(lb, 6) << "\n";
        if (opt.with_oracle) {
            Real rn = remainder_oracle_ibp(a, z, opt.n, cfg, ctx);
            rep["exact_remainder"] = fmt(rn, d);
            rep["ratio"] = fmt(abs(rn) / wb.bound, d);
            text << "R_n     = " << fmt(rn, d) << "\n"
                 << "rho     = " << fmt(abs(rn) / wb.bound, 4) << "\n";
        }
    } else {
        throw std::invalid_argument("unknown method " + opt.method);
    }

    std::ofstream file;
    std::ostream& os = open_out(opt, file);
    if (opt.format == "json") os << rep.dump(2) << "\n";
    else os << text.str();
    return 0;
}

/* ---- table ---- */

int cmd_table(const Options& opt)
{
    PrecisionContext ctx(opt.digits);
    const TableSpec& spec = expected_table(opt.which);
    auto got = compute_table(opt.which, ctx);

    std::ofstream file;
    std::ostream& os = open_out(opt, file);
    if (opt.format == "json") {
        json rep;
        rep["table"] = opt.which;
        rep["digits"] = opt.digits;
        rep["rows"] = spec.row_labels;
        rep["cols"] = spec.col_labels;
        json cells = json::array();
        for (auto& row : got) {
            json r = json::array();
            for (auto& v : row) r.push_back(fmt(v, 6));
            cells.push_back(r);
        }
        rep["values"] = cells;
        if (opt.check) {
            TableCheck chk = check_table(opt.which, got);
            rep["check"] = {{"pass", chk.pass}, {"mismatches", chk.mismatches},
                            {"max_err", chk.max_err}};
            os << rep.dump(2) << "\n";
            return chk.pass ? 0 : 1;
        }
        os << rep.dump(2) << "\n";
        return 0;
    }

    const char* sep = opt.format == "csv" ? "," : "  ";
    os << (opt.format == "csv" ? "row" : "        ");
    for (auto& c : spec.col_labels) os << sep << c;
    os << "\n";
    for (size_t i = 0; i < got.size(); ++i) {
        os << spec.row_labels[i];
        for (auto& v : got[i]) os << sep << fmt(v, 5);
        os << "\n";
    }
    if (opt.check) {
        TableCheck chk = check_table(opt.which, got);
        if (chk.pass) {
            os << "check: PASS (max err " << chk.max_err << " <= " << spec.tol
               << ")\n";
            return 0;
        }
        os << "check: FAIL (" << chk.mismatches << " mismatches, max err "
           << chk.max_err << " > " << spec.tol << ", first at row "
           << chk.bad_row << " col " << chk.bad_col << ")\n";
        return 1;
    }
    return 0;
}

/* ---- regions ---- */

int cmd_regions(const Options& opt)
{
    PrecisionContext ctx(opt.digits);
    ScopedPrecision guard(ctx);
    Real a(opt.a);
    Real kappa = abs(a);
    Real pi = pi_v();
    std::ofstream file;
    std::ostream& os = open_out(opt, file);
    os << "curve,z_re,z_im,w_re,w_im\n";
    auto emit = [&](const char* name, const Complex& z) {
        Complex w = sqrt(Real(2) * z);
        os << name << "," << fmt(z.re, 8) << "," << fmt(z.im, 8) << ","
           << fmt(w.re, 8) << "," << fmt(w.im, 8) << "\n";
    };
    /* arc PQ: |z| = 2 kappa from P = 2 kappa to Q = -sqrt(3) kappa + i kappa */
    for (int j = 0; j <= 64; ++j)
        emit("arcPQ", polar(2 * kappa, pi * Real(5 * j) / (6 * 64)));
    /* segment QS on Im z = kappa, from Q to S = i kappa */
    for (int j = 0; j <= 32; ++j)
        emit("segQS", Complex(-sqrt(Real(3)) * kappa * (1 - Real(j) / 32), kappa));
    /* arc ST: |z| = kappa from S = i kappa to T = -kappa */
    for (int j = 0; j <= 32; ++j)
        emit("arcST", polar(kappa, pi / 2 + pi * Real(j) / (2 * 32)));
    /* R1 boundary Re z = kappa */
    for (int j = 0; j <= 32; ++j)
        emit("lineReKappa", Complex(kappa, 3 * kappa * Real(j) / 32));
    /* R4 strip edges Im z = +-kappa, |z| >= 2 kappa */
    for (int j = 0; j <= 32; ++j) {
        Real x = sqrt(Real(3)) * kappa * (1 + Real(j) / 16);
        emit("stripTop", Complex(x, kappa));
        emit("stripBottom", Complex(x, -kappa));
    }
    /* sample-grid classification */
    os << "point,z_re,z_im,region\n";
    for (int i = -6; i <= 6; ++i)
        for (int j = -6; j <= 6; ++j) {
            Complex z(kappa * Real(i) / 2, kappa * Real(j) / 2);
            os << "grid," << fmt(z.re, 6) << "," << fmt(z.im, 6) << ","
               << region_name(classify_region(a, z)) << "\n";
        }
    return 0;
}

/* ---- figdata ---- */

int cmd_figdata(const Options& opt)
{
    PrecisionContext ctx(opt.digits);
    ScopedPrecision guard(ctx);
    std::ofstream file;
    std::ostream& os = open_out(opt, file);

    if (opt.which == 2) {
        CoeffTable ct = gen_coeffs(3);
        os << "tau,phi1,phi2,phi3\n";
        for (int j = 0; j <= 200; ++j) {
            Real tau = -1 + Real(j) / 200;
            os << fmt(tau, 6);
            for (int s = 1; s <= 3; ++s) os << "," << fmt(ct.phi[s].eval(tau), 8);
            os << "\n";
        }
        return 0;
    }
    if (opt.which == 3) {
        CoeffTable ct = gen_coeffs(3);
        /* variation over [-1,-1/2], the constant offset of the neg-z curves */
        Real off[4];
        for (int s = 1; s <= 3; ++s)
            off[s] = poly_variation(ct.phi[s], Rational(-1), Rational(-1, 2), ctx);
        os << "tau";
        for (int s = 1; s <= 3; ++s)
            os << ",phi" << s << ",var_pos" << s << ",maj_pos" << s
               << ",var_neg" << s << ",maj_neg" << s;
        os << "\n";
        for (int j = 0; j <= 100; ++j) {
            Real tau = Real(-1) / 2 + Real(j) / 200;
            os << fmt(tau, 6);
            for (int s = 1; s <= 3; ++s) {
                Real vp = variation_phi(s, tau, Branch::pos_z, ct, ctx);
                Real mp = variation_majorant(s, tau);
                os << "," << fmt(ct.phi[s].eval(tau), 8) << "," << fmt(vp, 8)
                   << "," << fmt(mp, 8) << "," << fmt(vp + off[s], 8) << ","
                   << fmt(mp + off[s], 8);
            }
            os << "\n";
        }
        return 0;
    }
    if (opt.which == 4) {
        /* (1+5L)[|f1|+M1] and rho1(L) at z = 10, a = L z^2 */
        Real z(10);
        WeightConfig wc;
        os << "lambda,scaled_bound_factor,rho1\n";
        for (int j = 0; j <= 60; ++j) {
            Real lam = Real(j) / 4;
            Real a = lam * z * z;
            SaddleData sd = saddle(lam, ctx);
            CauchyConfig cfg{choose_sigma0(sd, ctx), 32};
            WeightBound wb = weight_bound(a, z, 1, cfg, wc, ctx);
            Real r1 = remainder_oracle_ibp(a, z, 1, cfg, ctx);
            os << fmt(lam, 6) << ","
               << fmt((1 + 5 * lam) * (abs(Real(wb.fn_lambda)) + wb.M), 8) << ","
               << fmt(abs(r1) / wb.bound, 6) << "\n";
        }
        return 0;
    }
    throw std::invalid_argument("figdata: which must be 2, 3 or 4");
}

/* ---- coeffs ---- */

int cmd_coeffs(const Options& opt)
{
    CoeffTable ct = gen_coeffs(opt.n);
    std::ofstream file;
    std::ostream& os = open_out(opt, file);
    auto dump = [&](const char* name, const std::vector<RationalPoly>& v) {
        for (size_t s = 0; s < v.size(); ++s) {
            os << name << s << ":";
            for (auto& c : v[s].c) os << " " << c;
            os << "\n";
        }
    };
    dump("phi", ct.phi);
    dump("psi", ct.psi);
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    Options opt;
    CLI::App app{"Parabolic cylinder functions: asymptotic expansions with "
                 "computable error bounds"};
    app.require_subcommand(1);

    auto add_common = [&](CLI::App* c) {
        c->add_option("--digits", opt.digits, "working decimal digits")
            ->check(CLI::Range(30u, 1000u));
        c->add_option("--format", opt.format, "text|csv|json")
            ->check(CLI::IsMember({"text", "csv", "json"}));
        c->add_option("--out", opt.out, "output file (default stdout)");
    };

    CLI::App* ev = app.add_subcommand("eval", "evaluate one point");
    ev->add_option("--method", opt.method,
                   "oracle|poincare|uniform-pos|uniform-negz|uniform-nega|ibp")
        ->required();
    ev->add_option("--a", opt.a, "parameter a (magnitude for uniform methods)")
        ->required();
    ev->add_option("--z", opt.z)->each([&](const std::string&) { opt.has_z = true; });
    ev->add_option("--t", opt.t)->each([&](const std::string&) { opt.has_t = true; });
    ev->add_option("--theta", opt.theta, "phase of z in units of pi (poincare)");
    ev->add_option("--n", opt.n, "number of terms");
    ev->add_option("--bound-mode", opt.bound_mode, "piecewise|2f1 (poincare)")
        ->check(CLI::IsMember({"piecewise", "2f1"}));
    ev->add_flag("--oracle", opt.with_oracle, "also compute the exact remainder");
    add_common(ev);

    CLI::App* tb = app.add_subcommand("table", "reproduce a published table");
    tb->add_option("which", opt.which, "table number 1..5")
        ->required()
        ->check(CLI::Range(1, 5));
    tb->add_flag("--check", opt.check, "compare against embedded expected values");
    add_common(tb);

    CLI::App* rg = app.add_subcommand("regions", "region boundaries and classification");
    rg->add_option("--a", opt.a, "parameter a (kappa = |a|)")->required();
    add_common(rg);

    CLI::App* fg = app.add_subcommand("figdata", "figure curve data");
    fg->add_option("which", opt.which, "figure number 2..4")
        ->required()
        ->check(CLI::Range(2, 4));
    add_common(fg);

    CLI::App* cf = app.add_subcommand("coeffs", "exact coefficient polynomials");
    cf->add_option("--n", opt.n, "highest index");
    add_common(cf);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (ev->parsed()) return cmd_eval(opt);
        if (tb->parsed()) return cmd_table(opt);
        if (rg->parsed()) return cmd_regions(opt);
        if (fg->parsed()) return cmd_figdata(opt);
        if (cf->parsed()) return cmd_coeffs(opt);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "numeric failure: " << e.what() << "\n";
        return 3;
    }
    return 2;
}
