#include "taulab/checks.hpp"
#include "taulab/heights.hpp"

namespace taulab {

namespace {

std::string bstr(const BigFloat& x) { return x.str(12); }
double bres(const BigFloat& x) { return x.convert_to<double>(); }

void close_check(Comparisons& c, const BigFloat& lhs, const BigFloat& rhs, double tol,
                 const std::string& what) {
    c.expect_close(bstr(lhs), bstr(rhs), bres(rel_residual(lhs, rhs)), tol, what);
}

void close_check_c(Comparisons& c, const Cplx& lhs, const Cplx& rhs, double tol,
                   const std::string& what) {
    BigFloat scale = std::max(lhs.abs(), rhs.abs());
    BigFloat res = scale == 0 ? BigFloat(0) : (lhs - rhs).abs() / scale;
    c.expect_close(bstr(lhs.re) + "+" + bstr(lhs.im) + "i",
                   bstr(rhs.re) + "+" + bstr(rhs.im) + "i", bres(res), tol, what);
}

CheckResult theta_basics(const CheckContext& ctx) {
    Comparisons c("heights.theta_basics");
    Rng rng = ctx.rng();
    double tol = ctx.tolerance();
    ThetaParams tp = ThetaParams::make(BigFloat(rng.real_in(0.15, 0.45)), 50);
    for (int probe = 0; probe < std::max(10, ctx.trials); ++probe) {
        BigFloat u(rng.real_in(-2.0, 2.0));
        BigFloat h = theta_eval(ThetaKind::H, u, tp);
        // oddness and the half-period relations
        close_check(c, theta_eval(ThetaKind::H, -u, tp), -h, tol, "H odd");
        close_check(c, theta_eval(ThetaKind::H, u + 2 * tp.K1, tp), -h, tol, "H(u+2K1)");
        close_check(c, theta_eval(ThetaKind::H1, u, tp),
                    theta_eval(ThetaKind::H, u + tp.K1, tp), tol, "H1 shift");
        close_check(c, theta_eval(ThetaKind::Theta1, u, tp),
                    theta_eval(ThetaKind::Theta, u + tp.K1, tp), tol, "Theta1 shift");
        // quasi-periodicity along the imaginary period:
        //   H(u + 2 i K2) = -q^{-1} exp(-i pi u / K1) H(u)
        Cplx shifted = theta_eval_c(ThetaKind::H, Cplx(u, 2 * tp.K2), tp);
        Cplx phase = cplx_exp(Cplx(BigFloat(0), -bf_pi() * u / tp.K1));
        Cplx expect = phase * Cplx(-h / tp.q);
        close_check_c(c, shifted, expect, tol, "H imaginary quasi-period");
    }
    // zero lattice: u_mn = 2m K1 + 2 i n K2
    BigFloat scale = abs(theta_eval(ThetaKind::H, tp.K1 / 3, tp));
    c.expect_close(bstr(theta_eval(ThetaKind::H, BigFloat(0), tp)), "0",
                   bres(abs(theta_eval(ThetaKind::H, BigFloat(0), tp)) / scale), tol, "H(0)");
    Cplx z = theta_eval_c(ThetaKind::H, Cplx(2 * tp.K1, 2 * tp.K2), tp);
    c.expect_close(bstr(z.abs()), "0", bres(z.abs() / scale), 1e-20, "H(2K1 + 2iK2)");
    // Theta zero at 2m K1 + 2i(n + 1/2) K2
    Cplx zt = theta_eval_c(ThetaKind::Theta, Cplx(BigFloat(0), tp.K2), tp);
    BigFloat tscale = abs(theta_eval(ThetaKind::Theta, tp.K1 / 3, tp));
    c.expect_close(bstr(zt.abs()), "0", bres(zt.abs() / tscale), 1e-20, "Theta(iK2)");
    return c.finish();
}

CheckResult bsos_routes(const CheckContext& ctx) {
    Comparisons c("heights.bsos_routes");
    Rng rng = ctx.rng();
    double tol = ctx.tolerance();
    for (int N = 1; N <= 4; ++N) {
        BsosParams par = sample_bsos(rng, N);
        BigFloat bf = bsos_dwpf(N, par, HeightMethod::BruteForce);
        BigFloat ps = bsos_dwpf(N, par, HeightMethod::PermutationSum);
        close_check(c, bf, ps, tol, "N=" + std::to_string(N));
        if (N == 1) {
            BigFloat w = par.bracket(par.zeta - (par.u[0] - par.v[0])) / par.bracket(par.zeta);
            close_check(c, bf, w, tol, "N=1 is W^0_{C,+}");
        }
        // the OpenMP kernel reduces branch partials in a fixed order, so it is
        // deterministic across thread counts; against the serial left fold the
        // grouping differs, leaving only last-bit rounding noise
        close_check(c, bsos_bruteforce(N, par), bsos_bruteforce_serial(N, par), 1e-58,
                    "parallel vs serial N=" + std::to_string(N));
        c.expect_true(bsos_bruteforce(N, par) == bsos_bruteforce(N, par),
                      "parallel deterministic N=" + std::to_string(N));
    }
    return c.finish();
}

CheckResult bsos_recursion(const CheckContext& ctx) {
    Comparisons c("heights.bsos_recursion");
    Rng rng = ctx.rng();
    double tol = ctx.tolerance();
    for (int N = 2; N <= 4; ++N) {
        BsosParams par = sample_bsos(rng, N);
        BigFloat lhs = bsos_dwpf(N, par, HeightMethod::BruteForce);
        BigFloat rhs = bsos_recursion_rhs(N, par);
        close_check(c, lhs, rhs, tol, "N=" + std::to_string(N));
    }
    return c.finish();
}

CheckResult ps_trig_routes(const CheckContext& ctx) {
    Comparisons c("heights.ps_trig_routes");
    Rng rng = ctx.rng();
    double tol = ctx.tolerance();
    for (int N = 1; N <= 4; ++N) {
        PsTrigParams par = sample_ps_trig(rng, N);
        BigFloat bf = ps_trig_dwpf(N, par, HeightMethod::BruteForce);
        BigFloat prod = ps_trig_dwpf(N, par, HeightMethod::Product);
        close_check(c, bf, prod, tol, "N=" + std::to_string(N));
        if (N == 1)
            close_check(c, bf, exp(par.eta * (par.u[0] - par.v[0])), tol, "N=1 value");
    }
    // colour conservation: the full-colour sum at N=2 equals the two-colour one
    PsTrigParams p2 = sample_ps_trig(rng, 2);
    close_check(c, ps_trig_bruteforce_full_colours(2, p2), ps_trig_bruteforce_serial(2, p2),
                tol, "full-colour N=2");
    return c.finish();
}

CheckResult ps_trig_relations(const CheckContext& ctx) {
    Comparisons c("heights.ps_trig_relations");
    Rng rng = ctx.rng();
    double tol = ctx.tolerance();
    for (int N = 2; N <= 4; ++N) {
        // recursion at u_1 = v_1 + 1
        PsTrigParams par = sample_ps_trig(rng, N);
        par.u[0] = par.v[0] + 1;
        close_check(c, ps_trig_dwpf(N, par, HeightMethod::BruteForce),
                    ps_trig_recursion_rhs(N, par), tol, "PS.3 N=" + std::to_string(N));
        // recursion at u_N = v_1
        PsTrigParams par2 = sample_ps_trig(rng, N);
        par2.u[N - 1] = par2.v[0];
        close_check(c, ps_trig_dwpf(N, par2, HeightMethod::BruteForce),
                    ps_trig_recursion2_rhs(N, par2), tol, "PS.tt N=" + std::to_string(N));
        // line permutation (cyclic shift of the u's)
        PsTrigParams par3 = sample_ps_trig(rng, N);
        close_check(c, ps_trig_dwpf(N, par3, HeightMethod::Product),
                    ps_trig_line_permutation_rhs(N, par3), tol, "PS.1 N=" + std::to_string(N));
    }
    return c.finish();
}

CheckResult ps_elliptic_routes(const CheckContext& ctx) {
    Comparisons c("heights.ps_elliptic_routes");
    Rng rng = ctx.rng();
    double tol = ctx.tolerance();
    for (int N = 1; N <= 4; ++N) {
        PsEllipticParams par = sample_ps_elliptic(rng, N);
        BigFloat bf = ps_elliptic_dwpf(N, par, HeightMethod::BruteForce);
        BigFloat prod = ps_elliptic_dwpf(N, par, HeightMethod::Product);
        close_check(c, bf, prod, tol, "N=" + std::to_string(N));
        if (N == 1) {
            BigFloat w = par.bracket(par.a0 - (par.u[0] - par.v[0])) / par.bracket(par.a0);
            close_check(c, bf, w, tol, "N=1 is W^{a0}_{C,+}");
        }
    }
    return c.finish();
}

CheckResult ps_elliptic_quasiperiodicity(const CheckContext& ctx) {
    Comparisons c("heights.ps_elliptic_quasiperiodicity");
    Rng rng = ctx.rng();
    double tol = ctx.tolerance();
    for (int N = 2; N <= 3; ++N) {
        PsEllipticParams par = sample_ps_elliptic(rng, N);
        BigFloat z = ps_elliptic_dwpf(N, par, HeightMethod::Product);
        // real shift u_1 -> u_1 + 2K1/lambda flips by (-1)^N
        PsEllipticParams sh = par;
        sh.u[0] = par.u[0] + 2 * par.theta.K1 / par.lambda;
        BigFloat lhs = ps_elliptic_dwpf(N, sh, HeightMethod::Product);
        close_check(c, lhs, (N % 2 ? -z : z), tol, "PS.b.8 N=" + std::to_string(N));
        // imaginary shift u_1 -> u_1 + 2iK2/lambda:
        //   (-1/q)^N exp{-i pi lambda (N u_1 - sum v_j - a0) / K1} Z
        Cplx u1(par.u[0], 2 * par.theta.K2 / par.lambda);
        Cplx shifted = ps_elliptic_product_c(N, par, u1);
        BigFloat arg_re = BigFloat(N) * par.u[0] - par.a0;
        for (int j = 0; j < N; ++j) arg_re -= par.v[j];
        Cplx phase = cplx_exp(Cplx(BigFloat(0), -bf_pi() * par.lambda * arg_re /
                                                    par.theta.K1));
        // the shift also adds N * 2iK2/... only u_1 shifts: N u_1 term uses the
        // unshifted base point, matching the displayed prefactor
        BigFloat qfac = pow(-1 / par.theta.q, N);
        Cplx expect = phase * Cplx(qfac * z);
        close_check_c(c, shifted, expect, tol, "PS.b.9 N=" + std::to_string(N));
    }
    return c.finish();
}

CheckResult elliptic_identity(const CheckContext& ctx) {
    Comparisons c("heights.elliptic_identity");
    Rng rng = ctx.rng();
    double tol = ctx.tolerance();
    int points = std::max(5, ctx.trials);
    for (int N = 2; N <= 4; ++N)
        for (int probe = 0; probe < points; ++probe) {
            PsEllipticParams par = sample_ps_elliptic(rng, N);
            EllipticIdentitySides sides = elliptic_identity_sides(N, par);
            c.expect_close(bstr(sides.lhs), bstr(sides.rhs), bres(sides.residual), tol,
                           "N=" + std::to_string(N) + " pt " + std::to_string(probe));
        }
    // the four-term H identity on its own
    for (int probe = 0; probe < points; ++probe) {
        ThetaParams tp = ThetaParams::make(BigFloat(rng.real_in(0.15, 0.45)), 50);
        EllipticIdentitySides s = simple_theta_identity(tp, BigFloat(rng.real_in(0.3, 1.2)),
                                                        BigFloat(rng.real_in(-1.2, -0.3)),
                                                        BigFloat(rng.real_in(0.2, 0.9)),
                                                        BigFloat(rng.real_in(1.3, 2.1)));
        c.expect_close(bstr(s.lhs), bstr(s.rhs), bres(s.residual), tol,
                       "four-term identity pt " + std::to_string(probe));
    }
    // N = 2 case against the four-term identity under the change of variables
    {
        PsEllipticParams par = sample_ps_elliptic(rng, 2);
        EllipticIdentitySides e2 = elliptic_identity_sides(2, par);
        BigFloat a = par.a0, u1 = par.u[0], u2 = par.u[1], v1 = par.v[0], v2 = par.v[1];
        BigFloat su = a / 2 + 1 + (u1 - u2) / 2;
        BigFloat sv = a / 2 + 1 - (u1 - u2) / 2;
        BigFloat sx = -a / 2 - 1 + (u1 + u2) / 2 - v2;
        BigFloat sy = -a / 2 + (u1 + u2) / 2 - v1;
        EllipticIdentitySides s = simple_theta_identity(
            par.theta, par.lambda * su, par.lambda * sv, par.lambda * sx, par.lambda * sy);
        close_check(c, s.lhs, e2.lhs, tol, "substitution lhs");
        close_check(c, s.rhs, e2.rhs, tol, "substitution rhs");
    }
    return c.finish();
}

} // namespace

void register_heights_checks(std::vector<Check>& out) {
    out.push_back({"heights.theta_basics", theta_basics});
    out.push_back({"heights.bsos_routes", bsos_routes});
    out.push_back({"heights.bsos_recursion", bsos_recursion});
    out.push_back({"heights.ps_trig_routes", ps_trig_routes});
    out.push_back({"heights.ps_trig_relations", ps_trig_relations});
    out.push_back({"heights.ps_elliptic_routes", ps_elliptic_routes});
    out.push_back({"heights.ps_elliptic_quasiperiodicity", ps_elliptic_quasiperiodicity});
    out.push_back({"heights.elliptic_identity", elliptic_identity});
}

} // namespace taulab
