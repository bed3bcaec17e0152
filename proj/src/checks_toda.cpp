#include "taulab/checks.hpp"
#include "taulab/jet.hpp"
#include "taulab/six_vertex.hpp"
#include "taulab/toda.hpp"

namespace taulab {

namespace {

// A_{lam,mu} = det[a_{lam_{d+1-i}+i+m-1, mu_{d+1-l}+l+m-1}], d = s-m, of the
// constant initial-value matrix (0-based local indices)
Rat h99_minor(const TodaFamily& fam, int s, const Partition& lam, const Partition& mu) {
    int d = s - fam.m;
    std::vector<int> ri(d), ci(d);
    for (int i = 1; i <= d; ++i) {
        ri[i - 1] = lam.part(d - i) + i - 1;
        ci[i - 1] = mu.part(d - i) + i - 1;
    }
    return det_exact(fam.A.pick(ri, ci));
}

CheckResult dressing_identity(const CheckContext& ctx) {
    Comparisons c("toda.dressing_identity");
    Rng rng = ctx.rng();
    for (int trial = 0; trial < ctx.trials; ++trial) {
        for (int d = 2; d <= 5; ++d) {
            TodaFamily fam = sample_family(rng, 0, d);
            Mat<Rat> ax = dressed_matrix(fam);
            int n = fam.n, m = fam.m;
            Mat<Rat> winf(d, d, Rat(0)), w0(d, d, Rat(0));
            for (int i = m; i <= n - 1; ++i)
                for (int j = m; j <= n - 1; ++j) {
                    if (i >= j) winf.at(i - m, j - m) = wave_entry(fam, WaveKind::WInf, i - j, i);
                    if (j >= i) w0.at(i - m, j - m) = wave_entry(fam, WaveKind::W0, j - i, i);
                }
            Mat<Rat> prod = mat_mul(winf, ax, Rat(0));
            for (int i = 0; i < d; ++i)
                for (int j = 0; j < d; ++j)
                    c.expect_eq(w0.at(i, j), prod.at(i, j),
                                "d=" + std::to_string(d) + " entry " + std::to_string(i) + "," +
                                    std::to_string(j));
        }
    }
    return c.finish();
}

CheckResult wave_basics(const CheckContext& ctx) {
    Comparisons c("toda.wave_basics");
    Rng rng = ctx.rng();
    for (int trial = 0; trial < ctx.trials; ++trial) {
        TodaFamily fam = sample_family(rng, -1, 3);
        for (int s = fam.m; s <= fam.n - 1; ++s) {
            c.expect_eq(wave_entry(fam, WaveKind::WInf, 0, s), Rat(1), "w_inf_0 = 1");
            if (s > fam.m)
                c.expect_eq(wave_entry(fam, WaveKind::W0, 0, s) *
                                wave_entry(fam, WaveKind::W0Star, 0, s),
                            Rat(1), "w0_0 * w0*_0 = 1");
        }
    }
    return c.finish();
}

CheckResult generating_identities(const CheckContext& ctx) {
    Comparisons c("toda.generating_identities");
    Rng rng = ctx.rng();
    for (int trial = 0; trial < ctx.trials; ++trial) {
        int d = 2 + (int)rng.below(3);
        TodaFamily fam = sample_family(rng, 0, d);
        int m = fam.m, n = fam.n;
        for (int s = m + 1; s <= n - 1; ++s) {
            Rat tau_s = tau_family(fam, s);
            Rat tau_s1 = tau_family(fam, s + 1);
            for (int probe = 0; probe < 5; ++probe) {
                Rat lam = rng.rational();
                Rat g10(0), g5(0), g6(0), g7(0);
                for (int k = 0; k <= s - m; ++k) {
                    g10 += lam.pow(k) * wave_entry(fam, WaveKind::WInf, k, s);
                    g7 += lam.pow(k) * wave_entry(fam, WaveKind::W0Star, k, s);
                }
                for (int k = 0; k <= n - s - 1; ++k) {
                    g5 += lam.pow(k) * wave_entry(fam, WaveKind::W0, k, s);
                    g6 += lam.pow(k) * wave_entry(fam, WaveKind::WInfStar, k, s);
                }
                c.expect_eq(g10 * tau_s, tau_shift_value(fam, s, TimeShift::XMinus, lam), "eq10");
                c.expect_eq(g5 * tau_s, tau_shift_value(fam, s + 1, TimeShift::YMinus, lam), "s5");
                c.expect_eq(g6 * tau_s1, tau_shift_value(fam, s + 1, TimeShift::XPlus, lam), "s6");
                c.expect_eq(g7 * tau_s1, tau_shift_value(fam, s, TimeShift::YPlus, lam), "s7");
            }
        }
    }
    return c.finish();
}

CheckResult bilinear_identity(const CheckContext& ctx) {
    Comparisons c("toda.bilinear_identity");
    Rng rng = ctx.rng();
    int points = std::max(10, ctx.trials);
    for (int probe = 0; probe < points; ++probe) {
        int d = 2 + (int)rng.below(4); // n - m up to 5
        TodaFamily famL = sample_family(rng, 0, d);
        TodaFamily famR = sample_family(rng, 0, d); // shares A, times differ
        famR.A = famL.A;
        int m = famL.m, n = famL.n;
        int s = m + 1 + (int)rng.below(std::max(1, n - 1 - m));
        int sp = m + 1 + (int)rng.below(n - m);
        if (s > n - 1) s = n - 1;
        BilinearSides sides =
            bilinear_residues(famL.A, m, n, s, sp, famL.x, famR.x, famL.y, famR.y);
        c.expect_eq(sides.lhs, sides.rhs,
                    "d=" + std::to_string(d) + " s=" + std::to_string(s) + " s'=" +
                        std::to_string(sp));
        BilinearSides diag =
            bilinear_residues(famL.A, m, n, s, s, famL.x, famL.x, famL.y, famL.y);
        c.expect_eq(diag.lhs, diag.rhs, "diagonal");
    }
    return c.finish();
}

CheckResult bilinear_mkp(const CheckContext& ctx) {
    Comparisons c("toda.bilinear_mkp");
    Rng rng = ctx.rng();
    for (int trial = 0; trial < std::max(3, ctx.trials); ++trial) {
        int d = 3 + (int)rng.below(3);
        TodaFamily fam = sample_family(rng, 0, d);
        TimeVector xp(rng.rationals(d - 1));
        int m = fam.m, n = fam.n;
        // y = y', s > s': all integrand exponents stay below -1 on the y side
        int sp = m + 1;
        int s = sp + 1 + (int)rng.below(std::max(1, n - 1 - sp - 1) + 1);
        if (s > n - 1) s = n - 1;
        if (s <= sp) continue;
        BilinearSides sides = bilinear_residues(fam.A, m, n, s, sp, fam.x, xp, fam.y, fam.y);
        c.expect_eq(sides.rhs, Rat(0), "mKP rhs residue");
        c.expect_eq(sides.lhs, Rat(0), "mKP lhs residue");
    }
    return c.finish();
}

CheckResult dressed_examples(const CheckContext& ctx) {
    Comparisons c("toda.dressed_examples");
    Rng rng = ctx.rng();
    Rat a = rng.rational(), b = rng.rational();
    TodaFamily fam;
    fam.m = 0;
    fam.n = 2;
    fam.A = Mat<Rat>(2, 2, Rat(0));
    fam.A.at(0, 0) = Rat(1);
    fam.A.at(1, 1) = Rat(1);
    fam.x = TimeVector({a});
    fam.y = TimeVector({b});
    Mat<Rat> d = dressed_matrix(fam);
    c.expect_eq(d.at(0, 0), Rat(1) - a * b, "entry 00");
    c.expect_eq(d.at(0, 1), a, "entry 01");
    c.expect_eq(d.at(1, 0), -b, "entry 10");
    c.expect_eq(d.at(1, 1), Rat(1), "entry 11");
    c.expect_eq(tau_family(fam, 1), Rat(1) - a * b, "tau(1)");
    c.expect_eq(tau_family(fam, 2), Rat(1), "tau(2)");
    c.expect_eq(tau_family(fam, 0), Rat(1), "tau(m) = 1");
    // x = y = 0 reproduces A
    TodaFamily fam0 = sample_family(rng, 0, 4, false);
    Mat<Rat> d0 = dressed_matrix(fam0);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) c.expect_eq(d0.at(i, j), fam0.A.at(i, j), "x=y=0");
    // degree in x_1 bounded by n-m-1 (third finite difference of a quadratic)
    TodaFamily famp = sample_family(rng, 0, 3);
    std::vector<Rat> vals;
    for (int k = 0; k <= 3; ++k) {
        TodaFamily f2 = famp;
        f2.x.x[0] = Rat(k);
        vals.push_back(dressed_matrix(f2).at(0, 2));
    }
    c.expect_eq(vals[3] - Rat(3) * vals[2] + Rat(3) * vals[1] - vals[0], Rat(0),
                "x1-degree <= n-m-1");
    return c.finish();
}

CheckResult molecule_equation(const CheckContext& ctx) {
    Comparisons c("toda.molecule_equation");
    Rng rng = ctx.rng();
    for (int trial = 0; trial < ctx.trials; ++trial) {
        for (int d = 2; d <= 5; ++d) {
            TodaFamily fam = sample_family(rng, 0, d);
            auto spec = JetSpec::make({"x1", "y1"}, {1, 1});
            Jet one = Jet::constant(spec, Rat(1));
            std::vector<Jet> xt, yt;
            for (int k = 0; k < d - 1; ++k) {
                xt.push_back(k == 0 ? Jet::variable(spec, 0, fam.x.x[0])
                                    : Jet::constant(spec, fam.x.x[k]));
                yt.push_back(k == 0 ? Jet::variable(spec, 1, fam.y.x[0])
                                    : Jet::constant(spec, fam.y.x[k]));
            }
            Mat<Jet> dressed = dressed_matrix_ring(fam.A, xt, yt, one);
            for (int s = fam.m + 1; s <= fam.n - 1; ++s) {
                Jet tau_s = tau_leading_minor(dressed, s - fam.m, one);
                Rat tau_p = tau_leading_minor(dressed, s + 1 - fam.m, one).constant_term();
                Rat tau_m = tau_leading_minor(dressed, s - 1 - fam.m, one).constant_term();
                Rat lhs = hirota_apply({{0, 1}, {1, 1}}, tau_s, tau_s) + Rat(2) * tau_p * tau_m;
                c.expect_eq(lhs, Rat(0), "d=" + std::to_string(d) + " s=" + std::to_string(s));
            }
        }
    }
    return c.finish();
}

CheckResult h99_expansion(const CheckContext& ctx) {
    Comparisons c("toda.h99_expansion");
    Rng rng = ctx.rng();
    for (int trial = 0; trial < ctx.trials; ++trial) {
        for (int d = 2; d <= 4; ++d) {
            int m = 1 - d / 2;
            TodaFamily fam = sample_family(rng, m, m + d);
            std::vector<Rat> ym;
            for (const Rat& v : fam.y.x) ym.push_back(-v);
            for (int s = fam.m; s <= fam.n; ++s) {
                Rat sum(0);
                auto box = partitions_in_box(s - fam.m, fam.n - s);
                for (const Partition& lam : box)
                    for (const Partition& mu : box) {
                        Rat coeff = h99_minor(fam, s, lam, mu);
                        if (coeff.is_zero()) continue;
                        sum += coeff * character_poly(lam, fam.x.x, Rat(1)) *
                               character_poly(mu, ym, Rat(1));
                    }
                c.expect_eq(tau_family(fam, s), sum,
                            "d=" + std::to_string(d) + " s=" + std::to_string(s));
            }
        }
    }
    return c.finish();
}

// (4 D1 D3 - D1^4 - 3 D2^2) tau . tau at a random time point
Rat kp_hirota_residue(const std::map<Partition, Rat>& coeffs, int K, Rng& rng) {
    auto spec = JetSpec::make({"x1", "x2", "x3"}, {4, 2, 1});
    Jet one = Jet::constant(spec, Rat(1));
    std::vector<Jet> times;
    for (int k = 1; k <= K; ++k) {
        Rat base = rng.rational();
        if (k <= 3) times.push_back(Jet::variable(spec, k - 1, base));
        else times.push_back(Jet::constant(spec, base));
    }
    Jet tau = Jet::constant(spec, Rat(0));
    for (auto& [lam, coef] : coeffs) tau += character_poly(lam, times, one) * coef;
    Rat term = Rat(4) * hirota_apply({{0, 1}, {2, 1}}, tau, tau);
    term -= hirota_apply({{0, 4}}, tau, tau);
    term -= Rat(3) * hirota_apply({{1, 2}}, tau, tau);
    return term;
}

CheckResult kp_hirota(const CheckContext& ctx) {
    Comparisons c("toda.kp_hirota");
    Rng rng = ctx.rng();
    {
        auto spec = JetSpec::make({"x1", "x2", "x3"}, {4, 2, 1});
        Jet one = Jet::constant(spec, Rat(1));
        Jet x1 = Jet::variable(spec, 0, rng.rational());
        Rat t1 = Rat(4) * hirota_apply({{0, 1}, {2, 1}}, one, one) -
                 hirota_apply({{0, 4}}, one, one) - Rat(3) * hirota_apply({{1, 2}}, one, one);
        c.expect_eq(t1, Rat(0), "tau = 1");
        Rat t2 = Rat(4) * hirota_apply({{0, 1}, {2, 1}}, x1, x1) -
                 hirota_apply({{0, 4}}, x1, x1) - Rat(3) * hirota_apply({{1, 2}}, x1, x1);
        c.expect_eq(t2, Rat(0), "tau = x_1");
    }
    int points = std::max(10, ctx.trials);
    for (int N : {3, 4}) {
        SpectralPoint pt = sample_spectral_point(rng, N);
        auto coeffs = schur_coeffs(N, pt);
        for (int probe = 0; probe < points; ++probe)
            c.expect_eq(kp_hirota_residue(coeffs, 2 * N - 2, rng), Rat(0),
                        "N=" + std::to_string(N) + " point " + std::to_string(probe));
    }
    return c.finish();
}

CheckResult jacobi_identity(const CheckContext& ctx) {
    Comparisons c("toda.jacobi_determinant_identity");
    Rng rng = ctx.rng();
    for (int trial = 0; trial < ctx.trials; ++trial)
        for (int n : {4, 5}) {
            Mat<Rat> a(n, n);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) a.at(i, j) = rng.rational();
            auto strike = [&](std::vector<int> rows, std::vector<int> cols) {
                std::vector<int> ri, ci;
                for (int i = 0; i < n; ++i)
                    if (std::find(rows.begin(), rows.end(), i) == rows.end()) ri.push_back(i);
                for (int j = 0; j < n; ++j)
                    if (std::find(cols.begin(), cols.end(), j) == cols.end()) ci.push_back(j);
                return det_exact(a.pick(ri, ci));
            };
            Rat lhs = strike({n - 2}, {n - 2}) * strike({n - 1}, {n - 1}) -
                      strike({n - 2}, {n - 1}) * strike({n - 1}, {n - 2});
            Rat rhs = strike({n - 2, n - 1}, {n - 2, n - 1}) * det_exact(a);
            c.expect_eq(lhs, rhs, "n=" + std::to_string(n));
        }
    return c.finish();
}

CheckResult t_deformed_tau_checks(const CheckContext& ctx) {
    Comparisons c("toda.t_deformed_tau");
    Rng rng = ctx.rng();
    for (int trial = 0; trial < ctx.trials; ++trial) {
        int m = 0, s = 2, n = 5;
        std::vector<Rat> u = rng.rationals(s - m), v = rng.rationals(s - m);
        Rat t = rng.rational_such_that([](const Rat& x) { return x != Rat(1); });
        Rat t0 = t_deformed_tau(n, s, m, VariableSet(u), VariableSet(v), Rat(0));
        Rat plain(0);
        for (const Partition& lam : partitions_in_box(s - m, n - s))
            plain += schur_eval(lam, VariableSet(u)) * schur_eval(lam, VariableSet(v));
        c.expect_eq(t0, plain, "t = 0");
        std::vector<Rat> un = rng.rationals(n - m), vn = rng.rationals(n - m);
        c.expect_eq(t_deformed_tau(n, n, m, VariableSet(un), VariableSet(vn), t), Rat(1),
                    "s = n");
    }
    // degree-truncated Hall-Littlewood product limit
    const int D = 4;
    for (int N : {2, 3}) {
        Rat t = rng.rational_such_that([](const Rat& x) { return x != Rat(1) && !x.is_zero(); });
        std::vector<Rat> u = rng.rationals(N), v = rng.rationals(N);
        auto spec = JetSpec::make({"z"}, {D});
        Jet one = Jet::constant(spec, Rat(1));
        Jet z = Jet::variable(spec, 0, Rat(0));
        Jet prod = one;
        for (int i = 0; i < N; ++i)
            for (int j = 0; j < N; ++j) {
                Rat uv = u[i] * v[j];
                prod = prod * (one - (t * uv) * z) * (one - uv * z).recip();
            }
        Jet sum = Jet::constant(spec, Rat(0));
        VariableSet ut(u, t);
        for (const Partition& lam : partitions_in_box(N, D)) {
            if (lam.weight() > D) continue;
            Rat term = tschur_eval(lam, ut) * schur_eval(lam, VariableSet(v));
            Jet zp = one;
            for (int k = 0; k < lam.weight(); ++k) zp = zp * z;
            sum += zp * term;
        }
        for (int dd = 0; dd <= D; ++dd)
            c.expect_eq(sum.coeff_at({dd}), prod.coeff_at({dd}),
                        "N=" + std::to_string(N) + " z^" + std::to_string(dd));
    }
    return c.finish();
}

} // namespace

void register_toda_checks(std::vector<Check>& out) {
    out.push_back({"toda.dressing_identity", dressing_identity});
    out.push_back({"toda.wave_basics", wave_basics});
    out.push_back({"toda.generating_identities", generating_identities});
    out.push_back({"toda.bilinear_identity", bilinear_identity});
    out.push_back({"toda.bilinear_mkp", bilinear_mkp});
    out.push_back({"toda.dressed_examples", dressed_examples});
    out.push_back({"toda.molecule_equation", molecule_equation});
    out.push_back({"toda.h99_expansion", h99_expansion});
    out.push_back({"toda.kp_hirota", kp_hirota});
    out.push_back({"toda.jacobi_determinant_identity", jacobi_identity});
    out.push_back({"toda.t_deformed_tau", t_deformed_tau_checks});
}

} // namespace taulab
