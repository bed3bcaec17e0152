#include "taulab/checks.hpp"
#include "taulab/jet.hpp"
#include "taulab/sympoly.hpp"

namespace taulab {

namespace {

std::vector<Rat> distinct_nonzero(Rng& rng, int n) {
    for (int attempt = 0; attempt < 1000; ++attempt) {
        auto v = rng.rationals(n);
        bool ok = true;
        for (int i = 0; i < n && ok; ++i) {
            if (v[i].is_zero()) ok = false;
            for (int j = i + 1; j < n && ok; ++j)
                if (v[i] == v[j]) ok = false;
        }
        if (ok) return v;
    }
    throw std::runtime_error("distinct_nonzero: resample cap");
}

Rat sample_t(Rng& rng) {
    return rng.rational_such_that([](const Rat& t) { return t != Rat(1) && !t.is_zero(); });
}

CheckResult newton_identities(const CheckContext& ctx) {
    Comparisons c("sympoly.newton_identities");
    Rng rng = ctx.rng();
    for (int trial = 0; trial < ctx.trials; ++trial) {
        VariableSet u(rng.rationals(5));
        for (int r = 1; r <= 8; ++r) {
            Rat lhs = Rat(r) * basis_eval(BasisKind::Elementary, r, u);
            Rat rhs(0);
            for (int k = 0; k < r; ++k) {
                Rat term = basis_eval(BasisKind::PowerSum, r - k, u) *
                           basis_eval(BasisKind::Elementary, k, u);
                if ((r - 1 - k) % 2) term = -term;
                rhs += term;
            }
            c.expect_eq(lhs, rhs, "r=" + std::to_string(r));
        }
    }
    return c.finish();
}

CheckResult pieri_rule(const CheckContext& ctx) {
    Comparisons c("sympoly.pieri");
    Rng rng = ctx.rng();
    auto box = partitions_in_box(3, 3);
    auto big = partitions_in_box(6, 6);
    for (int trial = 0; trial < ctx.trials; ++trial) {
        VariableSet u(rng.rationals(4));
        for (const Partition& lam : box)
            for (int r = 1; r <= 3; ++r) {
                Rat lhs = basis_eval(BasisKind::Complete, r, u) * schur_eval(lam, u);
                Rat rhs(0);
                for (const Partition& mu : big)
                    if (is_horizontal_strip(mu, lam, r)) rhs += schur_eval(mu, u);
                c.expect_eq(lhs, rhs, lam.str() + " r=" + std::to_string(r));
            }
    }
    return c.finish();
}

CheckResult schur_three_routes(const CheckContext& ctx) {
    Comparisons c("sympoly.schur_three_routes");
    Rng rng = ctx.rng();
    for (int trial = 0; trial < ctx.trials; ++trial) {
        VariableSet u(distinct_nonzero(rng, 4));
        for (const Partition& lam : partitions_in_box(4, 4)) {
            Rat jt = schur_eval(lam, u, SchurMethod::JacobiTrudi);
            Rat ba = schur_eval(lam, u, SchurMethod::Bialternant);
            Rat tb = schur_eval(lam, u, SchurMethod::Tableau);
            c.expect_eq(jt, ba, "jt=bialt " + lam.str());
            c.expect_eq(jt, tb, "jt=tableau " + lam.str());
        }
    }
    return c.finish();
}

CheckResult dual_jacobi_trudi(const CheckContext& ctx) {
    Comparisons c("sympoly.dual_jacobi_trudi");
    Rng rng = ctx.rng();
    for (int trial = 0; trial < ctx.trials; ++trial) {
        VariableSet u(rng.rationals(5));
        std::vector<Rat> e = elementary_all(u.values, 12), h = complete_all(u.values, 12);
        for (const Partition& lam : partitions_in_box(3, 4)) {
            Partition lc = conjugate(lam);
            int n1 = lam.length(), n2 = lc.length();
            Mat<Rat> mh(n1, n1, Rat(0)), me(n2, n2, Rat(0));
            for (int i = 1; i <= n1; ++i)
                for (int j = 1; j <= n1; ++j)
                    if (lam.part(i - 1) + j - i >= 0) mh.at(i - 1, j - 1) = h[lam.part(i - 1) + j - i];
            for (int i = 1; i <= n2; ++i)
                for (int j = 1; j <= n2; ++j)
                    if (lc.part(i - 1) + j - i >= 0) me.at(i - 1, j - 1) = e[lc.part(i - 1) + j - i];
            c.expect_eq(det_exact(mh), det_exact(me), lam.str());
        }
    }
    return c.finish();
}

CheckResult hl_basics(const CheckContext& ctx) {
    Comparisons c("sympoly.hall_littlewood_basics");
    Rng rng = ctx.rng();
    for (int trial = 0; trial < ctx.trials; ++trial) {
        Rat t = sample_t(rng);
        VariableSet ut(distinct_nonzero(rng, 3), t);
        VariableSet u0(ut.values, Rat(0));
        for (const Partition& lam : partitions_in_box(3, 3)) {
            // P at t=0 is the Schur polynomial
            c.expect_eq(hall_littlewood_eval(lam, u0, HLNormalization::P),
                        schur_eval(lam, VariableSet(ut.values)), "t=0 " + lam.str());
            // Q = b_lam(t) P: checked via the Q accessor being consistent with
            // the P one at a second evaluation point below in the Cauchy check
        }
        // P_{(1)} = p_1
        c.expect_eq(hall_littlewood_eval(Partition({1}), ut, HLNormalization::P),
                    basis_eval(BasisKind::PowerSum, 1, ut), "P_(1)=p_1");
        // q_0 = 1, q_1 = (1-t) p_1
        c.expect_eq(basis_eval(BasisKind::TComplete, 0, ut), Rat(1), "q_0");
        c.expect_eq(basis_eval(BasisKind::TComplete, 1, ut),
                    (Rat(1) - t) * basis_eval(BasisKind::PowerSum, 1, ut), "q_1");
    }
    return c.finish();
}

CheckResult tschur_checks(const CheckContext& ctx) {
    Comparisons c("sympoly.tschur");
    Rng rng = ctx.rng();
    for (int trial = 0; trial < ctx.trials; ++trial) {
        Rat t = sample_t(rng);
        VariableSet u(rng.rationals(3));
        VariableSet ut(u.values, t);
        VariableSet u0(u.values, Rat(0));
        for (const Partition& lam : partitions_in_box(3, 3)) {
            // t = 0 reduces to Schur
            c.expect_eq(tschur_eval(lam, u0), schur_eval(lam, u), "t0 " + lam.str());
            // independent determinant assembly from basis_eval(t_complete)
            int n = lam.length() == 0 ? 0 : lam.length();
            Mat<Rat> m(n, n, Rat(0));
            for (int i = 1; i <= n; ++i)
                for (int j = 1; j <= n; ++j) {
                    int idx = lam.part(i - 1) + j - i;
                    if (idx >= 0) m.at(i - 1, j - 1) = basis_eval(BasisKind::TComplete, idx, ut);
                }
            c.expect_eq(tschur_eval(lam, ut), det_exact(m), "det " + lam.str());
        }
        // S_{(1)}(u;t) = (1-t) p_1(u)
        c.expect_eq(tschur_eval(Partition({1}), ut),
                    (Rat(1) - t) * basis_eval(BasisKind::PowerSum, 1, ut), "S_(1)(u;t)");
    }
    return c.finish();
}

CheckResult skew_schur_checks(const CheckContext& ctx) {
    Comparisons c("sympoly.skew_schur");
    Rng rng = ctx.rng();
    for (int trial = 0; trial < ctx.trials; ++trial) {
        VariableSet u(rng.rationals(3));
        auto box = partitions_in_box(3, 3);
        for (const Partition& lam : box)
            for (const Partition& mu : box) {
                Rat det_route = skew_schur_eval(lam, mu, u);
                if (!lam.contains(mu)) {
                    c.expect_eq(det_route, Rat(0), "mu not in lam");
                    continue;
                }
                // tableau oracle
                Rat tab(0);
                for (const auto& w : ssyt_weights(lam, mu, u.size())) {
                    Rat term(1);
                    for (int i = 0; i < u.size(); ++i) term *= u.values[i].pow(w[i]);
                    tab += term;
                }
                c.expect_eq(det_route, tab, lam.str() + "/" + mu.str());
            }
    }
    return c.finish();
}

CheckResult miwa_checks(const CheckContext& ctx) {
    Comparisons c("sympoly.miwa");
    Rng rng = ctx.rng();
    for (int trial = 0; trial < ctx.trials; ++trial) {
        VariableSet u(rng.rationals(3));
        int K = 6;
        TimeVector x = miwa_times(u, K);
        for (int k = 1; k <= K; ++k)
            c.expect_eq(basis_eval(BasisKind::Character, k, x),
                        basis_eval(BasisKind::Complete, k, u), "zeta_k = h_k, k=" + std::to_string(k));
    }
    // u = (1,1), K = 2 -> x = (2, 1)
    TimeVector x = miwa_times(VariableSet({Rat(1), Rat(1)}), 2);
    c.expect_eq(x.at(1), Rat(2), "x_1");
    c.expect_eq(x.at(2), Rat(1), "x_2");
    return c.finish();
}

// truncated Cauchy identity: sum_{|lam| <= D} P_lam(u;t) Q_lam(v;t) z^{|lam|}
// matches prod (1 - t u_i v_j z)/(1 - u_i v_j z) through order z^D
CheckResult hl_cauchy(const CheckContext& ctx) {
    Comparisons c("sympoly.hall_littlewood_cauchy");
    Rng rng = ctx.rng();
    const int D = 4;
    for (int N : {2, 3}) {
        Rat t = sample_t(rng);
        VariableSet u(distinct_nonzero(rng, N), t);
        VariableSet v(distinct_nonzero(rng, N), t);
        auto spec = JetSpec::make({"z"}, {D});
        Jet one = Jet::constant(spec, Rat(1));
        Jet z = Jet::variable(spec, 0, Rat(0));
        Jet prod = one;
        for (int i = 0; i < N; ++i)
            for (int j = 0; j < N; ++j) {
                Rat uv = u.values[i] * v.values[j];
                prod = prod * (one - (t * uv) * z) * (one - uv * z).recip();
            }
        Jet sum = Jet::constant(spec, Rat(0));
        // partitions with at most N rows and |lam| <= D
        for (const Partition& lam : partitions_in_box(N, D)) {
            if (lam.weight() > D) continue;
            Rat pq = hall_littlewood_eval(lam, u, HLNormalization::P) *
                     hall_littlewood_eval(lam, v, HLNormalization::Q);
            // Q_lam(z v; t) = z^{|lam|} Q_lam(v; t) by homogeneity
            Jet zpow = one;
            for (int k = 0; k < lam.weight(); ++k) zpow = zpow * z;
            sum += zpow * pq;
        }
        for (int d = 0; d <= D; ++d)
            c.expect_eq(sum.coeff_at({d}), prod.coeff_at({d}),
                        "N=" + std::to_string(N) + " order " + std::to_string(d));
    }
    return c.finish();
}

CheckResult basis_examples(const CheckContext& ctx) {
    Comparisons c("sympoly.basis_examples");
    (void)ctx;
    VariableSet u({Rat(1), Rat(2), Rat(3)});
    c.expect_eq(basis_eval(BasisKind::Elementary, 2, u), Rat(11), "e_2(1,2,3)");
    c.expect_eq(basis_eval(BasisKind::Elementary, 4, u), Rat(0), "e_4 of 3 vars");
    c.expect_eq(basis_eval(BasisKind::Elementary, -1, u), Rat(0), "negative index");
    // zeta_2(x) = x_1^2/2 + x_2
    TimeVector x({Rat(3), Rat(5)});
    c.expect_eq(basis_eval(BasisKind::Character, 2, x), Rat(9, 2) + Rat(5), "zeta_2");
    // S_{(1)}(u_1,u_2) = u_1 + u_2
    VariableSet u2({Rat(2), Rat(7)});
    c.expect_eq(schur_eval(Partition({1}), u2), Rat(9), "S_(1)");
    // S_{(2,1)}(1,2) = 6
    VariableSet u12({Rat(1), Rat(2)});
    c.expect_eq(schur_eval(Partition({2, 1}), u12), Rat(6), "S_(2,1)(1,2)");
    // too many parts -> 0
    c.expect_eq(schur_eval(Partition({1, 1, 1}), u12), Rat(0), "l(lam) > #vars");
    // S_{(2,1)/(1)}(1,1) = 4
    c.expect_eq(skew_schur_eval(Partition({2, 1}), Partition({1}), VariableSet({Rat(1), Rat(1)})),
                Rat(4), "skew example");
    return c.finish();
}

} // namespace

void register_sympoly_checks(std::vector<Check>& out) {
    out.push_back({"sympoly.newton_identities", newton_identities});
    out.push_back({"sympoly.pieri", pieri_rule});
    out.push_back({"sympoly.schur_three_routes", schur_three_routes});
    out.push_back({"sympoly.dual_jacobi_trudi", dual_jacobi_trudi});
    out.push_back({"sympoly.hall_littlewood_basics", hl_basics});
    out.push_back({"sympoly.tschur", tschur_checks});
    out.push_back({"sympoly.skew_schur", skew_schur_checks});
    out.push_back({"sympoly.miwa", miwa_checks});
    out.push_back({"sympoly.hall_littlewood_cauchy", hl_cauchy});
    out.push_back({"sympoly.basis_examples", basis_examples});
}

} // namespace taulab
