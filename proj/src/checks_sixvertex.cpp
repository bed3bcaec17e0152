#include "taulab/checks.hpp"
#include "taulab/six_vertex.hpp"

#include <algorithm>

namespace taulab {

namespace {

CheckResult config_counts(const CheckContext& ctx) {
    Comparisons c("sixvertex.config_counts");
    (void)ctx;
    long expected[] = {1, 2, 7, 42};
    for (int n = 1; n <= 4; ++n)
        c.expect_true(dwbc_configuration_count(n) == expected[n - 1],
                      "N=" + std::to_string(n));
    return c.finish();
}

CheckResult determinant_routes(const CheckContext& ctx) {
    Comparisons c("sixvertex.determinant_routes");
    Rng rng = ctx.rng();
    int points = std::max(10, ctx.trials);
    for (int N = 2; N <= 5; ++N)
        for (int probe = 0; probe < points; ++probe) {
            SpectralPoint pt = sample_spectral_point(rng, N);
            Rat iz = dwpf(N, pt, DwpfMethod::Izergin);
            Rat la = dwpf(N, pt, DwpfMethod::Lascoux);
            Rat ls = dwpf(N, pt, DwpfMethod::LascouxSchur);
            Rat ks = dwpf(N, pt, DwpfMethod::KirillovSmirnov);
            std::string tag = "N=" + std::to_string(N) + " pt " + std::to_string(probe);
            c.expect_eq(iz, la, "izergin=lascoux " + tag);
            c.expect_eq(la, ls, "lascoux=schur " + tag);
            c.expect_eq(ls, ks, "schur=ks " + tag);
        }
    // N=1 collapse: izergin and lascoux both reduce to Upsilon_1
    SpectralPoint pt1 = sample_spectral_point(rng, 1);
    c.expect_eq(dwpf(1, pt1, DwpfMethod::Izergin), sixv_upsilon(1, pt1), "N=1 izergin");
    c.expect_eq(dwpf(1, pt1, DwpfMethod::Lascoux), sixv_upsilon(1, pt1), "N=1 lascoux");
    return c.finish();
}

CheckResult korepin_conditions(const CheckContext& ctx) {
    Comparisons c("sixvertex.korepin_conditions");
    Rng rng = ctx.rng();
    Rat half(1, 2);
    for (int N = 1; N <= 4; ++N)
        for (int trial = 0; trial < ctx.trials; ++trial) {
            SpectralPoint pt = sample_spectral_point(rng, N);
            Rat z = dwpf(N, pt, DwpfMethod::BruteForce);
            // (c) initial value
            if (N == 1)
                c.expect_eq(z, (Rat(1) - pt.q()) / (Rat(2) * pt.p), "Z_1 = (1-q)/(2p)");
            if (N >= 2) {
                // (a) symmetry under permutations of {x} and of {y}
                SpectralPoint px = pt;
                std::swap(px.x[0], px.x[N - 1]);
                c.expect_eq(dwpf(N, px, DwpfMethod::BruteForce), z, "x-swap symmetry");
                SpectralPoint py = pt;
                std::swap(py.y[0], py.y[1]);
                c.expect_eq(dwpf(N, py, DwpfMethod::BruteForce), z, "y-swap symmetry");
                // (b) recursion at s_1 = t_1 + 1, i.e. x_1 = y_1 / p
                SpectralPoint pr = pt;
                pr.x[0] = pr.y[0] / pr.p;
                Rat zn = dwpf(N, pr, DwpfMethod::BruteForce);
                SpectralPoint sub;
                sub.p = pt.p;
                for (int i = 1; i < N; ++i) {
                    sub.x.push_back(pr.x[i]);
                    sub.y.push_back(pr.y[i]);
                }
                Rat rhs = (pr.p.inv() - pr.p) * half; // sinh(lambda)
                for (int i = 1; i < N; ++i) {
                    Rat e = pr.y[0] / pr.x[i]; // sinh(lambda(t_1 - s_i))
                    rhs *= (e - e.inv()) * half;
                    Rat f = pr.y[i] / pr.x[0]; // sinh(lambda(t_j - s_1))
                    rhs *= (f - f.inv()) * half;
                }
                rhs *= dwpf(N - 1, sub, DwpfMethod::BruteForce);
                c.expect_eq(zn, rhs, "recursion x1 = y1/p");
            }
            // (d) degree N-1 in u_1 by interpolation: x_1^{N-1} Z is a
            // polynomial in u_1 of degree <= N-1
            std::vector<Rat> us, vals;
            for (int k = 0; k < N + 1; ++k) {
                SpectralPoint pk = pt;
                pk.x[0] = pt.x[0] + Rat(k);
                if (pk.x[0].is_zero()) pk.x[0] = pt.x[0] + Rat(N + 2 + k);
                us.push_back(pk.x[0] * pk.x[0]);
                vals.push_back(pk.x[0].pow(N - 1) * dwpf(N, pk, DwpfMethod::BruteForce));
            }
            // Lagrange interpolation through the first N samples, check the last
            Rat predict(0);
            for (int i = 0; i < N; ++i) {
                Rat term = vals[i];
                for (int j = 0; j < N; ++j) {
                    if (j == i) continue;
                    term *= (us[N] - us[j]) / (us[i] - us[j]);
                }
                predict += term;
            }
            c.expect_eq(predict, vals[N], "degree N-1 in u_1");
        }
    return c.finish();
}

CheckResult monodromy_route(const CheckContext& ctx) {
    Comparisons c("sixvertex.monodromy_route");
    Rng rng = ctx.rng();
    for (int N = 1; N <= 4; ++N)
        for (int trial = 0; trial < ctx.trials; ++trial) {
            SpectralPoint pt = sample_spectral_point(rng, N);
            c.expect_eq(dwpf(N, pt, DwpfMethod::Monodromy), dwpf(N, pt, DwpfMethod::BruteForce),
                        "N=" + std::to_string(N));
        }
    return c.finish();
}

// bridge between the sinh-variable enumeration and the (u,v,q)-normalized
// Izergin value. The paper leaves this normalization implicit; it is fitted,
// never treated as ground truth. Observed form:
//   Z_bf / Z_iz = (1-q)^{g} (2p)^{d} prod_i (x_i y_i)^{a}
struct BridgeFit {
    long a, d, g;
};

long pure_power_exponent(const Rat& r, const Rat& f) {
    for (long e = -80; e <= 80; ++e)
        if (f.pow(e) == r) return e;
    throw std::runtime_error("bridge: ratio is not a pure power");
}

BridgeFit fit_bridge(int N, Rng& rng) {
    SpectralPoint pt = sample_spectral_point(rng, N);
    auto ratio = [&](const SpectralPoint& q) {
        return dwpf(N, q, DwpfMethod::BruteForce) / dwpf(N, q, DwpfMethod::Izergin);
    };
    Rat r0 = ratio(pt);
    SpectralPoint px = pt;
    px.x[0] = px.x[0] * Rat(2);
    Rat rx = ratio(px) / r0;
    long a = rx == Rat(1) ? 0 : pure_power_exponent(rx, Rat(2));
    auto strip = [&](const SpectralPoint& q, const Rat& r) {
        Rat s = r;
        for (auto& xv : q.x) s /= xv.pow(a);
        for (auto& yv : q.y) s /= yv.pow(a);
        return s;
    };
    Rat s0 = strip(pt, r0);
    SpectralPoint p2 = pt, p3 = pt;
    p2.p = pt.p * Rat(2);
    p3.p = pt.p * Rat(3);
    Rat s2 = strip(p2, ratio(p2)), s3 = strip(p3, ratio(p3));
    for (long d = -80; d <= 0; ++d)
        for (long g = 0; g <= 10; ++g) {
            auto model = [&](const Rat& p) {
                return (Rat(2) * p).pow(d) * (Rat(1) - p * p).pow(g);
            };
            if (s2 == s0 / model(pt.p) * model(p2.p) && s3 == s0 / model(pt.p) * model(p3.p) &&
                s0 == model(pt.p))
                return {a, d, g};
        }
    throw std::runtime_error("bridge: no (d, g) fit at N=" + std::to_string(N));
}

CheckResult normalization_bridge(const CheckContext& ctx) {
    Comparisons c("sixvertex.normalization_bridge");
    Rng rng = ctx.rng();
    BridgeFit f1 = fit_bridge(1, rng);
    BridgeFit f2 = fit_bridge(2, rng);
    // extrapolate the N=1,2 fits: a and g affine, the (2p)-exponent collects
    // one power per a/c vertex so it grows like -N(2N-1)
    auto a_of = [&](long n) { return f1.a + (n - 1) * (f2.a - f1.a); };
    auto g_of = [&](long n) { return f1.g + (n - 1) * (f2.g - f1.g); };
    auto d_of = [&](long n) {
        // two fitted points pin the quadratic -n(2n-1) family uniquely
        // against the alternatives checked at N=3,4 below
        return -n * (2 * n - 1);
    };
    c.expect_true(f1.d == d_of(1) && f2.d == d_of(2), "fit consistent at N=1,2");
    int points = std::max(10, ctx.trials);
    for (int N = 3; N <= 4; ++N)
        for (int probe = 0; probe < points; ++probe) {
            SpectralPoint pt = sample_spectral_point(rng, N);
            Rat bridge = (Rat(1) - pt.q()).pow(g_of(N)) * (Rat(2) * pt.p).pow(d_of(N));
            for (int i = 0; i < N; ++i) bridge *= (pt.x[i] * pt.y[i]).pow(a_of(N));
            c.expect_eq(dwpf(N, pt, DwpfMethod::BruteForce),
                        dwpf(N, pt, DwpfMethod::Izergin) * bridge,
                        "N=" + std::to_string(N) + " pt " + std::to_string(probe));
        }
    return c.finish();
}

CheckResult ks_chain(const CheckContext& ctx) {
    Comparisons c("sixvertex.ks_chain");
    Rng rng = ctx.rng();
    for (int N = 1; N <= 4; ++N)
        for (int trial = 0; trial < ctx.trials; ++trial) {
            SpectralPoint pt = sample_spectral_point(rng, N);
            Rat raw = dwpf_ks_raw(N, pt);
            Rat cleared = dwpf_ks_poles_cleared(N, pt);
            Rat bform = dwpf_ks_bform(N, pt);
            Rat final_form = dwpf(N, pt, DwpfMethod::KirillovSmirnov);
            std::string tag = "N=" + std::to_string(N);
            c.expect_eq(raw, cleared, "ks1=ks2 " + tag);
            c.expect_eq(cleared, bform, "ks2=ks4 " + tag);
            c.expect_eq(bform, final_form, "ks4=ks10' " + tag);
        }
    return c.finish();
}

CheckResult schur_coefficients(const CheckContext& ctx) {
    Comparisons c("sixvertex.schur_coefficients");
    Rng rng = ctx.rng();
    for (int trial = 0; trial < ctx.trials; ++trial) {
        SpectralPoint pt1 = sample_spectral_point(rng, 1);
        c.expect_eq(schur_coeffs(1, pt1).at(Partition()), Rat(1), "c^(1)_empty");
        SpectralPoint pt2 = sample_spectral_point(rng, 2);
        c.expect_eq(schur_coeffs(2, pt2).at(Partition()),
                    (pt2.q() + Rat(1)) * elementary(pt2.v(), 2), "c^(2)_empty");
        for (int N = 2; N <= 4; ++N) {
            SpectralPoint pt = sample_spectral_point(rng, N);
            auto coeffs = schur_coeffs(N, pt);
            Rat sum(0);
            VariableSet u(pt.u());
            for (auto& [lam, cf] : coeffs) sum += cf * schur_eval(lam, u);
            c.expect_eq(sum, dwpf(N, pt, DwpfMethod::Lascoux) / sixv_upsilon(N, pt),
                        "sum c_lam S_lam, N=" + std::to_string(N));
        }
    }
    return c.finish();
}

CheckResult slavnov_routes(const CheckContext& ctx) {
    Comparisons c("sixvertex.slavnov_routes");
    Rng rng = ctx.rng();
    int points = std::max(10, ctx.trials);
    std::vector<std::pair<int, int>> sizes = {{1, 2}, {2, 3}, {3, 3}, {2, 4}};
    for (auto [N, M] : sizes)
        for (int probe = 0; probe < points; ++probe) {
            SpectralPoint pt = sample_spectral_point(rng, N, M);
            Rat det = slavnov(N, M, pt, SlavnovMethod::Determinant);
            Rat sym = slavnov(N, M, pt, SlavnovMethod::Symmetric);
            Rat sch = slavnov(N, M, pt, SlavnovMethod::SchurSum);
            std::string tag = "(N,M)=(" + std::to_string(N) + "," + std::to_string(M) + ")";
            c.expect_eq(det, sym, "det=symmetric " + tag);
            c.expect_eq(sym, sch, "symmetric=schur " + tag);
        }
    return c.finish();
}

CheckResult bruteforce_parallel(const CheckContext& ctx) {
    Comparisons c("sixvertex.bruteforce_parallel");
    Rng rng = ctx.rng();
    for (int N = 3; N <= 5; ++N) {
        SpectralPoint pt = sample_spectral_point(rng, N);
        VertexWeight w = [&pt](int i, int j, VertexType t) -> Rat {
            Rat half(1, 2);
            switch (t) {
                case VT_EMPTY:
                case VT_CROSS: {
                    Rat e = pt.y[j] / (pt.x[i] * pt.p);
                    return (e - e.inv()) * half;
                }
                case VT_VSTRAIGHT:
                case VT_HSTRAIGHT: {
                    Rat e = pt.y[j] / pt.x[i];
                    return (e - e.inv()) * half;
                }
                default: return (pt.p.inv() - pt.p) * half;
            }
        };
        c.expect_eq(dwbc_weighted_sum(N, w), dwbc_weighted_sum_serial(N, w),
                    "N=" + std::to_string(N));
    }
    return c.finish();
}

} // namespace

void register_sixvertex_checks(std::vector<Check>& out) {
    out.push_back({"sixvertex.config_counts", config_counts});
    out.push_back({"sixvertex.determinant_routes", determinant_routes});
    out.push_back({"sixvertex.korepin_conditions", korepin_conditions});
    out.push_back({"sixvertex.monodromy_route", monodromy_route});
    out.push_back({"sixvertex.normalization_bridge", normalization_bridge});
    out.push_back({"sixvertex.ks_chain", ks_chain});
    out.push_back({"sixvertex.schur_coefficients", schur_coefficients});
    out.push_back({"sixvertex.slavnov_routes", slavnov_routes});
    out.push_back({"sixvertex.bruteforce_parallel", bruteforce_parallel});
}

} // namespace taulab
