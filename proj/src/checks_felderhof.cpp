#include "taulab/checks.hpp"
#include "taulab/felderhof.hpp"
#include "taulab/jet.hpp"

namespace taulab {

namespace {

CheckResult reduced_routes(const CheckContext& ctx) {
    Comparisons c("felderhof.reduced_routes");
    Rng rng = ctx.rng();
    for (int N = 1; N <= 4; ++N)
        for (int trial = 0; trial < ctx.trials; ++trial) {
            ColourPoint pt = sample_colour_point(rng, N);
            Rat bf = dwpf_reduced(N, pt, FelderhofMethod::BruteForce);
            Rat det = dwpf_reduced(N, pt, FelderhofMethod::Determinant);
            Rat prod = dwpf_reduced(N, pt, FelderhofMethod::Product);
            std::string tag = "N=" + std::to_string(N);
            c.expect_eq(bf, det, "brute=det " + tag);
            c.expect_eq(det, prod, "det=product " + tag);
        }
    // explicit small cases
    ColourPoint p1 = sample_colour_point(rng, 1);
    c.expect_eq(dwpf_reduced(1, p1, FelderhofMethod::BruteForce), Rat(1), "N=1 reduced");
    ColourPoint p2 = sample_colour_point(rng, 2);
    c.expect_eq(dwpf_reduced(2, p2, FelderhofMethod::BruteForce),
                (Rat(1) - p2.alpha[0] * p2.alpha[1]) * (Rat(1) - p2.beta[0] * p2.beta[1]),
                "N=2 reduced product");
    return c.finish();
}

CheckResult recursion_colour(const CheckContext& ctx) {
    Comparisons c("felderhof.recursion");
    Rng rng = ctx.rng();
    for (int N = 2; N <= 4; ++N)
        for (int trial = 0; trial < ctx.trials; ++trial) {
            ColourPoint pt = sample_colour_point(rng, N);
            pt.alpha[0] = pt.beta[0].inv(); // alpha_1 beta_1 = 1
            Rat zn = dwpf_reduced(N, pt, FelderhofMethod::BruteForce);
            ColourPoint sub;
            sub.alpha.assign(pt.alpha.begin() + 1, pt.alpha.end());
            sub.beta.assign(pt.beta.begin() + 1, pt.beta.end());
            Rat rhs = dwpf_reduced(N - 1, sub, FelderhofMethod::BruteForce);
            for (int j = 1; j < N; ++j) rhs *= pt.beta[j] - pt.alpha[0]; // b(alpha_1, beta_j)
            for (int i = 1; i < N; ++i) rhs *= pt.beta[0] - pt.alpha[i]; // b(alpha_i, beta_1)
            if ((N - 1) % 2) rhs = -rhs;
            c.expect_eq(zn, rhs, "N=" + std::to_string(N));
        }
    return c.finish();
}

CheckResult homogeneous_product(const CheckContext& ctx) {
    Comparisons c("felderhof.homogeneous_product");
    Rng rng = ctx.rng();
    for (int N = 1; N <= 4; ++N)
        for (int trial = 0; trial < ctx.trials; ++trial) {
            Rat a = rng.rational_such_that(
                [](const Rat& z) { return z != Rat(1) && z != Rat(-1) && !z.is_zero(); });
            Rat b = rng.rational_such_that([&](const Rat& z) {
                return z != Rat(1) && z != Rat(-1) && !z.is_zero() && z != a &&
                       z * a != Rat(1);
            });
            // reduced homogeneous value ((1-a^2)(1-b^2))^{N(N-1)/2}
            Rat expect =
                ((Rat(1) - a * a) * (Rat(1) - b * b)).pow((long)N * (N - 1) / 2);
            // colour-point limit of the reduced product form
            Rat prod(1);
            for (int i = 0; i < N; ++i)
                for (int j = i + 1; j < N; ++j)
                    prod *= (Rat(1) - a * a) * (Rat(1) - b * b);
            c.expect_eq(prod, expect, "product limit N=" + std::to_string(N));
            // bi-Wronskian route of the homogeneous limit
            c.expect_eq(homogeneous_reduced_from_tau(N, a, b), expect,
                        "goatrage N=" + std::to_string(N));
        }
    return c.finish();
}

CheckResult homogeneous_tau_values(const CheckContext& ctx) {
    Comparisons c("felderhof.homogeneous_tau");
    Rng rng = ctx.rng();
    Rat a(1, 3), b(-2, 5);
    std::vector<Rat> taus = homogeneous_tau_family(2, a, b);
    c.expect_eq(taus[0], Rat(1), "tau_0 = 1");
    Rat phi = ((a - b) * (Rat(1) - a * b)).inv();
    c.expect_eq(taus[1], phi, "tau_1 = phi");
    c.expect_eq(homogeneous_tau(1, a, b, 2), phi, "accessor");
    bool threw = false;
    try {
        homogeneous_tau(2, Rat(1, 2), Rat(1, 2), 3);
    } catch (const std::exception&) {
        threw = true;
    }
    c.expect_true(threw, "phi pole rejected");
    (void)rng;
    return c.finish();
}

CheckResult molecule_bi_wronskian(const CheckContext& ctx) {
    Comparisons c("felderhof.molecule_bi_wronskian");
    Rng rng = ctx.rng();
    for (int trial = 0; trial < ctx.trials; ++trial) {
        Rat a = rng.rational_such_that(
            [](const Rat& z) { return z != Rat(1) && z != Rat(-1) && !z.is_zero(); });
        Rat b = rng.rational_such_that([&](const Rat& z) {
            return z != Rat(1) && z != Rat(-1) && !z.is_zero() && z != a && z * a != Rat(1);
        });
        int smax = 4;
        // jets of order smax+1 so tau_{s+1} supplies the extra derivative
        auto spec = JetSpec::make({"a", "b"}, {smax + 1, smax + 1});
        Jet ja = Jet::variable(spec, 0, a);
        Jet jb = Jet::variable(spec, 1, b);
        Jet one = Jet::constant(spec, Rat(1));
        Jet phi = ((ja - jb) * (one - ja * jb)).recip();
        // tau_s as jets via the bi-Wronskian whose entries are phi-jets
        auto tau_jet = [&](int s) {
            Mat<Jet> m(s, s, Jet::constant(spec, Rat(0)));
            for (int i = 0; i < s; ++i)
                for (int j = 0; j < s; ++j) {
                    // d^i_a d^j_b phi as a jet: shift coefficients
                    Jet e = Jet::constant(spec, Rat(0));
                    for (int p = 0; p + i <= smax + 1; ++p)
                        for (int q = 0; q + j <= smax + 1; ++q) {
                            Rat coeff = phi.coeff_at({p + i, q + j});
                            if (coeff.is_zero()) continue;
                            // multiply by (p+i)!/(p)! (q+j)!/(q)!
                            Rat fac = factorial_rat(p + i) / factorial_rat(p) *
                                      factorial_rat(q + j) / factorial_rat(q);
                            e.coeff_at({p, q}) = coeff * fac;
                        }
                    m.at(i, j) = e;
                }
            return det_ring(m, one);
        };
        std::vector<Jet> taus;
        taus.push_back(one);
        for (int s = 1; s <= smax + 1; ++s) taus.push_back(tau_jet(s));
        // Ch.4 sign convention: (d_a d_b tau_s) tau_s - (d_a tau_s)(d_b tau_s)
        //   = tau_{s+1} tau_{s-1}, equivalently D_a D_b tau.tau = 2 tau_+ tau_-
        for (int s = 1; s <= smax; ++s) {
            Rat lhs = hirota_apply({{0, 1}, {1, 1}}, taus[s], taus[s]);
            Rat rhs = Rat(2) * taus[s + 1].constant_term() * taus[s - 1].constant_term();
            c.expect_eq(lhs, rhs, "s=" + std::to_string(s));
            // and the expanded form with plain derivatives
            Rat lhs2 = taus[s].deriv({1, 1}) * taus[s].constant_term() -
                       taus[s].deriv({1, 0}) * taus[s].deriv({0, 1});
            c.expect_eq(lhs2, taus[s + 1].constant_term() * taus[s - 1].constant_term(),
                        "expanded s=" + std::to_string(s));
        }
    }
    return c.finish();
}

CheckResult jacobi_on_wronskian(const CheckContext& ctx) {
    Comparisons c("felderhof.jacobi_on_wronskian");
    Rng rng = ctx.rng();
    for (int trial = 0; trial < ctx.trials; ++trial) {
        Rat a = rng.rational_such_that(
            [](const Rat& z) { return z != Rat(1) && z != Rat(-1) && !z.is_zero(); });
        Rat b = rng.rational_such_that([&](const Rat& z) {
            return z != Rat(1) && z != Rat(-1) && !z.is_zero() && z != a && z * a != Rat(1);
        });
        int n = 4;
        auto spec = JetSpec::make({"a", "b"}, {n, n});
        Jet ja = Jet::variable(spec, 0, a);
        Jet jb = Jet::variable(spec, 1, b);
        Jet one = Jet::constant(spec, Rat(1));
        Jet phi = ((ja - jb) * (one - ja * jb)).recip();
        Mat<Rat> D(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) D.at(i, j) = phi.deriv({i, j});
        auto strike = [&](std::vector<int> rows, std::vector<int> cols) {
            std::vector<int> ri, ci;
            for (int i = 0; i < n; ++i)
                if (std::find(rows.begin(), rows.end(), i) == rows.end()) ri.push_back(i);
            for (int j = 0; j < n; ++j)
                if (std::find(cols.begin(), cols.end(), j) == cols.end()) ci.push_back(j);
            return det_exact(D.pick(ri, ci));
        };
        Rat lhs = strike({n - 2}, {n - 2}) * strike({n - 1}, {n - 1}) -
                  strike({n - 2}, {n - 1}) * strike({n - 1}, {n - 2});
        Rat rhs = strike({n - 2, n - 1}, {n - 2, n - 1}) * det_exact(D);
        c.expect_eq(lhs, rhs, "derivative matrix");
    }
    return c.finish();
}

CheckResult free_fermion_weights(const CheckContext& ctx) {
    Comparisons c("felderhof.free_fermion_weights");
    Rng rng = ctx.rng();
    for (int trial = 0; trial < std::max(5, ctx.trials); ++trial) {
        Rat a = rng.rational(), b = rng.rational();
        // w1 w2 + w3 w4 = w5 w6 at the trivialized point
        Rat w12 = (Rat(1) - a * b) * (Rat(1) - a * b);
        Rat w34 = (b - a) * (a - b);
        Rat w56 = (Rat(1) - a * a) * (Rat(1) - b * b);
        c.expect_eq(w12 + w34, w56, "omega relation");
    }
    return c.finish();
}

CheckResult cauchy_mechanism(const CheckContext& ctx) {
    Comparisons c("felderhof.cauchy_mechanism");
    Rng rng = ctx.rng();
    for (int N = 1; N <= 4; ++N)
        for (int trial = 0; trial < ctx.trials; ++trial) {
            ColourPoint pt = sample_colour_point(rng, N);
            Mat<Rat> m(N, N);
            for (int i = 0; i < N; ++i)
                for (int j = 0; j < N; ++j)
                    m.at(i, j) =
                        ((pt.alpha[i] - pt.beta[j]) * (Rat(1) - pt.alpha[i] * pt.beta[j]))
                            .inv();
            Rat lhs = det_exact(m);
            for (int i = 0; i < N; ++i)
                for (int j = 0; j < N; ++j)
                    lhs *= (pt.alpha[i] - pt.beta[j]) * (Rat(1) - pt.alpha[i] * pt.beta[j]);
            // Cauchy-type value: prod (1-a_i^2)(1-b_j^2)... collapses to the
            // pair products of the reduced form times Vandermonde structure
            Rat rhs(1);
            for (int i = 0; i < N; ++i)
                for (int j = i + 1; j < N; ++j)
                    rhs *= (pt.alpha[i] - pt.alpha[j]) * (pt.beta[j] - pt.beta[i]) *
                           (Rat(1) - pt.alpha[i] * pt.alpha[j]) *
                           (Rat(1) - pt.beta[i] * pt.beta[j]);
            c.expect_eq(lhs, rhs, "N=" + std::to_string(N));
        }
    return c.finish();
}

CheckResult colour_symmetry(const CheckContext& ctx) {
    Comparisons c("felderhof.colour_symmetry");
    Rng rng = ctx.rng();
    for (int N = 2; N <= 4; ++N)
        for (int trial = 0; trial < ctx.trials; ++trial) {
            ColourPoint pt = sample_colour_point(rng, N);
            Rat z = dwpf_reduced(N, pt, FelderhofMethod::BruteForce);
            ColourPoint pa = pt;
            std::swap(pa.alpha[0], pa.alpha[N - 1]);
            c.expect_eq(dwpf_reduced(N, pa, FelderhofMethod::BruteForce), z, "alpha swap");
            ColourPoint pb = pt;
            std::swap(pb.beta[0], pb.beta[N - 1]);
            c.expect_eq(dwpf_reduced(N, pb, FelderhofMethod::BruteForce), z, "beta swap");
        }
    return c.finish();
}

} // namespace

void register_felderhof_checks(std::vector<Check>& out) {
    out.push_back({"felderhof.reduced_routes", reduced_routes});
    out.push_back({"felderhof.recursion", recursion_colour});
    out.push_back({"felderhof.homogeneous_product", homogeneous_product});
    out.push_back({"felderhof.homogeneous_tau", homogeneous_tau_values});
    out.push_back({"felderhof.molecule_bi_wronskian", molecule_bi_wronskian});
    out.push_back({"felderhof.jacobi_on_wronskian", jacobi_on_wronskian});
    out.push_back({"felderhof.free_fermion_weights", free_fermion_weights});
    out.push_back({"felderhof.cauchy_mechanism", cauchy_mechanism});
    out.push_back({"felderhof.colour_symmetry", colour_symmetry});
}

} // namespace taulab
