#include "taulab/checks.hpp"
#include "taulab/phase_model.hpp"

namespace taulab {

namespace {

CheckResult monodromy_basics(const CheckContext& ctx) {
    Comparisons c("phase.monodromy_basics");
    Rng rng = ctx.rng();
    // M = 2: B(u)|0> = u^{-2}|100> + |010> + u^2|001>
    Rat u = rng.rational_nonzero();
    PhaseState vac = PhaseState::vacuum(2);
    PhaseState b = monodromy_apply(MonodromyEntry::B, u, vac);
    c.expect_eq(b.coeff({1, 0, 0}), u.pow(-2), "site 0");
    c.expect_eq(b.coeff({0, 1, 0}), Rat(1), "site 1");
    c.expect_eq(b.coeff({0, 0, 1}), u * u, "site 2");
    c.expect_true(b.terms().size() == 3, "three terms");
    // C annihilates the vacuum; A, D have it as an eigenvector
    c.expect_true(monodromy_apply(MonodromyEntry::C, u, vac).terms().empty(), "C|0> = 0");
    PhaseState a = monodromy_apply(MonodromyEntry::A, u, vac);
    c.expect_eq(a.coeff({0, 0, 0}), u.pow(-3), "A|0> = u^{-(M+1)}|0>");
    PhaseState d = monodromy_apply(MonodromyEntry::D, u, vac);
    c.expect_eq(d.coeff({0, 0, 0}), u.pow(3), "D|0> = u^{M+1}|0>");
    // B raises the particle count by one on a random state
    for (int trial = 0; trial < ctx.trials; ++trial) {
        int M = 3;
        PhaseState s(M);
        for (int t = 0; t < 3; ++t) {
            std::vector<int> occ(M + 1, 0);
            for (int j = 0; j <= M; ++j) occ[j] = (int)rng.below(3);
            s.set(occ, rng.rational());
        }
        int before = -1;
        PhaseState bs = monodromy_apply(MonodromyEntry::B, rng.rational_nonzero(), s);
        bool uniform = true;
        for (auto& [occ, coeff] : s.terms()) {
            int tot = 0;
            for (int x : occ) tot += x;
            if (before == -1) before = tot;
            if (tot != before) uniform = false;
        }
        if (!uniform || before < 0) continue;
        for (auto& [occ, coeff] : bs.terms()) {
            int tot = 0;
            for (int x : occ) tot += x;
            c.expect_true(tot == before + 1, "B raises the count");
        }
    }
    return c.finish();
}

CheckResult commuting_families(const CheckContext& ctx) {
    Comparisons c("phase.commuting_families");
    Rng rng = ctx.rng();
    for (int trial = 0; trial < std::max(2, ctx.trials); ++trial) {
        int M = 2 + (int)rng.below(2);
        PhaseState s(M);
        for (int t = 0; t < 3; ++t) {
            std::vector<int> occ(M + 1, 0);
            for (int j = 0; j <= M; ++j) occ[j] = (int)rng.below(2);
            s.set(occ, rng.rational());
        }
        Rat u = rng.rational_nonzero(), v = rng.rational_nonzero();
        auto B = [&](const Rat& z, const PhaseState& st) {
            return monodromy_apply(MonodromyEntry::B, z, st);
        };
        auto C = [&](const Rat& z, const PhaseState& st) {
            return monodromy_apply(MonodromyEntry::C, z, st);
        };
        c.expect_true(B(u, B(v, s)) == B(v, B(u, s)), "[B,B] = 0");
        c.expect_true(C(u, C(v, s)) == C(v, C(u, s)), "[C,C] = 0");
    }
    return c.finish();
}

CheckResult scalar_three_routes(const CheckContext& ctx) {
    Comparisons c("phase.scalar_three_routes");
    Rng rng = ctx.rng();
    int points = std::max(10, ctx.trials);
    for (int N = 1; N <= 3; ++N)
        for (int M = 0; M <= 3; ++M)
            for (int probe = 0; probe < points; ++probe) {
                std::vector<Rat> u = sample_nonzero_distinct_sq(rng, N);
                std::vector<Rat> v = sample_nonzero_distinct_sq(rng, N);
                Rat bf = scalar_product(N, M, u, v, ScalarMethod::BruteForce);
                Rat det = scalar_product(N, M, u, v, ScalarMethod::Determinant);
                Rat sch = scalar_product(N, M, u, v, ScalarMethod::Schur);
                std::string tag =
                    "N=" + std::to_string(N) + " M=" + std::to_string(M);
                c.expect_eq(bf, det, "bruteforce=determinant " + tag);
                c.expect_eq(det, sch, "determinant=schur " + tag);
            }
    // N = 1 explicit geometric form
    std::vector<Rat> u1 = {rng.rational_nonzero()}, v1 = {rng.rational_nonzero()};
    int M = 3;
    Rat expect = (u1[0] * v1[0]).pow(-M) * complete({u1[0] * u1[0], v1[0] * v1[0]}, M);
    c.expect_eq(scalar_product(1, M, u1, v1, ScalarMethod::BruteForce), expect, "N=1 closed form");
    return c.finish();
}

CheckResult state_schur_expansion(const CheckContext& ctx) {
    Comparisons c("phase.state_schur_expansion");
    Rng rng = ctx.rng();
    for (int N = 1; N <= 3; ++N)
        for (int M = 0; M <= 3; ++M)
            for (int trial = 0; trial < ctx.trials; ++trial) {
                std::vector<Rat> u = sample_nonzero_distinct_sq(rng, N);
                PhaseState s = PhaseState::vacuum(M);
                for (int j = N - 1; j >= 0; --j)
                    s = monodromy_apply(MonodromyEntry::B, u[j], s);
                Rat pref(1);
                for (auto& z : u) pref *= z;
                pref = pref.pow(-M);
                std::vector<Rat> usq;
                for (auto& z : u) usq.push_back(z * z);
                VariableSet U(usq);
                for (const Partition& lam : partitions_in_box(N, M)) {
                    std::vector<int> occ = partition_to_occupation(lam, N, M);
                    c.expect_eq(s.coeff(occ), pref * schur_eval(lam, U),
                                "N=" + std::to_string(N) + " M=" + std::to_string(M) + " " +
                                    lam.str());
                }
            }
    return c.finish();
}

CheckResult census_vs_macmahon(const CheckContext& ctx) {
    Comparisons c("phase.census_vs_macmahon");
    (void)ctx;
    for (int r = 0; r <= 3; ++r)
        for (int s = 0; s <= 3; ++s)
            for (int t = 0; t <= 3; ++t) {
                auto census = plane_partition_census(r, s, t);
                auto mac = macmahon_coefficients(r, s, t);
                c.expect_true(census.size() == mac.size(), "degree");
                for (size_t k = 0; k < census.size(); ++k)
                    c.expect_eq(Rat(census[k]), mac[k],
                                "box " + std::to_string(r) + "x" + std::to_string(s) + "x" +
                                    std::to_string(t) + " q^" + std::to_string(k));
            }
    // census at q = 1 for the 2x2x2 box is 20; 1x1x1 is 1 + q
    auto c222 = plane_partition_census(2, 2, 2);
    long total = 0;
    for (long x : c222) total += x;
    c.expect_true(total == 20, "2x2x2 has 20 plane partitions");
    auto c111 = plane_partition_census(1, 1, 1);
    c.expect_true(c111.size() == 2 && c111[0] == 1 && c111[1] == 1, "1x1x1 is 1 + q");
    return c.finish();
}

CheckResult census_complementation(const CheckContext& ctx) {
    Comparisons c("phase.census_complementation");
    (void)ctx;
    for (int r = 1; r <= 3; ++r)
        for (int s = 1; s <= 3; ++s)
            for (int t = 1; t <= 3; ++t) {
                auto census = plane_partition_census(r, s, t);
                long top = (long)r * s * t;
                for (long k = 0; k <= top; ++k)
                    c.expect_true(census[k] == census[top - k],
                                  "complementation " + std::to_string(k));
            }
    return c.finish();
}

CheckResult census_parallel_matches_serial(const CheckContext& ctx) {
    Comparisons c("phase.census_parallel");
    (void)ctx;
    auto a = plane_partition_census(3, 3, 3);
    auto b = plane_partition_census_serial(3, 3, 3);
    c.expect_true(a == b, "3x3x3");
    auto a2 = plane_partition_census(2, 3, 4);
    auto b2 = plane_partition_census_serial(2, 3, 4);
    c.expect_true(a2 == b2, "2x3x4");
    return c.finish();
}

CheckResult qenum_identity(const CheckContext& ctx) {
    Comparisons c("phase.qenum_identity");
    Rng rng = ctx.rng();
    // N = M = 1 closed form: lhs = rhs = p^{-1}(1 + q)
    {
        Rat p = rng.rational_such_that([](const Rat& r) {
            return !r.is_zero() && r != Rat(1) && r != Rat(-1);
        });
        QEnumSides sides = qenum_specialization(1, 1, p);
        Rat expect = p.inv() * (Rat(1) + p * p);
        c.expect_eq(sides.lhs, expect, "N=M=1 lhs");
        c.expect_eq(sides.rhs, expect, "N=M=1 rhs");
    }
    for (int N = 1; N <= 3; ++N)
        for (int M = 1; M <= 3; ++M)
            for (int trial = 0; trial < ctx.trials; ++trial) {
                Rat p = rng.rational_such_that([](const Rat& r) {
                    return !r.is_zero() && r != Rat(1) && r != Rat(-1);
                });
                QEnumSides sides = qenum_specialization(N, M, p);
                c.expect_eq(sides.lhs, sides.rhs,
                            "N=" + std::to_string(N) + " M=" + std::to_string(M) + " p=" +
                                p.str());
            }
    bool threw = false;
    try {
        qenum_specialization(2, 2, Rat(1));
    } catch (const std::exception&) {
        threw = true;
    }
    c.expect_true(threw, "q = 1 rejected");
    return c.finish();
}

CheckResult correlation_first(const CheckContext& ctx) {
    Comparisons c("phase.correlation_first");
    Rng rng = ctx.rng();
    for (int N = 1; N <= 3; ++N)
        for (int M = 0; M <= 3; ++M)
            for (int k = 0; k <= M; ++k)
                for (int trial = 0; trial < ctx.trials; ++trial) {
                    std::vector<Rat> u = sample_nonzero_distinct_sq(rng, N);
                    std::vector<Rat> v = sample_nonzero_distinct_sq(rng, N);
                    std::vector<Rat> vr(v.begin() + 1, v.end());
                    CorrelationValues cv = correlation_first_class(N, M, k, u, vr);
                    std::string tag = "N=" + std::to_string(N) + " M=" + std::to_string(M) +
                                      " k=" + std::to_string(k);
                    c.expect_eq(cv.bruteforce, cv.skew_sum, "brute=skew " + tag);
                    c.expect_eq(cv.skew_sum, cv.determinant, "skew=det " + tag);
                }
    return c.finish();
}

CheckResult correlation_first_resummation(const CheckContext& ctx) {
    Comparisons c("phase.correlation_first_resummation");
    Rng rng = ctx.rng();
    for (int N = 1; N <= 3; ++N)
        for (int M = 0; M <= 3; ++M)
            for (int trial = 0; trial < ctx.trials; ++trial) {
                std::vector<Rat> u = sample_nonzero_distinct_sq(rng, N);
                std::vector<Rat> v = sample_nonzero_distinct_sq(rng, N);
                std::vector<Rat> vr(v.begin() + 1, v.end());
                Rat sum(0);
                for (int k = 0; k <= M; ++k)
                    sum += v[0].pow(M - 2 * k) *
                           correlation_first_class(N, M, k, u, vr).bruteforce;
                c.expect_eq(sum, scalar_product(N, M, u, v, ScalarMethod::BruteForce),
                            "N=" + std::to_string(N) + " M=" + std::to_string(M));
            }
    return c.finish();
}

CheckResult correlation_second(const CheckContext& ctx) {
    Comparisons c("phase.correlation_second");
    Rng rng = ctx.rng();
    for (int N = 1; N <= 3; ++N)
        for (int M = 1; M <= 3; ++M)
            for (int p = 1; p <= N; ++p)
                for (int trial = 0; trial < ctx.trials; ++trial) {
                    std::vector<Rat> u = sample_nonzero_distinct_sq(rng, N - p);
                    std::vector<Rat> v = sample_nonzero_distinct_sq(rng, N);
                    CorrelationValues cv = correlation_second_class(N, M, p, u, v);
                    std::string tag = "N=" + std::to_string(N) + " M=" + std::to_string(M) +
                                      " p=" + std::to_string(p);
                    c.expect_eq(cv.bruteforce, cv.skew_sum, "brute=skew " + tag);
                    c.expect_eq(cv.bruteforce, cv.determinant, "brute=det " + tag);
                }
    return c.finish();
}

CheckResult correlation_second_resummation(const CheckContext& ctx) {
    Comparisons c("phase.correlation_second_resummation");
    Rng rng = ctx.rng();
    for (int N = 1; N <= 3; ++N)
        for (int M = 1; M <= 3; ++M)
            for (int trial = 0; trial < ctx.trials; ++trial) {
                std::vector<Rat> u = sample_nonzero_distinct_sq(rng, N);
                std::vector<Rat> v = sample_nonzero_distinct_sq(rng, N);
                std::vector<Rat> ur(u.begin(), u.end() - 1);
                Rat sum(0);
                for (int j = 0; j <= M; ++j)
                    sum += u[N - 1].pow(-M + 2 * j) *
                           second_class_determinant(N, M, {j}, ur, v);
                c.expect_eq(sum, scalar_product(N, M, u, v, ScalarMethod::BruteForce),
                            "N=" + std::to_string(N) + " M=" + std::to_string(M));
            }
    return c.finish();
}

CheckResult correlation_box_collapse(const CheckContext& ctx) {
    Comparisons c("phase.correlation_box_collapse");
    Rng rng = ctx.rng();
    // p = N: only lam = (1^N) survives, value prop to S_{(1^N)}(v^{-2})
    for (int N = 1; N <= 3; ++N)
        for (int M = 1; M <= 3; ++M) {
            std::vector<Rat> v = sample_nonzero_distinct_sq(rng, N);
            CorrelationValues cv = correlation_second_class(N, M, N, {}, v);
            std::vector<Rat> vinv;
            Rat pref(1);
            for (auto& z : v) {
                vinv.push_back((z * z).inv());
                pref *= z;
            }
            Rat expect = pref.pow(M) * schur_eval(Partition(std::vector<int>(N, 1)),
                                                  VariableSet(vinv));
            c.expect_eq(cv.bruteforce, expect,
                        "N=" + std::to_string(N) + " M=" + std::to_string(M));
        }
    return c.finish();
}

} // namespace

void register_phase_checks(std::vector<Check>& out) {
    out.push_back({"phase.monodromy_basics", monodromy_basics});
    out.push_back({"phase.commuting_families", commuting_families});
    out.push_back({"phase.scalar_three_routes", scalar_three_routes});
    out.push_back({"phase.state_schur_expansion", state_schur_expansion});
    out.push_back({"phase.census_vs_macmahon", census_vs_macmahon});
    out.push_back({"phase.census_complementation", census_complementation});
    out.push_back({"phase.census_parallel", census_parallel_matches_serial});
    out.push_back({"phase.qenum_identity", qenum_identity});
    out.push_back({"phase.correlation_first", correlation_first});
    out.push_back({"phase.correlation_first_resummation", correlation_first_resummation});
    out.push_back({"phase.correlation_second", correlation_second});
    out.push_back({"phase.correlation_second_resummation", correlation_second_resummation});
    out.push_back({"phase.correlation_box_collapse", correlation_box_collapse});
}

} // namespace taulab
