#include "taulab/checks.hpp"
#include "taulab/fermion.hpp"
#include "taulab/six_vertex.hpp"

#include <algorithm>

namespace taulab {

namespace {

using Word = std::vector<std::pair<FermKind, int>>;

bool is_creator(const std::pair<FermKind, int>& w) {
    return (w.first == FermKind::Psi && w.second >= 0) ||
           (w.first == FermKind::PsiStar && w.second < 0);
}

// naive rewriting oracle: anticommute the rightmost creator to the left,
// collecting delta contractions; independent of the pairing-sum route
Rat wick_oracle(const Word& word) {
    if (word.empty()) return Rat(1);
    auto last = word.back();
    if (!is_creator(last)) return Rat(0); // annihilates |0>
    Rat acc(0);
    int r = (int)word.size();
    for (int k = r - 2; k >= 0; --k) {
        bool contract = word[k].first != last.first && word[k].second == last.second;
        if (!contract) continue;
        Word rest;
        for (int i = 0; i < r - 1; ++i)
            if (i != k) rest.push_back(word[i]);
        Rat sub = wick_oracle(rest);
        if ((r - 2 - k) % 2) sub = -sub;
        acc += sub;
    }
    // the term with the creator moved all the way to the front dies on <0|
    return acc;
}

CheckResult wick_basics(const CheckContext& ctx) {
    Comparisons c("fermion.wick_basics");
    Rng rng = ctx.rng();
    c.expect_eq(wick_expectation({{FermKind::Psi, -1}, {FermKind::PsiStar, -1}}), Rat(1),
                "<psi_{-1} psi*_{-1}> = 1");
    c.expect_eq(wick_expectation({{FermKind::PsiStar, 0}, {FermKind::Psi, 0}}), Rat(1),
                "<psi*_0 psi_0> = 1");
    c.expect_eq(wick_expectation({{FermKind::Psi, -1}, {FermKind::PsiStar, -2}}), Rat(0),
                "mode mismatch");
    c.expect_eq(wick_expectation({{FermKind::Psi, 2}, {FermKind::PsiStar, 2}}), Rat(0),
                "<psi_2 psi*_2> = 0 (creator first)");
    c.expect_eq(
        wick_expectation({{FermKind::Psi, -1}, {FermKind::Psi, 0}, {FermKind::PsiStar, -1}}),
        Rat(0), "odd length");
    // 4-factor and 6-factor strings against the rewriting oracle
    for (int trial = 0; trial < std::max(40, 10 * ctx.trials); ++trial) {
        int len = 4 + 2 * (int)rng.below(2);
        Word w;
        for (int i = 0; i < len; ++i)
            w.push_back({rng.below(2) ? FermKind::Psi : FermKind::PsiStar,
                         (int)rng.int_in(-2, 2)});
        c.expect_eq(wick_expectation(w), wick_oracle(w), "random word vs oracle");
    }
    return c.finish();
}

CheckResult clifford_examples(const CheckContext& ctx) {
    Comparisons c("fermion.clifford_examples");
    (void)ctx;
    FockVector vac = FockVector::vacuum();
    FockVector v1 = clifford_apply(1, 0, Rat(1), vac);
    FockLabel l1{{-1}, {0}};
    c.expect_eq(v1.coeff(l1), Rat(1), "psi*_{-1} psi_0 |0>");
    c.expect_true(v1.terms().size() == 1, "single term");
    // nilpotency: same bilinear twice
    FockVector v2 = clifford_apply(1, 0, Rat(1), v1);
    c.expect_true(v2.terms().empty(), "nilpotent");
    // psi*_{-2} psi_1 on {(0,-1)} with the manual reordering sign (+1)
    FockVector v3 = clifford_apply(2, 1, Rat(1), v1);
    FockLabel l3{{-2, -1}, {0, 1}};
    c.expect_eq(v3.coeff(l3), Rat(1), "two-hook label sign");
    return c.finish();
}

CheckResult bosonize_checks(const CheckContext& ctx) {
    Comparisons c("fermion.bosonize");
    Rng rng = ctx.rng();
    TimeVector x(rng.rationals(4));
    FockVector vac = FockVector::vacuum();
    c.expect_eq(bosonize(vac, x), Rat(1), "vacuum -> 1");
    // single-hook state (0,-1) carries the sign (-1)^{j_1} = -1
    FockVector v1 = clifford_apply(1, 0, Rat(1), vac);
    c.expect_eq(bosonize(v1, x), -x.at(1), "{(0,-1)} -> -chi_(1) = -x_1");
    // linearity
    FockVector v2 = clifford_apply(2, 1, Rat(1), v1);
    FockVector sum = v1;
    sum += v2;
    c.expect_eq(bosonize(sum, x), bosonize(v1, x) + bosonize(v2, x), "linearity");
    return c.finish();
}

CheckResult plucker_instances(const CheckContext& ctx) {
    Comparisons c("fermion.plucker_instances");
    Rng rng = ctx.rng();
    for (int trial = 0; trial < ctx.trials; ++trial) {
        for (int N = 2; N <= 4; ++N) {
            SpectralPoint pt = sample_spectral_point(rng, N);
            MasterCoefficients mc = sixv_master(N, pt);
            int cols = mc.master.cols;
            std::vector<int> rows(N);
            for (int i = 0; i < N; ++i) rows[i] = i;
            auto coldet = [&](const std::vector<int>& cs) {
                return det_exact(mc.master.pick(rows, cs));
            };
            // random distinct mu_1..mu_{N-1} and nu_1..nu_{N+1}
            std::vector<int> mu, nu;
            for (int rep = 0; rep < 50 && (int)mu.size() < N - 1; ++rep) {
                int v = (int)rng.below(cols);
                if (std::find(mu.begin(), mu.end(), v) == mu.end()) mu.push_back(v);
            }
            for (int rep = 0; rep < 50 && (int)nu.size() < N + 1; ++rep) {
                int v = (int)rng.below(cols);
                if (std::find(nu.begin(), nu.end(), v) == nu.end()) nu.push_back(v);
            }
            if ((int)mu.size() < N - 1 || (int)nu.size() < N + 1) continue;
            Rat acc(0);
            for (int p = 0; p < N + 1; ++p) {
                std::vector<int> rest;
                for (int i = 0; i < N + 1; ++i)
                    if (i != p) rest.push_back(nu[i]);
                std::vector<int> withp = mu;
                withp.push_back(nu[p]);
                Rat term = coldet(rest) * coldet(withp);
                if (p % 2) acc -= term; else acc += term;
            }
            c.expect_eq(acc, Rat(0), "bilinear N x N minor sum, N=" + std::to_string(N));
        }
    }
    return c.finish();
}

CheckResult n3_plucker_example(const CheckContext& ctx) {
    Comparisons c("fermion.n3_plucker_example");
    Rng rng = ctx.rng();
    for (int trial = 0; trial < ctx.trials; ++trial) {
        SpectralPoint pt = sample_spectral_point(rng, 3);
        MasterCoefficients mc = sixv_master(3, pt);
        auto cc = [&](std::initializer_list<int> parts) {
            return mc.coeff(Partition(parts));
        };
        c.expect_eq(cc({2, 1}) * cc({1, 1, 1}) - cc({1, 1}) * cc({2, 1, 1}),
                    -(cc({}) * cc({2, 2, 2})), "(2,3,4,0,1,2)");
        c.expect_eq(cc({1}) * cc({2, 1, 1}) - cc({2}) * cc({1, 1, 1}),
                    cc({}) * cc({2, 2, 1}), "(1,3,4,0,1,2)");
        c.expect_eq(cc({2}) * cc({1, 1}) - cc({1}) * cc({2, 1}), -(cc({}) * cc({2, 2})),
                    "(0,3,4,0,1,2)");
        // the same coefficient read off the generator product
        FockVector gp = generator_product(mc, 2, 3);
        FockLabel lab{{-3, -1}, {0, 1}};
        Rat ct = mc.coeff(Partition({2, 2, 1})) / mc.coeff(Partition());
        c.expect_eq(gp.coeff(lab), ct, "coefficient of psi*_{-3}psi*_{-1}psi_0psi_1");
    }
    return c.finish();
}

// every coefficient of the generator product is +-ctilde of the multi-hook
// partition assembled from the labels
void plucker_collapse_against(Comparisons& c, const MasterCoefficients& mc, int generators,
                              int depth, const std::string& tag) {
    FockVector gp = generator_product(mc, generators, depth);
    for (auto& [lab, coeff] : gp.terms()) {
        HookCoordinates hc;
        hc.arms.assign(lab.psis.rbegin(), lab.psis.rend());
        hc.legs = lab.jstar;
        Partition lam = partition_from_hooks(hc);
        int jsum = 0;
        for (int j : lab.jstar) jsum += j;
        Rat expect = mc.coeff_tilde(lam);
        if (jsum % 2) expect = -expect;
        c.expect_eq(coeff, expect, tag + " " + lam.str());
    }
    // and every multi-hook partition in the box appears
    c.expect_true(!gp.terms().empty(), tag + " nonempty");
}

CheckResult plucker_collapse(const CheckContext& ctx) {
    Comparisons c("fermion.plucker_collapse");
    Rng rng = ctx.rng();
    for (int N = 2; N <= 4; ++N) {
        SpectralPoint pt = sample_spectral_point(rng, N);
        plucker_collapse_against(c, sixv_master(N, pt), N - 1, N, "sixv N=" + std::to_string(N));
    }
    for (auto [M, N] : std::vector<std::pair<int, int>>{{3, 2}, {3, 3}, {4, 2}}) {
        SpectralPoint pt = sample_spectral_point(rng, N, M);
        plucker_collapse_against(c, slavnov_master(N, M, pt), M - 1, N,
                                 "slavnov (M,N)=(" + std::to_string(M) + "," +
                                     std::to_string(N) + ")");
    }
    return c.finish();
}

CheckResult fermionic_dwpf(const CheckContext& ctx) {
    Comparisons c("fermion.fermionic_dwpf");
    Rng rng = ctx.rng();
    for (int N = 2; N <= 4; ++N) {
        SpectralPoint pt = sample_spectral_point(rng, N);
        MasterCoefficients mc = sixv_master(N, pt);
        FockVector gp = generator_product(mc, N - 1, N);
        TimeVector x = miwa_times(VariableSet(pt.u()), 2 * N - 2);
        Rat fermionic = sixv_upsilon(N, pt) * mc.coeff(Partition()) * bosonize(gp, x);
        c.expect_eq(fermionic, dwpf(N, pt, DwpfMethod::Lascoux), "N=" + std::to_string(N));
    }
    return c.finish();
}

CheckResult fermionic_slavnov(const CheckContext& ctx) {
    Comparisons c("fermion.fermionic_slavnov");
    Rng rng = ctx.rng();
    for (auto [M, N] : std::vector<std::pair<int, int>>{{3, 2}, {3, 3}}) {
        SpectralPoint pt = sample_spectral_point(rng, N, M);
        MasterCoefficients mc = slavnov_master(N, M, pt);
        FockVector gp = generator_product(mc, M - 1, N);
        TimeVector x = miwa_times(VariableSet(pt.u()), M + N - 2);
        Rat fermionic =
            slavnov_upsilon_prime(N, M, pt) * mc.coeff(Partition()) * bosonize(gp, x);
        c.expect_eq(fermionic, slavnov(N, M, pt, SlavnovMethod::Symmetric),
                    "(M,N)=(" + std::to_string(M) + "," + std::to_string(N) + ")");
    }
    return c.finish();
}

// generalized pairing sum over the generating sums psi(k), psi*(l) with the
// resummed two-point functions; same restricted-permutation structure as
// Wick's theorem
Rat wick_generating(const std::vector<std::pair<FermKind, Rat>>& word) {
    size_t r = word.size();
    if (r % 2 == 1) return Rat(0);
    if (r == 0) return Rat(1);
    auto two_point = [](const std::pair<FermKind, Rat>& a,
                        const std::pair<FermKind, Rat>& b) -> Rat {
        if (a.first == FermKind::Psi && b.first == FermKind::PsiStar)
            return b.second / (a.second - b.second);
        if (a.first == FermKind::PsiStar && b.first == FermKind::Psi)
            return a.second / (a.second - b.second);
        return Rat(0);
    };
    Rat acc(0);
    for (size_t k = 1; k < r; ++k) {
        Rat tp = two_point(word[0], word[k]);
        if (tp.is_zero()) continue;
        std::vector<std::pair<FermKind, Rat>> rest;
        for (size_t i = 1; i < r; ++i)
            if (i != k) rest.push_back(word[i]);
        Rat sub = tp * wick_generating(rest);
        if (k % 2 == 0) acc -= sub; else acc += sub;
    }
    return acc;
}

CheckResult wick_cauchy(const CheckContext& ctx) {
    Comparisons c("fermion.wick_cauchy");
    Rng rng = ctx.rng();
    for (int trial = 0; trial < ctx.trials; ++trial)
        for (int p = 1; p <= 3; ++p) {
            // distinct nonzero k's and l's with k_i != l_j
            std::vector<Rat> k, l;
            while ((int)k.size() < p) {
                Rat v = rng.rational();
                if (!v.is_zero()) k.push_back(v);
            }
            while ((int)l.size() < p) {
                Rat v = rng.rational();
                bool ok = !v.is_zero();
                for (auto& z : k) ok = ok && z != v;
                for (auto& z : l) ok = ok && z != v;
                if (ok) l.push_back(v);
            }
            bool distinct = true;
            for (int i = 0; i < p && distinct; ++i)
                for (int j = i + 1; j < p; ++j)
                    if (k[i] == k[j] || l[i] == l[j]) distinct = false;
            if (!distinct) continue;
            // pairing the i-th psi with the sigma(i)-th psi* interleaves the
            // factors, so the expectation is (-1)^{p(p-1)/2} times the
            // determinant value the closed form computes
            Rat sign = ((long)p * (p - 1) / 2) % 2 ? Rat(-1) : Rat(1);
            std::vector<std::pair<FermKind, Rat>> word;
            for (auto& z : k) word.push_back({FermKind::Psi, z});
            for (auto& z : l) word.push_back({FermKind::PsiStar, z});
            Rat closed(1);
            for (auto& z : l) closed *= z;
            for (int i = 0; i < p; ++i)
                for (int j = i + 1; j < p; ++j) closed *= (k[i] - k[j]) * (l[j] - l[i]);
            for (int i = 0; i < p; ++i)
                for (int j = 0; j < p; ++j) closed /= (k[i] - l[j]);
            c.expect_eq(wick_generating(word), sign * closed,
                        "psi-first p=" + std::to_string(p));
            // the conjugate ordering
            std::vector<std::pair<FermKind, Rat>> word2;
            for (auto& z : k) word2.push_back({FermKind::PsiStar, z});
            for (auto& z : l) word2.push_back({FermKind::Psi, z});
            Rat closed2(1);
            for (auto& z : k) closed2 *= z;
            for (int i = 0; i < p; ++i)
                for (int j = i + 1; j < p; ++j) closed2 *= (k[i] - k[j]) * (l[j] - l[i]);
            for (int i = 0; i < p; ++i)
                for (int j = 0; j < p; ++j) closed2 /= (k[i] - l[j]);
            c.expect_eq(wick_generating(word2), sign * closed2,
                        "psi*-first p=" + std::to_string(p));
        }
    return c.finish();
}

CheckResult generator_product_basics(const CheckContext& ctx) {
    Comparisons c("fermion.generator_product_basics");
    Rng rng = ctx.rng();
    SpectralPoint pt = sample_spectral_point(rng, 3);
    MasterCoefficients mc = sixv_master(3, pt);
    FockVector gp0 = generator_product(mc, 0, 3);
    c.expect_true(gp0 == FockVector::vacuum(), "G = 0 gives the vacuum");
    return c.finish();
}

} // namespace

void register_fermion_checks(std::vector<Check>& out) {
    out.push_back({"fermion.wick_basics", wick_basics});
    out.push_back({"fermion.clifford_examples", clifford_examples});
    out.push_back({"fermion.bosonize", bosonize_checks});
    out.push_back({"fermion.plucker_instances", plucker_instances});
    out.push_back({"fermion.n3_plucker_example", n3_plucker_example});
    out.push_back({"fermion.plucker_collapse", plucker_collapse});
    out.push_back({"fermion.fermionic_dwpf", fermionic_dwpf});
    out.push_back({"fermion.fermionic_slavnov", fermionic_slavnov});
    out.push_back({"fermion.wick_cauchy", wick_cauchy});
    out.push_back({"fermion.generator_product_basics", generator_product_basics});
}

} // namespace taulab
