#include "taulab/phase_model.hpp"

#include <omp.h>

#include <algorithm>
#include <functional>

namespace taulab {

// T(u) = L_M .. L_0 with L_j = [[1/u, phi+_j], [phi_j, u]]; thread the
// two-dimensional auxiliary space through the sites, rightmost factor first.
PhaseState monodromy_apply(MonodromyEntry which, const Rat& u, const PhaseState& state) {
    if (u.is_zero()) throw std::domain_error("monodromy_apply: u = 0");
    int M = state.sites_m();
    int aux_in = (which == MonodromyEntry::B || which == MonodromyEntry::D) ? 1 : 0;
    int aux_out = (which == MonodromyEntry::C || which == MonodromyEntry::D) ? 1 : 0;
    PhaseState comp[2] = {PhaseState(M), PhaseState(M)};
    comp[aux_in] = state;
    Rat uin = u.inv();
    for (int j = 0; j <= M; ++j) {
        PhaseState n0(M), n1(M);
        // aux-out 0: (1/u) * psi0 + phi+_j * psi1
        for (auto& [occ, c] : comp[0].terms()) n0.set(occ, n0.coeff(occ) + c * uin);
        for (auto& [occ, c] : comp[1].terms()) {
            auto o = occ;
            o[j] += 1;
            n0.set(o, n0.coeff(o) + c);
        }
        // aux-out 1: phi_j * psi0 + u * psi1
        for (auto& [occ, c] : comp[0].terms()) {
            if (occ[j] == 0) continue;
            auto o = occ;
            o[j] -= 1;
            n1.set(o, n1.coeff(o) + c);
        }
        for (auto& [occ, c] : comp[1].terms()) n1.set(occ, n1.coeff(occ) + c * u);
        comp[0] = n0;
        comp[1] = n1;
    }
    return comp[aux_out];
}

static PhaseState apply_b_string(int M, const std::vector<Rat>& u, PhaseState state) {
    for (int j = (int)u.size() - 1; j >= 0; --j)
        state = monodromy_apply(MonodromyEntry::B, u[j], state);
    return state;
}

static Rat scalar_bruteforce(int N, int M, const std::vector<Rat>& u,
                             const std::vector<Rat>& v) {
    PhaseState s = apply_b_string(M, u, PhaseState::vacuum(M));
    for (int j = N - 1; j >= 0; --j) s = monodromy_apply(MonodromyEntry::C, v[j], s);
    return s.coeff(std::vector<int>(M + 1, 0));
}

static Rat scalar_determinant(int N, int M, const std::vector<Rat>& u,
                              const std::vector<Rat>& v) {
    // the operator route fixes the overall sign of the Vandermonde prefactor
    // as (-1)^{N(N-1)/2} relative to ordering both factors by j < k
    Rat pre = ((long)N * (N - 1) / 2) % 2 ? Rat(-1) : Rat(1);
    for (int j = 0; j < N; ++j)
        for (int k = j + 1; k < N; ++k) {
            Rat du = u[j] * u[j] - u[k] * u[k];
            Rat dv = v[j] * v[j] - v[k] * v[k];
            if (du.is_zero() || dv.is_zero())
                throw std::domain_error("scalar_product: coincident squared variables");
            pre *= (u[j] * u[k] / du) * (v[j] * v[k] / dv);
        }
    Mat<Rat> H(N, N);
    for (int l = 0; l < N; ++l)
        for (int m = 0; m < N; ++m) {
            Rat pair_h = complete({u[m] * u[m], v[l] * v[l]}, M + N - 1);
            H.at(l, m) = (u[m] * v[l]).pow(-(M + N - 1)) * pair_h;
        }
    return pre * det_exact(H);
}

static Rat scalar_schur(int N, int M, const std::vector<Rat>& u, const std::vector<Rat>& v) {
    std::vector<Rat> usq, vinv;
    Rat pref(1);
    for (int j = 0; j < N; ++j) {
        usq.push_back(u[j] * u[j]);
        vinv.push_back((v[j] * v[j]).inv());
        pref *= v[j] / u[j];
    }
    VariableSet U(usq), V(vinv);
    Rat s(0);
    for (const Partition& lam : partitions_in_box(N, M))
        s += schur_eval(lam, U) * schur_eval(lam, V);
    return pref.pow(M) * s;
}

Rat scalar_product(int N, int M, const std::vector<Rat>& u, const std::vector<Rat>& v,
                   ScalarMethod method) {
    if ((int)u.size() != N || (int)v.size() != N)
        throw std::invalid_argument("scalar_product: need |u| = |v| = N");
    for (auto& z : u)
        if (z.is_zero()) throw std::domain_error("scalar_product: zero variable");
    for (auto& z : v)
        if (z.is_zero()) throw std::domain_error("scalar_product: zero variable");
    switch (method) {
        case ScalarMethod::BruteForce: return scalar_bruteforce(N, M, u, v);
        case ScalarMethod::Determinant: return scalar_determinant(N, M, u, v);
        case ScalarMethod::Schur: return scalar_schur(N, M, u, v);
    }
    throw std::logic_error("scalar_product: bad method");
}

// enumerate weakly decreasing rows bounded above elementwise
static void enumerate_rows(const std::vector<int>& bound, int maxv,
                           std::vector<std::vector<int>>& out) {
    std::vector<int> cur(bound.size());
    std::function<void(size_t, int)> rec = [&](size_t i, int cap) {
        if (i == bound.size()) {
            out.push_back(cur);
            return;
        }
        int hi = std::min(cap, bound[i]);
        for (int v = hi; v >= 0; --v) {
            cur[i] = v;
            rec(i + 1, v);
        }
    };
    rec(0, maxv);
}

static void census_rec(int r, int s, int t, int row, const std::vector<int>& above,
                       long volume_so_far, std::vector<long>& census, long& visited) {
    if (row == r) {
        census[volume_so_far]++;
        return;
    }
    std::vector<std::vector<int>> rows;
    enumerate_rows(above, t, rows);
    for (auto& rw : rows) {
        if (++visited > 4000000) throw std::runtime_error("plane_partition_census: size guard");
        long vol = volume_so_far;
        for (int x : rw) vol += x;
        census_rec(r, s, t, row + 1, rw, vol, census, visited);
    }
}

std::vector<long> plane_partition_census_serial(int r, int s, int t) {
    if (r < 0 || s < 0 || t < 0) throw std::invalid_argument("census: negative box");
    std::vector<long> census((long)r * s * t + 1, 0);
    long visited = 0;
    census_rec(r, s, t, 0, std::vector<int>(s, t), 0, census, visited);
    return census;
}

std::vector<long> plane_partition_census(int r, int s, int t) {
    if (r < 0 || s < 0 || t < 0) throw std::invalid_argument("census: negative box");
    std::vector<long> census((long)r * s * t + 1, 0);
    if (r == 0 || s == 0) {
        census[0] = 1;
        return census;
    }
    std::vector<std::vector<int>> first;
    enumerate_rows(std::vector<int>(s, t), t, first);
    std::vector<std::vector<long>> partial(first.size());
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < (long)first.size(); ++i) {
        std::vector<long> local((long)r * s * t + 1, 0);
        long vol = 0;
        for (int x : first[i]) vol += x;
        long visited = 0;
        census_rec(r, s, t, 1, first[i], vol, local, visited);
        partial[i] = std::move(local);
    }
    for (auto& loc : partial)
        for (size_t k = 0; k < loc.size(); ++k) census[k] += loc[k];
    return census;
}

std::vector<Rat> macmahon_coefficients(int r, int s, int t) {
    int deg = r * s * t;
    // numerator prod (1 - q^{t+i+j-1}), then exact division by each
    // (1 - q^{i+j-1})
    std::vector<Rat> poly(1, Rat(1));
    auto mul_factor = [&](int k) { // *(1 - q^k)
        std::vector<Rat> np(poly.size() + k, Rat(0));
        for (size_t i = 0; i < poly.size(); ++i) {
            np[i] += poly[i];
            np[i + k] -= poly[i];
        }
        poly = np;
    };
    auto div_factor = [&](int k) { // /(1 - q^k), exact
        std::vector<Rat> q(poly.size(), Rat(0));
        for (size_t i = 0; i < poly.size(); ++i) {
            Rat c = poly[i];
            if (i >= (size_t)k) c += q[i - k];
            q[i] = c;
        }
        // the left-over high-degree tail must vanish for an exact division
        for (size_t i = poly.size() - k; i < poly.size() && k > 0; ++i)
            if (!q[i].is_zero() && i > (size_t)deg)
                throw std::logic_error("macmahon: inexact division");
        poly = q;
    };
    for (int i = 1; i <= r; ++i)
        for (int j = 1; j <= s; ++j) mul_factor(t + i + j - 1);
    for (int i = 1; i <= r; ++i)
        for (int j = 1; j <= s; ++j) div_factor(i + j - 1);
    poly.resize(deg + 1, Rat(0));
    return poly;
}

QEnumSides qenum_specialization(int N, int M, const Rat& p) {
    if (p.is_zero() || p == Rat(1) || p == Rat(-1))
        throw std::domain_error("qenum_specialization: q degenerate");
    std::vector<Rat> u(N), v(N);
    for (int j = 1; j <= N; ++j) {
        u[j - 1] = p.pow(j - 1);
        v[j - 1] = p.pow(-j);
    }
    Rat q = p * p;
    bool distinct = true;
    for (int i = 0; i < N && distinct; ++i)
        for (int j = i + 1; j < N; ++j)
            if (u[i] * u[i] == u[j] * u[j] || v[i] * v[i] == v[j] * v[j]) {
                distinct = false;
                break;
            }
    QEnumSides out;
    out.lhs = scalar_product(N, M, u, v, distinct ? ScalarMethod::Determinant : ScalarMethod::Schur);
    std::vector<Rat> mac = macmahon_coefficients(N, N, M);
    Rat rhs(0);
    Rat qk(1);
    for (size_t k = 0; k < mac.size(); ++k) {
        rhs += mac[k] * qk;
        qk *= q;
    }
    out.rhs = p.pow(-(long)N * N * M) * rhs;
    return out;
}

// Omega_{v-hat-1} with the exiting variables spelled out:
// prod_{j<k} 1/(u_j^2-u_k^2) * (prod_m u_m prod_{l>=2} v_l)^{-M}
static Rat omega_vhat1(int N, int M, const std::vector<Rat>& u, const std::vector<Rat>& vr) {
    Rat om = ((long)N * (N - 1) / 2) % 2 ? Rat(-1) : Rat(1); // same sign as the scalar product

    for (int j = 0; j < N; ++j)
        for (int k = j + 1; k < N; ++k) om /= (u[j] * u[j] - u[k] * u[k]);
    Rat mono(1);
    for (auto& z : u) mono *= z;
    for (auto& z : vr) mono *= z;
    return om * mono.pow(-M);
}

CorrelationValues correlation_first_class(int N, int M, int k, const std::vector<Rat>& u,
                                          const std::vector<Rat>& v_rest) {
    if ((int)u.size() != N || (int)v_rest.size() != N - 1)
        throw std::invalid_argument("correlation_first_class: sizes");
    if (k < 0 || k > M) throw std::invalid_argument("correlation_first_class: k range");
    CorrelationValues out;

    // brute force: coefficient of the single-particle state at site k
    PhaseState s = apply_b_string(M, u, PhaseState::vacuum(M));
    for (int j = N - 2; j >= 0; --j) s = monodromy_apply(MonodromyEntry::C, v_rest[j], s);
    std::vector<int> probe(M + 1, 0);
    probe[k] = 1;
    out.bruteforce = s.coeff(probe);

    // skew-Schur sum with the paper prefactor
    std::vector<Rat> usq, vinv;
    for (auto& z : u) usq.push_back(z * z);
    for (auto& z : v_rest) vinv.push_back((z * z).inv());
    VariableSet U(usq), V(vinv);
    std::vector<int> shape(N - 1, M);
    shape.push_back(k);
    Partition box(shape);
    Partition hook({k});
    Rat sum(0);
    for (const Partition& lam : partitions_under(box)) {
        if (k > 0 && !lam.contains(hook)) continue;
        sum += schur_eval(lam, U) * skew_schur_eval(lam, hook, V);
    }
    Rat pref(1);
    for (auto& z : v_rest) pref *= z;
    for (auto& z : u) pref /= z;
    out.skew_sum = pref.pow(M) * sum;

    // single determinant Omega * det[Lambda^{(M-k)}]
    Mat<Rat> m(N, N);
    for (int c = 1; c <= N; ++c) {
        std::vector<Rat> vars1{u[c - 1] * u[c - 1]};
        for (auto& z : v_rest) vars1.push_back(z * z);
        m.at(0, c - 1) = complete(vars1, k);
        for (int r = 2; r <= N; ++r) {
            std::vector<Rat> vars{u[c - 1] * u[c - 1]};
            for (int l = r; l <= N; ++l) vars.push_back(v_rest[l - 2] * v_rest[l - 2]);
            m.at(r - 1, c - 1) = complete(vars, M - 1 + r);
        }
    }
    out.determinant = omega_vhat1(N, M, u, v_rest) * det_exact(m);
    return out;
}

Rat second_class_determinant(int N, int M, const std::vector<int>& rvec,
                             const std::vector<Rat>& u, const std::vector<Rat>& v) {
    int p = (int)rvec.size();
    if ((int)u.size() != N - p || (int)v.size() != N)
        throw std::invalid_argument("second_class_determinant: sizes");
    // Omega_{u-hat-(N+1-p)} = prod_{j<k} 1/(v_j^2 - v_k^2) (prod_{m<=N-p} u_m prod_l v_l)^{-M}
    Rat om(1);
    for (int j = 0; j < N; ++j)
        for (int k = j + 1; k < N; ++k) om /= (v[j] * v[j] - v[k] * v[k]);
    Rat mono(1);
    for (auto& z : u) mono *= z;
    for (auto& z : v) mono *= z;
    om *= mono.pow(-M);

    Mat<Rat> m(N, N);
    for (int j = 1; j <= N; ++j) {
        for (int kk = 1; kk <= N - p; ++kk) {
            std::vector<Rat> vars;
            for (int i = 0; i < kk; ++i) vars.push_back(u[i] * u[i]);
            vars.push_back(v[j - 1] * v[j - 1]);
            m.at(j - 1, kk - 1) = complete(vars, M + N - kk);
        }
        std::vector<Rat> vars;
        for (int i = 0; i < N - p; ++i) vars.push_back(u[i] * u[i]);
        vars.push_back(v[j - 1] * v[j - 1]);
        for (int i = 1; i <= p; ++i) { // column N-p+i: rho^{N-p,j}_{r_{p+1-i}+i-p}
            int gamma = rvec[p - i] + i - p;
            m.at(j - 1, N - p + i - 1) = complete(vars, M - gamma);
        }
    }
    return om * det_exact(m);
}

CorrelationValues correlation_second_class(int N, int M, int p, const std::vector<Rat>& u,
                                           const std::vector<Rat>& v) {
    if (p < 1 || p > N) throw std::invalid_argument("correlation_second_class: p range");
    if ((int)u.size() != N - p || (int)v.size() != N)
        throw std::invalid_argument("correlation_second_class: sizes");
    CorrelationValues out;

    // brute force: <0| C(v_1)..C(v_N) B(u_1)..B(u_{N-p}) (phi+_1)^p |0>
    PhaseState s = PhaseState::vacuum(M);
    std::vector<int> seeded(M + 1, 0);
    if (M >= 1) seeded[1] = p;
    PhaseState s2(M);
    s2.set(seeded, Rat(1));
    s = apply_b_string(M, u, s2);
    for (int j = N - 1; j >= 0; --j) s = monodromy_apply(MonodromyEntry::C, v[j], s);
    out.bruteforce = s.coeff(std::vector<int>(M + 1, 0));

    // skew sum with paper prefactor
    std::vector<Rat> usq, vinv;
    for (auto& z : u) usq.push_back(z * z);
    for (auto& z : v) vinv.push_back((z * z).inv());
    VariableSet U(usq), V(vinv);
    std::vector<int> shape(N - p, M);
    for (int i = 0; i < p; ++i) shape.push_back(1);
    Partition box(shape);
    std::vector<int> hookp(p, 1);
    Partition hook(hookp);
    Rat sum(0);
    for (const Partition& lam : partitions_under(box)) {
        if (!lam.contains(hook)) continue;
        sum += skew_schur_eval(lam, hook, U) * schur_eval(lam, V);
    }
    Rat pref(1);
    for (auto& z : v) pref *= z;
    for (auto& z : u) pref /= z;
    out.skew_sum = pref.pow(M) * sum;

    out.determinant = second_class_determinant(N, M, std::vector<int>(p, 1), u, v);
    return out;
}

std::vector<Rat> sample_nonzero_distinct_sq(Rng& rng, int n) {
    for (int attempt = 0; attempt < 1000; ++attempt) {
        std::vector<Rat> v = rng.rationals(n);
        bool ok = true;
        for (int i = 0; i < n && ok; ++i) {
            if (v[i].is_zero()) ok = false;
            for (int j = i + 1; j < n && ok; ++j)
                if (v[i] * v[i] == v[j] * v[j]) ok = false;
        }
        if (ok) return v;
    }
    throw std::runtime_error("sample_nonzero_distinct_sq: resample cap");
}

} // namespace taulab
