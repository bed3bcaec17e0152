#include "taulab/heights.hpp"

#include <boost/math/constants/constants.hpp>

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace taulab {

BigFloat bf_pi() { return boost::math::constants::pi<BigFloat>(); }

Cplx cplx_cos(const Cplx& z) { return {cos(z.re) * cosh(z.im), -sin(z.re) * sinh(z.im)}; }
Cplx cplx_sin(const Cplx& z) { return {sin(z.re) * cosh(z.im), cos(z.re) * sinh(z.im)}; }
Cplx cplx_exp(const Cplx& z) {
    BigFloat m = exp(z.re);
    return {m * cos(z.im), m * sin(z.im)};
}

ThetaParams ThetaParams::make(const BigFloat& q, int precision) {
    if (!(q > 0 && q < 1)) throw std::invalid_argument("ThetaParams: nome out of (0,1)");
    if (precision < 40) throw std::invalid_argument("ThetaParams: precision >= 40 digits");
    ThetaParams tp;
    tp.q = q;
    tp.precision = precision;
    // truncation from q^{2T} < 10^{-(precision+10)}
    BigFloat need = BigFloat(precision + 10) * log(BigFloat(10));
    tp.trunc = (int)ceil((need / (-2 * log(q))).convert_to<double>()) + 2;
    BigFloat k1 = bf_pi() / 2;
    BigFloat qp(1);
    for (int n = 1; n <= tp.trunc; ++n) {
        qp *= q;          // q^{2n-1}
        BigFloat qo = qp;
        qp *= q;          // q^{2n}
        BigFloat qe = qp;
        BigFloat f = ((1 + qo) / (1 - qo)) * ((1 - qe) / (1 + qe));
        k1 *= f * f;
    }
    tp.K1 = k1;
    tp.K2 = -k1 * log(q) / bf_pi();
    return tp;
}

template <class C, class CosF, class SinF>
static C theta_product(ThetaKind kind, const C& u, const ThetaParams& tp, const CosF& coss,
                       const SinF& sins) {
    const BigFloat& q = tp.q;
    C arg_half = u * C(bf_pi() / (2 * tp.K1));
    C arg_full = u * C(bf_pi() / tp.K1);
    bool odd_base = (kind == ThetaKind::H || kind == ThetaKind::H1);
    bool plus = (kind == ThetaKind::H1 || kind == ThetaKind::Theta1);
    C res;
    if (kind == ThetaKind::H) res = C(2 * pow(q, BigFloat(1) / 4)) * sins(arg_half);
    else if (kind == ThetaKind::H1) res = C(2 * pow(q, BigFloat(1) / 4)) * coss(arg_half);
    else res = C(BigFloat(1));
    BigFloat qn(1);
    BigFloat qx = odd_base ? BigFloat(1) : 1 / q; // q^{2n} for H/H1, q^{2n-1} for Theta
    for (int n = 1; n <= tp.trunc; ++n) {
        qn *= q * q;
        qx *= q * q;
        C osc = C(2 * qx) * coss(arg_full);
        C f = plus ? (C(1 + qx * qx) + osc) : (C(1 + qx * qx) - osc);
        res = res * f * C(1 - qn);
    }
    return res;
}

BigFloat theta_eval(ThetaKind kind, const BigFloat& u, const ThetaParams& tp) {
    return theta_product<BigFloat>(
        kind, u, tp, [](const BigFloat& z) { return cos(z); },
        [](const BigFloat& z) { return sin(z); });
}

Cplx theta_eval_c(ThetaKind kind, const Cplx& u, const ThetaParams& tp) {
    return theta_product<Cplx>(
        kind, u, tp, [](const Cplx& z) { return cplx_cos(z); },
        [](const Cplx& z) { return cplx_sin(z); });
}

BigFloat rel_residual(const BigFloat& lhs, const BigFloat& rhs) {
    BigFloat scale = std::max(abs(lhs), abs(rhs));
    if (scale == 0) return BigFloat(0);
    return abs(lhs - rhs) / scale;
}

static bool small(const BigFloat& x) { return abs(x) < BigFloat("1e-6"); }

// ---- generic height-lattice DFS ----

namespace {

// Sweep the N x N faces row-major. place(i, j) yields the corner value
// h[i][j]; corners on the right/bottom boundary are fixed. face(i, j) is
// evaluated once its four corners are known.
template <class FaceFn>
void face_dfs(int N, int i, int j, BigFloat w, std::vector<std::vector<int>>& h,
              const std::function<std::vector<int>(int, int)>& corner_choices,
              const FaceFn& face, BigFloat& acc) {
    if (i == N + 1) {
        acc += w;
        return;
    }
    int ni = (j == N) ? i + 1 : i;
    int nj = (j == N) ? 1 : j + 1;
    for (int cand : corner_choices(i, j)) {
        int save = h[i][j];
        h[i][j] = cand;
        BigFloat fw = face(i, j);
        if (fw != 0) face_dfs(N, ni, nj, w * fw, h, corner_choices, face, acc);
        h[i][j] = save;
    }
}

} // namespace

// ---- BSOS ----

BigFloat BsosParams::bracket(const BigFloat& x) const {
    return theta_eval(ThetaKind::H, lambda * x, theta) *
           theta_eval(ThetaKind::Theta, lambda * x, theta);
}

BsosParams sample_bsos(Rng& rng, int N, int precision) {
    for (int attempt = 0; attempt < 200; ++attempt) {
        BsosParams par;
        par.theta = ThetaParams::make(BigFloat(rng.real_in(0.15, 0.45)), precision);
        par.lambda = BigFloat(rng.real_in(0.2, 0.7));
        par.zeta = BigFloat(rng.real_in(1.2, 2.8));
        par.u.clear();
        par.v.clear();
        for (int i = 0; i < N; ++i) par.u.push_back(BigFloat(rng.real_in(0.05, 0.45)));
        for (int j = 0; j < N; ++j) par.v.push_back(BigFloat(rng.real_in(-0.45, -0.05)));
        bool ok = !small(par.bracket(1));
        for (int l = 0; l <= 2 * N && ok; ++l)
            if (small(par.bracket(par.zeta + l))) ok = false;
        for (int i = 0; i < N && ok; ++i)
            for (int j = 0; j < N && ok; ++j)
                if (small(par.bracket(par.u[i] - par.v[j]))) ok = false;
        for (int i = 0; i < N && ok; ++i)
            for (int j = i + 1; j < N && ok; ++j)
                if (small(par.bracket(par.u[i] - par.u[j]))) ok = false;
        if (ok) return par;
    }
    throw std::runtime_error("sample_bsos: resample cap");
}

// face weight from corners a = TL, b = TR, d = BL, c = BR
static BigFloat bsos_face(const BsosParams& par, int a, int b, int d, int c, const BigFloat& x) {
    auto br = [&](const BigFloat& z) { return par.bracket(z); };
    int db = b - a, dd = d - a, dc = c - a;
    if (db == dd) {
        if (dc == 2 * db) return br(x + 1) / br(1);            // W_A
        return br(par.zeta + a - db * x) / br(par.zeta + a);   // W_C,+- (sign = db)
    }
    return (br(x) / br(1)) * (br(par.zeta + a + db) / br(par.zeta + a)); // W_B,+-
}

BigFloat bsos_bruteforce_serial(int N, const BsosParams& par, int base_height) {
    if (N > 6) throw std::invalid_argument("bsos: size guard");
    std::vector<std::vector<int>> h(N + 1, std::vector<int>(N + 1, 0));
    for (int k = 0; k <= N; ++k) {
        h[0][k] = base_height + k;
        h[k][0] = base_height + k;
        h[N][k] = base_height + N - k;
        h[k][N] = base_height + N - k;
    }
    auto corner_choices = [&](int i, int j) {
        std::vector<int> out;
        if (i == N || j == N) {
            out.push_back(h[i][j]); // boundary
            return out;
        }
        for (int dh : {1, -1}) {
            int cand = h[i - 1][j] + dh;
            if (std::abs(cand - h[i][j - 1]) != 1) continue;
            if (i == N - 1 && std::abs(cand - h[N][j]) != 1) continue;
            if (j == N - 1 && std::abs(cand - h[i][N]) != 1) continue;
            out.push_back(cand);
        }
        return out;
    };
    auto face = [&](int i, int j) {
        return bsos_face(par, h[i - 1][j - 1], h[i - 1][j], h[i][j - 1], h[i][j],
                         par.u[i - 1] - par.v[j - 1]);
    };
    BigFloat acc(0);
    face_dfs(N, 1, 1, BigFloat(1), h, corner_choices, face, acc);
    return acc;
}

BigFloat bsos_bruteforce(int N, const BsosParams& par, int base_height) {
    if (N <= 2) return bsos_bruteforce_serial(N, par, base_height);
    if (N > 6) throw std::invalid_argument("bsos: size guard");
    std::vector<std::vector<int>> h(N + 1, std::vector<int>(N + 1, 0));
    for (int k = 0; k <= N; ++k) {
        h[0][k] = base_height + k;
        h[k][0] = base_height + k;
        h[N][k] = base_height + N - k;
        h[k][N] = base_height + N - k;
    }
    // enumerate the first interior corner row (row 1) with its face weights,
    // then expand each branch independently
    struct Branch {
        std::vector<int> row1;
        BigFloat weight;
    };
    std::vector<Branch> branches;
    std::function<void(int, BigFloat)> first_row = [&](int j, BigFloat w) {
        if (j == N + 1) {
            std::vector<int> r1(N + 1);
            for (int k = 0; k <= N; ++k) r1[k] = h[1][k];
            branches.push_back({r1, w});
            return;
        }
        std::vector<int> choices;
        if (j == N) choices.push_back(h[1][N]);
        else {
            for (int dh : {1, -1}) {
                int cand = h[0][j] + dh;
                if (std::abs(cand - h[1][j - 1]) != 1) continue;
                if (N == 2 && std::abs(cand - h[2][j]) != 1) continue;
                if (j == N - 1 && std::abs(cand - h[1][N]) != 1) continue;
                choices.push_back(cand);
            }
        }
        for (int cand : choices) {
            int save = h[1][j];
            h[1][j] = cand;
            BigFloat fw = bsos_face(par, h[0][j - 1], h[0][j], h[1][j - 1], h[1][j],
                                    par.u[0] - par.v[j - 1]);
            first_row(j + 1, w * fw);
            h[1][j] = save;
        }
    };
    first_row(1, BigFloat(1));

    std::vector<BigFloat> partial(branches.size(), BigFloat(0));
#pragma omp parallel for schedule(dynamic)
    for (long b = 0; b < (long)branches.size(); ++b) {
        std::vector<std::vector<int>> hh = h;
        hh[1] = branches[b].row1;
        auto corner_choices = [&](int i, int j) {
            std::vector<int> out;
            if (i == N || j == N) {
                out.push_back(hh[i][j]);
                return out;
            }
            for (int dh : {1, -1}) {
                int cand = hh[i - 1][j] + dh;
                if (std::abs(cand - hh[i][j - 1]) != 1) continue;
                if (i == N - 1 && std::abs(cand - hh[N][j]) != 1) continue;
                if (j == N - 1 && std::abs(cand - hh[i][N]) != 1) continue;
                out.push_back(cand);
            }
            return out;
        };
        auto face = [&](int i, int j) {
            return bsos_face(par, hh[i - 1][j - 1], hh[i - 1][j], hh[i][j - 1], hh[i][j],
                             par.u[i - 1] - par.v[j - 1]);
        };
        BigFloat acc(0);
        face_dfs(N, 2, 1, branches[b].weight, hh, corner_choices, face, acc);
        partial[b] = acc;
    }
    BigFloat total(0);
    for (const BigFloat& t : partial) total += t; // fixed order
    return total;
}

static BigFloat bsos_permutation_sum(int N, const BsosParams& par) {
    auto br = [&](const BigFloat& z) { return par.bracket(z); };
    std::vector<int> perm(N);
    std::iota(perm.begin(), perm.end(), 0);
    BigFloat one_b = br(1);
    BigFloat acc(0);
    do {
        BigFloat term(1);
        for (int i = 0; i < N; ++i)
            for (int j = i + 1; j < N; ++j) {
                term *= br(par.u[perm[i]] - par.v[j]) / one_b;                  // W_B part
                BigFloat dd = par.u[perm[i]] - par.u[perm[j]];
                term *= br(dd + 1) / br(dd);                                    // f_(1)
                term *= br(par.u[perm[j]] - par.v[i] + 1) / one_b;              // W_A
            }
        for (int k = 1; k <= N; ++k) {
            int l = N - k;
            term *= br(par.zeta + l - (par.u[perm[k - 1]] - par.v[k - 1])) / br(par.zeta + l);
        }
        acc += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return acc;
}

BigFloat bsos_dwpf(int N, const BsosParams& par, HeightMethod method, int base_height) {
    switch (method) {
        case HeightMethod::BruteForce: return bsos_bruteforce_serial(N, par, base_height);
        case HeightMethod::PermutationSum:
            if (base_height != 0)
                throw std::invalid_argument("bsos: permutation sum is the base-height-0 form");
            if (N > 7) throw std::invalid_argument("bsos: permutation sum size guard");
            return bsos_permutation_sum(N, par);
        case HeightMethod::Product:
            throw std::invalid_argument("bsos: no product form");
    }
    throw std::logic_error("bsos_dwpf: bad method");
}

BigFloat bsos_recursion_rhs(int N, const BsosParams& par) {
    auto br = [&](const BigFloat& z) { return par.bracket(z); };
    BigFloat one_b = br(1);
    BigFloat acc(0);
    for (int r = 0; r < N; ++r) {
        BigFloat term = br(par.zeta - (par.u[r] - par.v[N - 1])) / br(par.zeta); // W^0_{C,+}
        for (int j = 0; j < N; ++j) {
            if (j == r) continue;
            term *= br(par.u[j] - par.v[N - 1]) / one_b;
            BigFloat dd = par.u[j] - par.u[r];
            term *= br(dd + 1) / br(dd);
        }
        for (int j = 0; j < N - 1; ++j) term *= br(par.u[r] - par.v[j] + 1) / one_b;
        BsosParams sub = par;
        sub.u.erase(sub.u.begin() + r);
        sub.v.pop_back();
        term *= bsos_bruteforce_serial(N - 1, sub, 1);
        acc += term;
    }
    return acc;
}

// ---- trigonometric PS ----

PsTrigParams sample_ps_trig(Rng& rng, int N) {
    for (int attempt = 0; attempt < 200; ++attempt) {
        PsTrigParams par;
        par.eta = BigFloat(rng.real_in(0.3, 0.9));
        par.r = (int)rng.int_in(0, 2);
        par.s = (int)rng.int_in(0, 2);
        for (int i = 0; i < N; ++i) par.u.push_back(BigFloat(rng.real_in(0.1, 1.4)));
        for (int j = 0; j < N; ++j) par.v.push_back(BigFloat(rng.real_in(-1.4, -0.1)));
        bool ok = true;
        for (int i = 0; i < N && ok; ++i)
            for (int j = i + 1; j < N && ok; ++j)
                if (small(sinh(par.eta * (par.u[i] - par.u[j]))) ||
                    small(sinh(par.eta * (par.v[i] - par.v[j]))))
                    ok = false;
        if (ok) return par;
    }
    throw std::runtime_error("sample_ps_trig: resample cap");
}

// vertex weight from bond colours (west, south incoming; north, east
// outgoing); the weight table distinguishes the B_- and B_+ blocks
static BigFloat ps_vertex(const PsTrigParams& par, int cw, int cs, int cn, int ce,
                          const BigFloat& x) {
    auto in_minus = [&](int c) { return c <= par.s + 1; };
    BigFloat sh = sinh(par.eta);
    if (cw == cs && cs == cn && cn == ce)
        return in_minus(cw) ? sinh(par.eta * (1 - x)) / sh : sinh(par.eta * (1 + x)) / sh;
    if (cw == ce && cs == cn && cw != cs) { // both lines pass straight
        bool same_block = (in_minus(cw) == in_minus(cs));
        BigFloat val = sinh(par.eta * x) / sh;
        return same_block ? -val : val;
    }
    if (cw == cn && cs == ce && cw != cs) // west turns north, south turns east
        return (cw < cs) ? exp(par.eta * x) : exp(-par.eta * x);
    throw std::logic_error("ps_vertex: colour conservation violated");
}

// two-colour {1, L} bulk: interior bonds only ever carry the boundary
// colours, so the sum runs over the same branching structure as the
// six-vertex line picture
static BigFloat ps_trig_sum(int N, const PsTrigParams& par) {
    int L = par.r + par.s + 2;
    std::function<BigFloat(int, uint32_t)> rows = [&](int row, uint32_t above) -> BigFloat {
        if (row == N) // south boundary: all colour L
            return above == (uint32_t)((1u << N) - 1) ? BigFloat(1) : BigFloat(0);
        BigFloat sum(0);
        // resolve left to right; west boundary colour 1, east boundary L
        std::function<void(int, int, uint32_t, BigFloat)> cell =
            [&](int col, int west, uint32_t below, BigFloat w) {
                if (col == N) {
                    if (west == L) sum += w * rows(row + 1, below);
                    return;
                }
                int north = ((above >> col) & 1) ? L : 1;
                for (int south : {1, L}) {
                    for (int east : {1, L}) {
                        int inL = (west == L) + (south == L);
                        int outL = (north == L) + (east == L);
                        if (inL != outL) continue;
                        bool valid = (west == south && south == north && north == east) ||
                                     (west == east && south == north && west != south) ||
                                     (west == north && south == east && west != south);
                        if (!valid) continue;
                        BigFloat wt =
                            ps_vertex(par, west, south, north, east, par.u[row] - par.v[col]);
                        uint32_t nb = below;
                        if (south == L) nb |= (1u << col);
                        cell(col + 1, east, nb, w * wt);
                    }
                }
            };
        cell(0, 1, 0u, BigFloat(1));
        return sum;
    };
    return rows(0, 0u); // north boundary: all colour 1
}

BigFloat ps_trig_bruteforce_serial(int N, const PsTrigParams& par) {
    if (N > 6) throw std::invalid_argument("ps_trig: size guard");
    return ps_trig_sum(N, par);
}

BigFloat ps_trig_bruteforce_full_colours(int N, const PsTrigParams& par) {
    int L = par.r + par.s + 2;
    if (N > 2 || L > 6) throw std::invalid_argument("ps_trig_full: tiny sizes only");
    int nh = N * (N - 1), nv = N * (N - 1);
    auto hidx = [&](int i, int j) { return i * (N - 1) + j; };
    auto vidx = [&](int i, int j) { return nh + i * N + j; };
    BigFloat acc(0);
    std::vector<int> colour(nh + nv, 1);
    std::function<void(int)> rec = [&](int b) {
        if (b == nh + nv) {
            BigFloat w(1);
            for (int i = 0; i < N && w != 0; ++i)
                for (int j = 0; j < N; ++j) {
                    int cw = (j == 0) ? 1 : colour[hidx(i, j - 1)];
                    int ce = (j == N - 1) ? L : colour[hidx(i, j)];
                    int cn = (i == 0) ? 1 : colour[vidx(i - 1, j)];
                    int cs = (i == N - 1) ? L : colour[vidx(i, j)];
                    bool valid = (cw == cs && cs == cn && cn == ce) ||
                                 (cw == ce && cs == cn && cw != cs) ||
                                 (cw == cn && cs == ce && cw != cs);
                    if (!valid) {
                        w = 0;
                        break;
                    }
                    w *= ps_vertex(par, cw, cs, cn, ce, par.u[i] - par.v[j]);
                }
            acc += w;
            return;
        }
        for (int c = 1; c <= L; ++c) {
            colour[b] = c;
            rec(b + 1);
        }
    };
    rec(0);
    return acc;
}

static BigFloat ps_trig_product(int N, const PsTrigParams& par) {
    BigFloat sh = sinh(par.eta);
    BigFloat z(1);
    for (int k = 0; k < N; ++k) z *= exp(par.eta * (par.u[k] - par.v[k]));
    for (int i = 0; i < N; ++i)
        for (int j = i + 1; j < N; ++j) {
            z *= sinh(par.eta * (1 - par.u[i] + par.u[j])) / sh;
            z *= sinh(par.eta * (1 + par.v[i] - par.v[j])) / sh;
        }
    return z;
}

BigFloat ps_trig_dwpf(int N, const PsTrigParams& par, HeightMethod method) {
    switch (method) {
        case HeightMethod::BruteForce:
            if (N > 6) throw std::invalid_argument("ps_trig: size guard");
            return ps_trig_sum(N, par);
        case HeightMethod::Product: return ps_trig_product(N, par);
        case HeightMethod::PermutationSum:
            throw std::invalid_argument("ps_trig: no permutation-sum form");
    }
    throw std::logic_error("ps_trig_dwpf: bad method");
}

BigFloat ps_trig_recursion_rhs(int N, const PsTrigParams& par) {
    BigFloat sh = sinh(par.eta);
    BigFloat term = exp(par.eta); // X^{1,L}_{1,L}(1)
    for (int k = 1; k < N; ++k) {
        term *= sinh(par.eta * (par.u[0] - par.v[k])) / sh;
        term *= sinh(par.eta * (par.u[k] - par.v[0])) / sh;
    }
    PsTrigParams sub = par;
    sub.u.erase(sub.u.begin());
    sub.v.erase(sub.v.begin());
    return term * ps_trig_product(N - 1, sub);
}

BigFloat ps_trig_recursion2_rhs(int N, const PsTrigParams& par) {
    BigFloat sh = sinh(par.eta);
    BigFloat term(1); // X^{1,L}_{1,L}(0) = 1
    for (int k = 0; k < N - 1; ++k) term *= sinh(par.eta * (1 - par.u[k] + par.v[0])) / sh;
    for (int k = 1; k < N; ++k) term *= sinh(par.eta * (1 + par.u[N - 1] - par.v[k])) / sh;
    PsTrigParams sub = par;
    sub.u.pop_back();
    sub.v.erase(sub.v.begin());
    return term * ps_trig_product(N - 1, sub);
}

BigFloat ps_trig_line_permutation_rhs(int N, const PsTrigParams& par) {
    BigFloat pre(1);
    for (int j = 1; j < N; ++j) {
        BigFloat d = par.u[0] - par.u[j];
        pre *= sinh(par.eta * (1 - d)) / sinh(par.eta * (1 + d));
    }
    PsTrigParams cyc = par;
    std::rotate(cyc.u.begin(), cyc.u.begin() + 1, cyc.u.end());
    return pre * ps_trig_product(N, cyc);
}

// ---- elliptic PS ----

BigFloat PsEllipticParams::bracket(const BigFloat& x) const {
    return theta_eval(ThetaKind::H, lambda * x, theta);
}

PsEllipticParams sample_ps_elliptic(Rng& rng, int N, int precision) {
    for (int attempt = 0; attempt < 200; ++attempt) {
        PsEllipticParams par;
        par.theta = ThetaParams::make(BigFloat(rng.real_in(0.15, 0.45)), precision);
        par.lambda = BigFloat(rng.real_in(0.2, 0.6));
        par.a0 = BigFloat(rng.real_in(1.1, 2.6));
        par.u.clear();
        par.v.clear();
        for (int i = 0; i < N; ++i) par.u.push_back(BigFloat(rng.real_in(0.05, 0.5)));
        for (int j = 0; j < N; ++j) par.v.push_back(BigFloat(rng.real_in(-0.5, -0.05)));
        bool ok = !small(par.bracket(1));
        for (int k = 0; k <= 2 * N + 1 && ok; ++k)
            if (small(par.bracket(par.a0 + k))) ok = false;
        for (int i = 0; i < N && ok; ++i)
            for (int j = 0; j < N && ok; ++j)
                if (small(par.bracket(par.u[i] - par.v[j]))) ok = false;
        for (int i = 0; i < N && ok; ++i)
            for (int j = i + 1; j < N && ok; ++j)
                if (small(par.bracket(par.u[i] - par.u[j]))) ok = false;
        if (ok) return par;
    }
    throw std::runtime_error("sample_ps_elliptic: resample cap");
}

// face weight from the e_1 step counts m of the four corners; the corner
// (i, j) state is a0 + m e_1 + (i + j - m) e_L and only a_{1L} = a0 + i + j
// enters the weights
static BigFloat ps_face(const PsEllipticParams& par, int shift, int ma, int mb, int md, int mc,
                        int depth_a, const BigFloat& x) {
    auto br = [&](const BigFloat& z) { return par.bracket(z); };
    int db = mb - ma, dd = md - ma, dc = mc - ma;
    BigFloat a1l = par.a0 + shift + depth_a; // depth_a = (i-1)+(j-1) of corner a
    if (dc == 2 || (dc == 0 && db == 0)) {
        // A,+ (two e_1 steps) or A,- (two e_L steps)
        int sgn = (dc == 2) ? 1 : -1;
        return br(1 + sgn * x) / br(1);
    }
    // dc == 1: mixed step
    if (db == dd) {
        int sgn = (db == 1) ? 1 : -1; // C,+/-
        return br(a1l - sgn * x) / br(a1l);
    }
    int sgn = (db == 1) ? 1 : -1; // B,+/-
    return (br(x) / br(1)) * (br(a1l + sgn) / br(a1l));
}

BigFloat ps_elliptic_bruteforce_serial(int N, const PsEllipticParams& par, int base_shift) {
    if (N > 6) throw std::invalid_argument("ps_elliptic: size guard");
    std::vector<std::vector<int>> m(N + 1, std::vector<int>(N + 1, 0));
    for (int k = 0; k <= N; ++k) {
        m[0][k] = k;
        m[k][0] = k;
        m[N][k] = N;
        m[k][N] = N;
    }
    auto corner_choices = [&](int i, int j) {
        std::vector<int> out;
        if (i == N || j == N) {
            out.push_back(m[i][j]);
            return out;
        }
        for (int cand : {m[i][j - 1] + 1, m[i][j - 1]}) {
            if (cand != m[i - 1][j] && cand != m[i - 1][j] + 1) continue;
            if (i == N - 1 && !(m[N][j] == cand || m[N][j] == cand + 1)) continue;
            if (j == N - 1 && !(m[i][N] == cand || m[i][N] == cand + 1)) continue;
            out.push_back(cand);
        }
        return out;
    };
    auto face = [&](int i, int j) {
        return ps_face(par, base_shift, m[i - 1][j - 1], m[i - 1][j], m[i][j - 1], m[i][j],
                       (i - 1) + (j - 1), par.u[i - 1] - par.v[j - 1]);
    };
    BigFloat acc(0);
    face_dfs(N, 1, 1, BigFloat(1), m, corner_choices, face, acc);
    return acc;
}

static BigFloat ps_elliptic_product(int N, const PsEllipticParams& par, int base_shift) {
    auto br = [&](const BigFloat& z) { return par.bracket(z); };
    BigFloat a1l = par.a0 + base_shift;
    BigFloat sum_uv(0);
    for (int k = 0; k < N; ++k) sum_uv += par.u[k] - par.v[k];
    BigFloat z = br(a1l + (N - 1) - sum_uv) / br(a1l + (N - 1));
    for (int i = 0; i < N; ++i)
        for (int j = i + 1; j < N; ++j) {
            z *= br(1 + par.u[i] - par.u[j]) / br(1);
            z *= br(1 - (par.v[i] - par.v[j])) / br(1);
        }
    return z;
}

BigFloat ps_elliptic_dwpf(int N, const PsEllipticParams& par, HeightMethod method,
                          int base_shift) {
    switch (method) {
        case HeightMethod::BruteForce: return ps_elliptic_bruteforce_serial(N, par, base_shift);
        case HeightMethod::Product: return ps_elliptic_product(N, par, base_shift);
        case HeightMethod::PermutationSum:
            throw std::invalid_argument("ps_elliptic: no permutation-sum form");
    }
    throw std::logic_error("ps_elliptic_dwpf: bad method");
}

Cplx ps_elliptic_product_c(int N, const PsEllipticParams& par, const Cplx& u1) {
    auto br = [&](const Cplx& z) {
        return theta_eval_c(ThetaKind::H, z * Cplx(par.lambda), par.theta);
    };
    std::vector<Cplx> u;
    u.push_back(u1);
    for (int i = 1; i < N; ++i) u.push_back(Cplx(par.u[i]));
    Cplx sum_uv;
    for (int k = 0; k < N; ++k) sum_uv = sum_uv + u[k] - Cplx(par.v[k]);
    Cplx z = br(Cplx(par.a0 + (N - 1)) - sum_uv) / br(Cplx(par.a0 + (N - 1)));
    Cplx one_b = br(Cplx(BigFloat(1)));
    for (int i = 0; i < N; ++i)
        for (int j = i + 1; j < N; ++j) {
            z = z * (br(Cplx(BigFloat(1)) + u[i] - u[j]) / one_b);
            z = z * (br(Cplx(1 - (par.v[i] - par.v[j]))) / one_b);
        }
    return z;
}

EllipticIdentitySides elliptic_identity_sides(int N, const PsEllipticParams& par) {
    if (N < 2) throw std::invalid_argument("elliptic_identity: N >= 2");
    auto br = [&](const BigFloat& z) { return par.bracket(z); };
    const auto& u = par.u;
    const auto& v = par.v;
    const BigFloat& a = par.a0;
    BigFloat sum_uv(0);
    for (int k = 0; k < N; ++k) sum_uv += u[k] - v[k];
    BigFloat lhs = br(a + (N - 1) - sum_uv);
    for (int j = 0; j < N - 1; ++j) lhs *= br(1 - (v[j] - v[N - 1]));
    for (int i = 0; i < N; ++i)
        for (int j = i + 1; j < N; ++j) lhs *= br(u[i] - u[j]);
    lhs *= br(a + 2 * (N - 1));

    BigFloat rhs(0);
    for (int k = 0; k < N; ++k) {
        BigFloat term = br(a + 2 * (N - 1) - (u[k] - v[N - 1]));
        for (int j = 0; j < N; ++j)
            if (j != k) term *= br(u[j] - v[N - 1]);
        for (int j = 0; j < N - 1; ++j) term *= br(1 + u[k] - v[j]);
        BigFloat arg = a + (N - 1);
        for (int j = 0; j < N; ++j)
            if (j != k) arg -= u[j];
        for (int j = 0; j < N - 1; ++j) arg += v[j];
        term *= br(arg);
        for (int i = 0; i < N; ++i)
            for (int j = i + 1; j < N; ++j)
                if (i != k && j != k) term *= br(u[i] - u[j]);
        if ((N - 1 - k) % 2) term = -term;
        rhs += term;
    }
    return {lhs, rhs, rel_residual(lhs, rhs)};
}

EllipticIdentitySides simple_theta_identity(const ThetaParams& tp, const BigFloat& u,
                                            const BigFloat& v, const BigFloat& x,
                                            const BigFloat& y) {
    auto H = [&](const BigFloat& z) { return theta_eval(ThetaKind::H, z, tp); };
    BigFloat lhs = H(x - y) * H(x + y) * H(u + v) * H(u - v);
    BigFloat rhs = H(u + x) * H(u - x) * H(v + y) * H(v - y) -
                   H(u + y) * H(u - y) * H(v + x) * H(v - x);
    return {lhs, rhs, rel_residual(lhs, rhs)};
}

} // namespace taulab
