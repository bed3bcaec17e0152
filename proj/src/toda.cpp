#include "taulab/toda.hpp"

namespace taulab {

TodaFamily sample_family(Rng& rng, int m, int n, bool random_times) {
    if (n <= m) throw std::invalid_argument("sample_family: need m < n");
    int d = n - m;
    TodaFamily fam;
    fam.m = m;
    fam.n = n;
    for (int attempt = 0; attempt < 1000; ++attempt) {
        Mat<Rat> A(d, d);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) A.at(i, j) = rng.rational();
        bool ok = true;
        for (int s = 1; s <= d; ++s) {
            std::vector<int> idx(s);
            for (int i = 0; i < s; ++i) idx[i] = i;
            if (det_exact(A.pick(idx, idx)).is_zero()) { ok = false; break; }
        }
        if (ok) {
            fam.A = A;
            break;
        }
        if (attempt == 999) throw std::runtime_error("sample_family: resample cap");
    }
    std::vector<Rat> xs(d - 1), ys(d - 1);
    for (int k = 0; k < d - 1; ++k) {
        xs[k] = random_times ? rng.rational() : Rat(0);
        ys[k] = random_times ? rng.rational() : Rat(0);
    }
    fam.x = TimeVector(xs);
    fam.y = TimeVector(ys);
    return fam;
}

Mat<Rat> dressed_matrix(const TodaFamily& fam) {
    return dressed_matrix_ring(fam.A, fam.x.x, fam.y.x, Rat(1));
}

Rat tau_family(const TodaFamily& fam, int s) {
    if (s < fam.m || s > fam.n) throw std::invalid_argument("tau_family: s out of range");
    if (s == fam.m) return Rat(1);
    Mat<Rat> d = dressed_matrix(fam);
    std::vector<int> idx(s - fam.m);
    for (int i = 0; i < s - fam.m; ++i) idx[i] = i;
    return det_exact(d.pick(idx, idx));
}

Rat wave_entry(const TodaFamily& fam, WaveKind which, int k, int s) {
    int m = fam.m, n = fam.n;
    int sig = s - m; // local row/col count of tau(s)
    Mat<Rat> d = dressed_matrix(fam);
    auto range = [](int lo, int hi) { // inclusive local indices
        std::vector<int> v;
        for (int i = lo; i <= hi; ++i) v.push_back(i);
        return v;
    };
    auto minor_det = [&](const std::vector<int>& ri, const std::vector<int>& ci) {
        return det_exact(d.pick(ri, ci));
    };
    std::vector<int> lead = range(0, sig - 1);
    switch (which) {
        case WaveKind::WInf: { // rows m..s \ {s-k}, cols m..s-1, sign (-1)^k
            if (k < 0 || k > sig || s >= n) throw std::invalid_argument("wave_entry: range");
            std::vector<int> ri;
            for (int i = 0; i <= sig; ++i)
                if (i != sig - k) ri.push_back(i);
            Rat v = minor_det(ri, lead) / tau_family(fam, s);
            return (k % 2) ? -v : v;
        }
        case WaveKind::W0: { // rows m..s, cols m..s-1 and s+k
            if (k < 0 || k > n - s - 1) throw std::invalid_argument("wave_entry: range");
            std::vector<int> ci = lead;
            ci.push_back(sig + k);
            return minor_det(range(0, sig), ci) / tau_family(fam, s);
        }
        case WaveKind::W0Star: { // rows m..s-1, cols m..s \ {s-k}, sign (-1)^k
            if (k < 0 || k > sig || s >= n) throw std::invalid_argument("wave_entry: range");
            std::vector<int> ci;
            for (int j = 0; j <= sig; ++j)
                if (j != sig - k) ci.push_back(j);
            Rat v = minor_det(lead, ci) / tau_family(fam, s + 1);
            return (k % 2) ? -v : v;
        }
        case WaveKind::WInfStar: { // rows m..s-1 and s+k, cols m..s
            if (k < 0 || k > n - s - 1) throw std::invalid_argument("wave_entry: range");
            std::vector<int> ri = lead;
            ri.push_back(sig + k);
            return minor_det(ri, range(0, sig)) / tau_family(fam, s + 1);
        }
    }
    throw std::logic_error("wave_entry: bad kind");
}

// Build the shift matrix over Laurent polynomials: the eps(1/lambda) shifts
// act as (1 - Lambda/lambda)^{+-1} on the left or (1 - Lambda^T/lambda)^{+-1}
// on the right of the dressed matrix.
static Mat<LaurentPoly> shifted_dressed(const Mat<Rat>& d, TimeShift which) {
    int n = d.rows;
    Mat<LaurentPoly> b(n, n);
    auto entry = [&](int i, int j) { return LaurentPoly(d.at(i, j)); };
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            LaurentPoly v;
            switch (which) {
                case TimeShift::XMinus: // row_i - lambda^{-1} row_{i+1}
                    v = entry(i, j);
                    if (i + 1 < n) v -= LaurentPoly::term(-1, d.at(i + 1, j));
                    break;
                case TimeShift::XPlus: // sum_k lambda^{-k} row_{i+k}
                    for (int k = 0; i + k < n; ++k) v += LaurentPoly::term(-k, d.at(i + k, j));
                    break;
                case TimeShift::YMinus: // sum_k lambda^{-k} col_{j+k}
                    for (int k = 0; j + k < n; ++k) v += LaurentPoly::term(-k, d.at(i, j + k));
                    break;
                case TimeShift::YPlus: // col_j - lambda^{-1} col_{j+1}
                    v = entry(i, j);
                    if (j + 1 < n) v -= LaurentPoly::term(-1, d.at(i, j + 1));
                    break;
            }
            b.at(i, j) = v;
        }
    return b;
}

LaurentPoly tau_shift_laurent(const TodaFamily& fam, int s, TimeShift which) {
    if (s < fam.m || s > fam.n) throw std::invalid_argument("tau_shift_laurent: s range");
    Mat<Rat> d = dressed_matrix(fam);
    Mat<LaurentPoly> b = shifted_dressed(d, which);
    std::vector<int> idx(s - fam.m);
    for (int i = 0; i < s - fam.m; ++i) idx[i] = i;
    return det_ring(b.pick(idx, idx), LaurentPoly(Rat(1)));
}

Rat tau_shift_value(const TodaFamily& fam, int s, TimeShift which, const Rat& lambda) {
    // eps(lambda) shift: same matrices with lambda (positive powers)
    Mat<Rat> d = dressed_matrix(fam);
    int n = d.rows;
    Mat<Rat> b(n, n, Rat(0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Rat v(0);
            switch (which) {
                case TimeShift::XMinus:
                    v = d.at(i, j);
                    if (i + 1 < n) v -= lambda * d.at(i + 1, j);
                    break;
                case TimeShift::XPlus:
                    for (int k = 0; i + k < n; ++k) v += lambda.pow(k) * d.at(i + k, j);
                    break;
                case TimeShift::YMinus:
                    for (int k = 0; j + k < n; ++k) v += lambda.pow(k) * d.at(i, j + k);
                    break;
                case TimeShift::YPlus:
                    v = d.at(i, j);
                    if (j + 1 < n) v -= lambda * d.at(i, j + 1);
                    break;
            }
            b.at(i, j) = v;
        }
    std::vector<int> idx(s - fam.m);
    for (int i = 0; i < s - fam.m; ++i) idx[i] = i;
    return det_exact(b.pick(idx, idx));
}

// truncated exponential exp{sum_l c_l lambda^l} as a polynomial up to
// lambda^kmax; the coefficients are one-row character polynomials of c
static LaurentPoly exp_poly(const std::vector<Rat>& c, int kmax) {
    LaurentPoly e;
    if (kmax < 0) return e;
    std::vector<Rat> z = zeta_sequence(c, kmax, Rat(1));
    for (int k = 0; k <= kmax; ++k) e += LaurentPoly::term(k, z[k]);
    return e;
}

BilinearSides bilinear_residues(const Mat<Rat>& A, int m, int n, int s, int sp,
                                const TimeVector& x, const TimeVector& xp,
                                const TimeVector& y, const TimeVector& yp) {
    if (!(m < s && s <= n - 1 && m < sp && sp <= n))
        throw std::invalid_argument("bilinear_residues: s ranges");
    TodaFamily L{m, n, A, x, y};
    TodaFamily R{m, n, A, xp, yp};

    Rat tau_s = tau_family(L, s);
    Rat tau_sp = tau_family(R, sp);
    if (tau_s.is_zero() || tau_sp.is_zero())
        throw std::domain_error("bilinear_residues: vanishing tau at base point");

    // lhs integrand: lambda^{sp-s-2} exp{sum (y_l - y'_l) lambda^l}
    //   tau(s+1, x, y-eps(1/lambda)) tau(sp-1, x', y'+eps(1/lambda))
    LaurentPoly lnum = tau_shift_laurent(L, s + 1, TimeShift::YMinus) *
                       tau_shift_laurent(R, sp - 1, TimeShift::YPlus);
    lnum *= (tau_s * tau_sp).inv();
    LaurentPoly lhs_core = LaurentPoly::term(sp - s - 2, Rat(1)) * lnum;
    std::vector<Rat> dy(n - m - 1);
    for (int l = 1; l <= n - m - 1; ++l) dy[l - 1] = y.at(l) - yp.at(l);
    LaurentPoly ey = exp_poly(dy, std::max(0, -1 - lhs_core.min_exp()));
    Rat lhs = (ey * lhs_core).residue();

    // rhs integrand: lambda^{s-sp} exp{sum (x_l - x'_l) lambda^l}
    //   tau(s, x-eps(1/lambda), y) tau(sp, x'+eps(1/lambda), y')
    LaurentPoly rnum = tau_shift_laurent(L, s, TimeShift::XMinus) *
                       tau_shift_laurent(R, sp, TimeShift::XPlus);
    rnum *= (tau_s * tau_sp).inv();
    LaurentPoly rhs_core = LaurentPoly::term(s - sp, Rat(1)) * rnum;
    std::vector<Rat> dx(n - m - 1);
    for (int l = 1; l <= n - m - 1; ++l) dx[l - 1] = x.at(l) - xp.at(l);
    LaurentPoly ex = exp_poly(dx, std::max(0, -1 - rhs_core.min_exp()));
    Rat rhs = (ex * rhs_core).residue();

    return {lhs, rhs};
}

Rat t_deformed_tau(int n, int s, int m, const VariableSet& u, const VariableSet& v,
                   const Rat& t) {
    if (u.size() != s - m || v.size() != s - m)
        throw std::invalid_argument("t_deformed_tau: need |u| = |v| = s-m");
    VariableSet ut(u.values, t);
    Rat sum(0);
    for (const Partition& lam : partitions_in_box(s - m, n - s))
        sum += tschur_eval(lam, ut) * schur_eval(lam, v);
    return sum;
}

} // namespace taulab
