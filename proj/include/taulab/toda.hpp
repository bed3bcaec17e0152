#pragma once

#include "taulab/laurent.hpp"
#include "taulab/matrix.hpp"
#include "taulab/rng.hpp"
#include "taulab/sympoly.hpp"

namespace taulab {

// Finite hierarchy data: initial value matrix A of size (n-m) with all leading
// principal minors nonzero, plus two time vectors of length n-m-1.
struct TodaFamily {
    int m = 0, n = 0;
    Mat<Rat> A;      // indices m..n-1 stored 0-based
    TimeVector x, y; // length n-m-1

    int size() const { return n - m; }
};

// A with nonzero leading minors, entries resampled until generic
TodaFamily sample_family(Rng& rng, int m, int n, bool random_times = true);

// exp(sum x_k L^k) A exp(-sum y_k (L^T)^k); L nilpotent so both exponentials
// are finite sums of one-row character polynomials
template <class T>
Mat<T> dressed_matrix_ring(const Mat<Rat>& A, const std::vector<T>& xt, const std::vector<T>& yt,
                           const T& one) {
    int d = A.rows;
    T zero = one - one;
    std::vector<T> zx = zeta_sequence(xt, d - 1 >= 0 ? d - 1 : 0, one);
    std::vector<T> ymin;
    ymin.reserve(yt.size());
    for (const T& v : yt) ymin.push_back(zero - v);
    std::vector<T> zy = zeta_sequence(ymin, d - 1 >= 0 ? d - 1 : 0, one);
    Mat<T> zxm(d, d, zero), am(d, d, zero), zym(d, d, zero);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            if (j - i >= 0) zxm.at(i, j) = zx[j - i];
            if (i - j >= 0) zym.at(i, j) = zy[i - j];
            am.at(i, j) = one * A.at(i, j);
        }
    return mat_mul(mat_mul(zxm, am, zero), zym, zero);
}

Mat<Rat> dressed_matrix(const TodaFamily& fam);

// tau(s) = leading (s-m) principal minor of the dressed matrix; tau(m) = 1
Rat tau_family(const TodaFamily& fam, int s);

template <class T>
T tau_leading_minor(const Mat<T>& dressed, int size, const T& one) {
    std::vector<int> idx(size);
    for (int i = 0; i < size; ++i) idx[i] = i;
    return det_ring(dressed.pick(idx, idx), one);
}

enum class WaveKind { WInf, W0, WInfStar, W0Star };

// hatted wave-matrix entries as minor ratios of the dressed matrix
Rat wave_entry(const TodaFamily& fam, WaveKind which, int k, int s);

enum class TimeShift { XMinus, XPlus, YMinus, YPlus };

// tau(s, times shifted by +-eps(1/lambda)) as a Laurent polynomial in lambda
LaurentPoly tau_shift_laurent(const TodaFamily& fam, int s, TimeShift which);
// same with eps(lambda) at an explicit rational lambda
Rat tau_shift_value(const TodaFamily& fam, int s, TimeShift which, const Rat& lambda);

// both sides of the bilinear residue identity for tau families sharing A
struct BilinearSides {
    Rat lhs, rhs;
};
BilinearSides bilinear_residues(const Mat<Rat>& A, int m, int n, int s, int sp,
                                const TimeVector& x, const TimeVector& xp,
                                const TimeVector& y, const TimeVector& yp);

// restricted t-deformed tau: sum over lam in the (n-s)^(s-m) box of
// S_lam(u;t) S_lam(v)
Rat t_deformed_tau(int n, int s, int m, const VariableSet& u, const VariableSet& v, const Rat& t);

} // namespace taulab
