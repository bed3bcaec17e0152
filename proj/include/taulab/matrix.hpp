#pragma once

#include <cassert>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "taulab/rational.hpp"

namespace taulab {

// Row-major dense matrix over an exact scalar ring.
template <class T>
struct Mat {
    int rows = 0, cols = 0;
    std::vector<T> a;

    Mat() = default;
    Mat(int r, int c) : rows(r), cols(c), a((size_t)r * c) {}
    Mat(int r, int c, const T& fill) : rows(r), cols(c), a((size_t)r * c, fill) {}

    T& at(int i, int j) { return a[(size_t)i * cols + j]; }
    const T& at(int i, int j) const { return a[(size_t)i * cols + j]; }

    bool square() const { return rows == cols; }

    Mat<T> transpose() const {
        Mat<T> t(cols, rows);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) t.at(j, i) = at(i, j);
        return t;
    }

    // submatrix picking the given rows and columns, in the given order
    Mat<T> pick(const std::vector<int>& ri, const std::vector<int>& ci) const {
        Mat<T> s((int)ri.size(), (int)ci.size());
        for (size_t i = 0; i < ri.size(); ++i)
            for (size_t j = 0; j < ci.size(); ++j) s.at((int)i, (int)j) = at(ri[i], ci[j]);
        return s;
    }
};

template <class T>
Mat<T> mat_mul(const Mat<T>& x, const Mat<T>& y, const T& zero) {
    if (x.cols != y.rows) throw std::invalid_argument("mat_mul: shape mismatch");
    Mat<T> z(x.rows, y.cols, zero);
    for (int i = 0; i < x.rows; ++i)
        for (int k = 0; k < x.cols; ++k) {
            const T& xik = x.at(i, k);
            for (int j = 0; j < y.cols; ++j) z.at(i, j) += xik * y.at(k, j);
        }
    return z;
}

// Exact determinant over Rat, fraction-free (Bareiss). 0x0 -> 1.
Rat det_exact(const Mat<Rat>& m);

// Determinant over an arbitrary commutative ring by column-subset dynamic
// programming, O(2^n n). `one` supplies the ring unit (0x0 -> one).
template <class T>
T det_ring(const Mat<T>& m, const T& one) {
    if (!m.square()) throw std::invalid_argument("det_ring: not square");
    int n = m.rows;
    if (n == 0) return one;
    if (n > 24) throw std::invalid_argument("det_ring: too large");
    T zero = one - one;
    // f[S] = det of rows 0..popcount(S)-1 on the column set S
    std::vector<T> f((size_t)1 << n, zero);
    f[0] = one;
    std::vector<uint32_t> order;
    order.reserve(((size_t)1 << n) - 1);
    for (uint32_t s = 1; s < (1u << n); ++s) order.push_back(s);
    // process by popcount so predecessors exist
    std::stable_sort(order.begin(), order.end(), [](uint32_t a, uint32_t b) {
        return __builtin_popcount(a) < __builtin_popcount(b);
    });
    for (uint32_t s : order) {
        int r = __builtin_popcount(s) - 1; // row being expanded
        T acc = zero;
        int parity = r; // cofactor sign (-1)^{r + column position}
        for (int j = 0; j < n; ++j) {
            if (!(s & (1u << j))) continue;
            const T& mij = m.at(r, j);
            T sub = f[s & ~(1u << j)];
            T term = mij * sub;
            if (parity & 1) acc -= term; else acc += term;
            ++parity;
        }
        f[s] = acc;
    }
    return f[(1u << n) - 1];
}

// Laplace cofactor expansion; kept as an independent oracle for tests.
template <class T>
T det_cofactor(const Mat<T>& m, const T& one) {
    if (!m.square()) throw std::invalid_argument("det_cofactor: not square");
    int n = m.rows;
    if (n == 0) return one;
    if (n == 1) return m.at(0, 0);
    T zero = one - one;
    T acc = zero;
    for (int j = 0; j < n; ++j) {
        std::vector<int> ri, ci;
        for (int i = 1; i < n; ++i) ri.push_back(i);
        for (int k = 0; k < n; ++k)
            if (k != j) ci.push_back(k);
        T term = m.at(0, j) * det_cofactor(m.pick(ri, ci), one);
        if (j & 1) acc -= term; else acc += term;
    }
    return acc;
}

} // namespace taulab
