#include "taulab/matrix.hpp"

#include <algorithm>

namespace taulab {

// Bareiss one-step fraction-free elimination. Divisions are exact at every
// step, which keeps intermediate entries small compared to plain Gaussian
// elimination on rationals.
Rat det_exact(const Mat<Rat>& m) {
    if (!m.square()) throw std::invalid_argument("det_exact: not square");
    int n = m.rows;
    if (n == 0) return Rat(1); // empty-product convention
    Mat<Rat> w = m;
    Rat prev(1);
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (w.at(k, k).is_zero()) {
            int piv = -1;
            for (int i = k + 1; i < n; ++i)
                if (!w.at(i, k).is_zero()) { piv = i; break; }
            if (piv < 0) return Rat(0);
            for (int j = k; j < n; ++j) std::swap(w.at(k, j), w.at(piv, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                w.at(i, j) = (w.at(i, j) * w.at(k, k) - w.at(i, k) * w.at(k, j)) / prev;
        prev = w.at(k, k);
    }
    Rat d = w.at(n - 1, n - 1);
    return sign < 0 ? -d : d;
}

} // namespace taulab
