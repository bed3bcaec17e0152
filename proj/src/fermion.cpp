#include "taulab/fermion.hpp"

#include <algorithm>

namespace taulab {

// two-point functions of eq. (p.11)
static Rat two_point(const std::pair<FermKind, int>& a, const std::pair<FermKind, int>& b) {
    if (a.first == FermKind::Psi && b.first == FermKind::PsiStar)
        return (a.second == b.second && a.second < 0) ? Rat(1) : Rat(0);
    if (a.first == FermKind::PsiStar && b.first == FermKind::Psi)
        return (a.second == b.second && a.second >= 0) ? Rat(1) : Rat(0);
    return Rat(0);
}

// signed sum over perfect pairings; the first factor pairs with each later
// one, recursing on the rest (equivalent to the restricted permutation sum)
Rat wick_expectation(const std::vector<std::pair<FermKind, int>>& word) {
    size_t r = word.size();
    if (r % 2 == 1) return Rat(0);
    if (r == 0) return Rat(1);
    std::vector<std::pair<FermKind, int>> rest;
    Rat acc(0);
    for (size_t k = 1; k < r; ++k) {
        Rat tp = two_point(word[0], word[k]);
        if (tp.is_zero()) continue;
        rest.clear();
        for (size_t i = 1; i < r; ++i)
            if (i != k) rest.push_back(word[i]);
        Rat sub = tp * wick_expectation(rest);
        if (k % 2 == 0) acc -= sub; else acc += sub;
    }
    return acc;
}

FockVector clifford_apply(int a, int l, const Rat& coeff, const FockVector& v) {
    if (a <= 0 || l < 0) throw std::invalid_argument("clifford_apply: need a > 0, l >= 0");
    FockVector out;
    if (coeff.is_zero()) return out;
    for (auto& [lab, c] : v.terms()) {
        // psi_l first: moves right through the psi* block (one sign per
        // factor), then inserts into the ascending psi block
        if (std::binary_search(lab.psis.begin(), lab.psis.end(), l)) continue; // nilpotent
        int sign = (lab.jstar.size() % 2) ? -1 : 1;
        auto pos = std::lower_bound(lab.psis.begin(), lab.psis.end(), l);
        int passed = (int)std::distance(lab.psis.begin(), pos);
        if (passed % 2) sign = -sign;
        FockLabel nl = lab;
        nl.psis.insert(nl.psis.begin() + passed, l);
        // psi*_{-a}: inserts into the ascending psi* block
        if (std::binary_search(nl.jstar.begin(), nl.jstar.end(), -a)) continue;
        auto spos = std::lower_bound(nl.jstar.begin(), nl.jstar.end(), -a);
        int spassed = (int)std::distance(nl.jstar.begin(), spos);
        if (spassed % 2) sign = -sign;
        nl.jstar.insert(nl.jstar.begin() + spassed, -a);
        Rat add = coeff * c;
        if (sign < 0) add = -add;
        out.set(nl, out.coeff(nl) + add);
    }
    return out;
}

Rat bosonize(const FockVector& v, const TimeVector& x) {
    Rat acc(0);
    for (auto& [lab, c] : v.terms()) {
        if (lab.jstar.size() != lab.psis.size())
            throw std::invalid_argument("bosonize: nonzero charge term");
        HookCoordinates hc;
        // arms descending = psi modes reversed; legs ascending = jstar as stored
        hc.arms.assign(lab.psis.rbegin(), lab.psis.rend());
        hc.legs = lab.jstar;
        Partition lam = partition_from_hooks(hc);
        int jsum = 0;
        for (int j : lab.jstar) jsum += j;
        Rat chi = character_poly(lam, x.x, Rat(1));
        Rat term = c * chi;
        if (jsum % 2 != 0) term = -term;
        acc += term;
    }
    return acc;
}

Rat MasterCoefficients::coeff(const Partition& lam) const {
    int N = depth;
    if (lam.length() > N) throw std::invalid_argument("MasterCoefficients: partition too long");
    std::vector<int> rows(N), cols(N);
    for (int i = 0; i < N; ++i) rows[i] = i;
    // column i (0-based) = gamma_{lam_{N-i} + i}
    for (int i = 0; i < N; ++i) {
        int mu = lam.part(N - 1 - i) + i;
        if (mu >= master.cols)
            throw std::invalid_argument("MasterCoefficients: partition outside master matrix");
        cols[i] = mu;
    }
    return det_exact(master.pick(rows, cols));
}

FockVector generator_product(const MasterCoefficients& coeffs, int generator_count,
                             int hook_depth) {
    if (coeffs.coeff(Partition()).is_zero())
        throw std::domain_error("generator_product: vanishing c_empty");
    FockVector state = FockVector::vacuum();
    // apply exp(X_{G-1}) first; each exponential is 1 + X by nilpotency
    for (int l = generator_count - 1; l >= 0; --l) {
        FockVector next = state;
        for (int j = 1; j <= hook_depth; ++j) {
            std::vector<int> parts;
            parts.push_back(l + 1);
            for (int i = 0; i < j - 1; ++i) parts.push_back(1);
            Rat ct = coeffs.coeff_tilde(Partition(parts));
            if (j % 2) ct = -ct;
            next += clifford_apply(j, l, ct, state);
        }
        state = next;
    }
    return state;
}

} // namespace taulab
