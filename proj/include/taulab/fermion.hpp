#pragma once

#include <functional>
#include <map>
#include <vector>

#include "taulab/partitions.hpp"
#include "taulab/rational.hpp"
#include "taulab/sympoly.hpp"

namespace taulab {

// Canonical charge-zero basis label: psi*_{j_1}..psi*_{j_r} psi_{k_r}..psi_{k_1}|0>
// with j_1 < .. < j_r < 0 <= k_r < .. < k_1. Stored ascending on both blocks.
struct FockLabel {
    std::vector<int> jstar; // strictly increasing, all < 0
    std::vector<int> psis;  // strictly increasing, all >= 0

    bool operator<(const FockLabel& o) const {
        if (jstar != o.jstar) return jstar < o.jstar;
        return psis < o.psis;
    }
    bool operator==(const FockLabel& o) const { return jstar == o.jstar && psis == o.psis; }
};

// sparse charge-zero state
class FockVector {
public:
    FockVector() = default;
    static FockVector vacuum() {
        FockVector v;
        v.set(FockLabel{}, Rat(1));
        return v;
    }

    const std::map<FockLabel, Rat>& terms() const { return t_; }
    void set(const FockLabel& l, Rat c) {
        if (c.is_zero()) t_.erase(l);
        else t_[l] = std::move(c);
    }
    Rat coeff(const FockLabel& l) const {
        auto it = t_.find(l);
        return it == t_.end() ? Rat(0) : it->second;
    }
    FockVector& operator+=(const FockVector& o) {
        for (auto& [l, c] : o.t_) set(l, coeff(l) + c);
        return *this;
    }
    bool operator==(const FockVector& o) const { return t_ == o.t_; }

private:
    std::map<FockLabel, Rat> t_;
};

// vacuum expectation of a word in the free fermions
enum class FermKind { Psi, PsiStar };
Rat wick_expectation(const std::vector<std::pair<FermKind, int>>& word);

// coeff * psi*_{-a} psi_l applied to v, exact anti-commutation signs
FockVector clifford_apply(int a, int l, const Rat& coeff, const FockVector& v);

// boson-fermion map: sum over terms of coeff * (-1)^{sum j} chi_lam(x)
Rat bosonize(const FockVector& v, const TimeVector& x);

// Minor coefficients of a master matrix gamma: c_lam = |gamma_{lam_N},
// gamma_{lam_{N-1}+1}, ..., gamma_{lam_1+N-1}| with hook depth N rows.
struct MasterCoefficients {
    std::string tag;
    Mat<Rat> master; // master.at(j, mu): row j = 1..N (0-based), column mu = 0..cols-1
    int depth = 0;   // N: determinant size and allowed hook depth

    Rat coeff(const Partition& lam) const;
    Rat coeff_tilde(const Partition& lam) const { return coeff(lam) / coeff(Partition()); }
};

// exp(X_0)..exp(X_{G-1})|0>, X_l = sum_j (-1)^j ctilde_{{l+1,1^{j-1}}} psi*_{-j} psi_l
FockVector generator_product(const MasterCoefficients& coeffs, int generator_count,
                             int hook_depth);

} // namespace taulab
