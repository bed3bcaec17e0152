#pragma once

#include <map>
#include <vector>

#include "taulab/partitions.hpp"
#include "taulab/rational.hpp"
#include "taulab/rng.hpp"
#include "taulab/sympoly.hpp"

namespace taulab {

// Sparse state of the M+1 site phase model: occupation sequences n_0..n_M
// with exact coefficients.
class PhaseState {
public:
    explicit PhaseState(int sites_m) : m_(sites_m) {}
    static PhaseState vacuum(int sites_m) {
        PhaseState s(sites_m);
        s.set(std::vector<int>(sites_m + 1, 0), Rat(1));
        return s;
    }

    int sites_m() const { return m_; }
    const std::map<std::vector<int>, Rat>& terms() const { return t_; }
    void set(const std::vector<int>& occ, Rat c) {
        if (c.is_zero()) t_.erase(occ);
        else t_[occ] = std::move(c);
    }
    Rat coeff(const std::vector<int>& occ) const {
        auto it = t_.find(occ);
        return it == t_.end() ? Rat(0) : it->second;
    }
    PhaseState& operator+=(const PhaseState& o) {
        for (auto& [k, c] : o.t_) set(k, coeff(k) + c);
        return *this;
    }
    bool operator==(const PhaseState& o) const { return t_ == o.t_; }

private:
    int m_;
    std::map<std::vector<int>, Rat> t_;
};

enum class MonodromyEntry { A, B, C, D };

// exact action of the monodromy entry T(u)_{..} = (L_M ... L_0)_{..}
PhaseState monodromy_apply(MonodromyEntry which, const Rat& u, const PhaseState& state);

enum class ScalarMethod { BruteForce, Determinant, Schur };

Rat scalar_product(int N, int M, const std::vector<Rat>& u, const std::vector<Rat>& v,
                   ScalarMethod method);

// q-polynomial as coefficient-by-volume table: census[k] = #plane partitions
// of volume k in the r x s x t box
std::vector<long> plane_partition_census(int r, int s, int t);
std::vector<long> plane_partition_census_serial(int r, int s, int t);
// MacMahon product expanded exactly to the full degree rst
std::vector<Rat> macmahon_coefficients(int r, int s, int t);

// lhs = scalar product at u_j = p^{j-1}, v_j = p^{-j}; rhs = p^{-N^2 M} times
// the MacMahon generating function at q = p^2
struct QEnumSides {
    Rat lhs, rhs;
};
QEnumSides qenum_specialization(int N, int M, const Rat& p);

// first class: <0| phi_k C(v_2)..C(v_N) B(u_1)..B(u_N) |0> and its two
// closed forms (skew-Schur sum with the paper prefactor; Omega det)
struct CorrelationValues {
    Rat bruteforce, skew_sum, determinant;
};
CorrelationValues correlation_first_class(int N, int M, int k, const std::vector<Rat>& u,
                                          const std::vector<Rat>& v_rest);

// second class: <0| C(v_1)..C(v_N) B(u_1)..B(u_{N-p}) (phi^+_1)^p |0>
CorrelationValues correlation_second_class(int N, int M, int p, const std::vector<Rat>& u,
                                           const std::vector<Rat>& v);

// general S^N_M({r_1,...,r_p}) determinant (r_1 in 0..M, r_2.. in {0,1})
Rat second_class_determinant(int N, int M, const std::vector<int>& rvec,
                             const std::vector<Rat>& u, const std::vector<Rat>& v);

std::vector<Rat> sample_nonzero_distinct_sq(Rng& rng, int n);

} // namespace taulab
