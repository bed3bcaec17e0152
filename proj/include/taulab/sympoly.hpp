#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "taulab/matrix.hpp"
#include "taulab/partitions.hpp"
#include "taulab/rational.hpp"

namespace taulab {

// finite set of exact values u_1..u_N, with the deformation t where a family
// needs it
struct VariableSet {
    std::vector<Rat> values;
    std::optional<Rat> t;

    VariableSet() = default;
    explicit VariableSet(std::vector<Rat> v) : values(std::move(v)) {}
    VariableSet(std::vector<Rat> v, Rat tt) : values(std::move(v)), t(std::move(tt)) {}
    int size() const { return (int)values.size(); }
};

// Toda/KP times x_1..x_K
struct TimeVector {
    std::vector<Rat> x; // x[k-1] = x_k

    TimeVector() = default;
    explicit TimeVector(std::vector<Rat> v) : x(std::move(v)) {}
    int length() const { return (int)x.size(); }
    Rat at(int k) const { return (k >= 1 && k <= length()) ? x[k - 1] : Rat(0); } // 1-based
};

enum class BasisKind { Elementary, Complete, PowerSum, Character, TComplete };

// zeta_0..zeta_kmax of the series exp(sum z^j x_j); works over any exact ring
// (Rat, Jet) since only ring ops and division by integers appear
template <class T>
std::vector<T> zeta_sequence(const std::vector<T>& x, int kmax, const T& one) {
    T zero = one - one;
    std::vector<T> z(kmax + 1, zero);
    z[0] = one;
    int kvars = (int)x.size();
    for (int j = 1; j <= kvars && j <= kmax; ++j) {
        std::vector<T> nz = z;
        T p = one;
        Rat fact(1);
        for (int m = 1; m * j <= kmax; ++m) {
            p = p * x[j - 1];
            fact *= Rat(m);
            T c = p * fact.inv();
            for (int r = m * j; r <= kmax; ++r) nz[r] += z[r - m * j] * c;
        }
        z = nz;
    }
    return z;
}

// basic families on explicit value lists
std::vector<Rat> elementary_all(const std::vector<Rat>& u, int rmax);
std::vector<Rat> complete_all(const std::vector<Rat>& u, int rmax);
Rat power_sum(const std::vector<Rat>& u, int r);
Rat elementary(const std::vector<Rat>& u, int r);
Rat complete(const std::vector<Rat>& u, int r);

// q_r(u;t), the t-deformed complete symmetric polynomials, via the generating
// function H(z;u)/H(tz;u)
std::vector<Rat> tcomplete_all(const std::vector<Rat>& u, const Rat& t, int rmax);

// negative r evaluates to 0 by convention (needed by every Jacobi-Trudi
// determinant)
Rat basis_eval(BasisKind kind, int r, const VariableSet& vars);
Rat basis_eval(BasisKind kind, int r, const TimeVector& times);

enum class SchurMethod { JacobiTrudi, Bialternant, Tableau };

Rat schur_eval(const Partition& lam, const VariableSet& vars,
               SchurMethod method = SchurMethod::JacobiTrudi);
Rat skew_schur_eval(const Partition& lam, const Partition& mu, const VariableSet& vars);
Rat tschur_eval(const Partition& lam, const VariableSet& vars); // requires vars.t

enum class HLNormalization { P, Q };

Rat hall_littlewood_eval(const Partition& lam, const VariableSet& vars,
                         HLNormalization norm);

// x_k = p_k(u)/k for k = 1..K
TimeVector miwa_times(const VariableSet& vars, int K);

// character polynomial chi_lam(x) = det[zeta_{lam_i+j-i}(x)], over Rat or Jet
template <class T>
T character_poly(const Partition& lam, const std::vector<T>& times, const T& one) {
    int n = lam.length();
    if (n == 0) return one;
    int kmax = lam.part(0) + n - 1;
    std::vector<T> z = zeta_sequence(times, kmax, one);
    T zero = one - one;
    Mat<T> m(n, n, zero);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            int idx = lam.part(i - 1) + j - i;
            if (idx >= 0) m.at(i - 1, j - 1) = z[idx];
        }
    return det_ring(m, one);
}

// skew character polynomial det[zeta_{lam_i - mu_j + j - i}]
Rat skew_character_poly(const Partition& lam, const Partition& mu, const TimeVector& x);

} // namespace taulab
