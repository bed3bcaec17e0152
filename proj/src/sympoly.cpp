#include "taulab/sympoly.hpp"

#include <algorithm>
#include <numeric>

namespace taulab {

std::vector<Rat> elementary_all(const std::vector<Rat>& u, int rmax) {
    std::vector<Rat> e(rmax + 1, Rat(0));
    e[0] = Rat(1);
    int top = 0;
    for (const Rat& x : u) {
        top = std::min(top + 1, rmax);
        for (int r = top; r >= 1; --r) e[r] += x * e[r - 1];
    }
    return e;
}

std::vector<Rat> complete_all(const std::vector<Rat>& u, int rmax) {
    std::vector<Rat> h(rmax + 1, Rat(0));
    h[0] = Rat(1);
    for (const Rat& x : u)
        for (int r = 1; r <= rmax; ++r) h[r] += x * h[r - 1];
    return h;
}

Rat power_sum(const std::vector<Rat>& u, int r) {
    if (r < 0) return Rat(0);
    if (r == 0) return Rat((long)u.size());
    Rat s(0);
    for (const Rat& x : u) s += x.pow(r);
    return s;
}

Rat elementary(const std::vector<Rat>& u, int r) {
    if (r < 0) return Rat(0);
    return elementary_all(u, r)[r];
}

Rat complete(const std::vector<Rat>& u, int r) {
    if (r < 0) return Rat(0);
    return complete_all(u, r)[r];
}

// Q(z;u;t) = H(z;u)/H(tz;u): multiply h-series by the e-series of {-t u_i}
std::vector<Rat> tcomplete_all(const std::vector<Rat>& u, const Rat& t, int rmax) {
    std::vector<Rat> h = complete_all(u, rmax);
    std::vector<Rat> tu;
    tu.reserve(u.size());
    for (const Rat& x : u) tu.push_back(-(t * x));
    std::vector<Rat> inv = elementary_all(tu, rmax); // 1/H(tz;u) = E(-tz;u)
    std::vector<Rat> q(rmax + 1, Rat(0));
    for (int r = 0; r <= rmax; ++r)
        for (int k = 0; k <= r; ++k) q[r] += h[k] * inv[r - k];
    return q;
}

Rat basis_eval(BasisKind kind, int r, const VariableSet& vars) {
    if (r < 0) return Rat(0);
    switch (kind) {
        case BasisKind::Elementary: return elementary(vars.values, r);
        case BasisKind::Complete: return complete(vars.values, r);
        case BasisKind::PowerSum: return power_sum(vars.values, r);
        case BasisKind::TComplete:
            if (!vars.t) throw std::invalid_argument("basis_eval: t_complete needs t");
            return tcomplete_all(vars.values, *vars.t, r)[r];
        case BasisKind::Character:
            throw std::invalid_argument("basis_eval: character kind takes a TimeVector");
    }
    throw std::logic_error("basis_eval: bad kind");
}

Rat basis_eval(BasisKind kind, int r, const TimeVector& times) {
    if (kind != BasisKind::Character)
        throw std::invalid_argument("basis_eval: only character kind takes a TimeVector");
    if (r < 0) return Rat(0);
    return zeta_sequence(times.x, r, Rat(1))[r];
}

static Rat schur_jacobi_trudi(const Partition& lam, const std::vector<Rat>& u) {
    int n = lam.length();
    if (n == 0) return Rat(1);
    std::vector<Rat> h = complete_all(u, lam.part(0) + n - 1);
    Mat<Rat> m(n, n, Rat(0));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            int idx = lam.part(i - 1) + j - i;
            if (idx >= 0) m.at(i - 1, j - 1) = h[idx];
        }
    return det_exact(m);
}

static Rat schur_bialternant(const Partition& lam, const std::vector<Rat>& u) {
    int n = (int)u.size();
    if (lam.length() > n) return Rat(0);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (u[i] == u[j])
                throw std::domain_error("schur bialternant: repeated variable values");
    if (n == 0) return lam.empty() ? Rat(1) : Rat(0);
    Mat<Rat> m(n, n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) m.at(i - 1, j - 1) = u[j - 1].pow(n - i + lam.part(i - 1));
    Rat vand(1);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) vand *= u[i] - u[j];
    return det_exact(m) / vand;
}

static Rat schur_tableau(const Partition& lam, const std::vector<Rat>& u) {
    int n = (int)u.size();
    if (lam.length() > n) return Rat(0); // column-strictness
    Rat s(0);
    for (const auto& w : ssyt_weights(lam, Partition(), n)) {
        Rat term(1);
        for (int i = 0; i < n; ++i) term *= u[i].pow(w[i]);
        s += term;
    }
    return s;
}

Rat schur_eval(const Partition& lam, const VariableSet& vars, SchurMethod method) {
    switch (method) {
        case SchurMethod::JacobiTrudi:
            if (lam.length() > vars.size()) return Rat(0);
            return schur_jacobi_trudi(lam, vars.values);
        case SchurMethod::Bialternant: return schur_bialternant(lam, vars.values);
        case SchurMethod::Tableau: return schur_tableau(lam, vars.values);
    }
    throw std::logic_error("schur_eval: bad method");
}

Rat skew_schur_eval(const Partition& lam, const Partition& mu, const VariableSet& vars) {
    if (!lam.contains(mu)) return Rat(0);
    if (mu.empty()) return schur_eval(lam, vars);
    int n = lam.length();
    if (n == 0) return Rat(1);
    std::vector<Rat> h = complete_all(vars.values, lam.part(0) + n - 1);
    Mat<Rat> m(n, n, Rat(0));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            int idx = lam.part(i - 1) - mu.part(j - 1) + j - i;
            if (idx >= 0) m.at(i - 1, j - 1) = h[idx];
        }
    return det_exact(m);
}

Rat tschur_eval(const Partition& lam, const VariableSet& vars) {
    if (!vars.t) throw std::invalid_argument("tschur_eval: missing t");
    int n = lam.length();
    if (n == 0) return Rat(1);
    std::vector<Rat> q = tcomplete_all(vars.values, *vars.t, lam.part(0) + n - 1);
    Mat<Rat> m(n, n, Rat(0));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            int idx = lam.part(i - 1) + j - i;
            if (idx >= 0) m.at(i - 1, j - 1) = q[idx];
        }
    return det_exact(m);
}

// v_lam(t) = prod_{i>=0} prod_{k=1}^{m_i} (1-t^k)/(1-t), m_0 counting the
// zero parts among the N variables
static Rat hl_vlam(const Partition& lam, int nvars, const Rat& t) {
    std::vector<int> mult(std::max(lam.part(0), 0) + 1, 0);
    for (int x : lam.parts()) ++mult[x];
    mult[0] = nvars - lam.length();
    Rat v(1);
    Rat one_minus_t = Rat(1) - t;
    for (int m : mult) {
        Rat tk(1);
        for (int k = 1; k <= m; ++k) {
            tk *= t;
            v *= (Rat(1) - tk) / one_minus_t;
        }
    }
    return v;
}

// b_lam(t) = prod_{i>=1} prod_{k=1}^{m_i} (1-t^k)
static Rat hl_blam(const Partition& lam, const Rat& t) {
    std::vector<int> mult(std::max(lam.part(0), 0) + 1, 0);
    for (int x : lam.parts()) ++mult[x];
    Rat b(1);
    for (size_t i = 1; i < mult.size(); ++i) {
        Rat tk(1);
        for (int k = 1; k <= mult[i]; ++k) {
            tk *= t;
            b *= Rat(1) - tk;
        }
    }
    return b;
}

Rat hall_littlewood_eval(const Partition& lam, const VariableSet& vars, HLNormalization norm) {
    if (!vars.t) throw std::invalid_argument("hall_littlewood_eval: missing t");
    const Rat& t = *vars.t;
    if (t == Rat(1)) throw std::domain_error("hall_littlewood_eval: t = 1");
    int n = vars.size();
    if (lam.length() > n) throw std::invalid_argument("hall_littlewood_eval: too many parts");
    const std::vector<Rat>& u = vars.values;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (u[i] == u[j])
                throw std::domain_error("hall_littlewood_eval: repeated variable values");

    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    Rat sum(0);
    do {
        Rat term(1);
        for (int i = 0; i < n; ++i) term *= u[perm[i]].pow(lam.part(i));
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                term *= (u[perm[i]] - t * u[perm[j]]) / (u[perm[i]] - u[perm[j]]);
        sum += term;
    } while (std::next_permutation(perm.begin(), perm.end()));

    Rat p = sum / hl_vlam(lam, n, t);
    if (norm == HLNormalization::P) return p;
    return hl_blam(lam, t) * p;
}

TimeVector miwa_times(const VariableSet& vars, int K) {
    if (K < 1) throw std::invalid_argument("miwa_times: K >= 1");
    std::vector<Rat> x(K);
    for (int k = 1; k <= K; ++k) x[k - 1] = power_sum(vars.values, k) / Rat(k);
    return TimeVector(std::move(x));
}

Rat skew_character_poly(const Partition& lam, const Partition& mu, const TimeVector& x) {
    if (!lam.contains(mu)) return Rat(0);
    int n = lam.length();
    if (n == 0) return Rat(1);
    std::vector<Rat> z = zeta_sequence(x.x, lam.part(0) + n - 1, Rat(1));
    Mat<Rat> m(n, n, Rat(0));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            int idx = lam.part(i - 1) - mu.part(j - 1) + j - i;
            if (idx >= 0) m.at(i - 1, j - 1) = z[idx];
        }
    return det_exact(m);
}

} // namespace taulab
