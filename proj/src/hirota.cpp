#include "taulab/jet.hpp"

namespace taulab {

// D_{v1}^{k1} ... D_{vm}^{km} (f.g) at the base point. Expanding the
// generating definition gives
//   sum_{j<=k} prod_i C(k_i,j_i) (-1)^{|k-j|} d^j f d^{k-j} g
Rat hirota_apply(const std::vector<std::pair<int, int>>& monomial, const Jet& f, const Jet& g) {
    if (f.spec() != g.spec())
        throw std::invalid_argument("hirota_apply: jets from different specs");
    const JetSpec& s = *f.spec();
    int nv = (int)s.vars.size();
    std::vector<int> kvec(nv, 0);
    for (auto& [v, p] : monomial) {
        if (v < 0 || v >= nv) throw std::invalid_argument("hirota_apply: bad variable");
        if (p < 0) throw std::invalid_argument("hirota_apply: negative power");
        kvec[v] += p;
    }
    for (int v = 0; v < nv; ++v)
        if (kvec[v] > s.orders[v])
            throw std::invalid_argument("hirota_apply: insufficient jet order");

    Rat acc(0);
    std::vector<int> j(nv, 0);
    while (true) {
        Rat term(1);
        int rem = 0;
        std::vector<int> kmj(nv);
        for (int v = 0; v < nv; ++v) {
            term *= binomial_rat(kvec[v], j[v]);
            kmj[v] = kvec[v] - j[v];
            rem += kmj[v];
        }
        Rat df = f.deriv(j);
        Rat dg = g.deriv(kmj);
        Rat contrib = term * df * dg;
        if (rem & 1) acc -= contrib; else acc += contrib;
        int v = 0;
        for (; v < nv; ++v) { if (++j[v] <= kvec[v]) break; j[v] = 0; }
        if (v == nv) break;
    }
    return acc;
}

} // namespace taulab
