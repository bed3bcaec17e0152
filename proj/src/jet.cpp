#include "taulab/jet.hpp"

#include <sstream>

namespace taulab {

std::shared_ptr<const JetSpec> JetSpec::make(std::vector<std::string> vars,
                                             std::vector<int> orders) {
    if (vars.size() != orders.size())
        throw std::invalid_argument("JetSpec: vars/orders size mismatch");
    auto s = std::make_shared<JetSpec>();
    s->vars = std::move(vars);
    s->orders = std::move(orders);
    s->strides.resize(s->vars.size());
    int sz = 1;
    for (size_t i = 0; i < s->vars.size(); ++i) {
        if (s->orders[i] < 0) throw std::invalid_argument("JetSpec: negative order");
        s->strides[i] = sz;
        sz *= s->orders[i] + 1;
    }
    s->size = sz;
    return s;
}

int JetSpec::index_of(const std::string& var) const {
    for (size_t i = 0; i < vars.size(); ++i)
        if (vars[i] == var) return (int)i;
    throw std::invalid_argument("JetSpec: unknown variable " + var);
}

Jet::Jet(std::shared_ptr<const JetSpec> spec, Rat constant)
    : spec_(std::move(spec)), c_(spec_->size, Rat(0)) {
    c_[0] = std::move(constant);
}

Jet Jet::variable(std::shared_ptr<const JetSpec> spec, int v, Rat base) {
    Jet j(spec, std::move(base));
    if (v < 0 || (size_t)v >= spec->vars.size())
        throw std::invalid_argument("Jet::variable: bad index");
    if (spec->orders[v] < 1)
        throw std::invalid_argument("Jet::variable: order 0 variable");
    j.c_[spec->strides[v]] = Rat(1);
    return j;
}

static size_t linear_index(const JetSpec& s, const std::vector<int>& mi) {
    if (mi.size() != s.vars.size()) throw std::invalid_argument("Jet: bad multi-index size");
    size_t idx = 0;
    for (size_t i = 0; i < mi.size(); ++i) {
        if (mi[i] < 0 || mi[i] > s.orders[i])
            throw std::out_of_range("Jet: multi-index out of bounds");
        idx += (size_t)mi[i] * s.strides[i];
    }
    return idx;
}

const Rat& Jet::coeff_at(const std::vector<int>& mi) const { return c_[linear_index(*spec_, mi)]; }
Rat& Jet::coeff_at(const std::vector<int>& mi) { return c_[linear_index(*spec_, mi)]; }

Rat Jet::deriv(const std::vector<int>& mi) const {
    Rat r = coeff_at(mi);
    for (int k : mi) r *= factorial_rat(k);
    return r;
}

void Jet::check_same(const Jet& o) const {
    if (spec_ != o.spec_) throw std::invalid_argument("Jet: mixed specs");
}

Jet Jet::operator-() const {
    Jet r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

Jet& Jet::operator+=(const Jet& o) {
    check_same(o);
    for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

Jet& Jet::operator-=(const Jet& o) {
    check_same(o);
    for (size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
}

Jet& Jet::operator*=(const Rat& s) {
    for (auto& x : c_) x *= s;
    return *this;
}

Jet operator*(const Jet& a, const Jet& b) {
    a.check_same(b);
    const JetSpec& s = *a.spec_;
    Jet r(a.spec_, Rat(0));
    int nv = (int)s.vars.size();
    std::vector<int> mi(nv, 0), mj(nv, 0);
    // dense convolution clipped at the order bounds
    for (size_t ia = 0; ia < a.c_.size(); ++ia) {
        if (a.c_[ia].is_zero()) { // advance multi-index
            for (int v = 0; v < nv; ++v) { if (++mi[v] <= s.orders[v]) break; mi[v] = 0; }
            continue;
        }
        std::fill(mj.begin(), mj.end(), 0);
        for (size_t ib = 0; ib < b.c_.size(); ++ib) {
            if (!b.c_[ib].is_zero()) {
                bool ok = true;
                size_t idx = 0;
                for (int v = 0; v < nv; ++v) {
                    int k = mi[v] + mj[v];
                    if (k > s.orders[v]) { ok = false; break; }
                    idx += (size_t)k * s.strides[v];
                }
                if (ok) r.c_[idx] += a.c_[ia] * b.c_[ib];
            }
            for (int v = 0; v < nv; ++v) { if (++mj[v] <= s.orders[v]) break; mj[v] = 0; }
        }
        for (int v = 0; v < nv; ++v) { if (++mi[v] <= s.orders[v]) break; mi[v] = 0; }
    }
    return r;
}

Jet Jet::recip() const {
    if (constant_term().is_zero())
        throw std::domain_error("Jet::recip: zero constant term");
    const JetSpec& s = *spec_;
    Jet g(spec_, Rat(0));
    Rat inv0 = c_[0].inv();
    g.c_[0] = inv0;
    int nv = (int)s.vars.size();
    // graded recursion; any alpha-beta with beta<alpha componentwise has a
    // smaller linear index, so a single increasing pass suffices
    std::vector<int> alpha(nv, 0);
    for (size_t ia = 1; ia < c_.size(); ++ia) {
        for (int v = 0; v < nv; ++v) { if (++alpha[v] <= s.orders[v]) break; alpha[v] = 0; }
        // sum over 0 < beta <= alpha of f_beta g_{alpha-beta}
        Rat acc(0);
        std::vector<int> beta(nv, 0);
        size_t nb = 1;
        for (int v = 0; v < nv; ++v) nb *= (size_t)alpha[v] + 1;
        for (size_t t = 1; t < nb; ++t) {
            for (int v = 0; v < nv; ++v) { if (++beta[v] <= alpha[v]) break; beta[v] = 0; }
            size_t ib = 0, ig = 0;
            for (int v = 0; v < nv; ++v) {
                ib += (size_t)beta[v] * s.strides[v];
                ig += (size_t)(alpha[v] - beta[v]) * s.strides[v];
            }
            if (!c_[ib].is_zero()) acc += c_[ib] * g.c_[ig];
        }
        g.c_[ia] = -(inv0 * acc);
    }
    return g;
}

bool Jet::is_zero() const {
    for (const auto& x : c_)
        if (!x.is_zero()) return false;
    return true;
}

std::string Jet::str() const {
    std::ostringstream os;
    const JetSpec& s = *spec_;
    int nv = (int)s.vars.size();
    std::vector<int> mi(nv, 0);
    bool first = true;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (!c_[i].is_zero()) {
            if (!first) os << " + ";
            os << "(" << c_[i].str() << ")";
            for (int v = 0; v < nv; ++v)
                if (mi[v] > 0) os << "*" << s.vars[v] << "^" << mi[v];
            first = false;
        }
        for (int v = 0; v < nv; ++v) { if (++mi[v] <= s.orders[v]) break; mi[v] = 0; }
    }
    if (first) os << "0";
    return os.str();
}

} // namespace taulab
