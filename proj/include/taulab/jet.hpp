#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "taulab/rational.hpp"

namespace taulab {

// Variable names and per-variable truncation orders of a jet ring. Orders are
// explicit at construction, never inferred.
struct JetSpec {
    std::vector<std::string> vars;
    std::vector<int> orders;   // max power kept for each variable
    std::vector<int> strides;  // mixed-radix strides into the dense table
    int size = 0;

    static std::shared_ptr<const JetSpec> make(std::vector<std::string> vars,
                                               std::vector<int> orders);
    int index_of(const std::string& var) const;
};

// Truncated multivariate Taylor expansion over Rat. Arithmetic is exact and
// closed at the declared per-variable orders.
class Jet {
public:
    Jet() = default;
    Jet(std::shared_ptr<const JetSpec> spec, Rat constant);

    static Jet constant(std::shared_ptr<const JetSpec> spec, Rat c) { return Jet(spec, c); }
    // base + (one unit of variable v)
    static Jet variable(std::shared_ptr<const JetSpec> spec, int v, Rat base);

    const std::shared_ptr<const JetSpec>& spec() const { return spec_; }

    const Rat& coeff_at(const std::vector<int>& mi) const;
    Rat& coeff_at(const std::vector<int>& mi);
    const Rat& coeff_linear(size_t idx) const { return c_[idx]; }

    Rat constant_term() const { return c_.empty() ? Rat(0) : c_[0]; }

    // partial derivative value at the base point: coeff(mi) * prod(mi!)
    Rat deriv(const std::vector<int>& mi) const;

    Jet operator-() const;
    Jet& operator+=(const Jet& o);
    Jet& operator-=(const Jet& o);
    friend Jet operator+(Jet a, const Jet& b) { a += b; return a; }
    friend Jet operator-(Jet a, const Jet& b) { a -= b; return a; }
    friend Jet operator*(const Jet& a, const Jet& b);
    Jet& operator*=(const Jet& o) { *this = *this * o; return *this; }

    Jet& operator*=(const Rat& s);
    friend Jet operator*(Jet a, const Rat& s) { a *= s; return a; }
    friend Jet operator*(const Rat& s, Jet a) { a *= s; return a; }
    Jet& operator/=(const Rat& s) { return (*this) *= s.inv(); }
    friend Jet operator/(Jet a, const Rat& s) { a /= s; return a; }

    // multiplicative inverse; requires nonzero constant term
    Jet recip() const;
    friend Jet operator/(const Jet& a, const Jet& b) { return a * b.recip(); }

    bool operator==(const Jet& o) const { return c_ == o.c_; }
    bool is_zero() const;

    std::string str() const;

private:
    std::shared_ptr<const JetSpec> spec_;
    std::vector<Rat> c_; // dense, mixed-radix layout per spec_->strides

    void check_same(const Jet& o) const;
    friend Jet jet_zero_like(const Jet& j);
};

inline Jet jet_zero_like(const Jet& j) { return Jet(j.spec(), Rat(0)); }

// value of D_{x}^{k1} D_{y}^{k2} ... (f.g) at the jets' base point, from the
// generating definition f(x+y) g(x-y) = exp{sum y_i D_i}(f.g)
Rat hirota_apply(const std::vector<std::pair<int, int>>& monomial, const Jet& f, const Jet& g);

} // namespace taulab
