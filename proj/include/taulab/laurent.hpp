#pragma once

#include <map>
#include <string>

#include "taulab/rational.hpp"

namespace taulab {

// Single-variable Laurent polynomial over Rat: finite support, integer
// exponents of either sign, no stored zero coefficients.
class LaurentPoly {
public:
    LaurentPoly() = default;
    explicit LaurentPoly(Rat c) { set(0, std::move(c)); }
    static LaurentPoly term(int exp, Rat c) {
        LaurentPoly p;
        p.set(exp, std::move(c));
        return p;
    }

    const std::map<int, Rat>& terms() const { return t_; }

    void set(int exp, Rat c) {
        if (c.is_zero()) t_.erase(exp);
        else t_[exp] = std::move(c);
    }

    Rat coeff(int exp) const {
        auto it = t_.find(exp);
        return it == t_.end() ? Rat(0) : it->second;
    }

    // coefficient of 1/lambda
    Rat residue() const { return coeff(-1); }

    bool is_zero() const { return t_.empty(); }
    int min_exp() const { return t_.empty() ? 0 : t_.begin()->first; }
    int max_exp() const { return t_.empty() ? 0 : t_.rbegin()->first; }

    LaurentPoly operator-() const {
        LaurentPoly r;
        for (auto& [e, c] : t_) r.t_.emplace(e, -c);
        return r;
    }
    LaurentPoly& operator+=(const LaurentPoly& o) {
        for (auto& [e, c] : o.t_) set(e, coeff(e) + c);
        return *this;
    }
    LaurentPoly& operator-=(const LaurentPoly& o) {
        for (auto& [e, c] : o.t_) set(e, coeff(e) - c);
        return *this;
    }
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { a += b; return a; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { a -= b; return a; }

    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r;
        for (auto& [ea, ca] : a.t_)
            for (auto& [eb, cb] : b.t_) r.set(ea + eb, r.coeff(ea + eb) + ca * cb);
        return r;
    }
    LaurentPoly& operator*=(const LaurentPoly& o) { *this = *this * o; return *this; }
    LaurentPoly& operator*=(const Rat& s) {
        if (s.is_zero()) { t_.clear(); return *this; }
        for (auto& [e, c] : t_) c *= s;
        return *this;
    }
    friend LaurentPoly operator*(LaurentPoly a, const Rat& s) { a *= s; return a; }
    friend LaurentPoly operator*(const Rat& s, LaurentPoly a) { a *= s; return a; }

    bool operator==(const LaurentPoly& o) const { return t_ == o.t_; }

    // spot evaluation at lambda = x (x != 0 when negative exponents present)
    Rat eval(const Rat& x) const {
        Rat r(0);
        for (auto& [e, c] : t_) r += c * x.pow(e);
        return r;
    }

    std::string str() const;

private:
    std::map<int, Rat> t_;
};

} // namespace taulab
