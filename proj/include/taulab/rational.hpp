#pragma once

#include <gmpxx.h>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace taulab {

// Arbitrary-precision rational, value semantics. Thin wrapper over GMP's
// mpq_class so that generic code (jets, matrices) never sees GMP expression
// templates. Always canonical: denominator > 0, gcd(num, den) = 1.
class Rat {
public:
    Rat() : v_(0) {}
    Rat(long n) : v_(n) {}
    Rat(long n, long d) : v_(n, d) {
        if (d == 0) throw std::invalid_argument("Rat: zero denominator");
        v_.canonicalize();
    }
    explicit Rat(const mpq_class& q) : v_(q) { v_.canonicalize(); }
    explicit Rat(const mpz_class& z) : v_(z) {}

    static Rat from_string(const std::string& s) {
        mpq_class q(s);
        q.canonicalize();
        return Rat(q);
    }

    const mpq_class& raw() const { return v_; }
    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    int sign() const { return sgn(v_); }

    Rat operator-() const { return Rat(mpq_class(-v_)); }
    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o) {
        if (o.is_zero()) throw std::domain_error("Rat: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rat operator+(Rat a, const Rat& b) { a += b; return a; }
    friend Rat operator-(Rat a, const Rat& b) { a -= b; return a; }
    friend Rat operator*(Rat a, const Rat& b) { a *= b; return a; }
    friend Rat operator/(Rat a, const Rat& b) { a /= b; return a; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }
    friend bool operator>(const Rat& a, const Rat& b) { return a.v_ > b.v_; }

    Rat inv() const {
        if (is_zero()) throw std::domain_error("Rat: inverse of zero");
        return Rat(mpq_class(1 / v_));
    }

    // v^e for any integer e (e < 0 requires v != 0)
    Rat pow(long e) const {
        if (e == 0) return Rat(1);
        Rat base = e < 0 ? inv() : *this;
        unsigned long k = e < 0 ? -(unsigned long)e : (unsigned long)e;
        mpq_class r(1);
        mpq_class b = base.v_;
        while (k) {
            if (k & 1) r *= b;
            b *= b;
            k >>= 1;
        }
        return Rat(r);
    }

    Rat abs() const { return sign() < 0 ? -*this : *this; }

    // decimal string, "num/den" when den != 1
    std::string str() const { return v_.get_str(); }

    double to_double() const { return v_.get_d(); }

private:
    mpq_class v_;
};

inline Rat factorial_rat(int n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), (unsigned long)n);
    return Rat(f);
}

inline Rat binomial_rat(int n, int k) {
    if (k < 0 || k > n) return Rat(0);
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), (unsigned long)n, (unsigned long)k);
    return Rat(b);
}

} // namespace taulab
