#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <string>
#include <vector>

#include "taulab/rng.hpp"

namespace taulab {

// ~66 significant digits of working precision; identity tolerances sit at
// 1e-30, far above representation noise for desk-scale lattices
using BigFloat = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<66>>;

BigFloat bf_pi();

// minimal complex arithmetic over BigFloat (quasi-periodicity shifts move the
// theta arguments off the real axis)
struct Cplx {
    BigFloat re, im;

    Cplx() : re(0), im(0) {}
    Cplx(BigFloat r) : re(std::move(r)), im(0) {}
    Cplx(BigFloat r, BigFloat i) : re(std::move(r)), im(std::move(i)) {}

    friend Cplx operator+(const Cplx& a, const Cplx& b) { return {a.re + b.re, a.im + b.im}; }
    friend Cplx operator-(const Cplx& a, const Cplx& b) { return {a.re - b.re, a.im - b.im}; }
    friend Cplx operator*(const Cplx& a, const Cplx& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend Cplx operator/(const Cplx& a, const Cplx& b) {
        BigFloat d = b.re * b.re + b.im * b.im;
        return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
    }
    Cplx operator-() const { return {-re, -im}; }
    BigFloat abs() const { return sqrt(re * re + im * im); }
};

Cplx cplx_cos(const Cplx& z);
Cplx cplx_sin(const Cplx& z);
Cplx cplx_exp(const Cplx& z);

// Elliptic theta kernel: nome q in (0,1), derived half-period magnitudes and
// a product truncation chosen so the tail is below the working precision.
struct ThetaParams {
    BigFloat q;
    int precision = 50; // significant digits the products are trusted to
    int trunc = 0;
    BigFloat K1, K2;

    static ThetaParams make(const BigFloat& q, int precision = 50);
};

enum class ThetaKind { H, H1, Theta, Theta1 };

BigFloat theta_eval(ThetaKind kind, const BigFloat& u, const ThetaParams& tp);
Cplx theta_eval_c(ThetaKind kind, const Cplx& u, const ThetaParams& tp);

// ---- BSOS ----

struct BsosParams {
    ThetaParams theta;
    BigFloat lambda, zeta;
    std::vector<BigFloat> u, v;

    BigFloat bracket(const BigFloat& x) const; // [x] = H(lambda x) Theta(lambda x)
};

BsosParams sample_bsos(Rng& rng, int N, int precision = 50);

enum class HeightMethod { BruteForce, Product, PermutationSum };

// Z^{(h)}_N with base boundary height h; bruteforce enumerates interior
// heights, the permutation sum is the closed N! form (h = 0 only)
BigFloat bsos_dwpf(int N, const BsosParams& par, HeightMethod method, int base_height = 0);
BigFloat bsos_bruteforce_serial(int N, const BsosParams& par, int base_height = 0);
// OpenMP over the first interior corner row, reduced in fixed order; bit
// identical to the serial reference
BigFloat bsos_bruteforce(int N, const BsosParams& par, int base_height = 0);

// rhs of the single-sum recursion: sum over r of the frozen-weight prefactors
// times Z^{(1)}_{N-1}(u-hat-r, v-hat-N)
BigFloat bsos_recursion_rhs(int N, const BsosParams& par);

// ---- trigonometric Perk-Schultz ----

struct PsTrigParams {
    BigFloat eta;
    std::vector<BigFloat> u, v;
    int r = 0, s = 0; // sl(r+1|s+1) block data; L = r+s+2
};

PsTrigParams sample_ps_trig(Rng& rng, int N);

BigFloat ps_trig_dwpf(int N, const PsTrigParams& par, HeightMethod method);
BigFloat ps_trig_bruteforce_serial(int N, const PsTrigParams& par);
// brute force summed over ALL colours in B (feasible for tiny N); equals the
// two-colour enumeration by colour conservation
BigFloat ps_trig_bruteforce_full_colours(int N, const PsTrigParams& par);
// rhs of the recursion at u_1 = v_1 + 1
BigFloat ps_trig_recursion_rhs(int N, const PsTrigParams& par);
// rhs of the second recursion at u_N = v_1
BigFloat ps_trig_recursion2_rhs(int N, const PsTrigParams& par);
// rhs of the line-permutation relation (cyclic shift of the u's)
BigFloat ps_trig_line_permutation_rhs(int N, const PsTrigParams& par);

// ---- elliptic Perk-Schultz height model ----

struct PsEllipticParams {
    ThetaParams theta;
    BigFloat lambda;
    BigFloat a0; // effective (a_(0))_{1,L} pairing
    std::vector<BigFloat> u, v;

    BigFloat bracket(const BigFloat& x) const; // [x] = H(lambda x)
};

PsEllipticParams sample_ps_elliptic(Rng& rng, int N, int precision = 50);

BigFloat ps_elliptic_dwpf(int N, const PsEllipticParams& par, HeightMethod method,
                          int base_shift = 0); // base_shift adds to a0
BigFloat ps_elliptic_bruteforce_serial(int N, const PsEllipticParams& par, int base_shift = 0);

// complex product form, for the quasi-periodicity checks
Cplx ps_elliptic_product_c(int N, const PsEllipticParams& par, const Cplx& u1_override);

// ---- elliptic identities ----

struct EllipticIdentitySides {
    BigFloat lhs, rhs;
    BigFloat residual; // |lhs - rhs| / max(|lhs|, |rhs|)
};

EllipticIdentitySides elliptic_identity_sides(int N, const PsEllipticParams& par);
// the four-term H identity at plain arguments
EllipticIdentitySides simple_theta_identity(const ThetaParams& tp, const BigFloat& u,
                                            const BigFloat& v, const BigFloat& x,
                                            const BigFloat& y);

BigFloat rel_residual(const BigFloat& lhs, const BigFloat& rhs);

} // namespace taulab
