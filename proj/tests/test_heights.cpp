#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "taulab/checks.hpp"
#include "taulab/heights.hpp"

using namespace taulab;

TEST_CASE("theta parameter validation") {
    CHECK_THROWS(ThetaParams::make(BigFloat(0)));
    CHECK_THROWS(ThetaParams::make(BigFloat("1.2")));
    CHECK_THROWS(ThetaParams::make(BigFloat("0.3"), 20)); // precision too low
    ThetaParams tp = ThetaParams::make(BigFloat("0.3"), 50);
    CHECK(tp.trunc > 10);
    CHECK(tp.K1 > 0);
    CHECK(tp.K2 > 0);
}

TEST_CASE("complex helpers") {
    Cplx z(BigFloat(1), BigFloat(2));
    Cplx w = z * z;
    CHECK(w.re == BigFloat(-3));
    CHECK(w.im == BigFloat(4));
    Cplx q = w / z;
    CHECK(abs(q.re - 1) < BigFloat("1e-50"));
    CHECK(abs(q.im - 2) < BigFloat("1e-50"));
    // cos^2 + sin^2 = 1 off the real axis
    Cplx s = cplx_sin(z), cc = cplx_cos(z);
    Cplx one = s * s + cc * cc;
    CHECK(abs(one.re - 1) < BigFloat("1e-50"));
    CHECK(abs(one.im) < BigFloat("1e-50"));
}

TEST_CASE("bsos guards") {
    Rng rng(7);
    BsosParams par = sample_bsos(rng, 2);
    CHECK_THROWS(bsos_dwpf(2, par, HeightMethod::Product));
    CHECK_THROWS(bsos_dwpf(2, par, HeightMethod::PermutationSum, 1));
}

TEST_CASE("heights suite passes") {
    VerificationReport rep = run_suite("heights", 271828, 1);
    for (auto& c : rep.checks) {
        INFO(c.name, " lhs=", c.lhs, " rhs=", c.rhs, " at ", c.params, " residual=", c.residual);
        CHECK(c.status == "pass");
    }
}
