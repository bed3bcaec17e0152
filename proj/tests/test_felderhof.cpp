#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "taulab/checks.hpp"
#include "taulab/felderhof.hpp"

using namespace taulab;

TEST_CASE("colour point genericity") {
    ColourPoint pt;
    pt.alpha = {Rat(1, 2), Rat(1, 3)};
    pt.beta = {Rat(1, 5), Rat(2, 7)};
    CHECK(pt.generic());
    pt.beta[0] = Rat(2); // alpha_1 beta_1 = 1
    CHECK(!pt.generic());
    pt.beta[0] = Rat(1);
    CHECK(!pt.generic());
}

TEST_CASE("reduced bruteforce parity assertion holds") {
    Rng rng(17);
    for (int N = 1; N <= 3; ++N) {
        ColourPoint pt = sample_colour_point(rng, N);
        CHECK_NOTHROW(dwpf_reduced_bruteforce_serial(N, pt));
    }
}

TEST_CASE("size guard") {
    Rng rng(18);
    ColourPoint pt = sample_colour_point(rng, 6);
    CHECK_THROWS(dwpf_reduced(6, pt, FelderhofMethod::BruteForce));
}

TEST_CASE("felderhof suite passes") {
    VerificationReport rep = run_suite("felderhof", 4242, 1);
    for (auto& c : rep.checks) {
        INFO(c.name, " lhs=", c.lhs, " rhs=", c.rhs, " at ", c.params);
        CHECK(c.status == "pass");
    }
}
