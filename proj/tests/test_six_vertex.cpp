#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "taulab/checks.hpp"
#include "taulab/six_vertex.hpp"

using namespace taulab;

TEST_CASE("configuration counts are the ASM numbers") {
    CHECK(dwbc_configuration_count(1) == 1);
    CHECK(dwbc_configuration_count(2) == 2);
    CHECK(dwbc_configuration_count(3) == 7);
    CHECK(dwbc_configuration_count(4) == 42);
    CHECK(dwbc_configuration_count(5) == 429);
}

TEST_CASE("spectral point genericity") {
    Rng rng(3);
    SpectralPoint pt = sample_spectral_point(rng, 3, 2);
    CHECK(pt.generic());
    SpectralPoint bad = pt;
    bad.y[0] = bad.x[0]; // u_1 = v_1
    CHECK(!bad.generic());
    bad = pt;
    bad.p = Rat(1);
    CHECK(!bad.generic());
}

TEST_CASE("size guards") {
    Rng rng(4);
    SpectralPoint pt = sample_spectral_point(rng, 7);
    CHECK_THROWS(dwpf(7, pt, DwpfMethod::BruteForce));
}

TEST_CASE("degenerate point rejected by determinant methods") {
    Rng rng(5);
    SpectralPoint pt = sample_spectral_point(rng, 2);
    pt.y[1] = pt.y[0];
    CHECK_THROWS(dwpf(2, pt, DwpfMethod::Izergin));
}

TEST_CASE("slavnov argument validation") {
    Rng rng(6);
    SpectralPoint pt = sample_spectral_point(rng, 2, 3);
    CHECK_THROWS(slavnov(2, 4, pt, SlavnovMethod::Determinant)); // wrong w count
    SpectralPoint pt2 = sample_spectral_point(rng, 3, 2);
    CHECK_THROWS(slavnov(3, 2, pt2, SlavnovMethod::Determinant)); // N > M
}

TEST_CASE("sixvertex suite passes") {
    VerificationReport rep = run_suite("sixvertex", 99, 1);
    for (auto& c : rep.checks) {
        INFO(c.name, " lhs=", c.lhs, " rhs=", c.rhs, " at ", c.params);
        CHECK(c.status == "pass");
    }
}
