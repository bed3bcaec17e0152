#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "taulab/checks.hpp"
#include "taulab/fermion.hpp"

using namespace taulab;

TEST_CASE("clifford preconditions") {
    FockVector vac = FockVector::vacuum();
    CHECK_THROWS(clifford_apply(0, 0, Rat(1), vac));
    CHECK_THROWS(clifford_apply(1, -1, Rat(1), vac));
}

TEST_CASE("bosonize rejects charged terms") {
    FockVector bad;
    bad.set(FockLabel{{-1}, {}}, Rat(1));
    TimeVector x({Rat(1)});
    CHECK_THROWS(bosonize(bad, x));
}

TEST_CASE("master coefficient c_empty is the leading minor") {
    MasterCoefficients mc;
    mc.tag = "toy";
    mc.depth = 2;
    mc.master = Mat<Rat>(2, 3);
    int v = 1;
    for (int j = 0; j < 2; ++j)
        for (int mu = 0; mu < 3; ++mu) mc.master.at(j, mu) = Rat(v++);
    // c_empty = det of columns gamma_0, gamma_1
    Mat<Rat> m(2, 2);
    m.at(0, 0) = Rat(1);
    m.at(0, 1) = Rat(2);
    m.at(1, 0) = Rat(4);
    m.at(1, 1) = Rat(5);
    CHECK(mc.coeff(Partition()) == det_exact(m));
    CHECK_THROWS(mc.coeff(Partition({3})));     // outside the master matrix
    CHECK_THROWS(mc.coeff(Partition({1, 1, 1}))); // too many parts
}

TEST_CASE("fermion suite passes") {
    VerificationReport rep = run_suite("fermion", 123, 1);
    for (auto& c : rep.checks) {
        INFO(c.name, " lhs=", c.lhs, " rhs=", c.rhs, " at ", c.params);
        CHECK(c.status == "pass");
    }
}
