#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "taulab/checks.hpp"
#include "taulab/sympoly.hpp"

using namespace taulab;

TEST_CASE("basis evaluation examples") {
    VariableSet u({Rat(1), Rat(2), Rat(3)});
    CHECK(basis_eval(BasisKind::Elementary, 2, u) == Rat(11));
    CHECK(basis_eval(BasisKind::Complete, 0, u) == Rat(1));
    CHECK(basis_eval(BasisKind::Complete, 2, u) == Rat(1 + 4 + 9 + 2 + 3 + 6));
    CHECK(basis_eval(BasisKind::PowerSum, 2, u) == Rat(14));
    CHECK(basis_eval(BasisKind::Elementary, -3, u) == Rat(0));
    TimeVector x({Rat(3), Rat(5), Rat(7)});
    CHECK(basis_eval(BasisKind::Character, 0, x) == Rat(1));
    CHECK(basis_eval(BasisKind::Character, 2, x) == Rat(9, 2) + Rat(5));
    CHECK(basis_eval(BasisKind::Character, 3, x) == Rat(27, 6) + Rat(15) + Rat(7));
}

TEST_CASE("t-complete via generating function") {
    Rat t(2, 3);
    VariableSet u({Rat(1), Rat(-2), Rat(5, 2)}, t);
    CHECK(basis_eval(BasisKind::TComplete, 0, u) == Rat(1));
    CHECK(basis_eval(BasisKind::TComplete, 1, u) ==
          (Rat(1) - t) * basis_eval(BasisKind::PowerSum, 1, u));
    // q_r = zeta_r((1-t)p_1, (1-t^2)/2 p_2, ...)
    for (int r = 0; r <= 5; ++r) {
        std::vector<Rat> xs;
        for (int k = 1; k <= r + 1; ++k)
            xs.push_back((Rat(1) - t.pow(k)) / Rat(k) * basis_eval(BasisKind::PowerSum, k, u));
        TimeVector tv(xs);
        CHECK(basis_eval(BasisKind::TComplete, r, u) == basis_eval(BasisKind::Character, r, tv));
    }
}

TEST_CASE("schur examples") {
    VariableSet u({Rat(1), Rat(2)});
    CHECK(schur_eval(Partition({1}), u) == Rat(3));
    CHECK(schur_eval(Partition({2, 1}), u) == Rat(6));
    CHECK(schur_eval(Partition({1, 1, 1}), u) == Rat(0));
    CHECK(schur_eval(Partition({2, 1}), u, SchurMethod::Bialternant) == Rat(6));
    CHECK(schur_eval(Partition({2, 1}), u, SchurMethod::Tableau) == Rat(6));
    VariableSet rep({Rat(1), Rat(1)});
    CHECK_THROWS(schur_eval(Partition({1}), rep, SchurMethod::Bialternant));
}

TEST_CASE("skew schur basics") {
    VariableSet u({Rat(1), Rat(1)});
    CHECK(skew_schur_eval(Partition({2, 1}), Partition({1}), u) == Rat(4)); // h_1(1,1)^2
    CHECK(skew_schur_eval(Partition({2, 1}), Partition(), u) ==
          schur_eval(Partition({2, 1}), u));
    CHECK(skew_schur_eval(Partition({1}), Partition({2}), u) == Rat(0));
}

TEST_CASE("hall-littlewood error paths") {
    VariableSet no_t({Rat(1), Rat(2)});
    CHECK_THROWS(hall_littlewood_eval(Partition({1}), no_t, HLNormalization::P));
    VariableSet t1({Rat(1), Rat(2)}, Rat(1));
    CHECK_THROWS(hall_littlewood_eval(Partition({1}), t1, HLNormalization::P));
    VariableSet rep({Rat(1), Rat(1)}, Rat(1, 2));
    CHECK_THROWS(hall_littlewood_eval(Partition({1}), rep, HLNormalization::P));
}

TEST_CASE("sympoly suite passes") {
    VerificationReport rep = run_suite("sympoly", 2024, 2);
    for (auto& c : rep.checks) {
        INFO(c.name, ": lhs=", c.lhs, " rhs=", c.rhs, " at ", c.params);
        CHECK(c.status == "pass");
    }
}
