#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "taulab/checks.hpp"
#include "taulab/phase_model.hpp"

using namespace taulab;

TEST_CASE("monodromy rejects u = 0") {
    CHECK_THROWS(monodromy_apply(MonodromyEntry::B, Rat(0), PhaseState::vacuum(2)));
}

TEST_CASE("scalar product argument checks") {
    CHECK_THROWS(scalar_product(2, 1, {Rat(1)}, {Rat(2), Rat(3)}, ScalarMethod::BruteForce));
    CHECK_THROWS(scalar_product(1, 1, {Rat(0)}, {Rat(2)}, ScalarMethod::BruteForce));
    // coincident squares break the determinant prefactor
    CHECK_THROWS(scalar_product(2, 1, {Rat(2), Rat(-2)}, {Rat(1), Rat(3)},
                                ScalarMethod::Determinant));
}

TEST_CASE("census guards") {
    CHECK_THROWS(plane_partition_census(-1, 2, 2));
    auto empty = plane_partition_census(2, 3, 0);
    CHECK(empty.size() == 1);
    CHECK(empty[0] == 1); // only the zero array
}

TEST_CASE("phase suite passes") {
    VerificationReport rep = run_suite("phase", 31337, 1);
    for (auto& c : rep.checks) {
        INFO(c.name, " lhs=", c.lhs, " rhs=", c.rhs, " at ", c.params);
        CHECK(c.status == "pass");
    }
}
