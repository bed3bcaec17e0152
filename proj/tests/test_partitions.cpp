#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "taulab/partitions.hpp"
#include "taulab/rng.hpp"

using namespace taulab;

TEST_CASE("partition normalization and containment") {
    CHECK(Partition({3, 1, 0, 0}) == Partition({3, 1}));
    CHECK(Partition().length() == 0);
    CHECK_THROWS(Partition({1, 2}));
    CHECK(Partition({3, 2}).contains(Partition({2, 2})));
    CHECK(!Partition({3, 2}).contains(Partition({2, 2, 1})));
    CHECK(Partition({3, 1}).weight() == 4);
}

TEST_CASE("conjugate examples and involution") {
    CHECK(conjugate(Partition()) == Partition());
    CHECK(conjugate(Partition({3, 1, 1})) == Partition({3, 1, 1}));
    CHECK(conjugate(Partition({4, 2, 1})) == Partition({3, 2, 1, 1}));
    // involution on 500 random partitions in an 8x8 box
    auto box = partitions_in_box(8, 8);
    Rng rng(5);
    for (int t = 0; t < 500; ++t) {
        const Partition& lam = box[rng.below(box.size())];
        CHECK(conjugate(conjugate(lam)) == lam);
    }
}

TEST_CASE("hook coordinates match the fermion labelling") {
    HookCoordinates h1 = hook_coordinates(Partition({1}));
    REQUIRE(h1.count() == 1);
    CHECK(h1.arms[0] == 0);
    CHECK(h1.legs[0] == -1);
    CHECK(hook_coordinates(Partition()).count() == 0);
    HookCoordinates h22 = hook_coordinates(Partition({2, 2}));
    REQUIRE(h22.count() == 2);
    CHECK(h22.arms == std::vector<int>{1, 0});
    CHECK(h22.legs == std::vector<int>{-2, -1});
    // round trip on a 6x6 box
    for (const Partition& lam : partitions_in_box(6, 6))
        CHECK(partition_from_hooks(hook_coordinates(lam)) == lam);
}

TEST_CASE("partitions_in_box counts") {
    CHECK(partitions_in_box(0, 5).size() == 1);
    CHECK(partitions_in_box(2, 2).size() == 6);
    CHECK(partitions_in_box(3, 2).size() == 10);
    for (int n = 0; n <= 7; ++n)
        for (int m = 0; m <= 7; ++m)
            CHECK((long)partitions_in_box(n, m).size() == binomial_long(n + m, n));
}

TEST_CASE("ssyt weights") {
    // shape (2,1), N=2: weights (2,1) and (1,2)
    auto w = ssyt_weights(Partition({2, 1}), Partition(), 2);
    REQUIRE(w.size() == 2);
    std::multiset<std::vector<int>> ws(w.begin(), w.end());
    CHECK(ws.count({2, 1}) == 1);
    CHECK(ws.count({1, 2}) == 1);
    // column longer than the alphabet: no fillings
    CHECK(ssyt_weights(Partition({1, 1, 1}), Partition(), 2).empty());
    // ascending and descending give the same weight multiset
    for (const Partition& lam : partitions_in_box(3, 3))
        for (const Partition& mu : partitions_in_box(3, 3)) {
            if (!lam.contains(mu)) continue;
            auto a = ssyt_weights(lam, mu, 3, true);
            auto d = ssyt_weights(lam, mu, 3, false);
            std::multiset<std::vector<int>> ma(a.begin(), a.end()), md(d.begin(), d.end());
            CHECK(ma == md);
        }
}

TEST_CASE("occupation dictionary") {
    CHECK(occupation_to_partition({0, 2, 0, 1, 0}) == Partition({3, 1, 1}));
    CHECK(occupation_to_partition({3, 0, 0, 0, 0}) == Partition());
    CHECK(occupation_to_partition({0, 0, 0, 0, 3}) == Partition({4, 4, 4}));
    CHECK(partition_to_occupation(Partition({3, 1, 1}), 3, 4) ==
          std::vector<int>{0, 2, 0, 1, 0});
    // mutual inverse for all occupation sequences with N, M <= 4
    for (int N = 0; N <= 4; ++N)
        for (int M = 0; M <= 4; ++M)
            for (const Partition& lam : partitions_in_box(N, M)) {
                auto occ = partition_to_occupation(lam, N, M);
                int total = 0;
                for (int x : occ) total += x;
                CHECK(total == N);
                CHECK(occupation_to_partition(occ) == lam);
            }
    CHECK_THROWS(occupation_to_partition({1, -1}));
}

TEST_CASE("horizontal strips") {
    CHECK(is_horizontal_strip(Partition({3, 1}), Partition({2, 1}), 1));
    CHECK(is_horizontal_strip(Partition({3, 2}), Partition({2, 1}), 2));
    CHECK(!is_horizontal_strip(Partition({2, 2}), Partition({1}), 2)); // two in one column
    CHECK(!is_horizontal_strip(Partition({2, 1}), Partition({2, 1}), 1));
}
