#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>

#include "taulab/jet.hpp"
#include "taulab/laurent.hpp"
#include "taulab/matrix.hpp"
#include "taulab/rng.hpp"

using namespace taulab;

TEST_CASE("rational basics") {
    Rat a(6, 4);
    CHECK(a == Rat(3, 2));
    CHECK(a.num() == 3);
    CHECK(a.den() == 2);
    CHECK((Rat(1, 3) + Rat(1, 6)) == Rat(1, 2));
    CHECK(Rat(-2, 4).str() == "-1/2");
    CHECK(Rat(2).pow(-3) == Rat(1, 8));
    CHECK_THROWS(Rat(1, 0));
    Rat z(1);
    CHECK_THROWS(z /= Rat(0));
}

TEST_CASE("determinant conventions") {
    Mat<Rat> empty(0, 0);
    CHECK(det_exact(empty) == Rat(1));
    Mat<Rat> m(2, 2);
    m.at(0, 0) = Rat(1);
    m.at(0, 1) = Rat(2);
    m.at(1, 0) = Rat(3);
    m.at(1, 1) = Rat(4);
    CHECK(det_exact(m) == Rat(-2));
    CHECK(det_ring(m, Rat(1)) == Rat(-2));
}

TEST_CASE("determinant vs cofactor oracle on random 5x5") {
    Rng rng(12345);
    for (int t = 0; t < 3; ++t) {
        Mat<Rat> m(5, 5);
        for (int i = 0; i < 5; ++i)
            for (int j = 0; j < 5; ++j) m.at(i, j) = rng.rational();
        Rat d = det_exact(m);
        CHECK(d == det_cofactor(m, Rat(1)));
        CHECK(d == det_ring(m, Rat(1)));
    }
}

TEST_CASE("Cauchy-Binet for rectangular products") {
    Rng rng(99);
    for (int p = 1; p <= 3; ++p) {
        int r = p + 2;
        Mat<Rat> G(p, r), H(r, p);
        for (int i = 0; i < p; ++i)
            for (int j = 0; j < r; ++j) G.at(i, j) = rng.rational();
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < p; ++j) H.at(i, j) = rng.rational();
        Rat lhs = det_exact(mat_mul(G, H, Rat(0)));
        Rat rhs(0);
        std::vector<int> cols(p);
        std::function<void(int, int)> rec = [&](int start, int k) {
            if (k == p) {
                std::vector<int> rows(p);
                for (int i = 0; i < p; ++i) rows[i] = i;
                rhs += det_exact(G.pick(rows, cols)) * det_exact(H.pick(cols, rows));
                return;
            }
            for (int cidx = start; cidx < r; ++cidx) {
                cols[k] = cidx;
                rec(cidx + 1, k + 1);
            }
        };
        rec(0, 0);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("laurent residue and arithmetic") {
    LaurentPoly f;
    f.set(-1, Rat(1));
    CHECK(f.residue() == Rat(1));
    LaurentPoly g;
    g.set(2, Rat(3));
    g.set(-1, Rat(5));
    g.set(-3, Rat(-2));
    CHECK(g.residue() == Rat(5));
    Rng rng(7);
    LaurentPoly a, b;
    for (int e = -3; e <= 3; ++e) {
        a.set(e, rng.rational());
        b.set(e, rng.rational());
    }
    Rat conv(0);
    for (int e = -3; e <= 3; ++e) conv += a.coeff(e) * b.coeff(-1 - e);
    CHECK((a * b).residue() == conv);
    CHECK(g.eval(Rat(2)) == Rat(12) + Rat(5, 2) - Rat(1, 4));
}

TEST_CASE("jet arithmetic and reciprocal") {
    auto spec = JetSpec::make({"x", "y"}, {3, 2});
    Jet x = Jet::variable(spec, 0, Rat(2));
    Jet y = Jet::variable(spec, 1, Rat(-1));
    Jet f = x * x * y + x;
    CHECK(f.constant_term() == Rat(-2));
    Jet g = x * y + Jet::constant(spec, Rat(5));
    CHECK((f * g).constant_term() == f.constant_term() * g.constant_term());
    Jet r = f.recip();
    Jet one = Jet::constant(spec, Rat(1));
    CHECK((f * r) == one);
    CHECK_THROWS((x - Jet::constant(spec, Rat(2))).recip());
    Jet h = x * x * y;
    CHECK(h.deriv({1, 1}) == Rat(4));  // d_x d_y (x^2 y) = 2x at (2,-1)
    CHECK(h.deriv({2, 1}) == Rat(2));
}

TEST_CASE("hirota operator basics") {
    auto spec = JetSpec::make({"x"}, {2});
    Jet x = Jet::variable(spec, 0, Rat(1));
    Jet one = Jet::constant(spec, Rat(1));
    Jet f = x * x + x;
    CHECK(hirota_apply({{0, 1}}, f, f) == Rat(0));
    CHECK(hirota_apply({{0, 1}}, x, one) == Rat(1));
    Jet fsq = x * x;
    CHECK(hirota_apply({{0, 2}}, fsq, fsq) == Rat(-4));
    CHECK_THROWS(hirota_apply({{0, 3}}, fsq, fsq));
}

TEST_CASE("hirota bilinearity and antisymmetry") {
    auto spec = JetSpec::make({"x", "y"}, {3, 3});
    Rng rng(31);
    auto rand_jet = [&]() {
        Jet j = Jet::constant(spec, rng.rational());
        for (int a = 0; a <= 3; ++a)
            for (int b = 0; b <= 3; ++b) j.coeff_at({a, b}) = rng.rational();
        return j;
    };
    Jet f = rand_jet(), g = rand_jet(), h = rand_jet();
    std::vector<std::pair<int, int>> odd = {{0, 1}, {1, 2}};
    std::vector<std::pair<int, int>> even = {{0, 2}};
    Rat c1 = rng.rational(), c2 = rng.rational();
    Jet comb = f * c1 + g * c2;
    CHECK(hirota_apply(odd, comb, h) ==
          c1 * hirota_apply(odd, f, h) + c2 * hirota_apply(odd, g, h));
    CHECK(hirota_apply(odd, f, g) == -hirota_apply(odd, g, f));
    CHECK(hirota_apply(even, f, g) == hirota_apply(even, g, f));
}

TEST_CASE("deterministic rng") {
    Rng a(42), b(42);
    for (int i = 0; i < 10; ++i) CHECK(a.next() == b.next());
    Rng c(42);
    CHECK(!c.rational().is_zero());
    CHECK(mix_seed(1, "x") != mix_seed(1, "y"));
    CHECK(mix_seed(1, "x") == mix_seed(1, "x"));
}
