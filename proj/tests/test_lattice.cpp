#include "p3b/lattice.hpp"

#include <doctest.h>

#include <random>

using namespace p3b;

TEST_CASE("intersection pairing on the L/C lattice")
{
    CHECK(pair(line_class(), line_class(), SurfaceClass(4)) == -2);
    CHECK(pair(curve_class(), curve_class(), SurfaceClass(7)) == 0);
    CHECK(pair(hyperplane_class(), hyperplane_class(), SurfaceClass(5)) == 5);
    CHECK(pair(line_class(), curve_class(), SurfaceClass(3)) == 2);
    for (Int k = 2; k <= 12; ++k) {
        SurfaceClass s(k);
        CHECK(pair(hyperplane_class(), hyperplane_class(), s) == k);
        CHECK(pair(hyperplane_class(), curve_class(), s) == k - 1);
    }
}

TEST_CASE("pairing is bilinear and symmetric")
{
    std::mt19937 rng(7131);
    std::uniform_int_distribution<Int> coef(-20, 20);
    for (int iter = 0; iter < 400; ++iter) {
        SurfaceClass s(2 + static_cast<Int>(rng() % 11));
        DivisorClass d1(coef(rng), coef(rng)), d2(coef(rng), coef(rng)), d3(coef(rng), coef(rng));
        CHECK(pair(d1, d2, s) == pair(d2, d1, s));
        CHECK(pair(d1 + d2, d3, s) == pair(d1, d3, s) + pair(d2, d3, s));
    }
}

TEST_CASE("degree against H")
{
    CHECK(degree(line_class(), SurfaceClass(6)) == 1);
    CHECK(degree(curve_class(), SurfaceClass(6)) == 5);
    CHECK(degree(DivisorClass(2, 3), SurfaceClass(4)) == 11);
}

TEST_CASE("canonical class is (k-4)H")
{
    CHECK(canonical_class(SurfaceClass(4)) == DivisorClass(0, 0));
    CHECK(canonical_class(SurfaceClass(2)) == DivisorClass(-2, -2));
    CHECK(canonical_class(SurfaceClass(7)) == DivisorClass(3, 3));
}

TEST_CASE("genus formula")
{
    CHECK(genus(line_class(), SurfaceClass(9)) == Rat(0));
    CHECK(genus(curve_class(), SurfaceClass(4)) == Rat(1));
    CHECK(genus(curve_class(), SurfaceClass(5)) == Rat(3));
    for (Int k = 2; k <= 12; ++k) {
        CHECK(genus(line_class(), SurfaceClass(k)) == Rat(0));
        CHECK(genus(curve_class(), SurfaceClass(k)) == Rat(1) + Rat((k - 4) * (k - 1), 2));
    }
}

TEST_CASE("chi of the structure sheaf and of divisors")
{
    CHECK(chi_structure(SurfaceClass(2)) == 1);
    CHECK(chi_structure(SurfaceClass(4)) == 2);
    CHECK(chi_structure(SurfaceClass(5)) == 5);

    // bC specialization agrees with the general surface Riemann-Roch.
    SurfaceClass s5(5);
    CHECK(chi_divisor(DivisorClass(0, 2), s5) == 1);
    CHECK(chi_divisor(DivisorClass(0, 2), s5) ==
          1 + count_binom(4, 3) - exact_div((5 - 4) * (5 - 1) * 2, 2, "t"));
    CHECK(chi_divisor(hyperplane_class(), SurfaceClass(2)) == 4);
    CHECK(chi_divisor(DivisorClass(0, 0), SurfaceClass(7)) == 1 + count_binom(6, 3));
}

TEST_CASE("Riemann-Roch on projective 3-space")
{
    CHECK(riemann_roch_p3({1, 0, 0, 0}) == Rat(1));
    CHECK(riemann_roch_p3({1, 1, 0, 0}) == Rat(4));
    CHECK(riemann_roch_p3({1, -4, 0, 0}) == Rat(-1));
    for (Int j = -25; j <= 25; ++j) {
        Rat chi = riemann_roch_p3({1, j, 0, 0});
        if (j >= 0)
            CHECK(chi == Rat(count_binom(j + 3, 3)));
        else if (j <= -4)
            CHECK(chi == Rat(-count_binom(-j - 1, 3)));
        else
            CHECK(chi == Rat(0));
    }
}

TEST_CASE("Chern twist formulas")
{
    // Tangent bundle data from the Euler sequence: c_i = C(4, i).
    ChernData tangent{3, count_binom(4, 1), count_binom(4, 2), count_binom(4, 3)};
    CHECK(twist_chern(tangent, -2) == ChernData{3, -2, 2, 0});

    CHECK(twist_chern({2, 0, 1, 0}, 1) == ChernData{2, 2, 2, 0});
    ChernData c{3, -1, 3, 5};
    CHECK(twist_chern(c, 0) == c);
    CHECK_THROWS_AS(twist_chern({1, 0, 0, 0}, 1), domain_fault);

    std::mt19937 rng(40923);
    std::uniform_int_distribution<Int> coef(-30, 30), step(-5, 5);
    for (int iter = 0; iter < 300; ++iter)
        for (Int rank : {Int(2), Int(3)}) {
            ChernData d{rank, coef(rng), coef(rng), rank == 2 ? 0 : coef(rng)};
            Int u = step(rng), t = step(rng);
            CHECK(twist_chern(twist_chern(d, u), t) == twist_chern(d, u + t));
        }
}

TEST_CASE("the plane has no L/C lattice")
{
    SurfaceClass plane(1);
    CHECK_THROWS_AS(pair(line_class(), line_class(), plane), domain_fault);
    CHECK_THROWS_AS(degree(line_class(), plane), domain_fault);
    CHECK_THROWS_AS(canonical_class(plane), domain_fault);
    CHECK_THROWS_AS(chi_structure(plane), domain_fault);
    CHECK_THROWS_AS(SurfaceClass(0), domain_fault);
}
