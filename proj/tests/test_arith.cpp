#include "p3b/arith.hpp"

#include <doctest.h>

#include <cstdint>

using namespace p3b;

namespace {

// Pascal-recursion oracle, independent of the product formula.
Int subsets_oracle(Int n, Int r)
{
    if (r < 0 || n < 0 || r > n)
        return 0;
    if (r == 0 || r == n)
        return 1;
    return subsets_oracle(n - 1, r - 1) + subsets_oracle(n - 1, r);
}

} // namespace

TEST_CASE("count_binom matches the subset oracle and clamps")
{
    for (Int n = -6; n <= 14; ++n)
        for (Int r = 0; r <= 6; ++r)
            CHECK(count_binom(n, r) == subsets_oracle(n, r));
    CHECK(count_binom(-1, 3) == 0);
    CHECK(count_binom(2, 3) == 0);
    CHECK(count_binom(30, 3) == 4060);
    CHECK_THROWS_AS(count_binom(4, -1), domain_fault);
}

TEST_CASE("poly_binom extends count_binom polynomially")
{
    for (Int n = 0; n <= 14; ++n)
        for (Int r = 0; r <= 5; ++r)
            CHECK(poly_binom(n, r) == count_binom(n, r));
    // negative arguments via the reflection (-1)^r C(r-n-1, r)
    for (Int n = -12; n < 0; ++n)
        for (Int r = 0; r <= 5; ++r) {
            Int sign = r % 2 == 0 ? 1 : -1;
            CHECK(poly_binom(n, r) == sign * count_binom(r - n - 1, r));
        }
    CHECK(poly_binom(-1, 3) == -1);
}

TEST_CASE("checked arithmetic faults instead of wrapping")
{
    const Int big = INT64_MAX / 2 + 1;
    CHECK_THROWS_AS(checked_add(big, big), arithmetic_fault);
    CHECK_THROWS_AS(checked_mul(big, 4), arithmetic_fault);
    CHECK_THROWS_AS(checked_sub(INT64_MIN, 1), arithmetic_fault);
    CHECK(checked_mul(1 << 20, 1 << 20) == Int(1) << 40);
}

TEST_CASE("exact division and rational narrowing")
{
    CHECK(exact_div(12, 4, "t") == 3);
    CHECK_THROWS_AS(exact_div(13, 4, "t"), arithmetic_fault);
    CHECK_THROWS_AS(exact_div(1, 0, "t"), arithmetic_fault);
    CHECK(to_integer(Rat(9, 3), "t") == 3);
    CHECK_THROWS_AS(to_integer(Rat(1, 2), "t"), arithmetic_fault);
}
