#include <doctest.h>

#include <stdexcept>

#include "betafam/betafamily.hpp"

using namespace betafam;

TEST_CASE("a_n bounds")
{
    CHECK(a_seq(5, 0) == 0);
    CHECK(a_seq(5, 1) == 5);
    CHECK(a_seq(5, 2) == 29);
    CHECK(a_seq(5, 3) == 149);
    CHECK(a_seq(5, 4) == 749);
    CHECK(a_seq(7, 2) == 55);
}

TEST_CASE("order-p membership")
{
    CHECK(!is_order_p(5, 25, 5));   // 5 | 5 and 5 <= a_1
    CHECK(is_order_p(5, 50, 29));
    CHECK(!is_order_p(5, 25, 29));  // r = 1 caps j at 25
    CHECK(is_order_p(5, 25, 25));
    CHECK(is_order_p(7, 3, 1));
    CHECK(!is_order_p(7, 3, 2));    // n = 0 admits only j = 1
    CHECK(is_order_p(5, 1250, 150));
    CHECK(!is_order_p(5, 1250, 145));
}

TEST_CASE("decomposition")
{
    BetaIndex b = decompose(5, 1250, 29);
    CHECK(b.r == 2);
    CHECK(b.n == 4);
    CHECK(b.valid);
    CHECK_THROWS_AS(decompose(3, 5, 1), std::domain_error);
}

TEST_CASE("enumerate matches the printed lists")
{
    CHECK(enumerate_j(5, 5) == std::vector<std::uint64_t>{1, 2, 3, 4, 5});
    CHECK(enumerate_j(5, 15) == std::vector<std::uint64_t>{1, 2, 3, 4, 5});
    std::vector<std::uint64_t> want25;
    for (std::uint64_t j = 1; j <= 25; ++j)
        if (j != 5)
            want25.push_back(j);
    CHECK(enumerate_j(5, 25) == want25);
    CHECK(enumerate_j(5, 1250).size() == 720);
    CHECK(enumerate_j(7, 3) == std::vector<std::uint64_t>{1});
}

TEST_CASE("enumeration invariants")
{
    // max j is a_n for r > 1 and p^n for r = 1 (n >= 1); multiples of p only
    // appear above a_{n-1}
    for (std::uint64_t p : {5ull, 7ull}) {
        for (std::uint64_t n = 1; n <= 3; ++n) {
            std::uint64_t pn = 1;
            for (std::uint64_t k = 0; k < n; ++k)
                pn *= p;
            auto js1 = enumerate_j(p, pn);
            REQUIRE(!js1.empty());
            CHECK(js1.back() == pn);
            auto js2 = enumerate_j(p, 2 * pn);
            CHECK(js2.back() == a_seq(p, n));
            for (std::uint64_t j : js2)
                if (j % p == 0)
                    REQUIRE(j > a_seq(p, n - 1));
        }
    }
}
