#include <doctest.h>

#include "betafam/closedform.hpp"
#include "betafam/conditions.hpp"

using namespace betafam;

namespace {
Level1Form f_25_29()
{
    return monomial_form(50, 0, 1) + monomial_form(42, 24, 4) + monomial_form(41, 27, 3);
}
} // namespace

TEST_CASE("C1: nonzero Fourier expansion mod p")
{
    CHECK(check_c1(monomial_form(50, 0, 1), 5));
    CHECK(!check_c1(monomial_form(2, 0, 5), 5));
    CHECK(check_c1(f_25_29(), 5));
}

TEST_CASE("C2: the q-order demand")
{
    C2Witness w;
    SUBCASE("Delta^50 at (i, j) = (25, 29)") {
        CHECK(check_c2(monomial_form(50, 0, 1), 5, 25, 29, &w));
        CHECK(w.ord_q == 50);
        CHECK(w.bound == 600 - 4 * 29);
        CHECK(!w.equality_branch);
    }
    SUBCASE("Delta^(4i) at p = 7, j = 1") {
        for (std::uint64_t i : {1ull, 5ull, 20ull})
            CHECK(check_c2(monomial_form(static_cast<std::int64_t>(4 * i), 0, 1), 7, i, 1));
    }
    SUBCASE("ord 49 at weight 600 fails for j = 1") {
        CHECK(!check_c2(monomial_form(49, 3, 1), 5, 25, 1, &w));
        CHECK(w.ord_q == 49);
    }
    SUBCASE("weight mismatch is rejected") {
        CHECK_THROWS_AS(check_c2(monomial_form(50, 0, 1), 5, 24, 1), std::domain_error);
    }
    SUBCASE("equality branch cannot fire at p in {5, 7, 13}") {
        // 12 never divides (p^2-1)i - (p-1)j - 2 for these p
        for (std::uint64_t p : {5ull, 7ull, 13ull})
            for (std::uint64_t i = 1; i <= 12; ++i)
                for (std::uint64_t j = 1; j <= 40; ++j)
                    REQUIRE(((p * p - 1) * i - (p - 1) * j - 2) % 12 != 0);
    }
    SUBCASE("equality branch reachable at p = 11") {
        // weight 120, ord 4: 12*4 = 120 - 10*7 - 2
        CHECK(check_c2(monomial_form(4, 18, 1), 11, 1, 7, &w));
        CHECK(w.equality_branch);
    }
}

TEST_CASE("C3 oracle")
{
    EisensteinCache cache;
    CHECK(check_c3(monomial_form(2, 0, 1), 5));
    CHECK(check_c3(monomial_form(50, 0, 1), 5));
    CHECK(!check_c3(monomial_form(49, 3, 1), 5)); // explicit E4 factor
    CHECK(check_c3(monomial_form(110, 0, 1), 11));
}

TEST_CASE("2 as a topological generator")
{
    CHECK(is_topgen_2(5));
    CHECK(!is_topgen_2(7));
    CHECK(is_topgen_2(11));
    CHECK(is_topgen_2(13));
    CHECK(is_topgen_2(677));
}

TEST_CASE("C4 at ell = 2")
{
    EisensteinCache cache;
    C4Witness w;
    SUBCASE("f_25/29 is certified to order >= 29") {
        CHECK(check_c4_at_2(f_25_29(), 5, 29, cache, &w) == C4Status::certified);
        REQUIRE(w.order);
        CHECK(*w.order >= 29);
    }
    SUBCASE("Delta^10 certified at exactly order 5") {
        CHECK(check_c4_at_2(monomial_form(10, 0, 1), 5, 5, cache, &w) == C4Status::certified);
        CHECK(w.order == 5);
        CHECK(check_c4_at_2(monomial_form(10, 0, 1), 5, 6, cache) == C4Status::not_certified);
    }
    SUBCASE("p = 7 is inapplicable") {
        CHECK(check_c4_at_2(monomial_form(4, 0, 1), 7, 1, cache) == C4Status::inapplicable);
    }
}

TEST_CASE("combined checker short-circuits in order")
{
    EisensteinCache cache;
    SUBCASE("C1 failure reports the stage and skips the rest") {
        ConditionReport rep = check_all(monomial_form(50, 0, 5), 5, 25, 1, cache);
        CHECK(rep.failed_stage == "c1");
        CHECK(!rep.all_passed());
    }
    SUBCASE("f_25/29 passes everything") {
        ConditionReport rep = check_all(f_25_29(), 5, 25, 29, cache);
        CHECK(rep.all_passed());
        CHECK(rep.c4 == C4Status::certified);
        CHECK(rep.generator_check);
    }
    SUBCASE("C2 failure reported") {
        ConditionReport rep = check_all(monomial_form(49, 3, 1), 5, 25, 1, cache);
        CHECK(rep.failed_stage == "c2");
    }
    SUBCASE("inapplicable C4 does not fail the report") {
        ConditionReport rep = check_all(monomial_form(8, 0, 1), 7, 2, 1, cache);
        CHECK(rep.all_passed());
        CHECK(rep.c4 == C4Status::inapplicable);
    }
}

TEST_CASE("closed forms pass all four checks on a small sweep")
{
    EisensteinCache cache;
    for (std::uint64_t n = 0; n <= 2; ++n) {
        for (std::uint64_t r = 1; r <= 3; ++r) {
            std::uint64_t i = r;
            for (std::uint64_t k = 0; k < n; ++k)
                i *= 5;
            for (std::uint64_t j : enumerate_j(5, i)) {
                auto [form, tag] = theorem_main_5(i, j);
                ConditionReport rep = check_all(form, 5, i, j, cache);
                REQUIRE(rep.all_passed());
                REQUIRE(rep.c4 == C4Status::certified);
            }
        }
    }
}
