#include <doctest.h>

#include <random>

#include "betafam/bernoulli.hpp"
#include "betafam/fp_poly.hpp"

using namespace betafam;

TEST_CASE("bernoulli numbers under the B1 = -1/2 convention")
{
    CHECK(bernoulli(0) == Rat(1));
    CHECK(bernoulli(1) == Rat(-1, 2));
    CHECK(bernoulli(3) == Rat(0));
    CHECK(bernoulli(4) == Rat(-1, 30));
    CHECK(bernoulli(10) == Rat(5, 66));
    CHECK(bernoulli(12) == Rat(-691, 2730));
    // Eisenstein factors -2t/B_t
    CHECK(Rat(-8) / bernoulli(4) == Rat(240));
    CHECK(Rat(-20) / bernoulli(10) == Rat(-264));
}

TEST_CASE("bernoulli satisfies the defining recurrence through n = 700")
{
    // independent oracle: sum_{k=0}^{n} C(n+1, k) B_k = 0 for n >= 1
    auto table = bernoulli_table(700);
    Int binom;
    for (std::uint64_t n = 1; n <= 700; ++n) {
        Rat sum(0);
        for (std::uint64_t k = 0; k <= n; ++k) {
            mpz_bin_uiui(binom.get_mpz_t(), n + 1, k);
            sum += Rat(binom) * table[k];
        }
        REQUIRE(sum == 0);
    }
}

TEST_CASE("tangent numbers")
{
    auto t = tangent_numbers(5);
    CHECK(t == std::vector<Int>{1, 2, 16, 272, 7936});
}

TEST_CASE("rationals are kept canonical")
{
    Rat r(6, -4);
    r.canonicalize();
    CHECK(r.get_num() == -3);
    CHECK(r.get_den() == 2);
}

TEST_CASE("modulus validation")
{
    CHECK_THROWS_AS(validate_prime_modulus(2), std::domain_error);
    CHECK_THROWS_AS(validate_prime_modulus(9), std::domain_error);
    CHECK_THROWS_AS(validate_prime_modulus(1), std::domain_error);
    CHECK_NOTHROW(validate_prime_modulus(5));
    CHECK_NOTHROW(validate_prime_modulus(677));
}

TEST_CASE("Fp arithmetic and field mismatch")
{
    Fp a(3, 5), b(4, 5);
    CHECK((a * b).v == 2);
    CHECK((a + b).v == 2);
    CHECK(a.inv().v == 2);
    CHECK_THROWS_AS(a + Fp(1, 7), ring_mismatch_error);
    CHECK_THROWS_AS(Fp(0, 5).inv(), std::domain_error);
    CHECK(Fp(Rat(1, 16), 11).v == inv_mod_p(5, 11));
    CHECK_THROWS_AS(Fp(Rat(1, 5), 5), std::domain_error);
}

TEST_CASE("polynomial division with remainder")
{
    SUBCASE("x by x") {
        auto [q, r] = fp_poly_divrem(FpPoly::monomial(5, 1), FpPoly::monomial(5, 1));
        CHECK(q == FpPoly(5, {1}));
        CHECK(r.is_zero());
    }
    SUBCASE("x^10 - 1 is divisible by (x+1)(x+3)(x+4) mod 11") {
        FpPoly b = FpPoly::linear(11, 1, 1) * FpPoly::linear(11, 1, 3) * FpPoly::linear(11, 1, 4);
        FpPoly a = FpPoly::monomial(11, 10) - FpPoly(11, {1});
        auto [q, r] = fp_poly_divrem(a, b);
        CHECK(r.is_zero());
        CHECK(q * b == a);
    }
    SUBCASE("x^14 - 1 is divisible by x^2 + 5x + 1 mod 13") {
        FpPoly a = FpPoly::monomial(13, 14) - FpPoly(13, {1});
        auto [q, r] = fp_poly_divrem(a, FpPoly(13, {1, 5, 1}));
        CHECK(r.is_zero());
    }
    SUBCASE("zero divisor and modulus mismatch throw") {
        CHECK_THROWS_AS(fp_poly_divrem(FpPoly(5, {1}), FpPoly(5)), std::domain_error);
        CHECK_THROWS_AS(fp_poly_divrem(FpPoly(5, {1}), FpPoly(7, {1, 1})), ring_mismatch_error);
    }
}

TEST_CASE("divrem reconstructs a = q*b + r on random inputs")
{
    std::mt19937 rng(7);
    const std::uint64_t primes[] = {5, 11, 13, 677};
    for (int trial = 0; trial < 200; ++trial) {
        std::uint64_t p = primes[rng() % 4];
        auto rand_poly = [&](std::size_t maxdeg) {
            std::vector<std::uint64_t> c(1 + rng() % (maxdeg + 1));
            for (auto& x : c)
                x = rng() % p;
            return FpPoly(p, std::move(c));
        };
        FpPoly a = rand_poly(20);
        FpPoly b = rand_poly(8);
        if (b.is_zero())
            continue;
        auto [q, r] = fp_poly_divrem(a, b);
        REQUIRE(q * b + r == a);
        REQUIRE(r.degree() < b.degree());
    }
}

TEST_CASE("factor multiplicity")
{
    SUBCASE("3y^25 + y^29 over Z/5 has y-multiplicity 25") {
        std::vector<std::uint64_t> c(30, 0);
        c[25] = 3;
        c[29] = 1;
        auto m = factor_multiplicity(FpPoly(5, std::move(c)), FpPoly::monomial(5, 1));
        REQUIRE(m);
        CHECK(*m == 25);
    }
    SUBCASE("coprime factor gives 0") {
        auto m = factor_multiplicity(FpPoly::linear(5, 1, 1), FpPoly::linear(5, 1, 2));
        REQUIRE(m);
        CHECK(*m == 0);
    }
    SUBCASE("zero polynomial reports infinite multiplicity") {
        CHECK(!factor_multiplicity(FpPoly(5), FpPoly::monomial(5, 1)));
    }
    SUBCASE("constant factor is rejected") {
        CHECK_THROWS_AS(factor_multiplicity(FpPoly(5, {1, 1}), FpPoly(5, {2})),
                        std::domain_error);
    }
}

TEST_CASE("multiplicity is additive in extra factors")
{
    std::mt19937 rng(11);
    for (int trial = 0; trial < 60; ++trial) {
        std::uint64_t p = trial % 2 ? 5 : 13;
        auto rand_poly = [&](std::size_t maxdeg, bool nonzero) {
            for (;;) {
                std::vector<std::uint64_t> c(1 + rng() % (maxdeg + 1));
                for (auto& x : c)
                    x = rng() % p;
                FpPoly f(p, std::move(c));
                if (!nonzero || !f.is_zero())
                    return f;
            }
        };
        FpPoly a = rand_poly(8, true);
        FpPoly e = rand_poly(3, true);
        if (e.degree() < 1)
            continue;
        std::uint64_t k = rng() % 4;
        auto base = factor_multiplicity(a, e);
        auto lifted = factor_multiplicity(a * e.pow(k), e);
        REQUIRE(base);
        REQUIRE(lifted);
        CHECK(*lifted == *base + k);
    }
}

TEST_CASE("x^n mod e by square-and-multiply")
{
    // x^10 = (x^2)^5 = (-1)^5 = -1 mod (x^2 + 1) over Z/5
    FpPoly e(5, {1, 0, 1});
    CHECK(x_pow_mod(10, e) == FpPoly(5, {4}));
    // matches plain divrem on a materialized power
    FpPoly direct = fp_poly_divrem(FpPoly::monomial(13, 200), FpPoly(13, {3, 1, 7, 1})).second;
    CHECK(x_pow_mod(200, FpPoly(13, {3, 1, 7, 1})) == direct);
}

TEST_CASE("linear substitution")
{
    // (x+1)^2 at x = 2x+3 is (2x+4)^2 = 4x^2 + 16x + 16 = 4x^2 + x + 1 mod 5
    FpPoly f = FpPoly::linear(5, 1, 1) * FpPoly::linear(5, 1, 1);
    CHECK(f.subst_linear(2, 3) == FpPoly(5, {1, 1, 4}));
}
