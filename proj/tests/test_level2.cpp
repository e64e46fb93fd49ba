#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>

#include "betafam/level2.hpp"

using namespace betafam;

namespace {
Level1Form delta_form() { return monomial_form(1, 0, 1); }
} // namespace

TEST_CASE("iota_2 substitution")
{
    SUBCASE("Delta -> 64 mu eps^2 over Q") {
        Level2PolyQ im = iota2_q(delta_form());
        CHECK(im.delta_parity == 0);
        CHECK(im.mu == std::vector<Rat>{0, 64, 0, 0});
    }
    SUBCASE("E4 -> 4 mu + eps mod 5") {
        Level2PolyP im = iota2_p(monomial_form(0, 1, 1), 5);
        CHECK(im.mu == std::vector<std::uint64_t>{1, 4});
    }
    SUBCASE("Delta -> 9 mu eps^2 mod 11") {
        Level2PolyP im = iota2_p(delta_form(), 11);
        CHECK(im.mu == std::vector<std::uint64_t>{0, 9, 0, 0});
    }
}

TEST_CASE("V_2 substitution")
{
    SUBCASE("Delta -> mu^2 eps") {
        Level2PolyQ im = v2_q(delta_form());
        CHECK(im.mu == std::vector<Rat>{0, 0, 1, 0});
    }
    SUBCASE("V2 E4 = E4 mod 5") {
        Level1Form e4 = monomial_form(0, 1, 1);
        CHECK(v2_p(e4, 5).mu == iota2_p(e4, 5).mu);
    }
    SUBCASE("E4 -> 4 mu + 5 eps mod 11") {
        Level2PolyP im = v2_p(monomial_form(0, 1, 1), 11);
        CHECK(im.mu == std::vector<std::uint64_t>{5, 4});
    }
}

TEST_CASE("L_2 images")
{
    SUBCASE("L2 Delta = mu^2 eps - 64 mu eps^2 over Q") {
        Level2PolyQ im = l2_q(delta_form());
        CHECK(im.mu == std::vector<Rat>{0, -64, 1, 0});
    }
    SUBCASE("L2 kills E4 powers mod 5") {
        for (std::int64_t b : {1, 2, 5})
            CHECK(l2_p(monomial_form(0, b, 1), 5).is_zero());
    }
    SUBCASE("L2 Delta^2 mod 5 has leading y-term 3y") {
        DehomogPoly py = to_y_variable(dehomogenize(l2_p(form_pow(delta_form(), 2), 5)));
        REQUIRE(py.poly.order_at_zero() == 1);
        CHECK(py.poly.coeff(1) == 3);
    }
}

TEST_CASE("closed form for L2 of a basis monomial mod 5")
{
    // y^b ((4y+1)^(2a) - (-1)^a (4y+1)^a); checked against the substitution
    // pipeline. The variant with (4y-1)^(2a) in the first factor does NOT
    // match (asserted below at (a,b) = (1,0)).
    std::mt19937 rng(41);
    auto closed = [](std::uint64_t a, std::uint64_t b) {
        FpPoly lin = FpPoly::linear(5, 4, 1);
        FpPoly inner = lin.pow(2 * a) - lin.pow(a).scaled(a % 2 ? 4 : 1);
        return FpPoly::monomial(5, b) * inner;
    };
    for (int trial = 0; trial < 25; ++trial) {
        std::uint64_t a = rng() % 61;
        std::uint64_t b = rng() % 31;
        if (a == 0)
            a = 1;
        Level1Form mono = monomial_form(static_cast<std::int64_t>(a),
                                        static_cast<std::int64_t>(b), 1);
        DehomogPoly py = to_y_variable(dehomogenize(l2_p(mono, 5)));
        REQUIRE(py.poly == closed(a, b));
    }
    FpPoly lin_minus = FpPoly::linear(5, 4, 4); // 4y - 1 = 4y + 4
    FpPoly wrong = lin_minus.pow(2) - FpPoly::linear(5, 4, 1).scaled(4);
    DehomogPoly py = to_y_variable(dehomogenize(l2_p(delta_form(), 5)));
    CHECK(py.poly == closed(1, 0));
    CHECK(!(py.poly == wrong));
}

TEST_CASE("dehomogenization")
{
    SUBCASE("mu^2 eps - 64 mu eps^2 mod 5 -> x^2 + x") {
        DehomogPoly px = dehomogenize(l2_p(delta_form(), 5));
        CHECK(px.poly == FpPoly(5, {0, 1, 1}));
        CHECK(px.var == DehomogPoly::Var::x);
    }
    SUBCASE("eps powers map to the constant 1") {
        Level2PolyP epsk{20, 0, 5, {1, 0, 0, 0, 0, 0}};
        CHECK(dehomogenize(epsk).poly == FpPoly(5, {1}));
    }
    SUBCASE("delta-bearing polynomials are rejected") {
        Level2PolyP withdelta{10, 1, 11, {1, 0, 0}};
        CHECK_THROWS_AS(dehomogenize(withdelta), std::domain_error);
    }
}

TEST_CASE("change of variable x = 4y + 1")
{
    SUBCASE("x -> 4y + 1") {
        DehomogPoly x{FpPoly::monomial(5, 1), DehomogPoly::Var::x};
        CHECK(to_y_variable(x).poly == FpPoly(5, {1, 4}));
    }
    SUBCASE("constants are fixed") {
        DehomogPoly one{FpPoly(5, {1}), DehomogPoly::Var::x};
        CHECK(to_y_variable(one).poly == FpPoly(5, {1}));
    }
    SUBCASE("x^2 + x -> y^2 + 2y + 2") {
        DehomogPoly f{FpPoly(5, {0, 1, 1}), DehomogPoly::Var::x};
        CHECK(to_y_variable(f).poly == FpPoly(5, {2, 2, 1}));
    }
    SUBCASE("wrong prime is rejected") {
        DehomogPoly f{FpPoly(11, {0, 1}), DehomogPoly::Var::x};
        CHECK_THROWS_AS(to_y_variable(f), std::domain_error);
    }
    SUBCASE("the map is an involution on exponents: applying twice returns P") {
        // x = 4y+1 and y = 4x+1 are inverse substitutions mod 5
        FpPoly f(5, {2, 0, 3, 1});
        CHECK(f.subst_linear(4, 1).subst_linear(4, 1) == f);
    }
}

TEST_CASE("exact E4-divisibility order at p = 5")
{
    Level1Form d = delta_form();
    CHECK(e4_div_order_p5(form_pow(d, 50)) == 25);
    CHECK(e4_div_order_p5(monomial_form(42, 24, 1)) == 25);
    CHECK(e4_div_order_p5(monomial_form(41, 27, 1)) == 27);
    Level1Form f = monomial_form(50, 0, 1) + monomial_form(42, 24, 4) + monomial_form(41, 27, 3);
    auto order = e4_div_order_p5(f);
    REQUIRE(order);
    CHECK(*order >= 29);
    // pure E4 powers have L2 = 0
    CHECK(!e4_div_order_p5(monomial_form(0, 3, 1)));
}

TEST_CASE("L2 Delta^(2r 5^n) has order 5^n with leading coefficient 3r")
{
    for (std::uint64_t r = 1; r <= 3; ++r) {
        std::uint64_t pn = 1;
        for (std::uint64_t n = 0; n <= 3; ++n) {
            Level1Form f = monomial_form(static_cast<std::int64_t>(2 * r * pn), 0, 1);
            DehomogPoly py = to_y_variable(dehomogenize(l2_p(f, 5)));
            REQUIRE(py.poly.order_at_zero() == pn);
            REQUIRE(py.poly.coeff(pn) == 3 * r % 5);
            pn *= 5;
        }
    }
}

TEST_CASE("level-2 fit from q-expansions")
{
    SUBCASE("constant 1 at (10, 1) mod 11") {
        Level2PolyP rep = EisensteinCache::fit_epm1(11);
        CHECK(rep.delta_parity == 1);
        CHECK(rep.mu == std::vector<std::uint64_t>{1, 7, 1});
    }
    SUBCASE("constant 1 at (12, 0) mod 13") {
        Level2PolyP rep = EisensteinCache::fit_epm1(13);
        CHECK(rep.delta_parity == 0);
        CHECK(rep.mu == std::vector<std::uint64_t>{1, 4, 9, 12});
    }
    SUBCASE("fit inverts the q-expansion on random polynomials") {
        std::mt19937 rng(43);
        for (int trial = 0; trial < 12; ++trial) {
            std::uint64_t p = trial % 2 ? 11 : 5;
            int parity = static_cast<int>(rng() % 2);
            std::int64_t d = 1 + static_cast<std::int64_t>(rng() % 7);
            Level2PolyP f;
            f.weight = 4 * d + 2 * parity;
            f.delta_parity = parity;
            f.p = p;
            f.mu.resize(static_cast<std::size_t>(d) + 1);
            for (auto& c : f.mu)
                c = rng() % p;
            QSeriesP g = level2_to_q(f, static_cast<std::size_t>(d) + 2);
            Level2PolyP back = fit_level2_from_q(g, f.weight, parity);
            REQUIRE(back.mu == f.mu);
        }
    }
    SUBCASE("non-forms are rejected") {
        // 1 is not a weight-4 form mod 11 (that would need 4 = 0 mod 10)
        CHECK_THROWS_AS(fit_level2_from_q(qs_const_p(1, 3, 11), 4, 0), not_in_span_error);
    }
}

TEST_CASE("E_{p-1}^j divisibility certificates")
{
    EisensteinCache cache; // memory-only
    Level1Form d = delta_form();
    CHECK(epm1_div_check(form_pow(d, 110), 11, 11, cache));
    CHECK(epm1_div_check(form_pow(d, 182), 13, 13, cache));
    CHECK(!epm1_div_check(form_pow(d, 2), 2, 5, cache));
    CHECK(epm1_div_check(form_pow(d, 2), 1, 5, cache));
    CHECK_THROWS_AS(epm1_div_check(d, 100, 11, cache), std::domain_error);
}

TEST_CASE("eisenstein cache files round-trip bit-exactly")
{
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "betafam-cache-test";
    fs::remove_all(dir);
    {
        EisensteinCache cache(dir);
        const Level2PolyP& rep = cache.rep(11);
        CHECK(rep.mu == std::vector<std::uint64_t>{1, 7, 1});
    }
    fs::path file = dir / "epm1_p11.txt";
    REQUIRE(fs::exists(file));
    std::ifstream in(file);
    std::string first_bytes((std::istreambuf_iterator<char>(in)),
                            std::istreambuf_iterator<char>());
    {
        // a fresh cache rereads the stored file
        EisensteinCache cache(dir);
        CHECK(cache.rep(11).mu == std::vector<std::uint64_t>{1, 7, 1});
    }
    // rewriting produces identical bytes
    EisensteinCache::write_file(file, EisensteinCache::fit_epm1(11));
    std::ifstream in2(file);
    std::string second_bytes((std::istreambuf_iterator<char>(in2)),
                             std::istreambuf_iterator<char>());
    CHECK(first_bytes == second_bytes);
    fs::remove_all(dir);
}
