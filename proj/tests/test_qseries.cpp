#include <doctest.h>

#include <random>

#include "betafam/qseries.hpp"

using namespace betafam;

namespace {
QSeriesZ q_power(std::size_t k, std::size_t n)
{
    std::vector<Int> c(n + 1, Int(0));
    c[k] = 1;
    return QSeriesZ(std::move(c));
}
} // namespace

TEST_CASE("truncated ring arithmetic")
{
    CHECK(q_power(1, 3) * q_power(1, 3) == q_power(2, 3));
    QSeriesZ one_plus_q(std::vector<Int>{1, 1, 0});
    CHECK(qs_pow(one_plus_q, 0) == qs_const_z(1, 2));
    // min-precision rule
    QSeriesZ low(std::vector<Int>{1, 2});
    CHECK((low * q_power(1, 5)).prec() == 1);
    CHECK_THROWS_AS(reduce_mod_p(low, 5) + qs_const_p(1, 1, 7), ring_mismatch_error);
}

TEST_CASE("classical Eisenstein expansions")
{
    QSeriesZ e4 = eisenstein_z(4, 2);
    CHECK(e4[0] == 1);
    CHECK(e4[1] == 240);
    CHECK(e4[2] == 2160);
    QSeriesZ e6 = eisenstein_z(6, 2);
    CHECK(e6[1] == -504);
    CHECK(e6[2] == -16632);
    // E4^2 = E8
    CHECK(qs_pow(eisenstein_z(4, 30), 2) == eisenstein_z(8, 30));
    // -2t/B_t is not integral at t = 12
    CHECK_THROWS_AS(eisenstein_z(12, 2), std::domain_error);
}

TEST_CASE("E_{p-1} is the constant series 1 mod p")
{
    CHECK(eisenstein_p(4, 50, 5) == qs_const_p(1, 50, 5));
    for (std::uint64_t p : {5ull, 7ull, 11ull, 13ull})
        CHECK(eisenstein_p(p - 1, 200, p) == qs_const_p(1, 200, p));
    // non-p-integral factor is rejected: -2*12/B_12 has denominator 691
    CHECK_THROWS_AS(eisenstein_p(12, 2, 691), std::domain_error);
}

TEST_CASE("Delta expansion and valuation")
{
    QSeriesZ d = delta_z(8);
    CHECK(d[0] == 0);
    CHECK(d[1] == 1);
    CHECK(d[2] == -24);
    CHECK(d[3] == 252);
    QSeriesZ dk = delta_z(22);
    QSeriesZ acc = qs_const_z(1, 22);
    for (int k = 1; k <= 20; ++k) {
        acc = acc * dk;
        REQUIRE(ord_q(acc) == static_cast<std::size_t>(k));
    }
}

TEST_CASE("verschiebung")
{
    QSeriesZ f(std::vector<Int>{0, 1, 1, 0, 0});
    CHECK(verschiebung(f, 2) == QSeriesZ(std::vector<Int>{0, 0, 1, 0, 1}));
    // ring homomorphism on random pairs
    std::mt19937 rng(3);
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<Int> a(9), b(9);
        for (auto& x : a)
            x = static_cast<long>(rng() % 19) - 9;
        for (auto& x : b)
            x = static_cast<long>(rng() % 19) - 9;
        QSeriesZ fa(a), fb(b);
        std::size_t n = rng() % 3 + 2;
        CHECK(verschiebung(fa * fb, n) == verschiebung(fa, n) * verschiebung(fb, n));
    }
}

TEST_CASE("gamma_0(2) generators")
{
    Gamma02Gens g = gamma0_2_generators(6);
    CHECK(g.delta[0] == Rat(1, 4));
    CHECK(g.delta[1] == 6);
    CHECK(g.delta[6] == 24);
    CHECK(g.eps[0] == Rat(1, 16));
    CHECK(g.eps[1] == -1);
    CHECK(g.eps[6] == 196);
    CHECK(g.mu[0] == 0);
    CHECK(g.mu[1] == 4);
    CHECK(ord_q(g.mu) == 1);
}

TEST_CASE("ord_q")
{
    CHECK(ord_q(q_power(3, 6) + q_power(4, 6)) == 3);
    CHECK(!ord_q(qs_const_z(0, 10)));
    QSeriesZ d50 = qs_pow(delta_z(55), 50);
    CHECK(ord_q(d50) == 50);
}

TEST_CASE("series inverse")
{
    QSeriesP e6 = eisenstein_p(6, 30, 11);
    CHECK(e6 * qs_inverse(e6) == qs_const_p(1, 30, 11));
    QSeriesQ eps = gamma0_2_generators(20).eps;
    CHECK(eps * qs_inverse(eps) == qs_const<Rat>(Rat(1), 20));
}

TEST_CASE("exact integer division")
{
    CHECK(div_exact(qs_const_z(1728, 4), Int(1728)) == qs_const_z(1, 4));
    CHECK_THROWS_AS(div_exact(qs_const_z(7, 4), Int(2)), std::domain_error);
}
