// Frozen reference values for the reproduction items, keyed by item id.
#pragma once

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

namespace betafam::golden {

// eq-1.2: nonzero search coefficients for (i, j) = (25, 29): c_8 = 4, c_9 = 3.
inline constexpr std::array<std::pair<std::uint64_t, std::uint64_t>, 2> kEq12Coeffs{
    {{8, 4}, {9, 3}}};

// example-1.3: exact E4-divisibility orders of L2(Delta^(50-m) E4^(3m)),
// m = 1..9, and order 25 at m = 0.
inline constexpr std::array<std::uint64_t, 9> kExample13Orders{3, 7, 9, 13, 15, 19, 21, 25, 27};
inline constexpr std::uint64_t kExample13OrderM0 = 25;

// prop-3.2: q^0..q^6 of delta and eps as (numerator, denominator).
struct SmallRat {
    std::int64_t num;
    std::int64_t den;
};
inline constexpr std::array<SmallRat, 7> kDeltaCoeffs{
    {{1, 4}, {6, 1}, {6, 1}, {24, 1}, {6, 1}, {36, 1}, {24, 1}}};
inline constexpr std::array<SmallRat, 7> kEpsCoeffs{
    {{1, 16}, {-1, 1}, {7, 1}, {-28, 1}, {71, 1}, {-126, 1}, {196, 1}}};

// eq-5.1 (p = 11): E_10 = delta*(mu^2 + 7 mu eps + eps^2), ascending mu-degree.
inline constexpr std::array<std::uint64_t, 3> kEq51Mu{1, 7, 1};

// eq-5.8 (p = 13): E_12 = 12 mu^3 + 9 mu^2 eps + 4 mu eps^2 + eps^3.
inline constexpr std::array<std::uint64_t, 4> kEq58Mu{1, 4, 9, 12};

// eq-5.10 (p = 677): the 170 coefficients of E_676 in mu, eps, printed from
// mu^169 down to eps^169.
inline constexpr std::array<std::uint64_t, 170> kEq510MuDescending{
    676, 127, 236, 375, 522, 222, 232, 195, 220, 22,
    461, 582, 541, 283, 577, 598, 263, 361, 577, 540,
    90, 222, 248, 164, 494, 361, 107, 404, 469, 265,
    21, 4, 317, 369, 189, 283, 490, 543, 81, 372,
    302, 401, 293, 199, 532, 49, 431, 127, 208, 596,
    277, 222, 325, 97, 599, 576, 169, 152, 528, 273,
    380, 353, 428, 248, 478, 327, 529, 262, 426, 94,
    347, 474, 59, 210, 240, 653, 228, 218, 262, 518,
    508, 284, 97, 606, 127, 550, 71, 580, 393, 169,
    159, 415, 459, 449, 24, 437, 467, 618, 203, 330,
    583, 251, 415, 148, 350, 199, 429, 249, 324, 297,
    404, 149, 525, 508, 101, 78, 580, 352, 455, 400,
    81, 469, 550, 246, 628, 145, 478, 384, 276, 375,
    305, 596, 134, 187, 394, 488, 308, 360, 673, 656,
    412, 208, 273, 570, 316, 183, 513, 429, 455, 587,
    137, 100, 316, 414, 79, 100, 394, 136, 95, 216,
    655, 457, 482, 445, 455, 155, 302, 441, 550, 1};

// thm-5.5: x^14 - 1 splits mod 13 as (x+1)(x+12) times six quadratics
// x^2 + c x + 1 with these middle coefficients.
inline constexpr std::array<std::uint64_t, 6> kX14QuadraticMiddles{3, 5, 6, 7, 8, 10};

// example-1.2: correction terms of f_{1250/j} mod 5 as (delta_exp, e4_exp,
// coeff), cumulative with increasing j range; row k applies for j in
// [kExample12Lo[k], kExample12Hi[k]] and uses the first kExample12Count[k]
// terms. For j in 1..625 there is no correction.
struct MonomialMod5 {
    std::int64_t delta_exp;
    std::int64_t e4_exp;
    std::uint64_t coeff;
};
inline constexpr std::array<MonomialMod5, 6> kExample12Terms{{
    {2300, 600, 3},
    {2275, 675, 1},
    {2260, 720, 1},
    {2255, 735, 2},
    {2252, 744, 1},
    {2251, 747, 2},
}};
inline constexpr std::array<std::uint64_t, 6> kExample12Lo{626, 676, 726, 736, 746, 748};
inline constexpr std::array<std::uint64_t, 6> kExample12Hi{675, 725, 735, 745, 747, 749};

// lemma-2.1 / examples 2.2-2.3: denominators for i = 25 are 1..25 without 5;
// for i = 25r (r > 1 prime to 5) they are 1..29 without 5.
inline constexpr std::uint64_t kEnumerate25Missing = 5;

// E_676 mod 677 in the Delta/E4 basis: leading and trailing printed anchors.
struct DeltaE4Anchor {
    std::int64_t delta_exp;
    std::int64_t e4_exp;
    std::uint64_t coeff;
};
inline constexpr std::array<DeltaE4Anchor, 4> kE676Level1Anchors{{
    {56, 1, 66},
    {55, 4, 654},
    {1, 166, 60},
    {0, 169, 1},
}};

} // namespace betafam::golden
