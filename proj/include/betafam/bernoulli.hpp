#pragma once

#include <cstdint>
#include <vector>

#include "betafam/exact.hpp"

namespace betafam {

// Bernoulli numbers under the convention B1 = -1/2, so B4 = -1/30 and the
// weight-t Eisenstein series has q-coefficient factor -2t/B_t (e.g. 240 at
// t = 4). Computed through the tangent-number triangle; the defining
// recurrence sum_{k<=n} C(n+1,k) B_k = 0 is exercised by tests as an
// independent oracle.
Rat bernoulli(std::uint64_t t);

// B_0 .. B_tmax in one pass; cheaper than tmax separate calls.
std::vector<Rat> bernoulli_table(std::uint64_t tmax);

// Tangent numbers T_1 .. T_n (1, 2, 16, 272, ...).
std::vector<Int> tangent_numbers(std::size_t n);

} // namespace betafam
