// Enumeration of the order-p divided beta family indices (i, j).
#pragma once

#include <cstdint>
#include <vector>

namespace betafam {

// (p, i, j) with the decomposition i = r * p^n, gcd(r, p) = 1.
struct BetaIndex {
    std::uint64_t p = 0;
    std::uint64_t i = 0;
    std::uint64_t j = 0;
    std::uint64_t r = 0;
    std::uint64_t n = 0;
    bool valid = false; // is_order_p(p, i, j)
};

BetaIndex decompose(std::uint64_t p, std::uint64_t i, std::uint64_t j);

// a_0 = 0; a_n = p^n + p^(n-1) - 1 for n >= 1.
std::uint64_t a_seq(std::uint64_t p, std::uint64_t n);

// Order-p membership, i = r*p^n with p not dividing r:
//   (i) if r = 1 then j <= p^n;  (ii) j <= a_n;  (iii) if p | j then j > a_{n-1}.
// Rule (iii) excludes exactly the multiples of p that are <= a_{n-1}; the
// largest such multiple is a_{n-2}*p for n >= 3, but at n = 2 the exclusion
// set is {p} itself (a closed-form list ending at a_{n-2}*p would miss it).
bool is_order_p(std::uint64_t p, std::uint64_t i, std::uint64_t j);

// All valid j for the given i, ascending.
std::vector<std::uint64_t> enumerate_j(std::uint64_t p, std::uint64_t i);

} // namespace betafam
