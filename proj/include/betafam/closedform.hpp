// Constructors for the explicit modular forms attached to beta family
// elements: the C/D correction families at p = 5, the closed-form dispatch,
// its recursive variant, and the pure Delta-power forms at other primes.
#pragma once

#include <cstdint>
#include <optional>

#include "betafam/betafamily.hpp"
#include "betafam/level1.hpp"

namespace betafam {

struct CaseTag {
    enum class Branch { pure_delta, full_sum, trimmed_sum };
    Branch branch = Branch::pure_delta;
    std::optional<std::uint64_t> u; // defined iff branch != pure_delta
};

// C_{m,n,r} and D_{m,n,r}: single monomials of weight 24 r 5^n.
//   m = 0 (n >= 2):  C = 4r Delta^(42*5^(n-2) + 2(r-1)5^n) E4^(24*5^(n-2))
//                    D = 3r Delta^(41*5^(n-2) + 2(r-1)5^n) E4^(27*5^(n-2))
//   1 <= m <= n-2 (n >= 3):
//                    C = 3r Delta^(8*5^(n-1) + 2*5^(n-m-2) + 2(r-1)5^n) E4^(6*5^(n-1) - 6*5^(n-m-2))
//                    D =  r Delta^(8*5^(n-1) + 5^(n-m-2) + 2(r-1)5^n) E4^(6*5^(n-1) - 3*5^(n-m-2))
Level1Form c_form(std::uint64_t m, std::uint64_t n, std::uint64_t r);
Level1Form d_form(std::uint64_t m, std::uint64_t n, std::uint64_t r);

// The closed form at p = 5: Delta^(2 r 5^n) except when r > 1 and
// 5^n < j <= a_n, where correction sums indexed by u enter. The override flag
// admits raw (i, j) outside the family (off by default).
struct Theorem5Result {
    Level1Form form;
    CaseTag tag;
};
Theorem5Result theorem_main_5(std::uint64_t i, std::uint64_t j, bool allow_nonfamily = false);

// f_{r 5^(n+1) / a_(n+1)} as (f_{r 5^n / a_n})^5 + C_{n-1,n+1,r} + D_{n-1,n+1,r};
// agrees with theorem_main_5 mod 5 (not over Z). Needs n >= 1, r >= 2.
Level1Form corollary_recursive(std::uint64_t n, std::uint64_t r);

// Pure Delta-power forms: exponent i(p^2-1)/12 with i = r p^n, for the primes
// where this is established (7, 11, 13, 677).
Level1Form section5_form(std::uint64_t p, std::uint64_t r, std::uint64_t n);

// Conjectural pure Delta power at arbitrary p >= 5 (p = 5 routed to the
// closed form would be the theorem; this constructor does no checking).
Level1Form conjecture_form(std::uint64_t p, std::uint64_t i);

} // namespace betafam
