// From-scratch computation of f_{i/j} at p = 5: the coefficient ansatz
// Delta^2i + sum c_m Delta^(2i-m) E4^(3m) with the divisibility demand turned
// into an exact linear system over Z/5.
#pragma once

#include <cstdint>
#include <string>

#include "betafam/conditions.hpp"

namespace betafam {

struct SearchProblem {
    std::uint64_t p = 5;
    std::uint64_t i = 0;
    std::uint64_t j = 0;
    // Largest free index: max{m >= 1 : 12m < (p-1) j}, 0 if none. Coordinates
    // above M would push the q-order below the C2 bound.
    std::uint64_t M = 0;
};

SearchProblem make_search_problem(std::uint64_t p, std::uint64_t i, std::uint64_t j);

struct SolveResult {
    enum class Status { solved, no_solution, postcondition_failure, unsupported };
    Status status = Status::unsupported;
    SearchProblem problem;
    Level1Form form;                     // populated unless no_solution/unsupported
    std::vector<std::uint64_t> coeffs;   // c_1..c_M lifted to {0..p-1}
    ConditionReport report;
    std::string detail;
};

SolveResult search_solve(std::uint64_t p, std::uint64_t i, std::uint64_t j,
                         bool allow_nonfamily, EisensteinCache& cache);
SolveResult search_solve(std::uint64_t p, std::uint64_t i, std::uint64_t j,
                         bool allow_nonfamily = false);

// Exact E4-divisibility order of L_2(Delta^(2i-m) E4^(3m)) mod 5 for each m
// in [m_lo, m_hi]; nullopt = infinite (L_2 image zero).
std::vector<std::optional<std::uint64_t>> divisibility_table(std::uint64_t i, std::uint64_t m_lo,
                                                             std::uint64_t m_hi);

} // namespace betafam
