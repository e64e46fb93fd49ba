// Checkers for the congruence conditions (C1)-(C4) and the rigidity
// reduction of (C4) to the single prime ell = 2.
#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "betafam/level2.hpp"

namespace betafam {

enum class C4Status { certified, not_certified, inapplicable };

struct C2Witness {
    std::int64_t ord_q = 0;
    std::int64_t bound = 0;           // (p^2-1) i - (p-1) j
    bool equality_branch = false;     // fired 12*ord = bound - 2 rather than 12*ord > bound
};

struct C4Witness {
    // Exact E4-divisibility order of L_2 f at p = 5; certified multiplicity of
    // the E_{p-1} divisor otherwise. nullopt = infinite (L_2 f = 0).
    std::optional<std::uint64_t> order;
    std::uint64_t required_j = 0;
};

struct ConditionReport {
    bool c1 = false;
    bool c2 = false;
    C2Witness c2_witness;
    bool c3 = false;
    C4Status c4 = C4Status::not_certified;
    C4Witness c4_witness;
    bool generator_check = false; // is_topgen_2(p)
    // first failed stage ("c1".."c4"), empty if everything passed
    std::string failed_stage;

    bool all_passed() const
    {
        return failed_stage.empty();
    }
};

// Fourier expansion not congruent to 0 mod p.
bool check_c1(const Level1Form& f, std::uint64_t p);

// 12*ord_q f > (p^2-1) i - (p-1) j, or equal to that bound minus 2.
// The weight of f must be i (p^2 - 1).
bool check_c2(const Level1Form& f, std::uint64_t p, std::uint64_t i, std::uint64_t j,
              C2Witness* witness = nullptr);

// No lower-weight congruent form exists: f is NOT divisible by E_{p-1} mod p.
bool check_c3(const Level1Form& f, std::uint64_t p);

// 2 generates Z_p^x topologically iff ord(2 mod p^2) = p(p-1).
bool is_topgen_2(std::uint64_t p);

C4Status check_c4_at_2(const Level1Form& f, std::uint64_t p, std::uint64_t j,
                       EisensteinCache& cache, C4Witness* witness = nullptr);

// j-independent facts about a form, so sweeps can reuse the expensive parts
// (C3 division and the L_2 divisibility order) across many j.
struct FormProfile {
    std::uint64_t p = 0;
    bool c1 = false;
    bool c3 = false;
    bool generator_check = false;
    std::optional<std::int64_t> ord_q;            // integer-coordinate q-order
    std::optional<std::uint64_t> c4_order;        // meaningful when generator_check
    bool c4_order_computed = false;
};

FormProfile profile_form(const Level1Form& f, std::uint64_t p, EisensteinCache& cache);

// Assemble the per-(i, j) report from a profile. Stages run C1 -> C2 -> C3 ->
// C4 and short-circuit at the first failure.
ConditionReport report_from_profile(const FormProfile& prof, const Level1Form& f, std::uint64_t p,
                                    std::uint64_t i, std::uint64_t j);

ConditionReport check_all(const Level1Form& f, std::uint64_t p, std::uint64_t i, std::uint64_t j,
                          EisensteinCache& cache);

ConditionReport check_all(const Level1Form& f, std::uint64_t p, std::uint64_t i, std::uint64_t j);

const char* to_string(C4Status s);

} // namespace betafam
