#include "betafam/conditions.hpp"

namespace betafam {

bool check_c1(const Level1Form& f, std::uint64_t p)
{
    return f.nonzero_mod_p(p);
}

bool check_c2(const Level1Form& f, std::uint64_t p, std::uint64_t i, std::uint64_t j,
              C2Witness* witness)
{
    const std::int64_t expected_weight =
        static_cast<std::int64_t>(i) * static_cast<std::int64_t>(p * p - 1);
    if (f.weight != expected_weight)
        throw std::domain_error("check_c2: form weight must be i(p^2-1)");
    auto ord = f.ord_q();
    if (!ord)
        throw std::domain_error("check_c2: q-order of the zero form is undefined");
    const std::int64_t bound = expected_weight - static_cast<std::int64_t>((p - 1) * j);
    const std::int64_t twelve_ord = 12 * *ord;
    const bool ineq = twelve_ord > bound;
    const bool equality = twelve_ord == bound - 2;
    if (witness)
        *witness = C2Witness{*ord, bound, !ineq && equality};
    return ineq || equality;
}

bool check_c3(const Level1Form& f, std::uint64_t p)
{
    return !c3_divisible_by_epm1(f, p);
}

namespace {
std::vector<std::uint64_t> prime_factors(std::uint64_t n)
{
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0)
                n /= d;
        }
    }
    if (n > 1)
        out.push_back(n);
    return out;
}
} // namespace

bool is_topgen_2(std::uint64_t p)
{
    validate_prime_modulus(p);
    if (p < 5)
        throw std::domain_error("is_topgen_2 needs p >= 5");
    const std::uint64_t group_order = p * (p - 1); // = phi(p^2)
    const std::uint64_t p2 = p * p;
    for (std::uint64_t q : prime_factors(group_order))
        if (pow_mod(2, group_order / q, p2) == 1)
            return false;
    return true;
}

C4Status check_c4_at_2(const Level1Form& f, std::uint64_t p, std::uint64_t j,
                       EisensteinCache& cache, C4Witness* witness)
{
    if (!is_topgen_2(p)) {
        if (witness)
            *witness = C4Witness{std::nullopt, j};
        return C4Status::inapplicable;
    }
    auto order = epm1_cert_multiplicity(f, p, cache);
    if (witness)
        *witness = C4Witness{order, j};
    bool ok = !order || *order >= j;
    return ok ? C4Status::certified : C4Status::not_certified;
}

FormProfile profile_form(const Level1Form& f, std::uint64_t p, EisensteinCache& cache)
{
    FormProfile prof;
    prof.p = p;
    prof.c1 = check_c1(f, p);
    prof.generator_check = is_topgen_2(p);
    prof.ord_q = f.ord_q();
    if (prof.c1)
        prof.c3 = check_c3(f, p);
    if (prof.c1 && prof.generator_check) {
        prof.c4_order = epm1_cert_multiplicity(f, p, cache);
        prof.c4_order_computed = true;
    }
    return prof;
}

ConditionReport report_from_profile(const FormProfile& prof, const Level1Form& f, std::uint64_t p,
                                    std::uint64_t i, std::uint64_t j)
{
    ConditionReport rep;
    rep.generator_check = prof.generator_check;
    // inapplicable exactly when 2 fails the topological-generator test,
    // regardless of which stage the report stops at
    rep.c4 = prof.generator_check ? C4Status::not_certified : C4Status::inapplicable;
    rep.c1 = prof.c1;
    if (!rep.c1) {
        rep.failed_stage = "c1";
        return rep;
    }
    rep.c2 = check_c2(f, p, i, j, &rep.c2_witness);
    if (!rep.c2) {
        rep.failed_stage = "c2";
        return rep;
    }
    rep.c3 = prof.c3;
    if (!rep.c3) {
        rep.failed_stage = "c3";
        return rep;
    }
    if (!prof.generator_check) {
        // an inapplicable certificate is not a failed stage
        rep.c4_witness = C4Witness{std::nullopt, j};
        return rep;
    }
    rep.c4_witness = C4Witness{prof.c4_order, j};
    bool ok = !prof.c4_order || *prof.c4_order >= j;
    rep.c4 = ok ? C4Status::certified : C4Status::not_certified;
    if (!ok)
        rep.failed_stage = "c4";
    return rep;
}

ConditionReport check_all(const Level1Form& f, std::uint64_t p, std::uint64_t i, std::uint64_t j,
                          EisensteinCache& cache)
{
    return report_from_profile(profile_form(f, p, cache), f, p, i, j);
}

ConditionReport check_all(const Level1Form& f, std::uint64_t p, std::uint64_t i, std::uint64_t j)
{
    return check_all(f, p, i, j, default_eisenstein_cache());
}

const char* to_string(C4Status s)
{
    switch (s) {
    case C4Status::certified:
        return "certified";
    case C4Status::not_certified:
        return "not-certified";
    case C4Status::inapplicable:
        return "inapplicable";
    }
    return "?";
}

} // namespace betafam
