#include "betafam/closedform.hpp"

#include <stdexcept>

namespace betafam {

namespace {
std::uint64_t pow5(std::uint64_t e)
{
    std::uint64_t v = 1;
    while (e--)
        v *= 5;
    return v;
}
} // namespace

Level1Form c_form(std::uint64_t m, std::uint64_t n, std::uint64_t r)
{
    if (r < 1)
        throw std::domain_error("c_form: r >= 1 required");
    if (m == 0) {
        if (n < 2)
            throw std::domain_error("c_form: m = 0 needs n >= 2");
        std::uint64_t de = 42 * pow5(n - 2) + 2 * (r - 1) * pow5(n);
        std::uint64_t ee = 24 * pow5(n - 2);
        return monomial_form(static_cast<std::int64_t>(de), static_cast<std::int64_t>(ee),
                             Int(4 * r));
    }
    if (n < 3 || m > n - 2)
        throw std::domain_error("c_form: m >= 1 needs n >= 3 and m <= n-2");
    std::uint64_t de = 8 * pow5(n - 1) + 2 * pow5(n - m - 2) + 2 * (r - 1) * pow5(n);
    std::uint64_t ee = 6 * pow5(n - 1) - 6 * pow5(n - m - 2);
    return monomial_form(static_cast<std::int64_t>(de), static_cast<std::int64_t>(ee), Int(3 * r));
}

Level1Form d_form(std::uint64_t m, std::uint64_t n, std::uint64_t r)
{
    if (r < 1)
        throw std::domain_error("d_form: r >= 1 required");
    if (m == 0) {
        if (n < 2)
            throw std::domain_error("d_form: m = 0 needs n >= 2");
        std::uint64_t de = 41 * pow5(n - 2) + 2 * (r - 1) * pow5(n);
        std::uint64_t ee = 27 * pow5(n - 2);
        return monomial_form(static_cast<std::int64_t>(de), static_cast<std::int64_t>(ee),
                             Int(3 * r));
    }
    if (n < 3 || m > n - 2)
        throw std::domain_error("d_form: m >= 1 needs n >= 3 and m <= n-2");
    std::uint64_t de = 8 * pow5(n - 1) + pow5(n - m - 2) + 2 * (r - 1) * pow5(n);
    std::uint64_t ee = 6 * pow5(n - 1) - 3 * pow5(n - m - 2);
    return monomial_form(static_cast<std::int64_t>(de), static_cast<std::int64_t>(ee), Int(r));
}

Theorem5Result theorem_main_5(std::uint64_t i, std::uint64_t j, bool allow_nonfamily)
{
    if (i < 1 || j < 1)
        throw std::domain_error("theorem_main_5: i, j >= 1 required");
    if (!allow_nonfamily && !is_order_p(5, i, j))
        throw std::domain_error("theorem_main_5: (i, j) is not an order-5 index (use the "
                                "non-family override to force it)");
    std::uint64_t r = i, n = 0;
    while (r % 5 == 0) {
        r /= 5;
        ++n;
    }
    const std::uint64_t pn = pow5(n);
    Level1Form delta_power = monomial_form(static_cast<std::int64_t>(2 * i), 0, Int(1));
    if (j <= pn)
        return {std::move(delta_power), CaseTag{CaseTag::Branch::pure_delta, std::nullopt}};

    // 5^n < j <= a_n (possible for a family index only when r > 1, and for
    // overridden indices such as (25, 29)): locate u in [1, n-1] with
    // 5^n + 5^(n-1) - 5^(n-u) < j <= 5^n + 5^(n-1) - 5^(n-u-1)
    if (j > a_seq(5, n))
        throw std::domain_error("theorem_main_5: j exceeds a_n");
    std::uint64_t u = 0;
    for (std::uint64_t cand = 1; cand + 1 <= n; ++cand) {
        if (j > pn + pow5(n - 1) - pow5(n - cand) &&
            j <= pn + pow5(n - 1) - pow5(n - cand - 1)) {
            u = cand;
            break;
        }
    }
    if (u == 0)
        throw std::logic_error("theorem_main_5: no u bracket found"); // unreachable for valid j

    const std::uint64_t trim_threshold = pn + pow5(n - 1) - pow5(n - u) + 2 * pow5(n - u - 1);
    Level1Form f = std::move(delta_power);
    CaseTag tag;
    tag.u = u;
    if (j > trim_threshold) {
        for (std::uint64_t m = 0; m + 1 <= u; ++m)
            f = f + c_form(m, n, r) + d_form(m, n, r);
        tag.branch = CaseTag::Branch::full_sum;
    } else {
        for (std::uint64_t m = 0; m + 2 <= u; ++m)
            f = f + c_form(m, n, r) + d_form(m, n, r);
        f = f + c_form(u - 1, n, r);
        tag.branch = CaseTag::Branch::trimmed_sum;
    }
    return {std::move(f), tag};
}

Level1Form corollary_recursive(std::uint64_t n, std::uint64_t r)
{
    if (n < 1 || r < 2)
        throw std::domain_error("corollary_recursive needs n >= 1 and r >= 2");
    if (r % 5 == 0)
        throw std::domain_error("corollary_recursive: r must be prime to 5");
    Level1Form base = theorem_main_5(r * pow5(n), a_seq(5, n)).form;
    return form_pow(base, 5) + c_form(n - 1, n + 1, r) + d_form(n - 1, n + 1, r);
}

Level1Form section5_form(std::uint64_t p, std::uint64_t r, std::uint64_t n)
{
    if (p == 5)
        throw std::domain_error("section5_form: p = 5 is handled by theorem_main_5");
    if (p != 7 && p != 11 && p != 13 && p != 677)
        throw std::domain_error("section5_form: established only for p in {7, 11, 13, 677}");
    if (r < 1 || r % p == 0)
        throw std::domain_error("section5_form: r >= 1 prime to p required");
    std::uint64_t i = r;
    for (std::uint64_t k = 0; k < n; ++k)
        i *= p;
    return conjecture_form(p, i);
}

Level1Form conjecture_form(std::uint64_t p, std::uint64_t i)
{
    if (p < 5 || i < 1)
        throw std::domain_error("conjecture_form: p >= 5 and i >= 1 required");
    std::uint64_t exp = i * (p * p - 1) / 12; // p^2 = 1 mod 24, so this is exact
    return monomial_form(static_cast<std::int64_t>(exp), 0, Int(1));
}

} // namespace betafam
