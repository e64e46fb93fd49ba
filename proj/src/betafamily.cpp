#include "betafam/betafamily.hpp"

#include <stdexcept>

namespace betafam {

std::uint64_t a_seq(std::uint64_t p, std::uint64_t n)
{
    if (n == 0)
        return 0;
    std::uint64_t pn1 = 1;
    for (std::uint64_t k = 1; k < n; ++k)
        pn1 *= p;
    return pn1 * p + pn1 - 1;
}

namespace {
struct Decomp {
    std::uint64_t r, n, pn;
};
Decomp split(std::uint64_t p, std::uint64_t i)
{
    Decomp d{i, 0, 1};
    while (d.r % p == 0) {
        d.r /= p;
        ++d.n;
        d.pn *= p;
    }
    return d;
}
} // namespace

BetaIndex decompose(std::uint64_t p, std::uint64_t i, std::uint64_t j)
{
    if (p < 5 || i < 1 || j < 1)
        throw std::domain_error("beta index needs p >= 5 and i, j >= 1");
    auto d = split(p, i);
    BetaIndex b;
    b.p = p;
    b.i = i;
    b.j = j;
    b.r = d.r;
    b.n = d.n;
    b.valid = is_order_p(p, i, j);
    return b;
}

bool is_order_p(std::uint64_t p, std::uint64_t i, std::uint64_t j)
{
    if (p < 5 || i < 1 || j < 1)
        return false;
    auto d = split(p, i);
    // j-range: p^n when r = 1; a_n when r > 1 (with a bound of 1 at n = 0,
    // where only j = 1 occurs)
    std::uint64_t bound = (d.r == 1) ? d.pn : (d.n == 0 ? 1 : a_seq(p, d.n));
    if (j > bound)
        return false;
    if (j % p == 0 && j <= a_seq(p, d.n - 1))
        return false;
    return true;
}

std::vector<std::uint64_t> enumerate_j(std::uint64_t p, std::uint64_t i)
{
    auto d = split(p, i);
    std::uint64_t bound = (d.r == 1) ? d.pn : (d.n == 0 ? 1 : a_seq(p, d.n));
    std::vector<std::uint64_t> out;
    out.reserve(bound);
    for (std::uint64_t j = 1; j <= bound; ++j)
        if (is_order_p(p, i, j))
            out.push_back(j);
    return out;
}

} // namespace betafam
