#include "betafam/bernoulli.hpp"

namespace betafam {

std::vector<Int> tangent_numbers(std::size_t n)
{
    // Triangle recurrence; integer arithmetic only.
    std::vector<Int> t(n + 1);
    if (n == 0)
        return {};
    t[1] = 1;
    for (std::size_t k = 2; k <= n; ++k)
        t[k] = Int(k - 1) * t[k - 1];
    for (std::size_t k = 2; k <= n; ++k)
        for (std::size_t j = k; j <= n; ++j)
            t[j] = Int(j - k) * t[j - 1] + Int(j - k + 2) * t[j];
    return std::vector<Int>(t.begin() + 1, t.end());
}

static Rat bernoulli_even_from_tangent(std::uint64_t t2n, const Int& tangent)
{
    // B_{2n} = (-1)^{n-1} * 2n * T_n / (4^n (4^n - 1))
    const std::uint64_t n = t2n / 2;
    Int four_n = 1;
    mpz_mul_2exp(four_n.get_mpz_t(), four_n.get_mpz_t(), 2 * n);
    Rat b(Int(t2n) * tangent, four_n * (four_n - 1));
    b.canonicalize();
    if (n % 2 == 0)
        b = -b;
    return b;
}

Rat bernoulli(std::uint64_t t)
{
    if (t == 0)
        return Rat(1);
    if (t == 1)
        return Rat(-1, 2);
    if (t % 2 == 1)
        return Rat(0);
    auto tang = tangent_numbers(t / 2);
    return bernoulli_even_from_tangent(t, tang.back());
}

std::vector<Rat> bernoulli_table(std::uint64_t tmax)
{
    std::vector<Rat> out(tmax + 1, Rat(0));
    out[0] = 1;
    if (tmax >= 1)
        out[1] = Rat(-1, 2);
    if (tmax >= 2) {
        auto tang = tangent_numbers(tmax / 2);
        for (std::uint64_t t = 2; t <= tmax; t += 2)
            out[t] = bernoulli_even_from_tangent(t, tang[t / 2 - 1]);
    }
    return out;
}

} // namespace betafam
