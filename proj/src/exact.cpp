#include "betafam/exact.hpp"

namespace betafam {

void validate_prime_modulus(std::uint64_t p)
{
    if (p < 3 || p % 2 == 0)
        throw std::domain_error("modulus must be an odd prime, got " + std::to_string(p));
    if (p >= (std::uint64_t{1} << 31))
        throw std::domain_error("modulus too large (must be < 2^31)");
    for (std::uint64_t d = 3; d * d <= p; d += 2)
        if (p % d == 0)
            throw std::domain_error("modulus " + std::to_string(p) + " is not prime");
}

std::uint64_t mod_p(const Rat& q, std::uint64_t p)
{
    std::uint64_t den = mpz_fdiv_ui(q.get_den_mpz_t(), static_cast<unsigned long>(p));
    if (den == 0)
        throw std::domain_error("rational is not p-integral at p = " + std::to_string(p));
    std::uint64_t num = mpz_fdiv_ui(q.get_num_mpz_t(), static_cast<unsigned long>(p));
    return (num * inv_mod_p(den, p)) % p;
}

std::uint64_t inv_mod_p(std::uint64_t a, std::uint64_t p)
{
    // extended Euclid on (p, a); p prime and a != 0 mod p
    a %= p;
    if (a == 0)
        throw std::domain_error("inverse of zero mod p");
    std::int64_t t = 0, newt = 1;
    std::int64_t r = static_cast<std::int64_t>(p), newr = static_cast<std::int64_t>(a);
    while (newr != 0) {
        std::int64_t q = r / newr;
        t -= q * newt;
        std::swap(t, newt);
        r -= q * newr;
        std::swap(r, newr);
    }
    if (t < 0)
        t += static_cast<std::int64_t>(p);
    return static_cast<std::uint64_t>(t);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m)
{
    // 128-bit products: m may be as large as p^2 < 2^62
    std::uint64_t acc = 1 % m;
    base %= m;
    while (exp > 0) {
        if (exp & 1)
            acc = static_cast<std::uint64_t>(static_cast<unsigned __int128>(acc) * base % m);
        base = static_cast<std::uint64_t>(static_cast<unsigned __int128>(base) * base % m);
        exp >>= 1;
    }
    return acc;
}

} // namespace betafam
