// Exact arithmetic substrate: arbitrary-precision integers and rationals
// (GMP), and Z/p field elements for odd primes p < 2^31.
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <gmpxx.h>

namespace betafam {

using Int = mpz_class;
// Always canonical: lowest terms, denominator > 0.
using Rat = mpq_class;

struct ring_mismatch_error : std::domain_error {
    using std::domain_error::domain_error;
};

struct not_in_span_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Throws std::domain_error unless p is an odd prime below 2^31 (so that
// products of two residues fit in uint64 without overflow).
void validate_prime_modulus(std::uint64_t p);

// Residue of z in [0, p).
inline std::uint64_t mod_p(const Int& z, std::uint64_t p)
{
    return mpz_fdiv_ui(z.get_mpz_t(), static_cast<unsigned long>(p));
}

// Residue of num/den mod p; throws if den is divisible by p.
std::uint64_t mod_p(const Rat& q, std::uint64_t p);

std::uint64_t inv_mod_p(std::uint64_t a, std::uint64_t p);
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

// An element of Z/p carrying its modulus, in [0, p). Default-constructed
// elements (p = 0) are only valid as assignment targets.
struct Fp {
    std::uint64_t v = 0;
    std::uint64_t p = 0;

    Fp() = default;
    Fp(std::uint64_t value, std::uint64_t modulus) : v(value % modulus), p(modulus) {}
    Fp(const Int& z, std::uint64_t modulus) : v(mod_p(z, modulus)), p(modulus) {}
    Fp(const Rat& q, std::uint64_t modulus) : v(mod_p(q, modulus)), p(modulus) {}

    bool is_zero() const { return v == 0; }

    friend void check_same_field(const Fp& a, const Fp& b)
    {
        if (a.p != b.p)
            throw ring_mismatch_error("Fp modulus mismatch: " + std::to_string(a.p) +
                                      " vs " + std::to_string(b.p));
    }

    friend Fp operator+(Fp a, const Fp& b)
    {
        check_same_field(a, b);
        a.v = (a.v + b.v) % a.p;
        return a;
    }
    friend Fp operator-(Fp a, const Fp& b)
    {
        check_same_field(a, b);
        a.v = (a.v + a.p - b.v) % a.p;
        return a;
    }
    friend Fp operator*(Fp a, const Fp& b)
    {
        check_same_field(a, b);
        a.v = (a.v * b.v) % a.p;
        return a;
    }
    friend Fp operator-(Fp a)
    {
        a.v = (a.p - a.v) % a.p;
        return a;
    }
    Fp& operator+=(const Fp& b) { return *this = *this + b; }
    Fp& operator-=(const Fp& b) { return *this = *this - b; }
    Fp& operator*=(const Fp& b) { return *this = *this * b; }

    Fp inv() const
    {
        if (v == 0)
            throw std::domain_error("Fp: inverse of zero");
        return Fp(inv_mod_p(v, p), p);
    }
    friend Fp operator/(const Fp& a, const Fp& b)
    {
        check_same_field(a, b);
        return a * b.inv();
    }
    friend bool operator==(const Fp& a, const Fp& b) { return a.p == b.p && a.v == b.v; }
};

// Ring helpers shared by generic series/polynomial code. The *_like forms
// exist so Z/p code can inherit the modulus from a sibling element.
inline Int zero_like(const Int&) { return Int(0); }
inline Rat zero_like(const Rat&) { return Rat(0); }
inline Fp zero_like(const Fp& x) { return Fp(0, x.p); }
inline Int one_like(const Int&) { return Int(1); }
inline Rat one_like(const Rat&) { return Rat(1); }
inline Fp one_like(const Fp& x) { return Fp(1, x.p); }
inline bool is_zero_elem(const Int& x) { return x == 0; }
inline bool is_zero_elem(const Rat& x) { return x == 0; }
inline bool is_zero_elem(const Fp& x) { return x.v == 0; }

} // namespace betafam
