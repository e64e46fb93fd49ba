// Dense univariate polynomials over Z/p.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "betafam/exact.hpp"

namespace betafam {

// Coefficient vector indexed by exponent; the highest-index coefficient is
// nonzero unless the polynomial is zero (empty vector).
class FpPoly {
public:
    explicit FpPoly(std::uint64_t p) : p_(p) { validate_prime_modulus(p); }
    FpPoly(std::uint64_t p, std::vector<std::uint64_t> coeffs) : p_(p), c_(std::move(coeffs))
    {
        validate_prime_modulus(p);
        for (auto& x : c_)
            x %= p_;
        trim();
    }

    static FpPoly monomial(std::uint64_t p, std::size_t degree, std::uint64_t coeff = 1);
    // alpha*x + beta
    static FpPoly linear(std::uint64_t p, std::uint64_t alpha, std::uint64_t beta)
    {
        return FpPoly(p, {beta, alpha});
    }

    std::uint64_t modulus() const { return p_; }
    bool is_zero() const { return c_.empty(); }
    // -1 for the zero polynomial.
    std::int64_t degree() const { return static_cast<std::int64_t>(c_.size()) - 1; }
    std::uint64_t coeff(std::size_t k) const { return k < c_.size() ? c_[k] : 0; }
    const std::vector<std::uint64_t>& coeffs() const { return c_; }
    std::uint64_t leading() const;

    friend FpPoly operator+(const FpPoly& a, const FpPoly& b);
    friend FpPoly operator-(const FpPoly& a, const FpPoly& b);
    friend FpPoly operator*(const FpPoly& a, const FpPoly& b);
    friend bool operator==(const FpPoly& a, const FpPoly& b)
    {
        return a.p_ == b.p_ && a.c_ == b.c_;
    }

    FpPoly scaled(std::uint64_t s) const;
    FpPoly pow(std::uint64_t e) const;
    // P(alpha*x + beta), by Horner.
    FpPoly subst_linear(std::uint64_t alpha, std::uint64_t beta) const;

    // Number of trailing zero coefficients (multiplicity of the factor x);
    // nullopt for the zero polynomial.
    std::optional<std::size_t> order_at_zero() const;

    std::string to_string(const std::string& var = "x") const;

private:
    void trim()
    {
        while (!c_.empty() && c_.back() == 0)
            c_.pop_back();
    }
    friend void check_same_modulus(const FpPoly& a, const FpPoly& b)
    {
        if (a.p_ != b.p_)
            throw ring_mismatch_error("FpPoly modulus mismatch");
    }

    std::uint64_t p_;
    std::vector<std::uint64_t> c_;
};

// a = q*b + r with deg r < deg b. Throws on zero divisor or modulus mismatch.
std::pair<FpPoly, FpPoly> fp_poly_divrem(const FpPoly& a, const FpPoly& b);

// Largest m with e^m | a, by repeated exact division; nullopt means infinite
// (a is the zero polynomial). e must be non-constant. If cap is set, gives up
// counting at cap (returns cap as soon as e^cap | a is established).
std::optional<std::uint64_t> factor_multiplicity(const FpPoly& a, const FpPoly& e,
                                                 std::optional<std::uint64_t> cap = std::nullopt);

// x^n modulo e, by square-and-multiply; avoids materializing x^n itself.
FpPoly x_pow_mod(std::uint64_t n, const FpPoly& e);

} // namespace betafam
