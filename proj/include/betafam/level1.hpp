// Modular forms for the full modular group: the Delta^a E4^b basis,
// coordinate recovery from q-expansions, and E_{p-1}-divisibility mod p.
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "betafam/qseries.hpp"

namespace betafam {

// A weight-t form (t = 0 mod 4) as integer coordinates in the basis
// Delta^a E4^b, 12a + 4b = t, ordered by descending a: coords[m] multiplies
// Delta^(amax-m) E4^(bmin+3m).
struct Level1Form {
    std::int64_t weight = 0;
    std::vector<Int> coords;

    Level1Form() = default;
    Level1Form(std::int64_t w, std::vector<Int> c);

    std::int64_t amax() const { return weight / 12; }
    std::int64_t bmin() const { return (weight - 12 * amax()) / 4; }
    std::int64_t delta_exp(std::size_t m) const { return amax() - static_cast<std::int64_t>(m); }
    std::int64_t e4_exp(std::size_t m) const { return bmin() + 3 * static_cast<std::int64_t>(m); }

    bool is_zero() const;
    // Prop-4.1(c) style: q-order read off the coordinates (smallest Delta
    // exponent carrying a nonzero integer coordinate). nullopt for the zero form.
    std::optional<std::int64_t> ord_q() const;
    // Nonzero mod p <=> some coordinate is nonzero mod p (the basis stays a
    // basis over Z/p).
    bool nonzero_mod_p(std::uint64_t p) const;

    // Sparse view: (delta_exp, e4_exp, coeff) for nonzero coords, descending a.
    struct Term {
        std::int64_t delta_exp;
        std::int64_t e4_exp;
        Int coeff;
    };
    std::vector<Term> terms() const;

    friend bool operator==(const Level1Form& a, const Level1Form& b)
    {
        return a.weight == b.weight && a.coords == b.coords;
    }
};

// Single basis monomial coeff * Delta^a E4^b as a Level1Form of weight 12a+4b.
Level1Form monomial_form(std::int64_t delta_exp, std::int64_t e4_exp, Int coeff);

Level1Form operator+(const Level1Form& a, const Level1Form& b);
Level1Form scalar_mul(const Int& s, const Level1Form& f);
// Product in the multiplicative basis (Delta^a E4^b monomials multiply
// coordinatewise by exponent addition).
Level1Form operator*(const Level1Form& a, const Level1Form& b);
Level1Form form_pow(const Level1Form& f, std::uint64_t e);
Level1Form reduce_coords_mod_p(const Level1Form& f, std::uint64_t p);

QSeriesZ form_to_q(const Level1Form& f, std::size_t n);
QSeriesP form_to_q_p(const Level1Form& f, std::size_t n, std::uint64_t p);

// Unique integer coordinates of a weight-t expansion, by triangular
// elimination in ascending Delta-order. g must be known through q^(t/12)+1;
// throws not_in_span_error if the residual tail is nonzero.
Level1Form basis_coords(const QSeriesZ& g, std::int64_t weight);
std::vector<std::uint64_t> basis_coords_p(const QSeriesP& g, std::int64_t weight);

// E6^e6_parity * (form in the Delta/E4 basis), coordinates over Z/p.
struct EE6Form {
    std::int64_t weight = 0;
    int e6_parity = 0;
    std::uint64_t p = 0;
    std::vector<std::uint64_t> coords; // descending Delta-exponent, inner weight = weight - 6*e6_parity
};

// Representation of E_{p-1} mod p in the level-1 ring, found by fitting its
// q-expansion (the constant series 1); when (p-1)/2 is odd the series is
// first divided by E6.
EE6Form eisenstein_rep_mod_p(std::uint64_t p);

// Homogeneous polynomial in E4, E6 over Z/p of fixed weight; the E6-exponent
// parity is determined by the weight class. c[s] is the coefficient of
// E4^x E6^y with y = 2s + parity, x = (weight - 6y)/4.
struct HomogE4E6 {
    std::int64_t weight = 0;
    int parity = 0;
    std::uint64_t p = 0;
    std::vector<std::uint64_t> c;

    std::int64_t e6_exp(std::size_t s) const { return 2 * static_cast<std::int64_t>(s) + parity; }
    std::int64_t e4_exp(std::size_t s) const { return (weight - 6 * e6_exp(s)) / 4; }
    bool is_zero() const;
};

// Substitutes Delta -> (E4^3 - E6^2)/1728 termwise.
HomogE4E6 homog_from_level1(const Level1Form& f, std::uint64_t p);
HomogE4E6 homog_from_ee6(const EE6Form& rep);
// Exact single-divisor division test in Z/p[E4, E6].
bool homog_divides(const HomogE4E6& divisor, const HomogE4E6& f);

// True iff f = E_{p-1} * h for some h in Z/p[E4, E6]. f must be nonzero mod p.
bool c3_divisible_by_epm1(const Level1Form& f, std::uint64_t p);

// Binomial row C(n, 0..n) mod p via the multiplicative recurrence with
// explicit bookkeeping of the p-adic valuation (valid for n >= p).
std::vector<std::uint64_t> binom_row_mod_p(std::uint64_t n, std::uint64_t p);

} // namespace betafam
