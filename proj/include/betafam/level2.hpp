// Gamma_0(2) symbolic calculus: images of level-1 forms under iota_2 and V_2
// as homogeneous polynomials in mu, eps (with optional delta factor), L_2,
// dehomogenization, and the E_{p-1}^j-divisibility oracles.
#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <mutex>
#include <optional>

#include "betafam/fp_poly.hpp"
#include "betafam/level1.hpp"

namespace betafam {

// Homogeneous element delta^parity * sum_a mu[a] mu^a eps^(d-a) of M_w(2),
// d = (w - 2*parity)/4. delta_parity must equal (w/2) mod 2.
struct Level2PolyQ {
    std::int64_t weight = 0;
    int delta_parity = 0;
    std::vector<Rat> mu;

    std::int64_t degree() const { return (weight - 2 * delta_parity) / 4; }
};

struct Level2PolyP {
    std::int64_t weight = 0;
    int delta_parity = 0;
    std::uint64_t p = 0;
    std::vector<std::uint64_t> mu;

    std::int64_t degree() const { return (weight - 2 * delta_parity) / 4; }
    bool is_zero() const;
};

void validate_level2_shape(std::int64_t weight, int parity);

// Substitution Delta -> 64 mu eps^2, E4 -> 64 mu + 16 eps.
Level2PolyQ iota2_q(const Level1Form& f);
Level2PolyP iota2_p(const Level1Form& f, std::uint64_t p);
// Substitution Delta -> mu^2 eps, E4 -> 4 mu + 16 eps (V_2 is multiplicative).
Level2PolyQ v2_q(const Level1Form& f);
Level2PolyP v2_p(const Level1Form& f, std::uint64_t p);
// L_2 = V_2 - iota_2.
Level2PolyQ l2_q(const Level1Form& f);
Level2PolyP l2_p(const Level1Form& f, std::uint64_t p);

Level2PolyP operator+(const Level2PolyP& a, const Level2PolyP& b);
Level2PolyP operator-(const Level2PolyP& a, const Level2PolyP& b);
// Product; at most one operand may carry a delta factor.
Level2PolyP operator*(const Level2PolyP& a, const Level2PolyP& b);
// Multiply by delta (re-tags parity 0 -> 1).
Level2PolyP delta_times(const Level2PolyP& a);

// q-expansion through q^n via the delta/eps/mu series mod p.
QSeriesP level2_to_q(const Level2PolyP& f, std::size_t n);

// Univariate image P with L_2 f = eps^(t/4) P; variable x = mu/eps, or
// y = 4x + 1 (p = 5 only).
struct DehomogPoly {
    enum class Var { x, y };
    FpPoly poly;
    Var var = Var::x;
};

// Requires delta_parity = 0.
DehomogPoly dehomogenize(const Level2PolyP& f);
// Change of variable x = 4y + 1 (equivalently y = 4x + 1); p = 5 only.
DehomogPoly to_y_variable(const DehomogPoly& f);

// Exact E4-divisibility order of L_2 f in M_*(2)_{Z/5}: the multiplicity of y
// in P(y). nullopt = infinite (L_2 f = 0, e.g. pure E4 powers).
std::optional<std::uint64_t> e4_div_order_p5(const Level1Form& f);

// Unique level-2 coefficients recovered from a q-expansion by triangular
// elimination in the mu-degree (ord_q of delta^c mu^a eps^b is a). Throws
// not_in_span_error if the residual tail is nonzero.
Level2PolyP fit_level2_from_q(const QSeriesP& g, std::int64_t weight, int parity);

// Disk-backed store of E_{p-1} level-2 representations, one text file per
// prime, written with atomic replace. An empty directory path keeps the cache
// in memory only.
class EisensteinCache {
public:
    EisensteinCache() = default;
    explicit EisensteinCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

    void set_directory(std::filesystem::path dir);
    const std::filesystem::path& directory() const { return dir_; }

    // Fits the constant series 1 at weight p-1 (cached).
    const Level2PolyP& rep(std::uint64_t p);

    static Level2PolyP fit_epm1(std::uint64_t p);
    static Level2PolyP read_file(const std::filesystem::path& path);
    static void write_file(const std::filesystem::path& path, const Level2PolyP& rep);

private:
    std::mutex mu_;
    std::map<std::uint64_t, Level2PolyP> memo_;
    std::filesystem::path dir_;
};

// Process-wide cache; directory defaults to $BETAFAM_CACHE_DIR or
// ".betafam-cache".
EisensteinCache& default_eisenstein_cache();

// The univariate divisor certifying E_{p-1}^j | L_2 f: the dehomogenized
// E_{p-1} representation, times (x+1) when the representation carries a delta
// (using delta^2 = mu + eps).
FpPoly epm1_divisor_poly(std::uint64_t p, EisensteinCache& cache);

// Certified multiplicity: largest m with divisor^m | P(x) for L_2 f (nullopt
// = infinite, L_2 f = 0). Exact at p = 5; a sufficient certificate otherwise.
std::optional<std::uint64_t> epm1_cert_multiplicity(const Level1Form& f, std::uint64_t p,
                                                    EisensteinCache& cache);

// True if L_2 f is certified divisible by E_{p-1}^j in M_*(2)_{Z/p}.
bool epm1_div_check(const Level1Form& f, std::uint64_t j, std::uint64_t p, EisensteinCache& cache);

} // namespace betafam
