// Truncated q-expansions over Z, Q, or Z/p, and the classical series:
// Eisenstein series, Delta, and the Gamma_0(2) generators delta, eps, mu.
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "betafam/bernoulli.hpp"
#include "betafam/exact.hpp"

namespace betafam {

// Coefficients c_0..c_N; the series is known through q^N inclusive.
// Arithmetic between two series truncates to the smaller precision.
template <typename R>
class QSeries {
public:
    explicit QSeries(std::vector<R> coeffs) : c_(std::move(coeffs))
    {
        if (c_.empty())
            throw std::domain_error("QSeries needs at least the q^0 coefficient");
    }

    std::size_t prec() const { return c_.size() - 1; }
    const R& operator[](std::size_t k) const { return c_[k]; }
    R& at(std::size_t k) { return c_[k]; }
    const std::vector<R>& coeffs() const { return c_; }

    QSeries truncated(std::size_t n) const
    {
        if (n >= prec())
            return *this;
        return QSeries(std::vector<R>(c_.begin(), c_.begin() + n + 1));
    }

    friend bool operator==(const QSeries& a, const QSeries& b) { return a.c_ == b.c_; }

private:
    std::vector<R> c_;
};

using QSeriesZ = QSeries<Int>;
using QSeriesQ = QSeries<Rat>;
using QSeriesP = QSeries<Fp>;

template <typename R>
QSeries<R> qs_const(const R& value, std::size_t n)
{
    std::vector<R> c(n + 1, zero_like(value));
    c[0] = value;
    return QSeries<R>(std::move(c));
}

inline QSeriesZ qs_const_z(const Int& v, std::size_t n) { return qs_const<Int>(v, n); }
inline QSeriesP qs_const_p(std::uint64_t v, std::size_t n, std::uint64_t p)
{
    validate_prime_modulus(p);
    return qs_const<Fp>(Fp(v, p), n);
}

template <typename R>
QSeries<R> operator+(const QSeries<R>& a, const QSeries<R>& b)
{
    std::size_t n = std::min(a.prec(), b.prec());
    std::vector<R> c(n + 1, zero_like(a[0]));
    for (std::size_t k = 0; k <= n; ++k)
        c[k] = a[k] + b[k];
    return QSeries<R>(std::move(c));
}

template <typename R>
QSeries<R> operator-(const QSeries<R>& a, const QSeries<R>& b)
{
    std::size_t n = std::min(a.prec(), b.prec());
    std::vector<R> c(n + 1, zero_like(a[0]));
    for (std::size_t k = 0; k <= n; ++k)
        c[k] = a[k] - b[k];
    return QSeries<R>(std::move(c));
}

template <typename R>
QSeries<R> operator*(const QSeries<R>& a, const QSeries<R>& b)
{
    std::size_t n = std::min(a.prec(), b.prec());
    std::vector<R> c(n + 1, zero_like(a[0]));
    for (std::size_t i = 0; i <= n; ++i) {
        if (is_zero_elem(a[i]))
            continue;
        for (std::size_t j = 0; i + j <= n; ++j)
            c[i + j] += a[i] * b[j];
    }
    return QSeries<R>(std::move(c));
}

template <typename R>
QSeries<R> scalar_mul(const R& s, const QSeries<R>& a)
{
    std::vector<R> c(a.coeffs());
    for (auto& x : c)
        x = s * x;
    return QSeries<R>(std::move(c));
}

template <typename R>
QSeries<R> qs_pow(const QSeries<R>& a, std::uint64_t e)
{
    QSeries<R> acc = qs_const<R>(one_like(a[0]), a.prec());
    QSeries<R> base = a;
    while (e > 0) {
        if (e & 1)
            acc = acc * base;
        e >>= 1;
        if (e)
            base = base * base;
    }
    return acc;
}

// Multiplicative inverse; the constant term must be a unit.
template <typename R>
QSeries<R> qs_inverse(const QSeries<R>& a)
{
    R c0inv = one_like(a[0]) / a[0];
    std::vector<R> c(a.prec() + 1, zero_like(a[0]));
    c[0] = c0inv;
    for (std::size_t k = 1; k <= a.prec(); ++k) {
        R acc = zero_like(a[0]);
        for (std::size_t j = 1; j <= k; ++j)
            acc += a[j] * c[k - j];
        c[k] = -(c0inv * acc);
    }
    return QSeries<R>(std::move(c));
}

// f(q) -> f(q^N); precision is preserved, entries beyond floor(prec/N)*N are 0.
template <typename R>
QSeries<R> verschiebung(const QSeries<R>& f, std::size_t n)
{
    if (n == 0)
        throw std::domain_error("verschiebung: N must be positive");
    std::vector<R> c(f.prec() + 1, zero_like(f[0]));
    for (std::size_t k = 0; k * n <= f.prec(); ++k)
        c[k * n] = f[k];
    return QSeries<R>(std::move(c));
}

// Index of the first nonzero coefficient; nullopt if zero through precision.
template <typename R>
std::optional<std::size_t> ord_q(const QSeries<R>& f)
{
    for (std::size_t k = 0; k <= f.prec(); ++k)
        if (!is_zero_elem(f[k]))
            return k;
    return std::nullopt;
}

QSeriesP reduce_mod_p(const QSeriesZ& f, std::uint64_t p);
QSeriesP reduce_mod_p(const QSeriesQ& f, std::uint64_t p);
QSeriesQ to_rational(const QSeriesZ& f);

// Exact scalar division over Z; throws if any coefficient is not divisible.
QSeriesZ div_exact(const QSeriesZ& f, const Int& d);

// sigma_{k}(n): sum of k-th powers of the divisors of n.
Int sigma(std::uint64_t n, std::uint64_t k);

// Weight-t Eisenstein series 1 - (2t/B_t) * sum sigma_{t-1}(n) q^n, t even >= 4.
QSeriesQ eisenstein_q(std::uint64_t t, std::size_t n);
// Over Z; throws if -2t/B_t is not an integer.
QSeriesZ eisenstein_z(std::uint64_t t, std::size_t n);
// Over Z/p; throws if -2t/B_t is not p-integral.
QSeriesP eisenstein_p(std::uint64_t t, std::size_t n, std::uint64_t p);

// Delta = (E4^3 - E6^2)/1728 = q - 24q^2 + ...
QSeriesZ delta_z(std::size_t n);
QSeriesP delta_p(std::size_t n, std::uint64_t p);

// E2 = 1 - 24 sum sigma_1(n) q^n. Quasi-modular; used only as the generating
// series for the Gamma_0(2) generator delta below.
QSeriesQ e2_q(std::size_t n);

// delta = (2 V_2 E2 - E2)/4, eps = (64 delta^2 - E4)/48, mu = delta^2 - eps.
struct Gamma02Gens {
    QSeriesQ delta;
    QSeriesQ eps;
    QSeriesQ mu;
};
Gamma02Gens gamma0_2_generators(std::size_t n);

struct Gamma02GensP {
    QSeriesP delta;
    QSeriesP eps;
    QSeriesP mu;
};
Gamma02GensP gamma0_2_generators_p(std::size_t n, std::uint64_t p);

// Default series precision for weight-t work: t/12 plus guard terms.
inline std::size_t default_prec(std::int64_t weight)
{
    return static_cast<std::size_t>(weight / 12 + 8);
}

} // namespace betafam
