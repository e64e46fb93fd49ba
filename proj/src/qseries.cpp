#include "betafam/qseries.hpp"

namespace betafam {

QSeriesP reduce_mod_p(const QSeriesZ& f, std::uint64_t p)
{
    validate_prime_modulus(p);
    std::vector<Fp> c;
    c.reserve(f.prec() + 1);
    for (std::size_t k = 0; k <= f.prec(); ++k)
        c.emplace_back(f[k], p);
    return QSeriesP(std::move(c));
}

QSeriesP reduce_mod_p(const QSeriesQ& f, std::uint64_t p)
{
    validate_prime_modulus(p);
    std::vector<Fp> c;
    c.reserve(f.prec() + 1);
    for (std::size_t k = 0; k <= f.prec(); ++k)
        c.emplace_back(f[k], p);
    return QSeriesP(std::move(c));
}

QSeriesQ to_rational(const QSeriesZ& f)
{
    std::vector<Rat> c;
    c.reserve(f.prec() + 1);
    for (std::size_t k = 0; k <= f.prec(); ++k)
        c.emplace_back(f[k]);
    return QSeriesQ(std::move(c));
}

QSeriesZ div_exact(const QSeriesZ& f, const Int& d)
{
    std::vector<Int> c(f.coeffs());
    for (auto& x : c) {
        if (!mpz_divisible_p(x.get_mpz_t(), d.get_mpz_t()))
            throw std::domain_error("div_exact: coefficient not divisible");
        mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), d.get_mpz_t());
    }
    return QSeriesZ(std::move(c));
}

Int sigma(std::uint64_t n, std::uint64_t k)
{
    Int total = 0;
    Int dk;
    for (std::uint64_t d = 1; d * d <= n; ++d) {
        if (n % d != 0)
            continue;
        mpz_ui_pow_ui(dk.get_mpz_t(), d, k);
        total += dk;
        std::uint64_t e = n / d;
        if (e != d) {
            mpz_ui_pow_ui(dk.get_mpz_t(), e, k);
            total += dk;
        }
    }
    return total;
}

// -2t/B_t, e.g. 240 for t = 4, -504 for t = 6.
static Rat eisenstein_factor(std::uint64_t t)
{
    if (t < 4 || t % 2 != 0)
        throw std::domain_error("eisenstein series needs even weight t >= 4");
    Rat f = Rat(-2) * Rat(Int(t)) / bernoulli(t);
    f.canonicalize();
    return f;
}

QSeriesQ eisenstein_q(std::uint64_t t, std::size_t n)
{
    Rat factor = eisenstein_factor(t);
    std::vector<Rat> c(n + 1, Rat(0));
    c[0] = 1;
    for (std::size_t m = 1; m <= n; ++m)
        c[m] = factor * Rat(sigma(m, t - 1));
    return QSeriesQ(std::move(c));
}

QSeriesZ eisenstein_z(std::uint64_t t, std::size_t n)
{
    Rat factor = eisenstein_factor(t);
    if (factor.get_den() != 1)
        throw std::domain_error("eisenstein_z: -2t/B_t is not an integer for t = " +
                                std::to_string(t));
    std::vector<Int> c(n + 1, Int(0));
    c[0] = 1;
    for (std::size_t m = 1; m <= n; ++m)
        c[m] = factor.get_num() * sigma(m, t - 1);
    return QSeriesZ(std::move(c));
}

QSeriesP eisenstein_p(std::uint64_t t, std::size_t n, std::uint64_t p)
{
    validate_prime_modulus(p);
    Fp factor(eisenstein_factor(t), p); // throws if not p-integral
    std::vector<Fp> c(n + 1, Fp(0, p));
    c[0] = Fp(1, p);
    for (std::size_t m = 1; m <= n; ++m)
        c[m] = factor * Fp(sigma(m, t - 1), p);
    return QSeriesP(std::move(c));
}

QSeriesZ delta_z(std::size_t n)
{
    QSeriesZ e4 = eisenstein_z(4, n);
    QSeriesZ e6 = eisenstein_z(6, n);
    return div_exact(qs_pow(e4, 3) - qs_pow(e6, 2), Int(1728));
}

QSeriesP delta_p(std::size_t n, std::uint64_t p)
{
    return reduce_mod_p(delta_z(n), p);
}

QSeriesQ e2_q(std::size_t n)
{
    std::vector<Rat> c(n + 1, Rat(0));
    c[0] = 1;
    for (std::size_t m = 1; m <= n; ++m)
        c[m] = Rat(-24) * Rat(sigma(m, 1));
    return QSeriesQ(std::move(c));
}

Gamma02Gens gamma0_2_generators(std::size_t n)
{
    QSeriesQ e2 = e2_q(n);
    QSeriesQ delta = scalar_mul(Rat(1, 4), scalar_mul(Rat(2), verschiebung(e2, 2)) - e2);
    QSeriesQ e4 = eisenstein_q(4, n);
    QSeriesQ d2 = delta * delta;
    QSeriesQ eps = scalar_mul(Rat(1, 48), scalar_mul(Rat(64), d2) - e4);
    QSeriesQ mu = d2 - eps;
    return {std::move(delta), std::move(eps), std::move(mu)};
}

Gamma02GensP gamma0_2_generators_p(std::size_t n, std::uint64_t p)
{
    Gamma02Gens g = gamma0_2_generators(n);
    return {reduce_mod_p(g.delta, p), reduce_mod_p(g.eps, p), reduce_mod_p(g.mu, p)};
}

} // namespace betafam
