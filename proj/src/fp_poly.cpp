#include "betafam/fp_poly.hpp"

#include <sstream>

namespace betafam {

FpPoly FpPoly::monomial(std::uint64_t p, std::size_t degree, std::uint64_t coeff)
{
    std::vector<std::uint64_t> c(degree + 1, 0);
    c[degree] = coeff;
    return FpPoly(p, std::move(c));
}

std::uint64_t FpPoly::leading() const
{
    if (c_.empty())
        throw std::domain_error("leading coefficient of zero polynomial");
    return c_.back();
}

FpPoly operator+(const FpPoly& a, const FpPoly& b)
{
    check_same_modulus(a, b);
    FpPoly out(a.p_);
    out.c_.resize(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t k = 0; k < out.c_.size(); ++k)
        out.c_[k] = (a.coeff(k) + b.coeff(k)) % a.p_;
    out.trim();
    return out;
}

FpPoly operator-(const FpPoly& a, const FpPoly& b)
{
    check_same_modulus(a, b);
    FpPoly out(a.p_);
    out.c_.resize(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t k = 0; k < out.c_.size(); ++k)
        out.c_[k] = (a.coeff(k) + a.p_ - b.coeff(k)) % a.p_;
    out.trim();
    return out;
}

FpPoly operator*(const FpPoly& a, const FpPoly& b)
{
    check_same_modulus(a, b);
    FpPoly out(a.p_);
    if (a.is_zero() || b.is_zero())
        return out;
    out.c_.assign(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0)
            continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            out.c_[i + j] = (out.c_[i + j] + a.c_[i] * b.c_[j]) % a.p_;
    }
    out.trim();
    return out;
}

FpPoly FpPoly::scaled(std::uint64_t s) const
{
    FpPoly out(p_);
    s %= p_;
    if (s == 0)
        return out;
    out.c_ = c_;
    for (auto& x : out.c_)
        x = x * s % p_;
    return out;
}

FpPoly FpPoly::pow(std::uint64_t e) const
{
    FpPoly acc(p_, {1});
    FpPoly base = *this;
    while (e > 0) {
        if (e & 1)
            acc = acc * base;
        e >>= 1;
        if (e)
            base = base * base;
    }
    return acc;
}

FpPoly FpPoly::subst_linear(std::uint64_t alpha, std::uint64_t beta) const
{
    // Horner: (((c_d)(ax+b) + c_{d-1})(ax+b) + ...)
    alpha %= p_;
    beta %= p_;
    FpPoly acc(p_);
    for (std::size_t k = c_.size(); k-- > 0;) {
        // acc = acc*(alpha x + beta) + c_k, in place
        std::vector<std::uint64_t> next(acc.c_.size() + 1, 0);
        for (std::size_t i = 0; i < acc.c_.size(); ++i) {
            next[i + 1] = (next[i + 1] + acc.c_[i] * alpha) % p_;
            next[i] = (next[i] + acc.c_[i] * beta) % p_;
        }
        next[0] = (next[0] + c_[k]) % p_;
        acc.c_ = std::move(next);
        acc.trim();
    }
    return acc;
}

std::optional<std::size_t> FpPoly::order_at_zero() const
{
    if (c_.empty())
        return std::nullopt;
    std::size_t k = 0;
    while (c_[k] == 0)
        ++k;
    return k;
}

std::string FpPoly::to_string(const std::string& var) const
{
    if (c_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = c_.size(); k-- > 0;) {
        if (c_[k] == 0)
            continue;
        if (!first)
            os << " + ";
        first = false;
        if (k == 0 || c_[k] != 1)
            os << c_[k];
        if (k > 0) {
            os << var;
            if (k > 1)
                os << "^" << k;
        }
    }
    return os.str();
}

std::pair<FpPoly, FpPoly> fp_poly_divrem(const FpPoly& a, const FpPoly& b)
{
    check_same_modulus(a, b);
    if (b.is_zero())
        throw std::domain_error("division by zero polynomial");
    const std::uint64_t p = a.modulus();
    if (a.degree() < b.degree())
        return {FpPoly(p), a};

    std::vector<std::uint64_t> rem(a.coeffs());
    const auto& div = b.coeffs();
    const std::size_t db = div.size() - 1;
    const std::uint64_t lead_inv = inv_mod_p(div.back(), p);
    std::vector<std::uint64_t> quot(rem.size() - db, 0);
    for (std::size_t k = rem.size(); k-- > db;) {
        std::uint64_t c = rem[k];
        if (c != 0) {
            std::uint64_t f = c * lead_inv % p;
            quot[k - db] = f;
            for (std::size_t j = 0; j <= db; ++j)
                rem[k - db + j] = (rem[k - db + j] + p - f * div[j] % p) % p;
        }
    }
    return {FpPoly(p, std::move(quot)), FpPoly(p, std::move(rem))};
}

std::optional<std::uint64_t> factor_multiplicity(const FpPoly& a, const FpPoly& e,
                                                 std::optional<std::uint64_t> cap)
{
    check_same_modulus(a, e);
    if (e.degree() < 1)
        throw std::domain_error("factor_multiplicity: factor must be non-constant");
    if (a.is_zero())
        return std::nullopt; // divisible by every power
    std::uint64_t m = 0;
    FpPoly cur = a;
    while (!cap || m < *cap) {
        auto [q, r] = fp_poly_divrem(cur, e);
        if (!r.is_zero())
            break;
        ++m;
        cur = std::move(q);
    }
    return m;
}

FpPoly x_pow_mod(std::uint64_t n, const FpPoly& e)
{
    if (e.degree() < 1)
        throw std::domain_error("x_pow_mod: modulus polynomial must be non-constant");
    const std::uint64_t p = e.modulus();
    FpPoly acc(p, {1});
    FpPoly base = FpPoly::monomial(p, 1);
    base = fp_poly_divrem(base, e).second;
    while (n > 0) {
        if (n & 1)
            acc = fp_poly_divrem(acc * base, e).second;
        n >>= 1;
        if (n)
            base = fp_poly_divrem(base * base, e).second;
    }
    return acc;
}

} // namespace betafam
