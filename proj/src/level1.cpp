#include "betafam/level1.hpp"

#include <map>
#include <mutex>

namespace betafam {

Level1Form::Level1Form(std::int64_t w, std::vector<Int> c) : weight(w), coords(std::move(c))
{
    if (w < 0 || w % 4 != 0)
        throw std::domain_error("Level1Form weight must be a non-negative multiple of 4");
    if (coords.size() != static_cast<std::size_t>(amax() + 1))
        throw std::domain_error("Level1Form: coordinate count must be weight/12 + 1");
}

bool Level1Form::is_zero() const
{
    for (const auto& c : coords)
        if (c != 0)
            return false;
    return true;
}

std::optional<std::int64_t> Level1Form::ord_q() const
{
    // largest m with nonzero coordinate carries the smallest Delta exponent
    for (std::size_t m = coords.size(); m-- > 0;)
        if (coords[m] != 0)
            return delta_exp(m);
    return std::nullopt;
}

bool Level1Form::nonzero_mod_p(std::uint64_t p) const
{
    for (const auto& c : coords)
        if (mod_p(c, p) != 0)
            return true;
    return false;
}

std::vector<Level1Form::Term> Level1Form::terms() const
{
    std::vector<Term> out;
    for (std::size_t m = 0; m < coords.size(); ++m)
        if (coords[m] != 0)
            out.push_back({delta_exp(m), e4_exp(m), coords[m]});
    return out;
}

Level1Form monomial_form(std::int64_t delta_exp, std::int64_t e4_exp, Int coeff)
{
    if (delta_exp < 0 || e4_exp < 0)
        throw std::domain_error("monomial_form: negative exponent");
    std::int64_t w = 12 * delta_exp + 4 * e4_exp;
    Level1Form f(w, std::vector<Int>(static_cast<std::size_t>(w / 12 + 1), Int(0)));
    std::int64_t m = f.amax() - delta_exp;
    if (f.e4_exp(static_cast<std::size_t>(m)) != e4_exp)
        throw std::domain_error("monomial_form: exponents do not match one basis slot");
    f.coords[static_cast<std::size_t>(m)] = std::move(coeff);
    return f;
}

Level1Form operator+(const Level1Form& a, const Level1Form& b)
{
    if (a.weight != b.weight)
        throw std::domain_error("Level1Form addition: weight mismatch");
    Level1Form out = a;
    for (std::size_t m = 0; m < out.coords.size(); ++m)
        out.coords[m] += b.coords[m];
    return out;
}

Level1Form scalar_mul(const Int& s, const Level1Form& f)
{
    Level1Form out = f;
    for (auto& c : out.coords)
        c *= s;
    return out;
}

Level1Form operator*(const Level1Form& a, const Level1Form& b)
{
    // Both weights are multiples of 12 in every use of form products here;
    // then index arithmetic is a plain convolution.
    if (a.weight % 12 != 0 || b.weight % 12 != 0)
        throw std::domain_error("Level1Form product needs weights divisible by 12");
    Level1Form out(a.weight + b.weight,
                   std::vector<Int>(static_cast<std::size_t>((a.weight + b.weight) / 12 + 1), Int(0)));
    for (std::size_t i = 0; i < a.coords.size(); ++i) {
        if (a.coords[i] == 0)
            continue;
        for (std::size_t j = 0; j < b.coords.size(); ++j) {
            if (b.coords[j] == 0)
                continue;
            out.coords[i + j] += a.coords[i] * b.coords[j];
        }
    }
    return out;
}

Level1Form form_pow(const Level1Form& f, std::uint64_t e)
{
    Level1Form acc = monomial_form(0, 0, 1);
    Level1Form base = f;
    while (e > 0) {
        if (e & 1)
            acc = acc * base;
        e >>= 1;
        if (e)
            base = base * base;
    }
    return acc;
}

Level1Form reduce_coords_mod_p(const Level1Form& f, std::uint64_t p)
{
    Level1Form out = f;
    for (auto& c : out.coords)
        c = Int(mod_p(c, p));
    return out;
}

namespace {

template <typename R>
QSeries<R> form_to_q_generic(const Level1Form& f, const QSeries<R>& delta, const QSeries<R>& e4,
                             auto to_ring)
{
    QSeries<R> acc = qs_const<R>(zero_like(delta[0]), delta.prec());
    for (const auto& t : f.terms()) {
        QSeries<R> term = qs_pow(delta, static_cast<std::uint64_t>(t.delta_exp)) *
                          qs_pow(e4, static_cast<std::uint64_t>(t.e4_exp));
        acc = acc + scalar_mul(to_ring(t.coeff), term);
    }
    return acc;
}

// Shared triangular elimination; Coef is the coordinate type.
template <typename R, typename Coef>
std::vector<Coef> basis_coords_generic(const QSeries<R>& g, std::int64_t weight,
                                       const QSeries<R>& delta, const QSeries<R>& e4,
                                       auto to_coef, auto coef_to_ring)
{
    const std::int64_t amax = weight / 12;
    const std::int64_t bmin = (weight - 12 * amax) / 4;
    if (g.prec() < static_cast<std::size_t>(amax) + 1)
        throw std::domain_error("basis_coords: series precision too small for the weight");

    // Basis element for ascending a: Delta^a * E4^(t/4 - 3a); its q-order is a
    // with leading coefficient 1, so the solve is triangular with unit diagonal.
    QSeries<R> e4cube = qs_pow(e4, 3);
    std::vector<QSeries<R>> dpow, cpow;
    dpow.reserve(amax + 1);
    cpow.reserve(amax + 1);
    dpow.push_back(qs_const<R>(one_like(delta[0]), delta.prec()));
    cpow.push_back(dpow.front());
    for (std::int64_t a = 1; a <= amax; ++a) {
        dpow.push_back(dpow.back() * delta);
        cpow.push_back(cpow.back() * e4cube);
    }
    QSeries<R> elow = qs_pow(e4, static_cast<std::uint64_t>(bmin));

    QSeries<R> residual = g;
    std::vector<Coef> coords(static_cast<std::size_t>(amax) + 1);
    for (std::int64_t a = 0; a <= amax; ++a) {
        Coef c = to_coef(residual[static_cast<std::size_t>(a)]);
        coords[static_cast<std::size_t>(amax - a)] = c;
        QSeries<R> elem = dpow[a] * cpow[amax - a] * elow;
        residual = residual - scalar_mul(coef_to_ring(c), elem);
    }
    if (ord_q(residual))
        throw not_in_span_error("basis_coords: residual tail nonzero, series is not in the span");
    return coords;
}

} // namespace

QSeriesZ form_to_q(const Level1Form& f, std::size_t n)
{
    return form_to_q_generic(f, delta_z(n), eisenstein_z(4, n), [](const Int& c) { return c; });
}

QSeriesP form_to_q_p(const Level1Form& f, std::size_t n, std::uint64_t p)
{
    return form_to_q_generic(f, delta_p(n, p), eisenstein_p(4, n, p),
                             [p](const Int& c) { return Fp(c, p); });
}

Level1Form basis_coords(const QSeriesZ& g, std::int64_t weight)
{
    auto coords = basis_coords_generic<Int, Int>(
        g, weight, delta_z(g.prec()), eisenstein_z(4, g.prec()), [](const Int& r) { return r; },
        [](const Int& c) { return c; });
    return Level1Form(weight, std::move(coords));
}

std::vector<std::uint64_t> basis_coords_p(const QSeriesP& g, std::int64_t weight)
{
    const std::uint64_t p = g[0].p;
    return basis_coords_generic<Fp, std::uint64_t>(
        g, weight, delta_p(g.prec(), p), eisenstein_p(4, g.prec(), p),
        [](const Fp& r) { return r.v; }, [p](std::uint64_t c) { return Fp(c, p); });
}

EE6Form eisenstein_rep_mod_p(std::uint64_t p)
{
    validate_prime_modulus(p);
    if (p < 5)
        throw std::domain_error("eisenstein_rep_mod_p needs p >= 5");
    const int parity = static_cast<int>(((p - 1) / 2) % 2);
    const std::int64_t inner_weight = static_cast<std::int64_t>(p - 1) - 6 * parity;
    const std::size_t prec = static_cast<std::size_t>(inner_weight / 12) + 2;

    // E_{p-1} = 1 mod p; peel off one E6 factor when the weight class needs it.
    QSeriesP g = qs_const_p(1, prec, p);
    if (parity)
        g = g * qs_inverse(eisenstein_p(6, prec, p));
    EE6Form rep;
    rep.weight = static_cast<std::int64_t>(p - 1);
    rep.e6_parity = parity;
    rep.p = p;
    rep.coords = basis_coords_p(g, inner_weight);
    return rep;
}

bool HomogE4E6::is_zero() const
{
    for (auto x : c)
        if (x != 0)
            return false;
    return true;
}

std::vector<std::uint64_t> binom_row_mod_p(std::uint64_t n, std::uint64_t p)
{
    std::vector<std::uint64_t> row(n + 1);
    row[0] = 1;
    std::int64_t val = 0;    // p-adic valuation of C(n, k)
    std::uint64_t unit = 1;  // unit part mod p
    for (std::uint64_t k = 0; k < n; ++k) {
        std::uint64_t a = n - k;
        while (a % p == 0) {
            a /= p;
            ++val;
        }
        std::uint64_t b = k + 1;
        while (b % p == 0) {
            b /= p;
            --val;
        }
        unit = unit * (a % p) % p;
        unit = unit * inv_mod_p(b % p, p) % p;
        row[k + 1] = val > 0 ? 0 : unit;
    }
    return row;
}

namespace {

// Accumulate coeff * Delta^a E4^b into a parity-0 homogeneous table.
void add_delta_e4_monomial(std::vector<std::uint64_t>& acc, std::uint64_t coeff, std::uint64_t a,
                           std::uint64_t p)
{
    if (coeff == 0)
        return;
    const std::uint64_t inv1728a = pow_mod(inv_mod_p(1728 % p, p), a, p);
    const std::uint64_t scale = coeff * inv1728a % p;
    auto row = binom_row_mod_p(a, p);
    for (std::uint64_t k = 0; k <= a; ++k) {
        // (E4^3 - E6^2)^a term k: C(a,k) (-1)^k E4^(3(a-k)+b) E6^(2k); s-index = k
        std::uint64_t v = scale * row[k] % p;
        if (k % 2 == 1)
            v = (p - v) % p;
        acc[k] = (acc[k] + v) % p;
    }
}

} // namespace

HomogE4E6 homog_from_level1(const Level1Form& f, std::uint64_t p)
{
    validate_prime_modulus(p);
    HomogE4E6 h;
    h.weight = f.weight;
    h.parity = 0;
    h.p = p;
    h.c.assign(static_cast<std::size_t>(f.weight / 12) + 1, 0);
    for (std::size_t m = 0; m < f.coords.size(); ++m)
        add_delta_e4_monomial(h.c, mod_p(f.coords[m], p),
                              static_cast<std::uint64_t>(f.delta_exp(m)), p);
    return h;
}

HomogE4E6 homog_from_ee6(const EE6Form& rep)
{
    const std::int64_t inner_weight = rep.weight - 6 * rep.e6_parity;
    HomogE4E6 h;
    h.weight = rep.weight;
    h.parity = rep.e6_parity;
    h.p = rep.p;
    h.c.assign(static_cast<std::size_t>(inner_weight / 12) + 1, 0);
    const std::int64_t amax = inner_weight / 12;
    for (std::size_t m = 0; m < rep.coords.size(); ++m) {
        std::uint64_t a = static_cast<std::uint64_t>(amax - static_cast<std::int64_t>(m));
        add_delta_e4_monomial(h.c, rep.coords[m], a, rep.p);
    }
    return h;
}

bool homog_divides(const HomogE4E6& divisor, const HomogE4E6& f)
{
    if (divisor.p != f.p)
        throw ring_mismatch_error("homog_divides: modulus mismatch");
    if (divisor.is_zero())
        throw std::domain_error("homog_divides: zero divisor");
    const std::uint64_t p = f.p;

    std::size_t se0 = 0;
    while (divisor.c[se0] == 0)
        ++se0;
    const std::int64_t x_e0 = divisor.e4_exp(se0);
    const std::int64_t y_e0 = divisor.e6_exp(se0);
    const std::uint64_t lead_inv = inv_mod_p(divisor.c[se0], p);

    std::vector<std::uint64_t> work = f.c;
    for (std::size_t s0 = 0; s0 < work.size(); ++s0) {
        if (work[s0] == 0)
            continue;
        // leading term of the running dividend; single-divisor division puts
        // it in the remainder unless the divisor's leading monomial divides it
        if (f.e4_exp(s0) < x_e0 || f.e6_exp(s0) < y_e0)
            return false;
        std::uint64_t fac = work[s0] * lead_inv % p;
        for (std::size_t se = se0; se < divisor.c.size(); ++se) {
            std::size_t st = s0 + (se - se0);
            if (st >= work.size())
                break;
            work[st] = (work[st] + p - fac * divisor.c[se] % p) % p;
        }
    }
    return true;
}

namespace {
const EE6Form& cached_epm1_rep(std::uint64_t p)
{
    static std::mutex mu;
    static std::map<std::uint64_t, EE6Form> memo;
    std::lock_guard<std::mutex> lock(mu);
    auto it = memo.find(p);
    if (it == memo.end())
        it = memo.emplace(p, eisenstein_rep_mod_p(p)).first;
    return it->second;
}
} // namespace

bool c3_divisible_by_epm1(const Level1Form& f, std::uint64_t p)
{
    if (!f.nonzero_mod_p(p))
        throw std::domain_error("c3_divisible_by_epm1: form is zero mod p");
    HomogE4E6 hf = homog_from_level1(f, p);
    HomogE4E6 he = homog_from_ee6(cached_epm1_rep(p));
    return homog_divides(he, hf);
}

} // namespace betafam
