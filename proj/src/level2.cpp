#include "betafam/level2.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <unistd.h>

namespace betafam {

bool Level2PolyP::is_zero() const
{
    for (auto x : mu)
        if (x != 0)
            return false;
    return true;
}

void validate_level2_shape(std::int64_t weight, int parity)
{
    if (parity != 0 && parity != 1)
        throw std::domain_error("delta_parity must be 0 or 1");
    if (weight < 0 || weight % 2 != 0 || (weight / 2) % 2 != parity)
        throw std::domain_error("delta_parity must match the weight class mod 4");
}

namespace {

// Substitution rules (Delta and E4 images) with scalars in the target ring.
struct SubstRuleQ {
    Rat delta_scale;        // Delta -> delta_scale * mu^mu_per_delta * eps^(3-mu_per_delta)
    int mu_per_delta;
    Rat e4_mu, e4_eps;      // E4 -> e4_mu * mu + e4_eps * eps
};

struct SubstRuleP {
    std::uint64_t delta_scale;
    int mu_per_delta;
    std::uint64_t e4_mu, e4_eps;
};

Level2PolyQ substitute_q(const Level1Form& f, const SubstRuleQ& rule)
{
    if (f.weight % 4 != 0)
        throw std::domain_error("level-2 substitution needs weight = 0 mod 4");
    Level2PolyQ out;
    out.weight = f.weight;
    out.delta_parity = 0;
    out.mu.assign(static_cast<std::size_t>(f.weight / 4) + 1, Rat(0));
    Int binom;
    for (const auto& t : f.terms()) {
        const std::uint64_t a = static_cast<std::uint64_t>(t.delta_exp);
        const std::uint64_t b = static_cast<std::uint64_t>(t.e4_exp);
        Rat base(t.coeff);
        Rat ds = rule.delta_scale;
        mpz_pow_ui(ds.get_num_mpz_t(), rule.delta_scale.get_num_mpz_t(), a);
        mpz_pow_ui(ds.get_den_mpz_t(), rule.delta_scale.get_den_mpz_t(), a);
        base *= ds;
        // (e4_mu*mu + e4_eps*eps)^b, binomial by binomial
        for (std::uint64_t k = 0; k <= b; ++k) {
            mpz_bin_uiui(binom.get_mpz_t(), b, k);
            Rat c = base * Rat(binom);
            for (std::uint64_t i = 0; i < k; ++i)
                c *= rule.e4_mu;
            for (std::uint64_t i = 0; i < b - k; ++i)
                c *= rule.e4_eps;
            out.mu[static_cast<std::size_t>(rule.mu_per_delta * a + k)] += c;
        }
    }
    return out;
}

Level2PolyP substitute_p(const Level1Form& f, std::uint64_t p, const SubstRuleP& rule)
{
    if (f.weight % 4 != 0)
        throw std::domain_error("level-2 substitution needs weight = 0 mod 4");
    validate_prime_modulus(p);
    Level2PolyP out;
    out.weight = f.weight;
    out.delta_parity = 0;
    out.p = p;
    out.mu.assign(static_cast<std::size_t>(f.weight / 4) + 1, 0);
    for (const auto& t : f.terms()) {
        const std::uint64_t a = static_cast<std::uint64_t>(t.delta_exp);
        const std::uint64_t b = static_cast<std::uint64_t>(t.e4_exp);
        std::uint64_t base = mod_p(t.coeff, p) * pow_mod(rule.delta_scale, a, p) % p;
        if (base == 0)
            continue;
        auto row = binom_row_mod_p(b, p);
        std::uint64_t mu_pow = 1;
        std::vector<std::uint64_t> eps_pow(b + 1);
        eps_pow[0] = 1;
        for (std::uint64_t k = 1; k <= b; ++k)
            eps_pow[k] = eps_pow[k - 1] * (rule.e4_eps % p) % p;
        for (std::uint64_t k = 0; k <= b; ++k) {
            std::uint64_t c = base * row[k] % p * mu_pow % p * eps_pow[b - k] % p;
            std::size_t idx = static_cast<std::size_t>(rule.mu_per_delta * a + k);
            out.mu[idx] = (out.mu[idx] + c) % p;
            mu_pow = mu_pow * (rule.e4_mu % p) % p;
        }
    }
    return out;
}

const SubstRuleQ kIotaQ{Rat(64), 1, Rat(64), Rat(16)};
const SubstRuleQ kV2Q{Rat(1), 2, Rat(4), Rat(16)};

} // namespace

Level2PolyQ iota2_q(const Level1Form& f) { return substitute_q(f, kIotaQ); }
Level2PolyQ v2_q(const Level1Form& f) { return substitute_q(f, kV2Q); }
Level2PolyQ l2_q(const Level1Form& f)
{
    Level2PolyQ v = v2_q(f), i = iota2_q(f);
    for (std::size_t k = 0; k < v.mu.size(); ++k)
        v.mu[k] -= i.mu[k];
    return v;
}

Level2PolyP iota2_p(const Level1Form& f, std::uint64_t p)
{
    return substitute_p(f, p, SubstRuleP{64, 1, 64, 16});
}
Level2PolyP v2_p(const Level1Form& f, std::uint64_t p)
{
    return substitute_p(f, p, SubstRuleP{1, 2, 4, 16});
}
Level2PolyP l2_p(const Level1Form& f, std::uint64_t p) { return v2_p(f, p) - iota2_p(f, p); }

namespace {
void check_compatible(const Level2PolyP& a, const Level2PolyP& b)
{
    if (a.p != b.p)
        throw ring_mismatch_error("Level2PolyP modulus mismatch");
    if (a.weight != b.weight || a.delta_parity != b.delta_parity)
        throw std::domain_error("Level2PolyP weight/parity mismatch");
}
} // namespace

Level2PolyP operator+(const Level2PolyP& a, const Level2PolyP& b)
{
    check_compatible(a, b);
    Level2PolyP out = a;
    for (std::size_t k = 0; k < out.mu.size(); ++k)
        out.mu[k] = (out.mu[k] + b.mu[k]) % a.p;
    return out;
}

Level2PolyP operator-(const Level2PolyP& a, const Level2PolyP& b)
{
    check_compatible(a, b);
    Level2PolyP out = a;
    for (std::size_t k = 0; k < out.mu.size(); ++k)
        out.mu[k] = (out.mu[k] + a.p - b.mu[k]) % a.p;
    return out;
}

Level2PolyP operator*(const Level2PolyP& a, const Level2PolyP& b)
{
    if (a.p != b.p)
        throw ring_mismatch_error("Level2PolyP modulus mismatch");
    if (a.delta_parity == 1 && b.delta_parity == 1)
        throw std::domain_error("Level2PolyP product: both operands carry delta");
    Level2PolyP out;
    out.weight = a.weight + b.weight;
    out.delta_parity = a.delta_parity + b.delta_parity;
    out.p = a.p;
    out.mu.assign(a.mu.size() + b.mu.size() - 1, 0);
    for (std::size_t i = 0; i < a.mu.size(); ++i) {
        if (a.mu[i] == 0)
            continue;
        for (std::size_t j = 0; j < b.mu.size(); ++j)
            out.mu[i + j] = (out.mu[i + j] + a.mu[i] * b.mu[j]) % a.p;
    }
    return out;
}

Level2PolyP delta_times(const Level2PolyP& a)
{
    if (a.delta_parity != 0)
        throw std::domain_error("delta_times: operand already carries delta");
    Level2PolyP out = a;
    out.weight += 2;
    out.delta_parity = 1;
    return out;
}

QSeriesP level2_to_q(const Level2PolyP& f, std::size_t n)
{
    validate_level2_shape(f.weight, f.delta_parity);
    Gamma02GensP g = gamma0_2_generators_p(n, f.p);
    QSeriesP inv_eps = qs_inverse(g.eps);
    const std::int64_t d = f.degree();
    // walk delta^parity * mu^a eps^(d-a) by repeated multiplication with mu/eps
    QSeriesP cur = qs_pow(g.eps, static_cast<std::uint64_t>(d));
    if (f.delta_parity)
        cur = cur * g.delta;
    QSeriesP acc = qs_const_p(0, n, f.p);
    QSeriesP step = g.mu * inv_eps;
    for (std::int64_t a = 0; a <= d; ++a) {
        if (f.mu[static_cast<std::size_t>(a)] != 0)
            acc = acc + scalar_mul(Fp(f.mu[static_cast<std::size_t>(a)], f.p), cur);
        if (a < d)
            cur = cur * step;
    }
    return acc;
}

DehomogPoly dehomogenize(const Level2PolyP& f)
{
    if (f.delta_parity != 0)
        throw std::domain_error(
            "dehomogenize: delta_parity must be 0 (use the delta-aware divisibility oracle)");
    return {FpPoly(f.p, f.mu), DehomogPoly::Var::x};
}

DehomogPoly to_y_variable(const DehomogPoly& f)
{
    if (f.poly.modulus() != 5)
        throw std::domain_error("to_y_variable: the y convention is specific to p = 5");
    if (f.var != DehomogPoly::Var::x)
        throw std::domain_error("to_y_variable: input must be in x");
    return {f.poly.subst_linear(4, 1), DehomogPoly::Var::y};
}

std::optional<std::uint64_t> e4_div_order_p5(const Level1Form& f)
{
    if (f.weight % 4 != 0)
        throw std::domain_error("e4_div_order_p5: weight must be 0 mod 4");
    Level2PolyP im = l2_p(f, 5);
    DehomogPoly px = dehomogenize(im);
    if (px.poly.is_zero())
        return std::nullopt;
    DehomogPoly py = to_y_variable(px);
    return *py.poly.order_at_zero();
}

Level2PolyP fit_level2_from_q(const QSeriesP& g, std::int64_t weight, int parity)
{
    validate_level2_shape(weight, parity);
    const std::uint64_t p = g[0].p;
    const std::int64_t d = (weight - 2 * parity) / 4;
    if (g.prec() < static_cast<std::size_t>(d) + 1)
        throw std::domain_error("fit_level2_from_q: series precision too small (need q^(w/4+1))");

    Gamma02GensP gens = gamma0_2_generators_p(g.prec(), p);
    QSeriesP inv_eps = qs_inverse(gens.eps);
    QSeriesP step = gens.mu * inv_eps;
    QSeriesP cur = qs_pow(gens.eps, static_cast<std::uint64_t>(d));
    if (parity)
        cur = cur * gens.delta;

    QSeriesP residual = g;
    Level2PolyP out;
    out.weight = weight;
    out.delta_parity = parity;
    out.p = p;
    out.mu.assign(static_cast<std::size_t>(d) + 1, 0);
    for (std::int64_t a = 0; a <= d; ++a) {
        // ord_q(delta^parity mu^a eps^(d-a)) = a with invertible lead
        Fp lead = cur[static_cast<std::size_t>(a)];
        Fp c = residual[static_cast<std::size_t>(a)] / lead;
        out.mu[static_cast<std::size_t>(a)] = c.v;
        if (c.v != 0)
            residual = residual - scalar_mul(c, cur);
        if (a < d)
            cur = cur * step;
    }
    if (ord_q(residual))
        throw not_in_span_error("fit_level2_from_q: not a level-2 form of this weight");
    return out;
}

void EisensteinCache::set_directory(std::filesystem::path dir)
{
    std::lock_guard<std::mutex> lock(mu_);
    dir_ = std::move(dir);
}

Level2PolyP EisensteinCache::fit_epm1(std::uint64_t p)
{
    validate_prime_modulus(p);
    if (p < 5)
        throw std::domain_error("E_{p-1} representation needs p >= 5");
    const std::int64_t w = static_cast<std::int64_t>(p - 1);
    const int parity = static_cast<int>((w / 2) % 2);
    const std::int64_t d = (w - 2 * parity) / 4;
    QSeriesP one = qs_const_p(1, static_cast<std::size_t>(d) + 2, p);
    return fit_level2_from_q(one, w, parity);
}

Level2PolyP EisensteinCache::read_file(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open cache file " + path.string());
    std::string magic;
    int version = 0;
    in >> magic >> version;
    if (magic != "betafam-epm1-cache" || version != 1)
        throw std::runtime_error("bad cache header in " + path.string());
    std::string key;
    std::uint64_t p = 0;
    std::int64_t weight = 0;
    int parity = 0;
    std::size_t count = 0;
    Level2PolyP rep;
    in >> key >> p;
    if (key != "prime")
        throw std::runtime_error("bad cache field in " + path.string());
    in >> key >> weight >> key >> parity >> key >> count;
    rep.p = p;
    rep.weight = weight;
    rep.delta_parity = parity;
    rep.mu.resize(count);
    for (auto& x : rep.mu)
        if (!(in >> x))
            throw std::runtime_error("truncated cache file " + path.string());
    validate_level2_shape(rep.weight, rep.delta_parity);
    if (rep.mu.size() != static_cast<std::size_t>(rep.degree()) + 1)
        throw std::runtime_error("inconsistent coefficient count in " + path.string());
    return rep;
}

void EisensteinCache::write_file(const std::filesystem::path& path, const Level2PolyP& rep)
{
    std::filesystem::create_directories(path.parent_path());
    std::filesystem::path tmp = path;
    tmp += ".tmp." + std::to_string(::getpid());
    {
        std::ofstream out(tmp);
        out << "betafam-epm1-cache 1\n";
        out << "prime " << rep.p << "\n";
        out << "weight " << rep.weight << "\n";
        out << "delta_parity " << rep.delta_parity << "\n";
        out << "coeffs " << rep.mu.size() << "\n";
        for (std::size_t k = 0; k < rep.mu.size(); ++k)
            out << rep.mu[k] << (k + 1 == rep.mu.size() ? "\n" : " ");
        if (!out)
            throw std::runtime_error("failed writing cache file " + tmp.string());
    }
    std::filesystem::rename(tmp, path); // atomic replace
}

const Level2PolyP& EisensteinCache::rep(std::uint64_t p)
{
    std::lock_guard<std::mutex> lock(mu_);
    auto it = memo_.find(p);
    if (it != memo_.end())
        return it->second;
    if (!dir_.empty()) {
        std::filesystem::path file = dir_ / ("epm1_p" + std::to_string(p) + ".txt");
        if (std::filesystem::exists(file)) {
            Level2PolyP rep = read_file(file);
            if (rep.p == p)
                return memo_.emplace(p, std::move(rep)).first->second;
        }
        Level2PolyP rep = fit_epm1(p);
        write_file(file, rep);
        return memo_.emplace(p, std::move(rep)).first->second;
    }
    return memo_.emplace(p, fit_epm1(p)).first->second;
}

EisensteinCache& default_eisenstein_cache()
{
    static EisensteinCache cache = [] {
        const char* env = std::getenv("BETAFAM_CACHE_DIR");
        return EisensteinCache(env ? std::filesystem::path(env)
                                   : std::filesystem::path(".betafam-cache"));
    }();
    return cache;
}

FpPoly epm1_divisor_poly(std::uint64_t p, EisensteinCache& cache)
{
    const Level2PolyP& rep = cache.rep(p);
    FpPoly e(p, rep.mu);
    if (rep.delta_parity == 1) {
        // delta^2 = mu + eps dehomogenizes to x + 1
        e = e * FpPoly::linear(p, 1, 1);
    }
    return e;
}

std::optional<std::uint64_t> epm1_cert_multiplicity(const Level1Form& f, std::uint64_t p,
                                                    EisensteinCache& cache)
{
    if (p == 5) {
        auto ord = e4_div_order_p5(f);
        return ord;
    }
    Level2PolyP im = l2_p(f, p);
    DehomogPoly px = dehomogenize(im);
    if (px.poly.is_zero())
        return std::nullopt;
    return factor_multiplicity(px.poly, epm1_divisor_poly(p, cache));
}

bool epm1_div_check(const Level1Form& f, std::uint64_t j, std::uint64_t p, EisensteinCache& cache)
{
    if (j < 1)
        throw std::domain_error("epm1_div_check: j must be >= 1");
    if (static_cast<std::int64_t>(j * (p - 1)) > f.weight)
        throw std::domain_error("epm1_div_check: weight of E_{p-1}^j exceeds the form's weight");
    Level2PolyP im = l2_p(f, p);
    DehomogPoly px = dehomogenize(im);
    if (px.poly.is_zero())
        return true;
    if (p == 5) {
        DehomogPoly py = to_y_variable(px);
        return *py.poly.order_at_zero() >= j;
    }
    auto m = factor_multiplicity(px.poly, epm1_divisor_poly(p, cache), j);
    return m && *m >= j;
}

} // namespace betafam
