// betafam: modular forms attached to order-p divided beta family elements.
#include <chrono>
#include <cstdlib>
#include <iostream>
#include <mutex>

#include <CLI11.hpp>
#include <json.hpp>

#include "betafam/closedform.hpp"
#include "betafam/parallel.hpp"
#include "betafam/repro.hpp"
#include "betafam/search.hpp"

using namespace betafam;
using nlohmann::json;

namespace {

std::filesystem::path resolve_cache_dir(const std::string& flag)
{
    if (!flag.empty())
        return flag;
    if (const char* env = std::getenv("BETAFAM_CACHE_DIR"))
        return env;
    return ".betafam-cache";
}

json coeff_json(const Int& c)
{
    if (c.fits_slong_p())
        return c.get_si();
    return c.get_str();
}

json terms_json(const Level1Form& f)
{
    json arr = json::array();
    for (const auto& t : f.terms())
        arr.push_back({{"delta_exp", t.delta_exp}, {"e4_exp", t.e4_exp}, {"coeff", coeff_json(t.coeff)}});
    return arr;
}

json order_json(const ConditionReport& rep)
{
    if (rep.c4 == C4Status::inapplicable)
        return nullptr;
    if (!rep.c4_witness.order)
        return "infinite";
    return *rep.c4_witness.order;
}

json report_json(const ConditionReport& rep)
{
    json j;
    j["c1"] = rep.c1;
    j["c2"] = {{"pass", rep.c2},
               {"twelve_ord_q", 12 * rep.c2_witness.ord_q},
               {"bound", rep.c2_witness.bound},
               {"equality_branch", rep.c2_witness.equality_branch}};
    j["c3"] = rep.c3;
    j["c4"] = {{"status", to_string(rep.c4)},
               {"order", order_json(rep)},
               {"required_j", rep.c4_witness.required_j}};
    j["generator_check"] = rep.generator_check;
    j["failed_stage"] = rep.failed_stage;
    return j;
}

void print_terms_table(const Level1Form& f)
{
    for (const auto& t : f.terms()) {
        std::cout << "  " << t.coeff.get_str() << " * Delta^" << t.delta_exp;
        if (t.e4_exp)
            std::cout << " E4^" << t.e4_exp;
        std::cout << "\n";
    }
}

void print_report_table(const ConditionReport& rep)
{
    std::cout << "  C1 " << (rep.c1 ? "pass" : "FAIL") << "\n";
    std::cout << "  C2 " << (rep.c2 ? "pass" : "FAIL") << " (12*ord_q = "
              << 12 * rep.c2_witness.ord_q << ", bound " << rep.c2_witness.bound
              << (rep.c2_witness.equality_branch ? ", equality branch" : "") << ")\n";
    std::cout << "  C3 " << (rep.c3 ? "pass" : "FAIL") << "\n";
    std::cout << "  C4 " << to_string(rep.c4);
    if (rep.c4 != C4Status::inapplicable) {
        std::cout << " (order ";
        if (rep.c4_witness.order)
            std::cout << *rep.c4_witness.order;
        else
            std::cout << "infinite";
        std::cout << ", required " << rep.c4_witness.required_j << ")";
    }
    std::cout << "\n";
}

int cmd_enumerate(std::uint64_t p, std::uint64_t i, bool as_json)
{
    auto js = enumerate_j(p, i);
    if (as_json) {
        json out;
        out["schema"] = 1;
        out["prime"] = p;
        out["i"] = i;
        out["j"] = js;
        std::cout << out.dump(2) << "\n";
    } else {
        for (auto j : js)
            std::cout << j << "\n";
    }
    return 0;
}

struct ComputeOutcome {
    Level1Form form;
    ConditionReport report;
    std::string method;
    json extra;
};

int cmd_compute(std::uint64_t p, std::uint64_t i, std::uint64_t j, const std::string& method,
                bool allow_nonfamily, bool conjecture, std::int64_t precision,
                EisensteinCache& cache, bool as_json)
{
    auto start = std::chrono::steady_clock::now();
    BetaIndex idx = decompose(p, i, j);
    if (!idx.valid && !allow_nonfamily)
        throw std::domain_error("(i, j) is not an order-p index; use --allow-nonfamily");

    auto run_theorem = [&]() -> Level1Form {
        if (p == 5)
            return theorem_main_5(i, j, allow_nonfamily).form;
        std::uint64_t pn = 1;
        for (std::uint64_t k = 0; k < idx.n; ++k)
            pn *= p;
        if (j > pn)
            throw std::domain_error("no closed form is established for j > p^n at p != 5");
        if (conjecture)
            return conjecture_form(p, i);
        return section5_form(p, idx.r, idx.n);
    };

    Level1Form form;
    json extra;
    bool ok = true;
    ConditionReport report;
    if (method == "theorem") {
        form = run_theorem();
        report = check_all(form, p, i, j, cache);
    } else if (method == "search") {
        SolveResult r = search_solve(p, i, j, allow_nonfamily, cache);
        if (r.status != SolveResult::Status::solved &&
            r.status != SolveResult::Status::postcondition_failure)
            throw std::runtime_error("search failed: " + r.detail);
        form = r.form;
        report = r.report;
    } else { // both
        Level1Form thm = run_theorem();
        SolveResult r = search_solve(p, i, j, allow_nonfamily, cache);
        if (r.status != SolveResult::Status::solved)
            throw std::runtime_error("search failed: " + r.detail);
        form = thm;
        report = check_all(thm, p, i, j, cache);
        bool agree = reduce_coords_mod_p(thm, p) == reduce_coords_mod_p(r.form, p);
        extra["agreement_mod_p"] = agree;
        ok = ok && agree;
    }
    ok = ok && report.all_passed();
    if (precision >= 0) {
        // emit the integer q-expansion through q^precision
        QSeriesZ q = form_to_q(form, static_cast<std::size_t>(precision));
        json coeffs = json::array();
        for (std::size_t k = 0; k <= q.prec(); ++k)
            coeffs.push_back(coeff_json(q[k]));
        extra["q_expansion"] = coeffs;
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    if (as_json) {
        json out;
        out["schema"] = 1;
        out["prime"] = p;
        out["i"] = i;
        out["j"] = j;
        out["weight"] = form.weight;
        out["method"] = method;
        out["basis_terms"] = terms_json(form);
        out["conditions"] = report_json(report);
        out["timing_seconds"] = secs;
        for (auto& [k, v] : extra.items())
            out[k] = v;
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "f_{" << i << "/" << j << "} at p = " << p << " (weight " << form.weight
                  << ", method " << method << "):\n";
        print_terms_table(form);
        print_report_table(report);
        for (auto& [k, v] : extra.items())
            std::cout << "  " << k << " = " << v << "\n";
        std::cout << "  time " << secs << "s\n";
    }
    return ok ? 0 : 1;
}

int cmd_eisenstein(std::uint64_t p, bool level2, EisensteinCache& cache, bool as_json)
{
    EE6Form rep1 = eisenstein_rep_mod_p(p);
    HomogE4E6 h = homog_from_ee6(rep1);
    json terms = json::array();
    for (std::size_t s = 0; s < h.c.size(); ++s)
        if (h.c[s])
            terms.push_back({{"e4_exp", h.e4_exp(s)}, {"e6_exp", h.e6_exp(s)}, {"coeff", h.c[s]}});

    json out;
    out["schema"] = 1;
    out["prime"] = p;
    out["weight"] = p - 1;
    out["level1_terms"] = terms;
    if (level2) {
        const Level2PolyP& rep2 = cache.rep(p);
        json mu = json::array();
        for (std::size_t a = rep2.mu.size(); a-- > 0;)
            mu.push_back(rep2.mu[a]); // descending mu-exponent
        out["level2"] = {{"delta_parity", rep2.delta_parity}, {"mu_desc", mu}};
    }
    if (as_json) {
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    std::cout << "E_" << (p - 1) << " mod " << p << " =";
    bool first = true;
    for (std::size_t s = 0; s < h.c.size(); ++s) {
        if (!h.c[s])
            continue;
        std::cout << (first ? " " : " + ") << h.c[s];
        if (h.e4_exp(s))
            std::cout << " E4^" << h.e4_exp(s);
        if (h.e6_exp(s))
            std::cout << " E6^" << h.e6_exp(s);
        first = false;
    }
    std::cout << "\n";
    if (level2) {
        const Level2PolyP& rep2 = cache.rep(p);
        std::cout << "level 2 (delta_parity " << rep2.delta_parity << "):";
        const std::int64_t d = rep2.degree();
        first = true;
        auto power = [](const char* sym, std::int64_t e) {
            std::string out;
            if (e > 0) {
                out = std::string(" ") + sym;
                if (e > 1)
                    out += "^" + std::to_string(e);
            }
            return out;
        };
        for (std::int64_t a = d; a >= 0; --a) {
            std::uint64_t c = rep2.mu[static_cast<std::size_t>(a)];
            if (!c)
                continue;
            std::string term = power("mu", a) + power("eps", d - a);
            if (c != 1 || term.empty())
                term = " " + std::to_string(c) + term;
            std::cout << (first ? "" : " +") << term;
            first = false;
        }
        std::cout << "\n";
    }
    return 0;
}

int cmd_reproduce(std::vector<std::string> ids, bool all, bool list, const std::string& tier,
                  unsigned jobs, EisensteinCache& cache)
{
    const auto& items = repro_items();
    if (list) {
        for (const auto& item : items)
            std::cout << item.id << (item.long_tier ? "  [long] " : "  ") << item.summary << "\n";
        return 0;
    }
    std::vector<const ReproItem*> selected;
    if (all || ids.empty()) {
        for (const auto& item : items)
            if (tier == "long" || !item.long_tier)
                selected.push_back(&item);
    } else {
        for (const auto& id : ids) {
            const ReproItem* item = find_repro_item(id);
            if (!item)
                throw std::domain_error("unknown reproduction item: " + id);
            selected.push_back(item);
        }
    }
    std::mutex out_mu;
    std::atomic<int> failures{0};
    parallel_for(
        selected.size(),
        [&](std::size_t k) {
            auto start = std::chrono::steady_clock::now();
            ReproResult r = selected[k]->run(cache);
            double secs =
                std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
            char timing[32];
            std::snprintf(timing, sizeof timing, "%.3fs", secs);
            std::lock_guard<std::mutex> lock(out_mu);
            std::cout << selected[k]->id << " " << (r.pass ? "PASS" : "FAIL") << " (" << timing
                      << ") " << r.detail << "\n";
            if (!r.pass)
                ++failures;
        },
        jobs);
    return failures.load() ? 1 : 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"modular forms attached to order-p divided beta family elements"};
    app.require_subcommand(1);

    std::string cache_flag;
    app.add_option("--cache-dir", cache_flag, "Eisenstein representation cache directory");

    // enumerate
    auto* enumerate = app.add_subcommand("enumerate", "list valid denominators j for a given i");
    std::uint64_t ep = 5, ei = 1;
    bool ejson = false;
    enumerate->add_option("--prime", ep, "prime p >= 5")->required();
    enumerate->add_option("--i", ei, "numerator index i")->required();
    enumerate->add_flag("--json", ejson, "JSON output");

    // compute
    auto* compute = app.add_subcommand("compute", "compute f_{i/j} and check conditions C1-C4");
    std::uint64_t cp = 5, ci = 1, cj = 1;
    std::int64_t precision = -1;
    std::string method = "theorem", cformat = "table";
    bool allow_nonfamily = false, conjecture = false;
    compute->add_option("--prime", cp, "prime p >= 5")->required();
    compute->add_option("--i", ci, "numerator index i")->required();
    compute->add_option("--j", cj, "denominator index j (default 1)");
    compute->add_option("--precision", precision,
                        "also report the q-expansion through q^N");
    compute->add_option("--method", method, "theorem | search | both")
        ->check(CLI::IsMember({"theorem", "search", "both"}));
    compute->add_flag("--allow-nonfamily", allow_nonfamily,
                      "accept (i, j) outside the order-p family");
    compute->add_flag("--conjecture", conjecture,
                      "use the conjectural Delta power at primes without a theorem");
    compute->add_option("--format", cformat, "json | table")
        ->check(CLI::IsMember({"json", "table"}));

    // eisenstein
    auto* eis = app.add_subcommand("eisenstein", "E_{p-1} mod p representations");
    std::uint64_t xp = 5;
    bool level2 = false;
    std::string xformat = "table";
    eis->add_option("--prime", xp, "prime p >= 5")->required();
    eis->add_flag("--level2", level2, "also print the level-2 (mu, eps) table");
    eis->add_option("--format", xformat, "json | table")
        ->check(CLI::IsMember({"json", "table"}));

    // reproduce
    auto* repro = app.add_subcommand("reproduce", "re-run published computations and diff them");
    std::vector<std::string> ids;
    bool all = false, list = false;
    std::string tier = "short";
    unsigned jobs = 0;
    repro->add_option("items", ids, "item ids (see --list)");
    repro->add_flag("--all", all, "run every item in the selected tier");
    repro->add_flag("--list", list, "list item ids");
    repro->add_option("--tier", tier, "short | long (long includes the slow items)")
        ->check(CLI::IsMember({"short", "long"}));
    repro->add_option("--jobs", jobs, "parallel workers (default: hardware)");

    CLI11_PARSE(app, argc, argv);

    try {
        EisensteinCache cache(resolve_cache_dir(cache_flag));
        if (enumerate->parsed())
            return cmd_enumerate(ep, ei, ejson);
        if (compute->parsed())
            return cmd_compute(cp, ci, cj, method, allow_nonfamily, conjecture, precision, cache,
                               cformat == "json");
        if (eis->parsed())
            return cmd_eisenstein(xp, level2, cache, xformat == "json");
        if (repro->parsed())
            return cmd_reproduce(ids, all, list, tier, jobs, cache);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
