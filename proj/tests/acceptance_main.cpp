// Acceptance suite: one line per criterion, nonzero exit on any failure.
#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "betafam/repro.hpp"

using namespace betafam;

namespace {

struct Criterion {
    int number;
    std::vector<std::string> item_ids;
};

const std::vector<Criterion> kCriteria = {
    {1, {"eq-1.1"}},
    {2, {"eq-1.2"}},
    {3, {"example-1.3"}},
    {4, {"example-1.2"}},
    {5, {"thm-1.1-sweep"}},
    {6, {"cor-1.2"}},
    {7, {"prop-3.2"}},
    {8, {"identities-3.1-3.4"}},
    {9, {"l2-series-oracle"}},
    {10, {"eq-5.1"}},
    {11, {"eq-5.8"}},
    {12, {"eq-5.10"}},
    {13, {"thm-5.3", "thm-5.5", "thm-5.6"}},
    {14, {"thm-5.1"}},
    {15, {"lemma-2.1"}},
};

} // namespace

int main()
{
    EisensteinCache& cache = default_eisenstein_cache();
    int failures = 0;
    for (const auto& crit : kCriteria) {
        auto start = std::chrono::steady_clock::now();
        bool ok = true;
        std::string detail;
        for (const auto& id : crit.item_ids) {
            const ReproItem* item = find_repro_item(id);
            if (!item) {
                ok = false;
                detail = "unknown item " + id;
                break;
            }
            ReproResult r = item->run(cache);
            if (!detail.empty())
                detail += "; ";
            detail += id + ": " + r.detail;
            if (!r.pass) {
                ok = false;
                break;
            }
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("criterion-%02d %s (%.2fs) %s\n", crit.number, ok ? "PASS" : "FAIL", secs,
                    detail.c_str());
        std::fflush(stdout);
        if (!ok)
            ++failures;
    }
    if (failures) {
        std::printf("%d criterion(s) failed\n", failures);
        return 1;
    }
    std::printf("all %zu criteria passed\n", kCriteria.size());
    return 0;
}
