// Reproduction harness: each item recomputes one published result and diffs
// it against frozen reference values. Shared by the CLI `reproduce`
// subcommand and the acceptance test suite.
#pragma once

#include <functional>
#include <string>
#include <vector>

#include "betafam/level2.hpp"

namespace betafam {

struct ReproResult {
    bool pass = false;
    std::string detail;
};

struct ReproItem {
    std::string id;
    std::string summary;
    bool long_tier = false;
    std::function<ReproResult(EisensteinCache&)> run;
};

const std::vector<ReproItem>& repro_items();
const ReproItem* find_repro_item(const std::string& id);

} // namespace betafam
