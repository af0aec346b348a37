#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "minorb/report.hpp"

namespace minorb {

struct SuiteOptions {
    std::uint64_t seed = 42;
    int trials = 25;
};

// The verification suites behind `verify <name>`. Each runs its module's
// randomized identities and its fixed anchor cases, exactly.
Report suite_chevalley(const SuiteOptions& opt);
Report suite_triality(const SuiteOptions& opt);
Report suite_kostant(const SuiteOptions& opt);
Report suite_bridge(const SuiteOptions& opt);
Report suite_kks(const SuiteOptions& opt);
Report suite_weyl(const SuiteOptions& opt);
Report suite_affinize(const SuiteOptions& opt);
Report suite_flags(const SuiteOptions& opt);

struct SuiteEntry {
    std::string name;
    std::function<Report(const SuiteOptions&)> run;
};

const std::vector<SuiteEntry>& all_suites();

}  // namespace minorb
