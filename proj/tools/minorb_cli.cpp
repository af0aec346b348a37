// Batch driver: runs the verification suites and the exact samplers, and
// emits JSON reports on stdout. Exit code 0 iff every requested suite
// passes, 1 on suite failure, 2 on usage errors.

#include <CLI11.hpp>
#include <iostream>
#include <string>

#include "minorb/bridge.hpp"
#include "minorb/quiver.hpp"
#include "minorb/suites.hpp"
#include "minorb/weyl.hpp"
#include "minorb/window.hpp"

using namespace minorb;

namespace {

int run_verify(const std::string& which, const std::string& filter, const SuiteOptions& opt, bool timings,
               bool json_out) {
    std::vector<SuiteEntry> selected;
    for (const auto& s : all_suites()) {
        if (which != "all" && which != s.name) continue;
        if (!filter.empty() && s.name != filter) continue;
        selected.push_back(s);
    }
    if (selected.empty()) {
        std::cerr << "unknown suite '" << which << "'\n";
        return 2;
    }

    std::vector<Report> reports;
    reports.reserve(selected.size());
    for (const auto& s : selected) reports.push_back(s.run(opt));

    int failed = 0, cases = 0, passed = 0;
    for (const auto& r : reports) {
        failed += r.failed;
        cases += r.cases;
        passed += r.passed;
        std::cerr << "[" << (r.ok() ? "pass" : "FAIL") << "] " << r.suite << ": " << r.passed << "/" << r.cases
                  << " (" << r.elapsed_ms << " ms)\n";
    }

    if (json_out) {
        if (reports.size() == 1) {
            std::cout << reports.front().to_json(timings).dump() << "\n";
        } else {
            Json agg;
            agg["suite"] = "all";
            agg["cases"] = cases;
            agg["passed"] = passed;
            agg["failed"] = failed;
            Json subs = Json::array();
            for (const auto& r : reports) subs.push_back(r.to_json(timings));
            agg["suites"] = std::move(subs);
            std::cout << agg.dump() << "\n";
        }
    }
    return failed == 0 ? 0 : 1;
}

int run_sample(const std::string& what, std::uint64_t seed, int count) {
    Rng rng(seed);
    Json out = Json::array();
    if (what == "orbit") {
        for (int i = 0; i < count; ++i) out.push_back(random_orbit_point(rng).to_json());
    } else if (what == "quiver") {
        for (int i = 0; i < count; ++i) out.push_back(sample_N(3, rng).to_json());
    } else if (what == "window") {
        for (int i = 0; i < count; ++i) out.push_back(random_orbit_window(rng).to_json());
    } else {
        std::cerr << "unknown sample kind '" << what << "'\n";
        return 2;
    }
    std::cout << out.dump() << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification driver for the minimal-orbit model"};
    app.require_subcommand(1);

    std::uint64_t seed = 42;
    int trials = 25;
    int count = 1;
    bool timings = false;
    bool json_out = true;

    auto* verify = app.add_subcommand("verify", "run a verification suite (or 'all')");
    std::string suite;
    verify->add_option("name", suite, "all|chevalley|triality|kostant|bridge|kks|weyl|affinize|flags")->required();
    verify->add_option("--seed", seed, "RNG seed (splitmix64-v1)");
    verify->add_option("--trials", trials, "randomized trials per family")->check(CLI::PositiveNumber);
    verify->add_flag("--timings", timings, "include elapsed_ms in the JSON (breaks byte-determinism)");
    verify->add_flag("--json,!--no-json", json_out, "emit the JSON report on stdout (default on)");
    std::string filter;
    verify->add_option("--suite", filter, "restrict 'verify all' to one suite");

    auto* sample = app.add_subcommand("sample", "emit exact samples as JSON");
    std::string kind;
    sample->add_option("kind", kind, "orbit|quiver|window")->required();
    sample->add_option("--seed", seed, "RNG seed");
    sample->add_option("--count", count, "number of samples")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (verify->parsed()) return run_verify(suite, filter, SuiteOptions{seed, trials}, timings, json_out);
        return run_sample(kind, seed, count);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
