#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "minorb/json_io.hpp"

namespace minorb {

// One verification suite outcome. counterexamples holds serialized inputs
// for each failing case; it is nonempty iff failed > 0.
struct Report {
    std::string suite;
    int cases = 0;
    int passed = 0;
    int failed = 0;
    std::vector<Json> counterexamples;
    std::int64_t elapsed_ms = 0;

    void record(bool ok, const Json& witness = Json()) {
        ++cases;
        if (ok) {
            ++passed;
        } else {
            ++failed;
            counterexamples.push_back(witness.is_null() ? Json("unrecorded") : witness);
        }
    }

    bool ok() const { return failed == 0; }

    // elapsed_ms is emitted only on request: reports must be byte-identical
    // across reruns with the same seed.
    Json to_json(bool with_timings = false) const {
        Json j;
        j["suite"] = suite;
        j["cases"] = cases;
        j["passed"] = passed;
        j["failed"] = failed;
        j["counterexamples"] = counterexamples;
        if (with_timings) j["elapsed_ms"] = elapsed_ms;
        return j;
    }
};

}  // namespace minorb
