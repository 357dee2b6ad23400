#include "doctest.h"

#include "swr/errors.hpp"
#include "swr/replays.hpp"

using namespace swr;

namespace {
const char* kDir = SWR_REPLAY_DIR;
}

TEST_CASE("registry lists every bundled replay") {
    auto names = list_replays(kDir);
    std::vector<std::string> expected = {
        "anonymity-injection",    "cdv-extension",
        "lv-inconsistency",       "ot-invariance-violation",
        "prop1-incompleteness",   "refute-case-1",
        "refute-case-2a",         "refute-case-2b",
        "refute-case-2c",         "refute-two-valued-cycle",
        "refute-two-valued-swap", "remark1-coincidence",
        "spd-extension",          "transfer-legality",
        "vallentyne-gap"};
    CHECK(names == expected);
}

TEST_CASE("every bundled replay passes all of its assertions") {
    for (const std::string& name : list_replays(kDir)) {
        ReplayReport rep = run_replay(kDir, name);
        CHECK(!rep.results.empty());
        for (const auto& r : rep.results) {
            INFO(rep.name << ": " << r.description << " -- " << r.detail);
            CHECK(r.passed);
        }
        CHECK(rep.passed());
    }
}

TEST_CASE("unknown replay names are rejected") {
    CHECK_THROWS_AS(run_replay(kDir, "no-such-replay"), UnknownReplay);
}
