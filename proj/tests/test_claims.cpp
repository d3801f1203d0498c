#include "doctest.h"

#include <set>

#include "sicverify/claims.hpp"

using namespace sicverify;

TEST_CASE("registry shape") {
    const auto& reg = claim_registry();
    CHECK(reg.size() >= 14);
    std::set<std::string> ids;
    for (const auto& c : reg) {
        CHECK(ids.insert(c.id).second);
        CHECK(static_cast<bool>(c.run));
        CHECK(!c.description.empty());
        CHECK(!c.anchor.empty());
    }
    CHECK(ids.count("C1") == 1);
    CHECK(ids.count("C14") == 1);
    // exactly one finding-severity claim, and it is C14
    for (const auto& c : reg) CHECK(c.finding == (c.id == "C14"));
}

TEST_CASE("unknown claim ids are a usage error") {
    ClaimContext ctx;
    CHECK_THROWS_AS(run_claims({"bogus"}, ctx), std::invalid_argument);
}

TEST_CASE("single-claim run: C7 verifies with witness count 240") {
    ClaimContext ctx;
    const RunResult r = run_claims({"C7"}, ctx);
    REQUIRE(r.reports.size() == 1);
    CHECK(r.reports[0].id == "C7");
    CHECK(r.reports[0].status == ClaimStatus::verified);
    CHECK(r.reports[0].witnesses["unit_count"] == 240);
    CHECK(r.all_verified);

    const auto j = render_json(r);
    CHECK(j["artifact_version"] == kArtifactVersion);
    CHECK(j["all_verified"] == true);
    CHECK(j["reports"][0]["claim"] == "C7");
    CHECK(j["reports"][0]["status"] == "verified");
    CHECK(j["reports"][0]["witnesses"]["unit_count"] == 240);
    CHECK(j["reports"][0]["runtime_ms"] == 0);  // zeroed for determinism
}

TEST_CASE("cheap claim subset verifies and renders deterministically") {
    ClaimContext ctx;
    const std::vector<std::string> ids{"C1", "C3", "C4", "C5", "C13"};
    const RunResult r1 = run_claims(ids, ctx);
    CHECK(r1.all_verified);
    for (const auto& rep : r1.reports) CHECK(rep.status == ClaimStatus::verified);

    // duplicate and out-of-order requests normalize to registry order
    ClaimContext ctx2;
    const RunResult r2 = run_claims({"C13", "C1", "C5", "C3", "C4", "C1"}, ctx2);
    REQUIRE(r2.reports.size() == r1.reports.size());
    for (std::size_t i = 0; i < r1.reports.size(); ++i) CHECK(r1.reports[i].id == r2.reports[i].id);

    CHECK(render_json(r1).dump(2) == render_json(r2).dump(2));
    CHECK(render_text(r1) == render_text(r2));

    // text has one line per claim plus the summary line
    const std::string text = render_text(r1);
    CHECK(std::count(text.begin(), text.end(), '\n') == static_cast<long>(ids.size()) + 1);
}

TEST_CASE("claim text includes status and headline witness") {
    ClaimContext ctx;
    const RunResult r = run_claims({"C1"}, ctx);
    const std::string text = render_text(r);
    CHECK(text.find("C1") != std::string::npos);
    CHECK(text.find("verified") != std::string::npos);
    CHECK(text.find("[") != std::string::npos);
}
