#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "faircoal/reproduce.hpp"

using namespace faircoal;

namespace {
const ClaimResult& find_claim(const ReproductionReport& r, const std::string& id) {
    for (const ClaimResult& c : r.claims)
        if (c.id == id) return c;
    FAIL("missing claim " + id);
    static ClaimResult dummy;
    return dummy;
}
}  // namespace

TEST_CASE("path scope distinguishes confirmations from known discrepancies") {
    ReproductionReport r = run_reproduction(Scope::paths);
    CHECK(r.claims.size() == 14);  // n = 2..15
    CHECK(r.ok());                 // every deviation is a documented one

    const ClaimResult& p2 = find_claim(r, "path.cf.P2");
    CHECK(p2.status == ClaimStatus::discrepancy);
    CHECK(p2.known_discrepancy);
    CHECK(p2.expected == "4");
    CHECK(p2.computed == "2");

    const ClaimResult& p7 = find_claim(r, "path.cf.P7");
    CHECK(p7.status == ClaimStatus::discrepancy);
    CHECK(p7.known_discrepancy);
    CHECK(p7.computed == "5");

    CHECK(find_claim(r, "path.cf.P8").status == ClaimStatus::confirmed);
    CHECK(find_claim(r, "path.cf.P4").status == ClaimStatus::confirmed);
}

TEST_CASE("cycle scope") {
    ReproductionReport r = run_reproduction(Scope::cycles);
    CHECK(r.ok());
    CHECK(find_claim(r, "cycle.cf.C4").status == ClaimStatus::discrepancy);
    CHECK(find_claim(r, "cycle.cf.C4").known_discrepancy);
    CHECK(find_claim(r, "cycle.cf.C5").status == ClaimStatus::confirmed);
    CHECK(find_claim(r, "cycle.cf.C10").computed == "6");
    CHECK(find_claim(r, "cycle.cf.C10").known_discrepancy);
    CHECK(find_claim(r, "cycle.cf.C12").status == ClaimStatus::confirmed);
    // no claim rows for orders the statement does not cover
    for (const ClaimResult& c : r.claims) CHECK(c.id != "cycle.cf.C3");
}

TEST_CASE("cubic scopes") {
    ReproductionReport r6 = run_reproduction(Scope::cubic6);
    CHECK(r6.claims.size() == 2);
    for (const ClaimResult& c : r6.claims) {
        CHECK(c.status == ClaimStatus::confirmed);
        CHECK(c.computed == "6");
    }

    ReproductionReport r8 = run_reproduction(Scope::cubic8);
    CHECK(r8.claims.size() == 1);
    const ClaimResult& m8 = r8.claims.front();
    CHECK(m8.status == ClaimStatus::discrepancy);
    CHECK(m8.known_discrepancy);
    CHECK(m8.expected == "{5,5,6,8,8,8}");
    CHECK(m8.computed == "{5,6,6,8,8,8}");
    CHECK(r8.ok());
}

TEST_CASE("claim ids are unique and statuses populated") {
    ReproductionReport r = run_reproduction(Scope::coronas);
    CHECK(r.claims.size() == 21);  // 7 tree types x 3 quantities
    std::set<std::string> ids;
    for (const ClaimResult& c : r.claims) {
        CHECK(ids.insert(c.id).second);
        CHECK(c.status == ClaimStatus::confirmed);
        CHECK(!c.statement.empty());
    }
}

TEST_CASE("report counters") {
    ReproductionReport r = run_reproduction(Scope::paths);
    int confirmed = r.count(ClaimStatus::confirmed);
    int discrepant = r.count(ClaimStatus::discrepancy);
    CHECK(confirmed + discrepant == static_cast<int>(r.claims.size()));
    CHECK(discrepant == 10);  // n = 2,3,7,9,10,11,12,13,14,15
    CHECK(r.unexpected_discrepancies() == 0);
}

// reruns the exhaustive bounds scope, so it stays out of the default run;
// invoke with:  faircoal_tests "[reproduce-all]"
TEST_CASE("the full claim suite has unique ids and only known discrepancies",
          "[.][reproduce-all]") {
    ReproductionReport r = run_reproduction(Scope::all);
    CHECK(r.claims.size() == 55);
    std::set<std::string> ids;
    for (const ClaimResult& c : r.claims) CHECK(ids.insert(c.id).second);
    CHECK(r.ok());
    CHECK(r.count(ClaimStatus::skipped) == 0);
}
