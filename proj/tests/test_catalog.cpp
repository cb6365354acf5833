#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "k3m/catalog.hpp"

#include <algorithm>
#include <set>

using namespace k3m;

TEST_CASE("the embedded table") {
    const auto& rows = arnold_table();
    REQUIRE(rows.size() == 14);
    std::set<std::string> names;
    for (const auto& r : rows) names.insert(r.name);
    CHECK(names == std::set<std::string>{"Q10", "Q11", "Q12", "Z11", "Z12", "Z13", "S11",
                                         "S12", "W12", "W13", "K12", "K13", "K14", "U12"});

    auto find = [&](const std::string& n) {
        return *std::find_if(rows.begin(), rows.end(),
                             [&](const ArnoldRow& r) { return r.name == n; });
    };
    ArnoldRow q10 = find("Q10");
    CHECK(q10.triple == std::array<int, 3>{2, 3, 9});
    CHECK(q10.weights == std::array<int, 3>{6, 8, 9});
    CHECK(q10.degree == 24);
    CHECK(q10.dual_triple == std::array<int, 3>{3, 3, 4});
    REQUIRE(q10.d0.has_value());
    CHECK(*q10.d0 == 18);

    ArnoldRow k12 = find("K12");
    CHECK(k12.triple == std::array<int, 3>{2, 3, 7});
    CHECK(k12.dual_triple == std::array<int, 3>{2, 3, 7});
    CHECK(*k12.d0 == 42);

    CHECK(!find("Q11").d0.has_value());
    CHECK(!find("S12").d0.has_value());
    CHECK(*find("U12").d0 == 4);

    // weights always satisfy 1 + q1 + q2 + q3 = N
    for (const auto& r : rows) {
        CHECK(1 + r.weights[0] + r.weights[1] + r.weights[2] == r.degree);
    }
}

TEST_CASE("duality suite passes for every row") {
    auto reports = verify_strange_duality();
    REQUIRE(reports.size() == 14);
    for (const auto& r : reports) {
        CAPTURE(r.id);
        CHECK(r.status == "pass");
        CHECK(r.id.rfind("sd/", 0) == 0);
        CHECK(!r.evidence.empty());
    }
}

TEST_CASE("named example suite passes") {
    auto reports = verify_named_examples();
    CHECK(reports.size() >= 26);
    for (const auto& r : reports) {
        CAPTURE(r.id);
        CHECK(r.status == "pass");
        CHECK(r.id.rfind("sd/", 0) != 0);
    }
}

TEST_CASE("full verification is deterministic across job counts") {
    auto serial = verify_catalog("", 1);
    auto parallel = verify_catalog("", 4);
    REQUIRE(serial.size() == parallel.size());
    CHECK(serial.size() >= 40);
    CHECK(std::is_sorted(serial.begin(), serial.end(),
                         [](const auto& a, const auto& b) { return a.id < b.id; }));
    for (std::size_t i = 0; i < serial.size(); ++i) {
        CHECK(serial[i].id == parallel[i].id);
        CHECK(serial[i].status == parallel[i].status);
        CHECK(serial[i].evidence == parallel[i].evidence);
        CHECK(serial[i].paper_ref == parallel[i].paper_ref);
    }
    ReportTotals t = report_totals(serial);
    CHECK(t.fail == 0);
    CHECK(t.unknown == 0);
    CHECK(t.pass == serial.size());
}

TEST_CASE("prefix filtering") {
    auto mirror_only = verify_catalog("mirror/", 2);
    CHECK(mirror_only.size() == 10);
    for (const auto& r : mirror_only) CHECK(r.id.rfind("mirror/", 0) == 0);
    CHECK(verify_catalog("no-such-prefix/").empty());
}

TEST_CASE("report json round trip is byte stable") {
    auto reports = verify_catalog("fricke/");
    REQUIRE(!reports.empty());
    std::string s = report_to_json(reports);
    auto back = report_from_json(s);
    REQUIRE(back.size() == reports.size());
    for (std::size_t i = 0; i < reports.size(); ++i) {
        CHECK(back[i].id == reports[i].id);
        CHECK(back[i].evidence == reports[i].evidence);
        CHECK(back[i].ms == reports[i].ms);
    }
    CHECK(report_to_json(back) == s);
}

TEST_CASE("totals partition the statuses") {
    std::vector<VerificationReport> fake = {
        {"a", "", "pass", "{}", 1},
        {"b", "", "fail", "{}", 1},
        {"c", "", "unknown", "{}", 1},
        {"d", "", "pass", "{}", 1},
    };
    ReportTotals t = report_totals(fake);
    CHECK(t.pass == 2);
    CHECK(t.fail == 1);
    CHECK(t.unknown == 1);
}
