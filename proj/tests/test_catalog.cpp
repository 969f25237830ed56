#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "nilpair/catalog.hpp"
#include "nilpair/rational.hpp"

using namespace nilpair;

TEST_CASE("tables load and the row counts match") {
    const Catalog& cat = load_tables();
    CHECK(cat.exceptional.size() == 19);
    CHECK(cat.classical.size() == 5);
    std::map<std::string, int> counts;
    for (const auto& r : cat.exceptional) counts[r.algebra]++;
    CHECK(counts["F4"] == 2);
    CHECK(counts["E6"] == 2);
    CHECK(counts["E7"] == 9);
    CHECK(counts["E8"] == 6);
}

TEST_CASE("lookup") {
    const OrbitRecord* r = lookup("E7", "2A2");
    REQUIRE(r != nullptr);
    CHECK(r->k_type == "G2+A1");
    CHECK(r->dim_section == 1);
    CHECK(!r->partner.has_value());
    REQUIRE(r->note.has_value());

    const OrbitRecord* f = lookup("F4", "~A2");
    REQUIRE(f != nullptr);
    CHECK(f->levi_ss == "B3");
    CHECK(f->k_type == "G2");
    CHECK(f->dim_section == 1);

    const OrbitRecord* e8 = lookup("E8", "2A2");
    REQUIRE(e8 != nullptr);
    CHECK(e8->k_type == "2G2");

    CHECK(lookup("E7", "A5") == nullptr);
}

TEST_CASE("consistency report runs clean") {
    auto rep = consistency_report();
    for (const auto& i : rep.issues) {
        CAPTURE(i.where);
        CAPTURE(i.what);
        CHECK(false);
    }
    CHECK(rep.ok());
    CHECK(rep.checks_run > 40);
}

TEST_CASE("paired rows") {
    const Catalog& cat = load_tables();
    int paired = 0;
    for (const auto& r : cat.exceptional)
        if (r.partner) ++paired;
    CHECK(paired == 14);  // seven printed pairs
    // partnership is symmetric
    for (const auto& r : cat.exceptional) {
        if (!r.partner) continue;
        const OrbitRecord* p = nullptr;
        for (const auto& s : cat.exceptional)
            if (s.id == *r.partner) p = &s;
        REQUIRE(p != nullptr);
        REQUIRE(p->partner.has_value());
        CHECK(*p->partner == r.id);
    }
}

TEST_CASE("dumps") {
    auto text = catalog_as_text();
    CHECK(text.find("F4") != std::string::npos);
    CHECK(text.find("2G2") != std::string::npos);
    auto js = catalog_as_json();
    CHECK(js.find("\"levi_ss\"") != std::string::npos);
    CHECK(js.find("nonspecial") != std::string::npos);
}
