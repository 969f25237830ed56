#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "nilpair/partition.hpp"
#include "nilpair/rational.hpp"

using namespace nilpair;

namespace {
Partition P(std::vector<int> v) { return Partition(std::move(v)); }
}

TEST_CASE("validate_partition") {
    CHECK(validate_partition({Family::SP, 10}, P({3, 3, 1, 1, 1, 1})));
    CHECK(!validate_partition({Family::SP, 4}, P({3, 1})));
    CHECK(validate_partition({Family::SO, 10}, P({3, 3, 3, 1})));
    CHECK(!validate_partition({Family::SO, 8}, P({4, 2, 2})));
    CHECK(validate_partition({Family::SL, 5}, P({3, 2})));
    CHECK(!validate_partition({Family::SL, 5}, P({3, 3})));
}

TEST_CASE("transpose") {
    CHECK(transpose(P({3})) == P({1, 1, 1}));
    CHECK(transpose(P({2, 2})) == P({2, 2}));
    CHECK(transpose(P({4, 2, 1})) == P({3, 2, 1, 1}));
}

TEST_CASE("transpose is an involution up to 20") {
    for (int n = 1; n <= 20; ++n)
        for (const auto& p : partitions_of(n)) CHECK(transpose(transpose(p)) == p);
}

TEST_CASE("is_even_orbit") {
    CHECK(is_even_orbit(P({3, 3, 1, 1, 1, 1})));
    CHECK(is_even_orbit(P({2, 2, 2})));
    CHECK(!is_even_orbit(P({3, 2})));
}

TEST_CASE("levi_of_even_orbit") {
    auto l1 = levi_of_even_orbit({Family::SL, 6}, P({2, 2, 2}));
    CHECK(l1.str() == "sl3^2+ab1");
    auto l2 = levi_of_even_orbit({Family::SP, 10}, P({3, 3, 1, 1, 1, 1}));
    CHECK(l2.str() == "sl2+sp6+ab1");
    auto l3 = levi_of_even_orbit({Family::SO, 8}, P({2, 2, 2, 2}));
    CHECK(l3.str() == "sl4+ab1");
    CHECK_THROWS_AS((void)levi_of_even_orbit({Family::SL, 5}, P({3, 2})), error);
}

TEST_CASE("levi has full rank") {
    for (auto fam : {ClassicalFamily{Family::SL, 6}, ClassicalFamily{Family::SP, 10},
                     ClassicalFamily{Family::SO, 9}, ClassicalFamily{Family::SO, 8}}) {
        for (const auto& p : valid_partitions(fam)) {
            if (!is_even_orbit(p)) continue;
            auto l = levi_of_even_orbit(fam, p);
            CHECK(l.rank() == fam.rank());
        }
    }
}

TEST_CASE("reductive_centralizer") {
    CHECK(reductive_centralizer({Family::SP, 10}, P({3, 3, 1, 1, 1, 1})).str() == "sp2+sp4");
    CHECK(reductive_centralizer({Family::SP, 6}, P({2, 2, 2})).str() == "so3");
    auto k = reductive_centralizer({Family::SL, 6}, P({2, 2, 2}));
    CHECK(k.str() == "sl3");
    CHECK(k.abelian_rank == 0);
}

TEST_CASE("double_centralizer") {
    CHECK(double_centralizer({Family::SP, 10}, P({3, 3, 1, 1, 1, 1})).str() == "so3");
    CHECK(double_centralizer({Family::SO, 10}, P({3, 3, 3, 1})).str() == "so3");
    CHECK(double_centralizer({Family::SL, 6}, P({2, 2, 2})).str() == "sl2");
    CHECK_THROWS_AS((void)double_centralizer({Family::SP, 4}, P({2, 2})), error);
    CHECK_THROWS_AS((void)double_centralizer({Family::SO, 7}, P({3, 3, 1})), error);
    // multiplicity-one parts pool into one factor
    CHECK(double_centralizer({Family::SP, 6}, P({4, 2})).str() == "sp6");
    CHECK(double_centralizer({Family::SO, 7}, P({3, 1, 1, 1, 1})).str() == "so3");
}

TEST_CASE("is_excellent certificates") {
    auto c1 = is_excellent({Family::SP, 10}, P({3, 3, 1, 1, 1, 1}));
    CHECK(c1.verdict);
    CHECK(c1.dim_center_levi == 1);
    CHECK(c1.rank_double_centralizer == 1);
    CHECK(!c1.anomaly_flag);

    auto c2 = is_excellent({Family::SL, 6}, P({3, 2, 1}));
    CHECK(!c2.verdict);

    auto c3 = is_excellent({Family::SO, 10}, P({9, 1}));
    CHECK(c3.verdict);
    CHECK(c3.anomaly_flag);
    CHECK(c3.dim_center_levi == 5);  // regular orbit: full rank

    auto c4 = is_excellent({Family::SP, 4}, P({2, 2}));
    CHECK(!c4.verdict);
    CHECK(c4.is_even);
    CHECK(c4.dim_center_levi == 1);
    CHECK(c4.rank_double_centralizer == 2);
}

TEST_CASE("excellent implies semisimple double centralizer") {
    for (auto fam : {ClassicalFamily{Family::SL, 6}, ClassicalFamily{Family::SP, 10},
                     ClassicalFamily{Family::SO, 9}}) {
        for (const auto& p : valid_partitions(fam)) {
            if (!is_excellent(fam, p).verdict) continue;
            auto zk = double_centralizer(fam, p);  // must not throw for excellent orbits
            CHECK(zk.semisimple());
            auto k = reductive_centralizer(fam, p);
            CHECK(k.semisimple());
        }
    }
}

TEST_CASE("enumerate_excellent small algebras") {
    auto sl4 = enumerate_excellent(Family::SL, 4);
    std::set<std::string> got;
    for (auto& e : sl4)
        if (e.fam.size == 4) got.insert(e.p.str());
    CHECK(got == std::set<std::string>{"4", "2,2", "1,1,1,1"});

    auto sp4 = enumerate_excellent(Family::SP, 4);
    got.clear();
    for (auto& e : sp4)
        if (e.fam.size == 4) got.insert(e.p.str());
    CHECK(got == std::set<std::string>{"4", "1,1,1,1"});

    auto so7 = enumerate_excellent(Family::SO, 7);
    got.clear();
    for (auto& e : so7)
        if (e.fam.size == 7) got.insert(e.p.str());
    CHECK(got == std::set<std::string>{"7", "3,1,1,1,1", "1,1,1,1,1,1,1"});
}

TEST_CASE("weighted diagrams") {
    CHECK(weighted_diagram_from_partition({Family::SL, 3}, P({3})) ==
          std::vector<int>{2, 2});
    CHECK(weighted_diagram_from_partition({Family::SL, 4}, P({2, 2})) ==
          std::vector<int>{0, 2, 0});
    CHECK(weighted_diagram_from_partition({Family::SP, 4}, P({2, 2})) ==
          std::vector<int>{0, 2});
    CHECK(weighted_diagram_from_partition({Family::SO, 8}, P({2, 2, 2, 2})) ==
          std::vector<int>{0, 0, 0, 2});
    // even orbits have labels in {0,2}
    for (auto fam : {ClassicalFamily{Family::SP, 8}, ClassicalFamily{Family::SO, 9}}) {
        for (const auto& p : valid_partitions(fam)) {
            auto wd = weighted_diagram_from_partition(fam, p);
            bool all02 = std::all_of(wd.begin(), wd.end(),
                                     [](int l) { return l == 0 || l == 2; });
            CHECK(all02 == is_even_orbit(p));
        }
    }
}

TEST_CASE("dominance order and type A duality") {
    CHECK(dominance_leq(P({2, 2}), P({3, 1})));
    CHECK(!dominance_leq(P({3, 1}), P({2, 2})));
    CHECK(spaltenstein_dual_A(P({4, 2})) == P({2, 2, 1, 1}));
    CHECK_THROWS_AS((void)dominance_leq(P({2}), P({3})), error);
    // order reversing, exhaustively for N <= 8
    for (int n = 2; n <= 8; ++n) {
        auto ps = partitions_of(n);
        for (const auto& p : ps)
            for (const auto& q : ps) {
                if (dominance_leq(p, q))
                    CHECK(dominance_leq(spaltenstein_dual_A(q), spaltenstein_dual_A(p)));
            }
    }
}

TEST_CASE("descriptor normalization") {
    auto a = AlgebraDescriptor::make({{Family::SO, 3}}, 0);
    auto b = AlgebraDescriptor::make({{Family::SP, 2}}, 0);
    auto c = AlgebraDescriptor::make({{Family::SL, 2}}, 0);
    CHECK(iso_equal(a, b));
    CHECK(iso_equal(b, c));
    CHECK(a.str() == "so3");
    auto d4 = AlgebraDescriptor::make({{Family::SO, 4}}, 0);
    auto a1a1 = AlgebraDescriptor::make({{Family::SL, 2}, {Family::SL, 2}}, 0);
    CHECK(iso_equal(d4, a1a1));
    auto so5 = AlgebraDescriptor::make({{Family::SO, 5}}, 0);
    auto sp4 = AlgebraDescriptor::make({{Family::SP, 4}}, 0);
    CHECK(iso_equal(so5, sp4));
    auto so6 = AlgebraDescriptor::make({{Family::SO, 6}}, 0);
    auto sl4 = AlgebraDescriptor::make({{Family::SL, 4}}, 0);
    CHECK(iso_equal(so6, sl4));
    CHECK(!iso_equal(so6, so5));
}

TEST_CASE("zero dimensional factors are dropped") {
    auto d = AlgebraDescriptor::make(
        {{Family::SO, 1}, {Family::SL, 1}, {Family::SO, 3}}, 2);
    CHECK(d.factors.size() == 1);
    CHECK(d.str() == "so3+ab2");
    CHECK(d.rank() == 3);
}
