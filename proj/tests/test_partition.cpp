#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gcp/partition.hpp"

using namespace gcp;

TEST_CASE("construction and part access") {
    Partition p({3, 1, 1});
    CHECK(p.size() == 5);
    CHECK(p.length() == 3);
    CHECK(p.part(1) == 3);
    CHECK(p.part(3) == 1);
    CHECK(p.part(4) == 0);
    CHECK(p.part(99) == 0);
    CHECK(Partition{}.empty());
    CHECK(Partition{}.size() == 0);
}

TEST_CASE("trailing zeros are normalized away") {
    CHECK(Partition({2, 1, 0, 0}) == Partition({2, 1}));
    CHECK(Partition({0}) == Partition{});
}

TEST_CASE("parse accepts commas, spaces, empty") {
    CHECK(Partition::parse("3,1,1") == Partition({3, 1, 1}));
    CHECK(Partition::parse("3 1 1") == Partition({3, 1, 1}));
    CHECK(Partition::parse("") == Partition{});
    CHECK(Partition::parse("  ") == Partition{});
    CHECK_THROWS_AS(Partition::parse("1,2"), std::invalid_argument);
    CHECK_THROWS_AS(Partition::parse("2,x"), std::invalid_argument);
    CHECK_THROWS_AS(Partition::parse("-1"), std::invalid_argument);
}

TEST_CASE("conjugate") {
    CHECK(Partition({3, 1, 1}).conjugate() == Partition({3, 1, 1}));
    CHECK(Partition({4, 2}).conjugate() == Partition({2, 2, 1, 1}));
    CHECK(Partition{}.conjugate() == Partition{});
    // involution on a sample
    for (auto& p : partitions_in_box(3, 4)) CHECK(p.conjugate().conjugate() == p);
}

TEST_CASE("containment and intersection") {
    Partition la({3, 2}), mu({2, 1}), nu({1, 1, 1});
    CHECK(la.contains(mu));
    CHECK(!mu.contains(la));
    CHECK(!la.contains(nu));
    CHECK(la.contains(la));
    CHECK(la.contains(Partition{}));
    CHECK(Partition::intersect(la, nu) == Partition({1, 1}));
    CHECK(Partition::intersect(la, mu) == mu);
}

TEST_CASE("corners") {
    auto c = Partition({3, 2, 2}).corners();
    REQUIRE(c.size() == 2);
    CHECK(c[0] == std::pair<int, int>(1, 3));
    CHECK(c[1] == std::pair<int, int>(3, 2));
    CHECK(Partition{}.corners().empty());
    CHECK(Partition({2, 2}).corners() == std::vector<std::pair<int, int>>{{2, 2}});
}

TEST_CASE("corner removals enumerate subsets") {
    Partition p({2, 1});
    auto r = p.corner_removals();
    REQUIRE(r.size() == 4);  // two corners
    CHECK(r[0] == p);
    CHECK(r[1] == Partition({1, 1}));
    CHECK(r[2] == Partition({2}));
    CHECK(r[3] == Partition({1}));
    CHECK(Partition{}.corner_removals() == std::vector<Partition>{Partition{}});
}

TEST_CASE("cells_minus") {
    auto cells = Partition({2, 1}).cells_minus(Partition({1}));
    REQUIRE(cells.size() == 2);
    CHECK(cells[0] == std::pair<int, int>(1, 2));
    CHECK(cells[1] == std::pair<int, int>(2, 1));
    // no containment needed: (1)/(2) has no cells, (2)/(1) has one
    CHECK(Partition({1}).cells_minus(Partition({2})).empty());
    CHECK(Partition({2}).cells_minus(Partition({1})).size() == 1);
}

TEST_CASE("box enumeration is sorted and complete") {
    auto all = partitions_in_box(2, 2);
    REQUIRE(all.size() == 6);
    CHECK(all[0] == Partition{});
    CHECK(all.back() == Partition({2, 2}));
    for (size_t i = 1; i < all.size(); ++i) CHECK(all[i - 1] < all[i]);

    auto sub = subpartitions(Partition({2, 1}));
    REQUIRE(sub.size() == 5);  // {}, 1, 11, 2, 21
    for (auto& s : sub) CHECK(Partition({2, 1}).contains(s));
}

TEST_CASE("to_string round trip") {
    CHECK(Partition({3, 1}).to_string() == "3,1");
    CHECK(Partition{}.to_string() == "");
    CHECK(Partition::parse(Partition({5, 4, 1}).to_string()) == Partition({5, 4, 1}));
}
