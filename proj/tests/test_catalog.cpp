#include "tame/block.hpp"
#include "tame/catalog.hpp"

#include <catch_amalgamated.hpp>

#include <set>

using tame::Family;

TEST_CASE("catalog holds every class once") {
    std::set<std::pair<Family, std::string>> seen;
    for (const auto& entry : tame::catalog()) {
        CHECK(seen.insert({entry.cls.family, entry.cls.tag}).second);
        for (const auto& row : entry.rows) CHECK(static_cast<int>(row.coefficients.size()) == entry.columns);
    }
    CHECK(seen.size() == 24);
    CHECK(tame::find_class(Family::semidihedral, "3D").cls.tag == "3B1");
    CHECK(tame::find_class(Family::semidihedral, "3B1/3D").cls.tag == "3B1");
    CHECK_THROWS_AS(tame::find_class(Family::dihedral, "3H"), std::invalid_argument);
    CHECK(tame::parse_family("SD") == Family::semidihedral);
    CHECK_THROWS_AS(tame::parse_family("cyclic"), std::invalid_argument);
}

TEST_CASE("the last row repeats 2^(n-2)-1 times") {
    for (const auto& entry : tame::catalog()) {
        for (int n = entry.cls.min_n; n <= 10; ++n) {
            const auto tmpl = tame::instantiate(entry, n);
            CHECK(tmpl.rows.back().multiplicity == (std::uint64_t{1} << (n - 2)) - 1);
            for (std::size_t r = 0; r + 1 < tmpl.rows.size(); ++r) CHECK(tmpl.rows[r].multiplicity == 1);
        }
    }
    CHECK_THROWS_AS(tame::instantiate(tame::find_class(Family::semidihedral, "3H"), 3), std::invalid_argument);
}

TEST_CASE("counts of the dihedral classes") {
    // All dihedral classes have k = 2^(n-2) + 3 and no large-height characters.
    for (const char* tag : {"1A", "2A", "2B", "3A", "3K", "3B"}) {
        const auto c = tame::counts(Family::dihedral, tag, 5);
        CHECK(c.k == 11);
        CHECK(c.height_histogram == std::map<int, std::uint64_t>{{0, 4}, {1, 7}});
    }
    CHECK(tame::counts(Family::dihedral, "3A", 3).l == 3);
    CHECK(tame::counts(Family::dihedral, "2B", 3).l == 2);
}

TEST_CASE("counts of the quaternion and semidihedral classes") {
    CHECK(tame::counts(Family::quaternion, "3K", 4).k == 9);
    CHECK(tame::counts(Family::quaternion, "3K", 4).height_histogram == std::map<int, std::uint64_t>{{0, 4}, {1, 3}, {2, 2}});
    CHECK(tame::counts(Family::quaternion, "1A", 4).k == 7);
    CHECK(tame::counts(Family::semidihedral, "3B1", 4).k == 8);
    CHECK(tame::counts(Family::semidihedral, "2A2", 4).k == 7);
    // n = 3: height one and height n-2 coincide.
    CHECK(tame::counts(Family::quaternion, "3A", 3).height_histogram == std::map<int, std::uint64_t>{{0, 4}, {1, 3}});
}

TEST_CASE("realizability follows the eliminations") {
    CHECK(tame::is_realizable(Family::dihedral, "3B", 3));
    CHECK_FALSE(tame::is_realizable(Family::dihedral, "3B", 4));
    CHECK(tame::is_realizable(Family::quaternion, "3B", 4));
    CHECK_FALSE(tame::is_realizable(Family::quaternion, "3B", 5));
    CHECK_FALSE(tame::is_realizable(Family::semidihedral, "3H", 4));
    CHECK_FALSE(tame::is_realizable(Family::semidihedral, "2B4", 7));
    CHECK(tame::is_realizable(Family::semidihedral, "2B1", 4));
    CHECK_FALSE(tame::is_realizable(Family::semidihedral, "2B1", 5));
    CHECK(tame::is_realizable(Family::semidihedral, "3B2", 4));
    CHECK_FALSE(tame::is_realizable(Family::semidihedral, "3C2,1", 5));
    CHECK(tame::is_realizable(Family::semidihedral, "3A1", 9));
    CHECK_THROWS_AS(tame::is_realizable(Family::semidihedral, "1A", 3), std::invalid_argument);
}

TEST_CASE("legal height histograms") {
    CHECK(tame::is_legal_histogram({{0, 4}, {1, 3}}, 4));
    CHECK(tame::is_legal_histogram({{0, 4}, {1, 3}, {2, 1}}, 4, Family::semidihedral));
    CHECK_FALSE(tame::is_legal_histogram({{0, 4}, {1, 3}, {2, 1}}, 4, Family::dihedral));
    CHECK_FALSE(tame::is_legal_histogram({{0, 3}, {1, 4}}, 4));
    CHECK_FALSE(tame::is_legal_histogram({{0, 4}, {1, 3}, {3, 1}}, 4));
    CHECK(tame::large_height_count(9, 4) == 2);
    CHECK_FALSE(tame::large_height_count(10, 4));
}

TEST_CASE("height inference") {
    tame::BlockData block;
    block.group_label = "D8";
    block.n = 3;
    block.characters = {{1, 4}, {2, 1}};
    CHECK(tame::infer_heights(block) == std::vector<int>{0, 1});
    block.v2_group_order = 3;
    CHECK(tame::infer_heights(block) == std::vector<int>{0, 1});
    block.v2_group_order = 4;  // offset 1 makes the degree-1 characters negative height
    CHECK_THROWS_AS(tame::infer_heights(block), std::domain_error);
    block.v2_group_order.reset();
    block.characters = {{1, 3}, {2, 2}};
    CHECK_THROWS_AS(tame::infer_heights(block), std::domain_error);
    block.n = 2;
    CHECK_THROWS_AS(tame::infer_heights(block), std::invalid_argument);
}
