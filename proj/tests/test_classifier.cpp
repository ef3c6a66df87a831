#include "tame/classifier.hpp"
#include "tame/datasets.hpp"
#include "tame/families.hpp"

#include <catch_amalgamated.hpp>

#include <set>

using tame::BigInt;
using tame::Family;

namespace {

tame::BlockData degrees_block(int n, std::vector<std::pair<int, std::uint64_t>> degrees) {
    tame::BlockData block;
    block.group_label = "test";
    block.n = n;
    for (auto [d, m] : degrees) block.characters.push_back({BigInt(d), m});
    return block;
}

}  // namespace

TEST_CASE("PSL2 and PGL2 blocks classify uniquely") {
    for (std::int64_t q : {7, 9, 17, 23, 25, 31, 41, 47, 49}) {
        for (auto family : {tame::GroupFamily::psl2, tame::GroupFamily::pgl2}) {
            const auto fb = tame::family_block(family, q);
            const auto solutions = tame::match_templates(fb.block);
            REQUIRE(solutions.size() == 1);
            CHECK(solutions[0].cls().tag == fb.solution->cls().tag);
            CHECK(solutions[0].brauer_degrees == fb.solution->brauer_degrees);
        }
    }
}

TEST_CASE("PSL2(q) is 3A or 3K by q mod 4") {
    CHECK(tame::family_block("psl2", 9).solution->cls().tag == "3A");
    CHECK(tame::family_block("psl2", 7).solution->cls().tag == "3K");
    CHECK(tame::family_block("pgl2", 9).solution->cls().tag == "2A");
    CHECK(tame::family_block("pgl2", 7).solution->cls().tag == "2B");
    CHECK_THROWS_AS(tame::family_block("psl2", 15), std::invalid_argument);
    CHECK_THROWS_AS(tame::family_block("psl2", 8), std::invalid_argument);
    CHECK_THROWS_AS(tame::family_block("psl3", 7), std::invalid_argument);
}

TEST_CASE("GU2 and GL2 blocks need l to be unique") {
    for (std::int64_t q : {5, 9, 13, 17, 29}) {
        const auto fb = tame::family_block("gu2", q);
        REQUIRE(fb.solution);
        auto with_l = tame::match_templates(fb.block);
        REQUIRE(with_l.size() == 1);
        CHECK(with_l[0].cls().tag == "2A1");
        auto without = fb.block;
        without.l.reset();
        CHECK(tame::matched_tags(tame::match_templates(without)) == std::set<std::string>{"2A1", "3C2,2"});
    }
    for (std::int64_t q : {7, 11, 19, 23}) {
        const auto fb = tame::family_block("gl2", q);
        REQUIRE(fb.solution);
        auto with_l = tame::match_templates(fb.block);
        REQUIRE(with_l.size() == 1);
        CHECK(with_l[0].cls().tag == "2B2");
    }
    CHECK_FALSE(tame::family_block("gu2", 7).solution);
    CHECK_FALSE(tame::family_block("gl2", 5).solution);
}

TEST_CASE("a block matches the template it was synthesized from") {
    const std::vector<std::vector<std::int64_t>> brauer_sets{{1}, {3}, {1, 4}, {2, 7}, {1, 3, 5}, {4, 6, 9}, {1, 1, 2}};
    for (const auto& entry : tame::catalog()) {
        for (int n = entry.cls.min_n; n <= 6; ++n) {
            const auto tmpl = tame::instantiate(entry, n);
            for (const auto& phi : brauer_sets) {
                if (static_cast<int>(phi.size()) != tmpl.columns) continue;
                auto block = tame::synthesize(tmpl, phi);
                bool odd_zero = true;
                for (const auto& g : block.groups) {
                    // Heights must come out of the degrees for the check to be meaningful.
                    if (g.height == 0 && tame::v2(g.degree) != 0) odd_zero = false;
                    if (g.height > 0 && tame::v2(g.degree) != g.height) odd_zero = false;
                }
                if (!odd_zero) continue;
                block.l = tmpl.columns;
                const auto solutions = tame::match_template(entry, block);
                bool found = false;
                for (const auto& s : solutions) {
                    auto sorted = s.brauer_degrees;
                    std::sort(sorted.begin(), sorted.end());
                    auto want = phi;
                    std::sort(want.begin(), want.end());
                    found = found || sorted == want || tame::synthesize(tmpl, s.brauer_degrees).groups == block.groups;
                }
                CHECK(found);
            }
        }
    }
}

TEST_CASE("synthesize multiplies out the template") {
    const auto tmpl = tame::decomp_template(Family::dihedral, "3A", 4);
    const auto block = tame::synthesize<std::int64_t>(tmpl, {1, 2, 2});
    // Rows: 1, 3, 3, 5 at height zero; 6 three times at height one.
    REQUIRE(block.groups.size() == 4);
    CHECK(block.groups[0].degree == 1);
    CHECK(block.groups[1].degree == 3);
    CHECK(block.groups[1].count == 2);
    CHECK(block.groups[3].degree == 6);
    CHECK(block.groups[3].height == 1);
    CHECK(block.groups[3].count == 3);
    CHECK_THROWS_AS(tame::synthesize<std::int64_t>(tmpl, {1, 2}), std::invalid_argument);
}

TEST_CASE("dihedral shortcut agrees with the template search") {
    for (const auto& entry : tame::catalog()) {
        if (entry.cls.family != Family::dihedral) continue;
        const auto tmpl = tame::instantiate(entry, 4);
        for (std::int64_t a = 1; a <= 9; a += 2) {
            for (std::int64_t b = 2; b <= 10; b += 2) {
                for (std::int64_t c = b; c <= 10; c += 2) {
                    std::vector<std::int64_t> phi{a, b, c};
                    phi.resize(static_cast<std::size_t>(tmpl.columns));
                    auto block = tame::synthesize(tmpl, phi);
                    if (block.count_at(0) != 4) continue;
                    std::set<std::string> search;
                    for (const auto& s : tame::match_templates(block, Family::dihedral)) search.insert(s.cls().tag);
                    if (search.size() != 1) continue;
                    std::string shortcut;
                    try {
                        shortcut = tame::classify_dihedral_shortcut(block);
                    } catch (const std::domain_error&) {
                        continue;
                    }
                    CHECK(shortcut == *search.begin());
                }
            }
        }
    }
}

TEST_CASE("shortcut on the bundled dihedral blocks") {
    for (const auto& record : tame::bundled_dataset("sporadic-dihedral").blocks) {
        const auto block = tame::heighted(record.block);
        const auto tags = tame::matched_tags(tame::match_templates(block, Family::dihedral));
        REQUIRE(tags.size() == 1);
        std::string shortcut;
        try {
            shortcut = tame::classify_dihedral_shortcut(block);
        } catch (const std::domain_error&) {
            continue;
        }
        CHECK(shortcut == *tags.begin());
    }
}

TEST_CASE("degree-only ambiguity for small Brauer degrees") {
    // Pairs of distinct realizable semidihedral classes that fit one degree list.
    std::set<std::set<std::string>> ambiguous;
    for (int n = 4; n <= 5; ++n) {
        for (const auto& entry : tame::catalog()) {
            if (entry.cls.family != Family::semidihedral || entry.cls.eliminated_at(n)) continue;
            const auto tmpl = tame::instantiate(entry, n);
            std::vector<std::int64_t> phi(static_cast<std::size_t>(tmpl.columns), 1);
            auto step = [&](auto&& self, std::size_t i) -> void {
                if (i == phi.size()) {
                    auto block = tame::synthesize(tmpl, phi);
                    if (!tame::is_legal_histogram(block.histogram(), n, Family::semidihedral)) return;
                    block.l = tmpl.columns;
                    std::set<std::string> tags;
                    for (const auto& s : tame::match_templates(block, Family::semidihedral)) {
                        if (!s.cls().eliminated_at(n)) tags.insert(s.cls().tag);
                    }
                    if (tags.size() > 1) ambiguous.insert(tags);
                    return;
                }
                for (std::int64_t v = 1; v <= 12; ++v) {
                    phi[i] = v;
                    self(self, i + 1);
                }
            };
            step(step, 0);
        }
    }
    for (const auto& tags : ambiguous) {
        CHECK((tags == std::set<std::string>{"3A1", "3C2,2"} || tags == std::set<std::string>{"3B2", "3C2,1"}));
    }
}

TEST_CASE("matched_tags expands matrix-identical partners") {
    tame::TemplateSolution<BigInt> s;
    s.entry = &tame::find_class(Family::semidihedral, "3B1");
    CHECK(tame::matched_tags(std::vector{s}) == std::set<std::string>{"3B1", "3D"});
}

TEST_CASE("blocks with illegal histograms are rejected") {
    CHECK_THROWS_AS(tame::match_templates(degrees_block(3, {{1, 3}, {2, 2}})), std::domain_error);
    auto d8 = degrees_block(3, {{1, 4}, {2, 1}});
    const auto tags = tame::matched_tags(tame::match_templates(d8));
    CHECK(tags.count("1A"));
}

namespace {

const tame::BlockRecord& record_named(const std::string& dataset, const std::string& group) {
    for (const auto& record : tame::bundled_dataset(dataset).blocks) {
        if (record.block.group_label == group) return record;
    }
    throw std::invalid_argument("no record " + group);
}

std::map<BigInt, int> heights_by_degree(const tame::BlockData& block) {
    const auto heights = tame::infer_heights(block);
    std::map<BigInt, int> out;
    for (std::size_t i = 0; i < heights.size(); ++i) out[block.characters[i].degree] = heights[i];
    return out;
}

}  // namespace

TEST_CASE("heights of the He and Fi23 blocks") {
    const auto he = heights_by_degree(record_named("sporadic-dihedral", "He").block);
    CHECK(he == std::map<BigInt, int>{{1920, 0}, {4352, 1}, {6272, 0}, {6528, 0}, {10880, 0}});
    const auto fi23 = heights_by_degree(record_named("sporadic-dihedral", "Fi23").block);
    CHECK(fi23 == std::map<BigInt, int>{{BigInt(97976320), 1}, {BigInt(166559744), 0}, {BigInt(264536064), 0}});
}

TEST_CASE("printed Brauer degrees are recovered") {
    const auto he = tame::match_templates(record_named("sporadic-dihedral", "He").block);
    REQUIRE(he.size() == 1);
    CHECK(he[0].cls().tag == "3B");
    CHECK(he[0].brauer_degrees == std::vector<BigInt>{1920, 4352, 4608});

    const auto hn = tame::match_templates(record_named("sporadic-semidihedral", "HN").block);
    REQUIRE(hn.size() == 1);
    CHECK(hn[0].cls().display_tag() == "3B1/3D");
    CHECK(hn[0].brauer_degrees == std::vector<BigInt>{214016, 1361920, 2985984});

    const auto& monster = record_named("sporadic-semidihedral", "M");
    const auto m = tame::match_templates(monster.block);
    CHECK(tame::matched_tags(m) == std::set<std::string>{"3B2", "3C2,1"});
    // Each solution uses three of the four printed degrees.
    for (const auto& s : m) {
        for (const auto& phi : s.brauer_degrees) {
            CHECK(std::find(monster.brauer->begin(), monster.brauer->end(), phi) != monster.brauer->end());
        }
    }

    auto d8 = degrees_block(3, {{1, 4}, {2, 1}});
    d8.family = Family::dihedral;
    const auto one_a = tame::match_templates(d8);
    REQUIRE(one_a.size() == 1);
    CHECK(one_a[0].cls().tag == "1A");
    CHECK(one_a[0].brauer_degrees == std::vector<BigInt>{1});
}

TEST_CASE("shortcut examples") {
    CHECK(tame::classify_dihedral_shortcut(tame::heighted(record_named("sporadic-dihedral", "O'N").block)) == "3K");
    CHECK(tame::classify_dihedral_shortcut(tame::heighted(record_named("sporadic-dihedral", "Fi24'").block)) == "3A");
    CHECK(tame::classify_dihedral_shortcut(tame::heighted(record_named("sporadic-dihedral", "Fi23").block)) == "2B");
    CHECK(tame::classify_dihedral_shortcut(tame::heighted(degrees_block(3, {{1, 4}, {2, 1}}))) == "1A");
}

TEST_CASE("shortcut agrees on family blocks") {
    for (std::int64_t q = 3; q <= 1000; q += 2) {
        if (!tame::is_prime_power(q)) continue;
        for (auto family : {tame::GroupFamily::psl2, tame::GroupFamily::pgl2}) {
            tame::FamilyBlock fb;
            try {
                fb = tame::family_block(family, q);
            } catch (const std::invalid_argument&) {
                continue;  // Klein four defect groups
            }
            CHECK(tame::classify_dihedral_shortcut(tame::heighted(fb.block)) == fb.solution->cls().tag);
        }
    }
}

TEST_CASE("odd scaling preserves the matched classes") {
    for (const auto* dataset : tame::bundled_datasets()) {
        for (const auto& record : dataset->blocks) {
            const auto before = tame::matched_tags(tame::match_templates(record.block));
            for (int odd : {3, 5, 15}) {
                auto scaled = record.block;
                for (auto& ch : scaled.characters) ch.degree *= odd;
                CHECK(tame::matched_tags(tame::match_templates(scaled)) == before);
            }
        }
    }
}
