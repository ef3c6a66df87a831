#include "tame/datasets.hpp"
#include "tame/io.hpp"

#include <catch_amalgamated.hpp>

#include <sstream>

using tame::BigInt;

namespace {

std::string where_of(std::string_view text) {
    try {
        tame::load_dataset(text);
    } catch (const tame::DocumentError& e) {
        return e.where();
    }
    return "no error";
}

}  // namespace

TEST_CASE("a single record loads") {
    const auto dataset = tame::load_dataset(R"j({"group": "PSL2(7)", "family": "dihedral", "n": 3,
        "characters": [["1", 1], ["3", 2], ["7", 1], ["6", 1]], "expected": ["3K"]})j");
    REQUIRE(dataset.blocks.size() == 1);
    const auto& block = dataset.blocks[0].block;
    CHECK(block.group_label == "PSL2(7)");
    CHECK(block.family == tame::Family::dihedral);
    CHECK(block.k() == 5);
    CHECK(block.characters[1] == tame::Character{BigInt(3), 2});
    CHECK(dataset.blocks[0].expected == std::vector<std::string>{"3K"});
}

TEST_CASE("degrees beyond 64 bits survive") {
    const auto blocks = tame::load_blockdata(R"j({"group": "big", "n": 3,
        "characters": [["258823477531055064045234375", 4], ["2", 1]]})j");
    CHECK(blocks[0].characters[0].degree == BigInt("258823477531055064045234375"));
}

TEST_CASE("serialization round trips byte for byte") {
    for (const auto* dataset : tame::bundled_datasets()) {
        const auto text = tame::serialize(*dataset);
        CHECK(tame::load_dataset(text) == *dataset);
        CHECK(tame::serialize(tame::load_dataset(text)) == text);
        std::istringstream stream(text);
        CHECK(tame::load_dataset(stream) == *dataset);
    }
}

TEST_CASE("bundled datasets") {
    CHECK(tame::bundled_dataset("sporadic-dihedral").blocks.size() == 8);
    CHECK(tame::bundled_dataset("sporadic-semidihedral").blocks.size() == 3);
    CHECK_THROWS_AS(tame::bundled_dataset("sporadic-quaternion"), std::invalid_argument);
    // Pinned so that any change to the bundled data is deliberate.
    CHECK(tame::fnv1a(tame::serialize(tame::bundled_dataset("sporadic-dihedral"))) == 0xc834c6873307c6aeull);
    CHECK(tame::fnv1a(tame::serialize(tame::bundled_dataset("sporadic-semidihedral"))) == 0x7ea3cc4c97e5035eull);
    CHECK(tame::fnv1a("") == 0xcbf29ce484222325ull);
    CHECK(tame::fnv1a("a") == 0xaf63dc4c8601ec8cull);
}

TEST_CASE("diagnostics point at the offending field") {
    CHECK(where_of("{\"group\": \"x\",\n  \"n\": }") == "line 2, column 8");
    CHECK(where_of(R"j({"group": "x", "n": 3})j") == "$.characters");
    CHECK(where_of(R"j({"group": "x", "n": 2, "characters": [["1", 1]]})j") == "$.n");
    CHECK(where_of(R"j({"group": "x", "n": 3, "colour": 1, "characters": [["1", 1]]})j") == "$.colour");
    CHECK(where_of(R"j({"group": "x", "n": 3, "characters": [["1", 1], ["-2", 1]]})j") == "$.characters[1][0]");
    CHECK(where_of(R"j({"group": "x", "n": 3, "characters": [["1", 0]]})j") == "$.characters[0][1]");
    CHECK(where_of(R"j({"group": "x", "n": 3, "l": 4, "characters": [["1", 1]]})j") == "$.l");
    CHECK(where_of(R"j({"group": "x", "n": 3, "characters": [["1", 1]], "expected": ["3A"]})j") == "$.expected[0]");
    CHECK(where_of(R"j({"group": "x", "family": "dihedral", "n": 3, "characters": [["1", 1]], "expected": ["3Z"]})j") ==
          "$.expected[0]");
    CHECK(where_of(R"j({"dataset": "d", "blocks": [{"group": "x", "n": 3, "characters": [["1", 1]]}, {"n": 3}]})j") ==
          "blocks[1].group");
}

TEST_CASE("matrix documents") {
    tame::DecompMatrix m;
    m.brauer = {BigInt(1), std::nullopt};
    m.rows = {{BigInt(1), {1, 0}, 4}, {BigInt(3), {1, 1}, 4}, {BigInt(2), {0, 1}, 6}, {BigInt(4), {2, 1}, 2}};
    const auto text = tame::serialize(m);
    const auto back = tame::load_matrix(text);
    CHECK(back == m);
    CHECK(tame::serialize(back) == text);
    CHECK_THROWS(tame::load_matrix(R"j({"brauer": ["1"], "rows": [{"degree": "1", "coef": [1, 0], "mult": 1}]})j"));
    CHECK_THROWS(tame::load_matrix(R"j({"brauer": ["1"], "rows": []})j"));
}
