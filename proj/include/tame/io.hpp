// include/tame/io.hpp - JSON documents for block datasets and decomposition matrices.
//
// Degrees are decimal strings so that no value passes through a fixed-width type.
// Serialization writes keys in a fixed order with two-space indentation and a trailing
// newline; a document already in that form round-trips byte for byte.

#pragma once

#include "tame/block.hpp"
#include "tame/catalog.hpp"
#include "tame/decomp_matrix.hpp"
#include "tame/integer.hpp"

#include <json.hpp>

#include <cstdint>
#include <istream>
#include <iterator>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace tame {

using Json = nlohmann::ordered_json;

/// A malformed document. `where` is "line L, column C" for syntax errors and a field
/// path such as "blocks[2].characters[0]" for content errors.
class DocumentError : public std::runtime_error {
  public:
    DocumentError(std::string where, const std::string& what)
        : std::runtime_error(where + ": " + what), where_(std::move(where)), detail_(what) {}

    const std::string& where() const { return where_; }
    const std::string& detail() const { return detail_; }

  private:
    std::string where_;
    std::string detail_;
};

struct BlockRecord {
    BlockData block;
    /// Class tags the source assigns to the block.
    std::optional<std::vector<std::string>> expected;
    std::optional<std::string> provenance;
    /// Brauer degrees printed by the source, in its order.
    std::optional<std::vector<BigInt>> brauer;

    friend bool operator==(const BlockRecord&, const BlockRecord&) = default;
};

struct Dataset {
    std::string name;
    std::vector<BlockRecord> blocks;

    friend bool operator==(const Dataset&, const Dataset&) = default;
};

namespace detail {

inline Json parse_json(std::string_view text) {
    try {
        return Json::parse(text.begin(), text.end());
    } catch (const Json::parse_error& e) {
        std::size_t line = 1;
        std::size_t column = 1;
        const auto limit = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
        for (std::size_t i = 0; i < limit; ++i) {
            if (text[i] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
        }
        throw DocumentError("line " + std::to_string(line) + ", column " + std::to_string(column), "syntax error");
    }
}

inline const Json& field(const Json& object, const std::string& path, const char* key) {
    if (!object.is_object()) throw DocumentError(path, "expected an object");
    auto it = object.find(key);
    if (it == object.end()) throw DocumentError(path + "." + key, "missing field");
    return *it;
}

inline std::string string_field(const Json& value, const std::string& path) {
    if (!value.is_string()) throw DocumentError(path, "expected a string");
    return value.get<std::string>();
}

inline std::int64_t integer_field(const Json& value, const std::string& path) {
    if (!value.is_number_integer()) throw DocumentError(path, "expected an integer");
    return value.get<std::int64_t>();
}

inline BigInt degree_field(const Json& value, const std::string& path) {
    if (!value.is_string()) throw DocumentError(path, "degrees are decimal strings");
    try {
        return parse_positive(value.get<std::string>());
    } catch (const std::invalid_argument& e) {
        throw DocumentError(path, e.what());
    }
}

inline std::vector<std::string> string_list(const Json& value, const std::string& path) {
    if (!value.is_array()) throw DocumentError(path, "expected an array of strings");
    std::vector<std::string> out;
    for (std::size_t i = 0; i < value.size(); ++i) out.push_back(string_field(value[i], path + "[" + std::to_string(i) + "]"));
    return out;
}

inline BlockRecord record_from_json(const Json& j, const std::string& path) {
    if (!j.is_object()) throw DocumentError(path, "expected an object");
    static const std::vector<std::string> known{"group",      "family",   "n",          "v2_order", "l",
                                                "characters", "expected", "provenance", "brauer"};
    for (const auto& [key, value] : j.items()) {
        if (std::find(known.begin(), known.end(), key) == known.end()) throw DocumentError(path + "." + key, "unknown field");
    }
    BlockRecord out;
    out.block.group_label = string_field(field(j, path, "group"), path + ".group");
    if (auto it = j.find("family"); it != j.end()) {
        try {
            out.block.family = parse_family(string_field(*it, path + ".family"));
        } catch (const std::invalid_argument& e) {
            throw DocumentError(path + ".family", e.what());
        }
    }
    const auto n = integer_field(field(j, path, "n"), path + ".n");
    if (n < 3 || n > 62) throw DocumentError(path + ".n", "defect exponent must lie in 3..62");
    out.block.n = static_cast<int>(n);
    if (auto it = j.find("v2_order"); it != j.end()) {
        const auto v = integer_field(*it, path + ".v2_order");
        if (v < n) throw DocumentError(path + ".v2_order", "v2 of the group order is below the defect exponent");
        out.block.v2_group_order = static_cast<int>(v);
    }
    if (auto it = j.find("l"); it != j.end()) {
        const auto l = integer_field(*it, path + ".l");
        if (l < 1 || l > 3) throw DocumentError(path + ".l", "a tame block has 1 to 3 Brauer characters");
        out.block.l = static_cast<int>(l);
    }
    const auto& characters = field(j, path, "characters");
    const auto cpath = path + ".characters";
    if (!characters.is_array() || characters.empty()) throw DocumentError(cpath, "expected a nonempty array");
    for (std::size_t i = 0; i < characters.size(); ++i) {
        const auto epath = cpath + "[" + std::to_string(i) + "]";
        const auto& entry = characters[i];
        if (!entry.is_array() || entry.size() != 2) throw DocumentError(epath, "expected [degree, multiplicity]");
        const auto multiplicity = integer_field(entry[1], epath + "[1]");
        if (multiplicity < 1) throw DocumentError(epath + "[1]", "multiplicity must be positive");
        out.block.characters.push_back({degree_field(entry[0], epath + "[0]"), static_cast<std::uint64_t>(multiplicity)});
    }
    if (auto it = j.find("expected"); it != j.end()) {
        auto tags = string_list(*it, path + ".expected");
        for (std::size_t i = 0; i < tags.size(); ++i) {
            const auto tpath = path + ".expected[" + std::to_string(i) + "]";
            if (!out.block.family) throw DocumentError(tpath, "expected tags need a family");
            try {
                find_class(*out.block.family, tags[i]);
            } catch (const std::invalid_argument& e) {
                throw DocumentError(tpath, e.what());
            }
        }
        out.expected = std::move(tags);
    }
    if (auto it = j.find("provenance"); it != j.end()) out.provenance = string_field(*it, path + ".provenance");
    if (auto it = j.find("brauer"); it != j.end()) {
        if (!it->is_array()) throw DocumentError(path + ".brauer", "expected an array of degree strings");
        std::vector<BigInt> degrees;
        for (std::size_t i = 0; i < it->size(); ++i) {
            degrees.push_back(degree_field((*it)[i], path + ".brauer[" + std::to_string(i) + "]"));
        }
        out.brauer = std::move(degrees);
    }
    return out;
}

}  // namespace detail

inline Json to_json(const BlockRecord& record) {
    Json j;
    j["group"] = record.block.group_label;
    if (record.block.family) j["family"] = std::string(to_string(*record.block.family));
    j["n"] = record.block.n;
    if (record.block.v2_group_order) j["v2_order"] = *record.block.v2_group_order;
    if (record.block.l) j["l"] = *record.block.l;
    Json characters = Json::array();
    for (const auto& ch : record.block.characters) characters.push_back(Json::array({ch.degree.str(), ch.multiplicity}));
    j["characters"] = std::move(characters);
    if (record.expected) j["expected"] = *record.expected;
    if (record.provenance) j["provenance"] = *record.provenance;
    if (record.brauer) {
        Json degrees = Json::array();
        for (const auto& b : *record.brauer) degrees.push_back(b.str());
        j["brauer"] = std::move(degrees);
    }
    return j;
}

inline Json to_json(const Dataset& dataset) {
    Json j;
    j["dataset"] = dataset.name;
    Json blocks = Json::array();
    for (const auto& record : dataset.blocks) blocks.push_back(to_json(record));
    j["blocks"] = std::move(blocks);
    return j;
}

/// A document holding either {"dataset": name, "blocks": [...]} or a single record.
inline Dataset load_dataset(std::string_view text) {
    const auto j = detail::parse_json(text);
    Dataset out;
    if (j.is_object() && j.contains("blocks")) {
        out.name = detail::string_field(detail::field(j, "$", "dataset"), "$.dataset");
        const auto& blocks = j["blocks"];
        if (!blocks.is_array()) throw DocumentError("$.blocks", "expected an array");
        for (std::size_t i = 0; i < blocks.size(); ++i) {
            out.blocks.push_back(detail::record_from_json(blocks[i], "blocks[" + std::to_string(i) + "]"));
        }
    } else {
        out.blocks.push_back(detail::record_from_json(j, "$"));
    }
    return out;
}

inline Dataset load_dataset(std::istream& in) {
    const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return load_dataset(text);
}

inline std::vector<BlockData> load_blockdata(std::string_view text) {
    std::vector<BlockData> out;
    for (auto& record : load_dataset(text).blocks) out.push_back(std::move(record.block));
    return out;
}

inline std::string serialize(const Dataset& dataset) { return to_json(dataset).dump(2) + "\n"; }

// Decomposition matrices: {"brauer": ["1", null, ...], "rows": [{"degree": "1", "coef": [1, 0], "mult": 2}, ...]}

inline Json to_json(const DecompMatrix& m) {
    Json j;
    Json brauer = Json::array();
    for (const auto& b : m.brauer) brauer.push_back(b ? Json(b->str()) : Json(nullptr));
    j["brauer"] = std::move(brauer);
    Json rows = Json::array();
    for (const auto& row : m.rows) {
        Json r;
        r["degree"] = row.degree.str();
        r["coef"] = row.coefficients;
        r["mult"] = row.multiplicity;
        rows.push_back(std::move(r));
    }
    j["rows"] = std::move(rows);
    return j;
}

inline DecompMatrix matrix_from_json(const Json& j, const std::string& path = "$") {
    DecompMatrix out;
    const auto& brauer = detail::field(j, path, "brauer");
    if (!brauer.is_array()) throw DocumentError(path + ".brauer", "expected an array");
    for (std::size_t i = 0; i < brauer.size(); ++i) {
        if (brauer[i].is_null()) {
            out.brauer.emplace_back();
        } else {
            out.brauer.emplace_back(detail::degree_field(brauer[i], path + ".brauer[" + std::to_string(i) + "]"));
        }
    }
    const auto& rows = detail::field(j, path, "rows");
    if (!rows.is_array()) throw DocumentError(path + ".rows", "expected an array");
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto rpath = path + ".rows[" + std::to_string(i) + "]";
        DecompRow row;
        row.degree = detail::degree_field(detail::field(rows[i], rpath, "degree"), rpath + ".degree");
        const auto& coef = detail::field(rows[i], rpath, "coef");
        if (!coef.is_array()) throw DocumentError(rpath + ".coef", "expected an array of integers");
        for (std::size_t c = 0; c < coef.size(); ++c) {
            const auto value = detail::integer_field(coef[c], rpath + ".coef[" + std::to_string(c) + "]");
            if (value < 0 || value > 1'000'000) throw DocumentError(rpath + ".coef[" + std::to_string(c) + "]", "out of range");
            row.coefficients.push_back(static_cast<int>(value));
        }
        if (auto it = rows[i].find("mult"); it != rows[i].end()) {
            const auto mult = detail::integer_field(*it, rpath + ".mult");
            if (mult < 1) throw DocumentError(rpath + ".mult", "multiplicity must be positive");
            row.multiplicity = static_cast<std::uint64_t>(mult);
        }
        out.rows.push_back(std::move(row));
    }
    try {
        validate(out);
    } catch (const std::invalid_argument& e) {
        throw DocumentError(path, e.what());
    }
    return out;
}

inline DecompMatrix load_matrix(std::string_view text) { return matrix_from_json(detail::parse_json(text)); }

inline std::string serialize(const DecompMatrix& m) { return to_json(m).dump(2) + "\n"; }

}  // namespace tame
