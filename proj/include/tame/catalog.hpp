// include/tame/catalog.hpp - decomposition-matrix templates of every Morita class of
// tame 2-blocks, with the realizability verdicts for each defect exponent.

#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace tame {

enum class Family { dihedral, semidihedral, quaternion };

inline constexpr Family all_families[] = {Family::dihedral, Family::semidihedral, Family::quaternion};

inline std::string_view to_string(Family family) {
    switch (family) {
        case Family::dihedral: return "dihedral";
        case Family::semidihedral: return "semidihedral";
        case Family::quaternion: return "quaternion";
    }
    return "?";
}

inline Family parse_family(std::string_view text) {
    if (text == "dihedral" || text == "D") return Family::dihedral;
    if (text == "semidihedral" || text == "SD") return Family::semidihedral;
    if (text == "quaternion" || text == "Q") return Family::quaternion;
    throw std::invalid_argument("unknown family '" + std::string(text) + "'");
}

/// Largest number of large-height characters a block of the family can have.
inline int max_large_height(Family family) {
    switch (family) {
        case Family::dihedral: return 0;
        case Family::semidihedral: return 1;
        case Family::quaternion: return 2;
    }
    return 0;
}

/// Smallest defect exponent at which the family's templates make sense.
inline int family_min_n(Family family) {
    return family == Family::semidihedral ? 4 : 3;
}

enum class HeightTag { zero, one, large };

inline std::string_view to_string(HeightTag tag) {
    switch (tag) {
        case HeightTag::zero: return "zero";
        case HeightTag::one: return "one";
        case HeightTag::large: return "large";
    }
    return "?";
}

/// How a class relates to another class that ordinary degrees cannot tell apart.
enum class Pairing {
    none,
    matrix_identical,  // same decomposition matrix, different Ext-quiver; one template entry
    degree_ambiguous,  // distinct matrices that can fit the same degree list
};

struct MoritaClass {
    Family family = Family::dihedral;
    std::string tag;
    int min_n = 3;
    /// Blocks are impossible for every n >= eliminated_from.
    std::optional<int> eliminated_from;
    Pairing pairing = Pairing::none;
    std::string partner;

    bool eliminated_at(int n) const { return eliminated_from && n >= *eliminated_from; }

    /// Tag plus its matrix-identical partner, e.g. "3B1/3D".
    std::string display_tag() const {
        return pairing == Pairing::matrix_identical ? tag + "/" + partner : tag;
    }

    /// Every class name this entry stands for.
    std::vector<std::string> tags() const {
        if (pairing == Pairing::matrix_identical) {
            return {tag, partner};
        }
        return {tag};
    }
};

struct TemplateRowSpec {
    std::vector<int> coefficients;
    HeightTag height = HeightTag::zero;
};

/// A catalog entry: the matrix exactly as printed, with height tags.
struct TemplateEntry {
    MoritaClass cls;
    int columns = 1;
    std::vector<TemplateRowSpec> rows;
};

struct TemplateRow {
    std::vector<int> coefficients;
    HeightTag height_tag = HeightTag::zero;
    int height = 0;
    std::uint64_t multiplicity = 1;
};

/// A template instantiated at defect exponent n.
struct DecompTemplate {
    const TemplateEntry* entry = nullptr;
    int n = 0;
    int columns = 0;
    std::vector<TemplateRow> rows;

    const MoritaClass& cls() const { return entry->cls; }

    std::uint64_t k() const {
        std::uint64_t total = 0;
        for (const auto& row : rows) {
            total += row.multiplicity;
        }
        return total;
    }
};

struct BlockCounts {
    std::uint64_t k = 0;
    int l = 0;
    std::map<int, std::uint64_t> height_histogram;

    friend bool operator==(const BlockCounts&, const BlockCounts&) = default;
};

/// 2^(n-2) - 1, the number of height-one characters.
inline std::uint64_t height_one_count(int n) {
    if (n < 2 || n > 62) {
        throw std::out_of_range("defect exponent out of supported range 2..62");
    }
    return (std::uint64_t{1} << (n - 2)) - 1;
}

namespace detail {

inline TemplateEntry make_entry(Family family, std::string tag, std::optional<int> eliminated_from,
                                std::vector<std::vector<int>> rows,
                                std::vector<HeightTag> tags,
                                Pairing pairing = Pairing::none, std::string partner = {}) {
    TemplateEntry entry;
    entry.cls.family = family;
    entry.cls.tag = std::move(tag);
    entry.cls.min_n = family_min_n(family);
    entry.cls.eliminated_from = eliminated_from;
    entry.cls.pairing = pairing;
    entry.cls.partner = std::move(partner);
    entry.columns = static_cast<int>(rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        entry.rows.push_back({std::move(rows[i]), tags[i]});
    }
    return entry;
}

inline std::vector<TemplateEntry> build_catalog() {
    using enum HeightTag;
    const auto D = Family::dihedral;
    const auto Q = Family::quaternion;
    const auto SD = Family::semidihedral;
    const std::vector<HeightTag> five{zero, zero, zero, zero, one};
    // Six rows: the fifth row is large height, the last row repeats.
    const std::vector<HeightTag> six{zero, zero, zero, zero, large, one};
    const std::vector<HeightTag> seven{zero, zero, zero, zero, large, large, one};

    std::vector<TemplateEntry> out;

    // Dihedral, in the printed order 1A, 2A, 2B, 3A, 3K, 3B.
    out.push_back(make_entry(D, "1A", {}, {{1}, {1}, {1}, {1}, {2}}, five));
    out.push_back(make_entry(D, "2A", {}, {{1, 0}, {1, 0}, {1, 1}, {1, 1}, {2, 1}}, five));
    out.push_back(make_entry(D, "2B", {}, {{1, 0}, {1, 0}, {1, 1}, {1, 1}, {0, 1}}, five));
    out.push_back(make_entry(D, "3A", {}, {{1, 0, 0}, {1, 1, 0}, {1, 0, 1}, {1, 1, 1}, {2, 1, 1}}, five));
    out.push_back(make_entry(D, "3K", {}, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}, {0, 1, 1}}, five));
    out.push_back(make_entry(D, "3B", 4, {{1, 0, 0}, {1, 1, 0}, {1, 0, 1}, {1, 1, 1}, {0, 1, 0}}, five));

    // Generalised quaternion, l = 3: 3A, 3K, 3B.
    out.push_back(make_entry(Q, "3A", {},
                             {{1, 0, 0}, {1, 1, 0}, {1, 0, 1}, {1, 1, 1}, {0, 1, 0}, {0, 0, 1}, {2, 1, 1}}, seven));
    out.push_back(make_entry(Q, "3K", {},
                             {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}, {1, 1, 0}, {1, 0, 1}, {0, 1, 1}}, seven));
    out.push_back(make_entry(Q, "3B", 5,
                             {{1, 0, 0}, {1, 1, 0}, {1, 0, 1}, {1, 1, 1}, {2, 1, 1}, {0, 0, 1}, {0, 1, 0}}, seven));
    // Generalised quaternion, l <= 2: 1A, 2A, 2B.
    out.push_back(make_entry(Q, "1A", {}, {{1}, {1}, {1}, {1}, {2}}, five));
    out.push_back(make_entry(Q, "2A", {}, {{1, 0}, {1, 0}, {1, 1}, {1, 1}, {0, 1}, {2, 1}}, six));
    out.push_back(make_entry(Q, "2B", {}, {{1, 0}, {1, 0}, {1, 1}, {1, 1}, {2, 1}, {0, 1}}, six));

    // Semidihedral, l = 3: (3B1)/(3D), 3A1, 3C2,2, 3B2, 3C2,1, then the eliminated 3H.
    out.push_back(make_entry(SD, "3B1", {},
                             {{1, 0, 0}, {1, 1, 0}, {1, 0, 1}, {1, 1, 1}, {0, 0, 1}, {0, 1, 0}}, six,
                             Pairing::matrix_identical, "3D"));
    out.push_back(make_entry(SD, "3A1", {},
                             {{1, 0, 0}, {1, 1, 0}, {1, 0, 1}, {1, 1, 1}, {0, 0, 1}, {2, 1, 1}}, six,
                             Pairing::degree_ambiguous, "3C2,2"));
    out.push_back(make_entry(SD, "3C2,2", {},
                             {{1, 0, 0}, {0, 1, 0}, {1, 0, 1}, {0, 1, 1}, {0, 0, 1}, {1, 1, 1}}, six,
                             Pairing::degree_ambiguous, "3A1"));
    out.push_back(make_entry(SD, "3B2", 5,
                             {{1, 0, 0}, {1, 1, 0}, {1, 0, 1}, {1, 1, 1}, {2, 1, 1}, {0, 1, 0}}, six,
                             Pairing::degree_ambiguous, "3C2,1"));
    out.push_back(make_entry(SD, "3C2,1", 5,
                             {{1, 0, 0}, {0, 1, 0}, {1, 0, 1}, {0, 1, 1}, {1, 1, 1}, {0, 0, 1}}, six,
                             Pairing::degree_ambiguous, "3B2"));
    out.push_back(make_entry(SD, "3H", 4,
                             {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}, {0, 1, 1}, {1, 1, 0}}, six));
    // Semidihedral, l <= 2: 1A, 2A1, 2B2, 2A2, 2B1, then the eliminated 2B4.
    out.push_back(make_entry(SD, "1A", {}, {{1}, {1}, {1}, {1}, {2}}, five));
    out.push_back(make_entry(SD, "2A1", {}, {{1, 0}, {1, 0}, {1, 1}, {1, 1}, {0, 1}, {2, 1}}, six));
    out.push_back(make_entry(SD, "2B2", {}, {{1, 0}, {1, 0}, {1, 1}, {1, 1}, {2, 1}, {0, 1}}, six));
    out.push_back(make_entry(SD, "2A2", {}, {{1, 0}, {1, 0}, {1, 1}, {1, 1}, {2, 1}}, five));
    out.push_back(make_entry(SD, "2B1", 5, {{1, 0}, {1, 0}, {1, 1}, {1, 1}, {0, 1}}, five));
    out.push_back(make_entry(SD, "2B4", 4, {{1, 0}, {1, 0}, {0, 1}, {0, 1}, {1, 1}}, five));
    return out;
}

}  // namespace detail

/// The immutable catalog, built once.
inline std::span<const TemplateEntry> catalog() {
    static const std::vector<TemplateEntry> entries = detail::build_catalog();
    return entries;
}

/// Looks a class up by tag; matrix-identical partners ("3D") resolve to the shared entry.
inline const TemplateEntry& find_class(Family family, std::string_view tag) {
    for (const auto& entry : catalog()) {
        if (entry.cls.family != family) {
            continue;
        }
        if (entry.cls.tag == tag ||
            (entry.cls.pairing == Pairing::matrix_identical && entry.cls.partner == tag) ||
            entry.cls.display_tag() == tag) {
            return entry;
        }
    }
    throw std::invalid_argument("unknown class '" + std::string(tag) + "' in family " +
                                std::string(to_string(family)));
}

inline DecompTemplate instantiate(const TemplateEntry& entry, int n) {
    if (n < entry.cls.min_n) {
        throw std::invalid_argument("class " + entry.cls.tag + " needs n >= " + std::to_string(entry.cls.min_n));
    }
    DecompTemplate out;
    out.entry = &entry;
    out.n = n;
    out.columns = entry.columns;
    for (const auto& spec : entry.rows) {
        TemplateRow row;
        row.coefficients = spec.coefficients;
        row.height_tag = spec.height;
        switch (spec.height) {
            case HeightTag::zero:
                row.height = 0;
                break;
            case HeightTag::one:
                row.height = 1;
                row.multiplicity = height_one_count(n);
                break;
            case HeightTag::large:
                row.height = n - 2;
                break;
        }
        out.rows.push_back(std::move(row));
    }
    return out;
}

inline DecompTemplate decomp_template(Family family, std::string_view tag, int n) {
    return instantiate(find_class(family, tag), n);
}

inline BlockCounts counts(const TemplateEntry& entry, int n) {
    const auto tmpl = instantiate(entry, n);
    BlockCounts out;
    out.l = tmpl.columns;
    for (const auto& row : tmpl.rows) {
        out.k += row.multiplicity;
        out.height_histogram[row.height] += row.multiplicity;
    }
    return out;
}

inline BlockCounts counts(Family family, std::string_view tag, int n) {
    return counts(find_class(family, tag), n);
}

/// False exactly on the (class, n) pairs that cannot occur as blocks of finite groups.
inline bool is_realizable(const TemplateEntry& entry, int n) {
    if (n < entry.cls.min_n) {
        throw std::invalid_argument("class " + entry.cls.tag + " needs n >= " + std::to_string(entry.cls.min_n));
    }
    return !entry.cls.eliminated_at(n);
}

inline bool is_realizable(Family family, std::string_view tag, int n) {
    return is_realizable(find_class(family, tag), n);
}

}  // namespace tame
