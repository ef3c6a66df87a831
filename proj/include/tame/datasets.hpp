// include/tame/datasets.hpp - bundled blocks of sporadic groups with their published
// classes and Brauer degrees.

#pragma once

#include "tame/io.hpp"

#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace tame {

namespace detail {

inline BlockRecord sporadic(std::string group, Family family, int n,
                            std::initializer_list<std::pair<const char*, std::uint64_t>> characters,
                            std::vector<std::string> expected, std::initializer_list<const char*> brauer,
                            std::optional<std::string> provenance = std::nullopt) {
    BlockRecord record;
    record.block.group_label = std::move(group);
    record.block.family = family;
    record.block.n = n;
    for (const auto& [degree, count] : characters) record.block.characters.push_back({parse_positive(degree), count});
    record.expected = std::move(expected);
    std::vector<BigInt> degrees;
    for (const auto* b : brauer) degrees.push_back(parse_positive(b));
    record.brauer = std::move(degrees);
    record.provenance = std::move(provenance);
    return record;
}

}  // namespace detail

inline const Dataset& sporadic_dihedral() {
    static const Dataset dataset = [] {
        using detail::sporadic;
        const auto D = Family::dihedral;
        return Dataset{
            "sporadic-dihedral",
            {
                sporadic("Fi23", D, 3, {{"97976320", 1}, {"166559744", 2}, {"264536064", 2}}, {"2B"},
                         {"97976320", "166559744"}),
                sporadic("B", D, 3,
                         {{"2642676197359616", 1}, {"9211433539600384", 2}, {"11854109736960000", 2}}, {"2B"},
                         {"2642676197359616", "9211433539600384"}),
                sporadic("Fi24'", D, 3,
                         {{"38641860608", 1},
                          {"77108871168", 1},
                          {"145650089984", 1},
                          {"184117100544", 1},
                          {"222758961152", 1}},
                         {"3A"}, {"38467010560", "38641860608", "107008229376"}),
                sporadic("O'N", D, 3, {{"10944", 1}, {"13376", 2}, {"26752", 1}, {"37696", 1}}, {"3K"},
                         {"10944", "13376", "13376"}),
                sporadic("He", D, 3, {{"1920", 1}, {"4352", 1}, {"6272", 1}, {"6528", 1}, {"10880", 1}}, {"3B"},
                         {"1920", "4352", "4608"}),
                sporadic("Suz", D, 3,
                         {{"66560", 1}, {"79872", 1}, {"146432", 1}, {"168960", 1}, {"248832", 1}}, {"3B"},
                         {"66560", "79872", "102400"}),
                sporadic("Co1", D, 3,
                         {{"40370176", 1}, {"150732800", 1}, {"191102976", 1}, {"464257024", 1}, {"504627200", 1}},
                         {"3B"}, {"40370176", "150732800", "313524224"}),
                sporadic("3.Fi24'", D, 3, {{"80256172032", 2}, {"135605256192", 2}, {"215861428224", 1}}, {"2A"},
                         {"55349084160", "80256172032"}),
            }};
    }();
    return dataset;
}

inline const Dataset& sporadic_semidihedral() {
    static const Dataset dataset = [] {
        using detail::sporadic;
        const auto SD = Family::semidihedral;
        return Dataset{
            "sporadic-semidihedral",
            {
                sporadic("M11", SD, 4,
                         {{"1", 1}, {"10", 3}, {"11", 1}, {"44", 1}, {"45", 1}, {"55", 1}}, {"3B1"},
                         {"1", "10", "44"}, "external calculation"),
                sporadic("HN", SD, 4,
                         {{"214016", 1},
                          {"1361920", 3},
                          {"1575936", 1},
                          {"2985984", 1},
                          {"3200000", 1},
                          {"4561920", 1}},
                         {"3B1", "3D"}, {"214016", "1361920", "2985984"}),
                sporadic("M", SD, 4,
                         {{"5514132424881463208443904", 3},
                          {"9416031858681585751556096", 1},
                          {"14930164283563048960000000", 1},
                          {"124058385593021471188320256", 1},
                          {"129572518017902934396764160", 1},
                          {"138988549876584520148320256", 1}},
                         {"3B2", "3C2,1"},
                         {"5514132424881463208443904", "9416031858681585751556096", "114642353734339885436764160",
                          "124058385593021471188320256"}),
            }};
    }();
    return dataset;
}

inline std::vector<const Dataset*> bundled_datasets() { return {&sporadic_dihedral(), &sporadic_semidihedral()}; }

inline const Dataset& bundled_dataset(std::string_view name) {
    for (const auto* dataset : bundled_datasets()) {
        if (dataset->name == name) return *dataset;
    }
    throw std::invalid_argument("no bundled dataset named '" + std::string(name) + "'");
}

/// 64-bit FNV-1a, used to pin the serialized form of the bundled data.
inline std::uint64_t fnv1a(std::string_view bytes) {
    std::uint64_t hash = 0xcbf29ce484222325ULL;
    for (unsigned char ch : bytes) {
        hash ^= ch;
        hash *= 0x100000001b3ULL;
    }
    return hash;
}

}  // namespace tame
