// include/tame/block.hpp - concrete blocks given by ordinary character degrees, and
// height inference from 2-adic valuations.

#pragma once

#include "tame/catalog.hpp"
#include "tame/integer.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace tame {

struct Character {
    BigInt degree;
    std::uint64_t multiplicity = 1;

    friend bool operator==(const Character&, const Character&) = default;
};

struct BlockData {
    std::string group_label;
    std::optional<Family> family;
    int n = 0;
    std::vector<Character> characters;
    /// 2-adic valuation of |G|, when known.
    std::optional<int> v2_group_order;
    /// Number of Brauer characters, when known. Degrees alone cannot separate some
    /// classes with different l.
    std::optional<int> l;

    std::uint64_t k() const {
        std::uint64_t total = 0;
        for (const auto& ch : characters) {
            total += ch.multiplicity;
        }
        return total;
    }

    friend bool operator==(const BlockData&, const BlockData&) = default;
};

/// Degrees grouped by (height, degree). Kept sorted so equal blocks compare equal.
template <class Int>
struct HeightedDegree {
    int height = 0;
    Int degree{};
    std::uint64_t count = 0;

    friend bool operator==(const HeightedDegree&, const HeightedDegree&) = default;
};

template <class Int>
struct HeightedBlock {
    int n = 0;
    std::vector<HeightedDegree<Int>> groups;
    std::optional<int> l;

    /// Sorts by (height, degree) and merges duplicate groups.
    void normalize() {
        std::sort(groups.begin(), groups.end(), [](const auto& a, const auto& b) {
            return a.height != b.height ? a.height < b.height : a.degree < b.degree;
        });
        // Merge in place; `kept` groups precede index i at every step.
        std::size_t kept = 0;
        for (std::size_t i = 0; i < groups.size(); ++i) {
            if (groups[i].count == 0) {
                continue;
            }
            if (kept > 0 && groups[kept - 1].height == groups[i].height && groups[kept - 1].degree == groups[i].degree) {
                groups[kept - 1].count += groups[i].count;
            } else {
                if (kept != i) groups[kept] = std::move(groups[i]);
                ++kept;
            }
        }
        groups.resize(kept);
    }

    std::uint64_t count_at(int height) const {
        std::uint64_t total = 0;
        for (const auto& group : groups) {
            if (group.height == height) {
                total += group.count;
            }
        }
        return total;
    }

    std::uint64_t k() const {
        std::uint64_t total = 0;
        for (const auto& group : groups) {
            total += group.count;
        }
        return total;
    }

    std::map<int, std::uint64_t> histogram() const {
        std::map<int, std::uint64_t> out;
        for (const auto& group : groups) {
            out[group.height] += group.count;
        }
        return out;
    }
};

/// Number of large-height characters implied by k, or nullopt if k is outside
/// 2^(n-2)+3 .. 2^(n-2)+5.
inline std::optional<int> large_height_count(std::uint64_t k, int n) {
    const auto base = height_one_count(n) + 4;
    if (k < base || k > base + 2) {
        return std::nullopt;
    }
    return static_cast<int>(k - base);
}

/// Whether a height histogram is one a tame block of defect 2^n can have.
inline bool is_legal_histogram(const std::map<int, std::uint64_t>& histogram, int n,
                               std::optional<Family> family = std::nullopt) {
    std::uint64_t k = 0;
    for (const auto& [height, count] : histogram) {
        k += count;
    }
    auto large = large_height_count(k, n);
    if (!large) {
        return false;
    }
    if (family && *large > max_large_height(*family)) {
        return false;
    }
    std::map<int, std::uint64_t> expected;
    expected[0] = 4;
    expected[1] += height_one_count(n);
    if (*large > 0) {
        expected[n - 2] += static_cast<std::uint64_t>(*large);
    }
    std::map<int, std::uint64_t> observed;
    for (const auto& [height, count] : histogram) {
        if (count > 0) {
            observed[height] = count;
        }
    }
    return observed == expected;
}

/// Heights of each character entry of the block, in input order.
///
/// With v2_group_order the height is v2(deg) - (v2|G| - n); otherwise the minimum
/// valuation in the block is taken as height zero, which is sound because every
/// block has a height-zero character. Throws std::domain_error when the result is
/// not a tame histogram.
inline std::vector<int> infer_heights(const BlockData& block) {
    if (block.n < 3) {
        throw std::invalid_argument("infer_heights: defect exponent must be at least 3");
    }
    if (block.characters.empty()) {
        throw std::invalid_argument("infer_heights: block has no characters");
    }
    int offset = 0;
    if (block.v2_group_order) {
        offset = *block.v2_group_order - block.n;
    } else {
        offset = static_cast<int>(v2(block.characters.front().degree));
        for (const auto& ch : block.characters) {
            offset = std::min(offset, static_cast<int>(v2(ch.degree)));
        }
    }
    std::vector<int> heights;
    std::map<int, std::uint64_t> histogram;
    for (const auto& ch : block.characters) {
        int height = static_cast<int>(v2(ch.degree)) - offset;
        if (height < 0) {
            throw std::domain_error("infer_heights: negative height for degree " + ch.degree.str());
        }
        heights.push_back(height);
        histogram[height] += ch.multiplicity;
    }
    if (!is_legal_histogram(histogram, block.n, block.family)) {
        throw std::domain_error("infer_heights: height histogram of " + block.group_label +
                                " is not that of a tame block with n = " + std::to_string(block.n));
    }
    return heights;
}

inline HeightedBlock<BigInt> heighted(const BlockData& block) {
    const auto heights = infer_heights(block);
    HeightedBlock<BigInt> out;
    out.n = block.n;
    out.l = block.l;
    for (std::size_t i = 0; i < block.characters.size(); ++i) {
        out.groups.push_back({heights[i], block.characters[i].degree, block.characters[i].multiplicity});
    }
    out.normalize();
    return out;
}

}  // namespace tame
