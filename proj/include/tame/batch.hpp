// include/tame/batch.hpp - classify dataset records and check them against their
// published classes and Brauer degrees.

#pragma once

#include "tame/classifier.hpp"
#include "tame/io.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace tame {

struct RecordVerdict {
    std::string group;
    std::vector<TemplateSolution<BigInt>> solutions;
    std::set<std::string> matched;
    /// Published tags with matrix-identical partners added; what degrees alone can see.
    std::set<std::string> expected;
    bool tags_ok = true;
    bool brauer_ok = true;
    /// Set when the block could not be classified at all.
    std::optional<std::string> error;

    bool ok() const { return !error && tags_ok && brauer_ok; }
};

/// Expected tags expand through matrix-identical partners, since a degree list cannot
/// separate such classes. Printed Brauer degrees must be covered by the solutions, and
/// every solution's Brauer degrees must be drawn from the printed ones.
inline RecordVerdict evaluate(const BlockRecord& record) {
    RecordVerdict out;
    out.group = record.block.group_label;
    try {
        out.solutions = match_templates(record.block);
    } catch (const std::exception& e) {
        out.error = e.what();
        return out;
    }
    out.matched = matched_tags(out.solutions);
    if (record.expected) {
        for (const auto& tag : *record.expected) {
            for (auto& t : find_class(*record.block.family, tag).cls.tags()) out.expected.insert(std::move(t));
        }
        out.tags_ok = out.matched == out.expected;
    }
    if (record.brauer) {
        auto printed = *record.brauer;
        std::sort(printed.begin(), printed.end());
        std::set<BigInt> covered;
        for (const auto& s : out.solutions) {
            auto mine = s.brauer_degrees;
            std::sort(mine.begin(), mine.end());
            out.brauer_ok = out.brauer_ok && std::includes(printed.begin(), printed.end(), mine.begin(), mine.end());
            covered.insert(mine.begin(), mine.end());
        }
        out.brauer_ok = out.brauer_ok && !out.solutions.empty() &&
                        covered == std::set<BigInt>(printed.begin(), printed.end());
    }
    return out;
}

inline std::vector<RecordVerdict> evaluate(const Dataset& dataset) {
    std::vector<RecordVerdict> out;
    for (const auto& record : dataset.blocks) out.push_back(evaluate(record));
    return out;
}

}  // namespace tame
