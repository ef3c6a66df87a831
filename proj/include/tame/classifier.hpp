// include/tame/classifier.hpp - find the Morita classes whose decomposition matrix fits a
// block's ordinary degrees.
//
// The matcher is a template over the integer type so that exhaustive sweeps can run on
// machine words while real data (Monster degrees near 10^26) runs on BigInt.

#pragma once

#include "tame/block.hpp"
#include "tame/catalog.hpp"
#include "tame/integer.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace tame {

/// A template that fits a block, with the Brauer degrees that make it fit.
template <class Int>
struct TemplateSolution {
    const TemplateEntry* entry = nullptr;
    int n = 0;
    std::vector<Int> brauer_degrees;
    /// Degree assigned to each template row, in template row order.
    std::vector<Int> row_degrees;

    const MoritaClass& cls() const { return entry->cls; }
    Family family() const { return entry->cls.family; }
};

namespace detail {

/// l linearly independent height-zero rows of a template and the integer adjugate of
/// the square matrix they form.
struct PivotSystem {
    std::array<int, 3> rows{};
    std::array<std::array<std::int64_t, 3>, 3> adjugate{};
    std::int64_t determinant = 0;
};

inline std::int64_t det3(const std::array<std::array<std::int64_t, 3>, 3>& m, int l) {
    if (l == 1) return m[0][0];
    if (l == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

inline PivotSystem make_pivot_system(const TemplateEntry& entry) {
    const int l = entry.columns;
    // Height-zero rows are always the first four.
    for (int a = 0; a < 4; ++a) {
        for (int b = (l > 1 ? a + 1 : 4); b < (l > 1 ? 4 : 5); ++b) {
            for (int c = (l > 2 ? b + 1 : 4); c < (l > 2 ? 4 : 5); ++c) {
                std::array<int, 3> pick{a, l > 1 ? b : 0, l > 2 ? c : 0};
                std::array<std::array<std::int64_t, 3>, 3> m{};
                for (int i = 0; i < l; ++i) {
                    for (int j = 0; j < l; ++j) {
                        m[i][j] = entry.rows[pick[i]].coefficients[j];
                    }
                }
                const auto det = det3(m, l);
                if (det == 0) {
                    continue;
                }
                PivotSystem out;
                out.rows = pick;
                out.determinant = det;
                // adj[j][i] = cofactor(i, j)
                for (int i = 0; i < l; ++i) {
                    for (int j = 0; j < l; ++j) {
                        std::array<std::array<std::int64_t, 3>, 3> minor{};
                        int mi = 0;
                        for (int r = 0; r < l; ++r) {
                            if (r == i) continue;
                            int mj = 0;
                            for (int s = 0; s < l; ++s) {
                                if (s == j) continue;
                                minor[mi][mj++] = m[r][s];
                            }
                            ++mi;
                        }
                        std::int64_t cof = (l == 1) ? 1 : det3(minor, l - 1);
                        if ((i + j) % 2 == 1) cof = -cof;
                        out.adjugate[j][i] = cof;
                    }
                }
                return out;
            }
        }
    }
    throw std::logic_error("template " + entry.cls.tag + " has rank-deficient height-zero rows");
}

inline const std::vector<PivotSystem>& pivot_systems() {
    static const std::vector<PivotSystem> systems = [] {
        std::vector<PivotSystem> out;
        for (const auto& entry : catalog()) {
            out.push_back(make_pivot_system(entry));
        }
        return out;
    }();
    return systems;
}

/// Column permutations that map the template's rows (with height tags) onto themselves.
inline std::vector<std::vector<int>> column_automorphisms(const TemplateEntry& entry) {
    auto key = [&](const std::vector<int>& order) {
        std::vector<std::pair<std::vector<int>, int>> rows;
        for (const auto& row : entry.rows) {
            std::vector<int> permuted;
            for (int j : order) permuted.push_back(row.coefficients[j]);
            rows.emplace_back(std::move(permuted), static_cast<int>(row.height));
        }
        std::sort(rows.begin(), rows.end());
        return rows;
    };
    std::vector<int> order(entry.columns);
    std::iota(order.begin(), order.end(), 0);
    const auto identity = key(order);
    std::vector<std::vector<int>> out;
    do {
        if (key(order) == identity) out.push_back(order);
    } while (std::next_permutation(order.begin(), order.end()));
    return out;
}

inline const std::vector<std::vector<std::vector<int>>>& automorphism_table() {
    static const auto table = [] {
        std::vector<std::vector<std::vector<int>>> out;
        for (const auto& entry : catalog()) out.push_back(column_automorphisms(entry));
        return out;
    }();
    return table;
}

inline std::size_t entry_index(const TemplateEntry& entry) {
    return static_cast<std::size_t>(&entry - catalog().data());
}

template <class Int>
Int dot(const std::vector<int>& coefficients, const std::vector<Int>& phi) {
    Int total = 0;
    for (std::size_t j = 0; j < coefficients.size(); ++j) {
        if (coefficients[j] != 0) {
            total += Int(coefficients[j]) * phi[j];
        }
    }
    return total;
}

/// A template instantiated at n with its height histogram.
struct InstantiatedTemplate {
    DecompTemplate tmpl;
    std::map<int, std::uint64_t> histogram;
};

inline constexpr int max_cached_n = 62;

/// Every (entry, n) instantiation, built once; indexed by entry then n.
inline const std::vector<std::vector<InstantiatedTemplate>>& template_table() {
    static const auto table = [] {
        std::vector<std::vector<InstantiatedTemplate>> out;
        for (const auto& entry : catalog()) {
            auto& row = out.emplace_back(max_cached_n + 1);
            for (int n = entry.cls.min_n; n <= max_cached_n; ++n) {
                row[n].tmpl = instantiate(entry, n);
                for (const auto& r : row[n].tmpl.rows) row[n].histogram[r.height] += r.multiplicity;
            }
        }
        return out;
    }();
    return table;
}

inline const InstantiatedTemplate& cached_template(const TemplateEntry& entry, int n) {
    if (n < entry.cls.min_n || n > max_cached_n) throw std::out_of_range("cached_template: n out of range");
    return template_table()[entry_index(entry)][static_cast<std::size_t>(n)];
}

template <class Int>
std::vector<TemplateSolution<Int>> match_template(const TemplateEntry& entry, const HeightedBlock<Int>& block,
                                                  const std::map<int, std::uint64_t>& histogram) {
    std::vector<TemplateSolution<Int>> out;
    const int n = block.n;
    if (n < entry.cls.min_n) {
        return out;
    }
    const auto& cached = cached_template(entry, n);
    const auto& tmpl = cached.tmpl;
    const int l = tmpl.columns;
    if (block.l && *block.l != l) {
        return out;
    }

    // Per-height counts must agree before any solving.
    if (cached.histogram != histogram) {
        return out;
    }

    std::array<Int, 4> zero{};
    {
        std::size_t filled = 0;
        for (const auto& group : block.groups) {
            if (group.height != 0) continue;
            for (std::uint64_t c = 0; c < group.count; ++c) {
                zero[filled++] = group.degree;
            }
        }
        if (filled != 4) {
            return out;
        }
    }
    std::sort(zero.begin(), zero.end());

    const auto& pivots = pivot_systems()[entry_index(entry)];
    const Int det(pivots.determinant);
    std::vector<Int> phi(l);
    HeightedBlock<Int> candidate;
    candidate.n = n;
    candidate.groups.reserve(tmpl.rows.size());

    // Enumerate the distinct bijections of height-zero degrees onto the four height-zero rows.
    do {
        bool ok = true;
        for (int i = 0; i < l && ok; ++i) {
            Int numerator = 0;
            for (int j = 0; j < l; ++j) {
                const auto a = pivots.adjugate[i][j];
                if (a != 0) {
                    numerator += Int(a) * zero[pivots.rows[j]];
                }
            }
            if (numerator % det != 0) {
                ok = false;
                break;
            }
            phi[i] = numerator / det;
            if (phi[i] <= 0) ok = false;
        }
        if (!ok) continue;
        for (int r = 0; r < 4 && ok; ++r) {
            if (detail::dot(tmpl.rows[r].coefficients, phi) != zero[r]) ok = false;
        }
        if (!ok) continue;

        candidate.groups.clear();
        for (const auto& row : tmpl.rows) {
            candidate.groups.push_back({row.height, detail::dot(row.coefficients, phi), row.multiplicity});
        }
        candidate.normalize();
        if (candidate.groups != block.groups) continue;

        // Solutions related by a symmetry of the template are the same matrix.
        bool seen = false;
        for (const auto& prior : out) {
            for (const auto& sigma : detail::automorphism_table()[detail::entry_index(entry)]) {
                bool same = true;
                for (int j = 0; j < l && same; ++j) same = prior.brauer_degrees[j] == phi[sigma[j]];
                seen = seen || same;
            }
        }
        if (seen) continue;
        TemplateSolution<Int> solution;
        solution.entry = &entry;
        solution.n = n;
        solution.brauer_degrees = phi;
        for (const auto& row : tmpl.rows) {
            solution.row_degrees.push_back(detail::dot(row.coefficients, phi));
        }
        out.push_back(std::move(solution));
    } while (std::next_permutation(zero.begin(), zero.end()));
    return out;
}

}  // namespace detail

/// Solutions of one template against a block whose heights are already known.
template <class Int>
std::vector<TemplateSolution<Int>> match_template(const TemplateEntry& entry, const HeightedBlock<Int>& block) {
    return detail::match_template(entry, block, block.histogram());
}

/// Every catalog template valid at n that fits the block. When no family is given all
/// three are tried; when l is known only templates with l columns are tried. An empty
/// result means no tame template fits.
template <class Int>
std::vector<TemplateSolution<Int>> match_templates(const HeightedBlock<Int>& block,
                                                   std::optional<Family> family = std::nullopt) {
    std::vector<TemplateSolution<Int>> out;
    const auto histogram = block.histogram();
    for (const auto& entry : catalog()) {
        if (family && entry.cls.family != *family) {
            continue;
        }
        auto found = detail::match_template(entry, block, histogram);
        out.insert(out.end(), std::make_move_iterator(found.begin()), std::make_move_iterator(found.end()));
    }
    return out;
}

inline std::vector<TemplateSolution<BigInt>> match_templates(const BlockData& block) {
    return match_templates(heighted(block), block.family);
}

/// Distinct class tags among the solutions, with matrix-identical partners expanded.
template <class Int>
std::set<std::string> matched_tags(const std::vector<TemplateSolution<Int>>& solutions) {
    std::set<std::string> tags;
    for (const auto& s : solutions) {
        for (auto& tag : s.cls().tags()) {
            tags.insert(std::move(tag));
        }
    }
    return tags;
}

/// The degree multiset a template produces for given Brauer degrees, with heights.
template <class Int>
HeightedBlock<Int> synthesize(const DecompTemplate& tmpl, const std::vector<Int>& brauer_degrees) {
    if (static_cast<int>(brauer_degrees.size()) != tmpl.columns) {
        throw std::invalid_argument("synthesize: need one Brauer degree per column");
    }
    HeightedBlock<Int> out;
    out.n = tmpl.n;
    for (const auto& row : tmpl.rows) {
        out.groups.push_back({row.height, detail::dot(row.coefficients, brauer_degrees), row.multiplicity});
    }
    out.normalize();
    return out;
}

/// Reads the class of a dihedral block straight off its degrees.
///
/// The height-one degree being the largest gives 1A, 2A or 3A by the number of distinct
/// height-zero degrees. Otherwise 2B is recognised by its template shape: height-zero
/// degrees d < D, each twice, with D = d + e for the height-one degree e. (Reading "the
/// largest degree has height one" as the 2B test contradicts the 2B matrix, where e < D.)
/// Then 3K when the largest degree is the sum of the other three height-zero degrees,
/// else 3B. Throws std::domain_error when no branch applies.
template <class Int>
std::string classify_dihedral_shortcut(const HeightedBlock<Int>& block) {
    std::vector<Int> zero;
    std::optional<Int> height_one;
    Int largest = 0;
    for (const auto& group : block.groups) {
        largest = std::max(largest, group.degree);
        if (group.height == 0) {
            for (std::uint64_t c = 0; c < group.count; ++c) zero.push_back(group.degree);
        } else if (group.height == 1) {
            if (height_one && *height_one != group.degree) {
                throw std::domain_error("shortcut: height-one characters of different degrees");
            }
            height_one = group.degree;
        } else {
            throw std::domain_error("shortcut: large-height character in a dihedral block");
        }
    }
    if (zero.size() != 4 || !height_one) {
        throw std::domain_error("shortcut: need four height-zero and at least one height-one character");
    }
    std::sort(zero.begin(), zero.end());
    const auto distinct = static_cast<std::size_t>(std::unique(zero.begin(), zero.end()) - zero.begin());
    std::vector<Int> all_zero;
    for (const auto& group : block.groups) {
        if (group.height == 0) {
            for (std::uint64_t c = 0; c < group.count; ++c) all_zero.push_back(group.degree);
        }
    }
    std::sort(all_zero.begin(), all_zero.end());
    const Int& e = *height_one;

    if (e == largest) {
        if (distinct == 1) return "1A";
        if (distinct == 2) return "2A";
        return "3A";
    }
    if (distinct == 2 && all_zero[0] == all_zero[1] && all_zero[2] == all_zero[3] &&
        all_zero[3] == all_zero[0] + e) {
        return "2B";
    }
    if (all_zero[3] == largest && all_zero[3] == all_zero[0] + all_zero[1] + all_zero[2]) {
        return "3K";
    }
    if (distinct >= 3) {
        return "3B";
    }
    throw std::domain_error("shortcut: no branch applies");
}

}  // namespace tame
