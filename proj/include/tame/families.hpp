// include/tame/families.hpp - principal 2-blocks of PSL2, PGL2, SL2, GU2 and GL2 over
// odd q, built as concrete degree lists.

#pragma once

#include "tame/block.hpp"
#include "tame/catalog.hpp"
#include "tame/classifier.hpp"
#include "tame/integer.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace tame {

enum class GroupFamily { psl2, pgl2, sl2, gu2, gl2 };

inline GroupFamily parse_group_family(std::string_view name) {
    if (name == "psl2") return GroupFamily::psl2;
    if (name == "pgl2") return GroupFamily::pgl2;
    if (name == "sl2") return GroupFamily::sl2;
    if (name == "gu2") return GroupFamily::gu2;
    if (name == "gl2") return GroupFamily::gl2;
    throw std::invalid_argument("unknown group family '" + std::string(name) + "'");
}

inline std::string_view to_string(GroupFamily family) {
    switch (family) {
        case GroupFamily::psl2: return "psl2";
        case GroupFamily::pgl2: return "pgl2";
        case GroupFamily::sl2: return "sl2";
        case GroupFamily::gu2: return "gu2";
        case GroupFamily::gl2: return "gl2";
    }
    return "?";
}

inline bool is_prime_power(std::int64_t q) {
    if (q < 2) return false;
    for (std::int64_t p = 2; p * p <= q; ++p) {
        if (q % p == 0) {
            while (q % p == 0) q /= p;
            return q == 1;
        }
    }
    return true;
}

struct FamilyBlock {
    BlockData block;
    /// The Morita class and Brauer degrees the block is built from; absent for GU2/GL2
    /// when q has the wrong residue and the defect groups are not tame.
    std::optional<TemplateSolution<BigInt>> solution;
};

namespace detail {

inline void add_degree(std::map<BigInt, std::uint64_t>& degrees, const BigInt& degree, std::uint64_t count) {
    if (count > 0) {
        degrees[degree] += count;
    }
}

inline std::vector<Character> to_characters(const std::map<BigInt, std::uint64_t>& degrees) {
    std::vector<Character> out;
    for (const auto& [degree, count] : degrees) {
        out.push_back({degree, count});
    }
    return out;
}

inline FamilyBlock from_template(std::string label, Family family, std::string_view tag, int n, int v2_order,
                                 std::vector<BigInt> phi) {
    const auto& entry = find_class(family, tag);
    const auto tmpl = instantiate(entry, n);
    std::map<BigInt, std::uint64_t> degrees;
    TemplateSolution<BigInt> solution;
    solution.entry = &entry;
    solution.n = n;
    solution.brauer_degrees = phi;
    for (const auto& row : tmpl.rows) {
        auto degree = dot(row.coefficients, phi);
        add_degree(degrees, degree, row.multiplicity);
        solution.row_degrees.push_back(degree);
    }
    FamilyBlock out;
    out.block.group_label = std::move(label);
    out.block.family = family;
    out.block.n = n;
    out.block.v2_group_order = v2_order;
    out.block.l = tmpl.columns;
    out.block.characters = to_characters(degrees);
    out.solution = std::move(solution);
    return out;
}

}  // namespace detail

/// The principal 2-block of the named group over q.
///
/// PSL2, PGL2 and SL2 come from their templates with Brauer degrees 1 and (q-1)/2 or q-1.
/// GU2 and GL2 use the closed-form degree lists (with a = |q+1|_2, c = |q-1|_2)
///   GU2: 1 (a), q (a), q-1 (a(a-1)/2), q+1 (a(c-1)/2)
///   GL2: 1 (c), q (c), q-1 (c(a-1)/2), q+1 (c(c-1)/2)
/// and are semidihedral only for q = 1 (GU2) or q = 3 (GL2) mod 4.
inline FamilyBlock family_block(GroupFamily family, std::int64_t q) {
    if (q < 3 || q % 2 == 0) {
        throw std::invalid_argument("family_block: q must be odd and at least 3");
    }
    if (!is_prime_power(q)) {
        throw std::invalid_argument("family_block: q must be a prime power");
    }
    const bool one_mod_four = q % 4 == 1;
    const int vm = static_cast<int>(v2(q - 1));
    const int vp = static_cast<int>(v2(q + 1));
    const std::string label = std::string(to_string(family)) + "(" + std::to_string(q) + ")";
    const BigInt half = BigInt((q - 1) / 2);
    const BigInt qm1 = BigInt(q - 1);

    auto require = [&](int n, int minimum) {
        if (n < minimum) {
            throw std::invalid_argument("family_block: " + label + " has defect exponent " + std::to_string(n) +
                                        ", below " + std::to_string(minimum));
        }
    };

    switch (family) {
        case GroupFamily::psl2: {
            // |PSL2(q)|_2 = |q^2-1|_2 / 2
            const int n = vm + vp - 1;
            require(n, 3);
            return detail::from_template(label, Family::dihedral, one_mod_four ? "3A" : "3K", n, n, {1, half, half});
        }
        case GroupFamily::pgl2: {
            const int n = vm + vp;
            require(n, 3);
            return detail::from_template(label, Family::dihedral, one_mod_four ? "2A" : "2B", n, n, {1, qm1});
        }
        case GroupFamily::sl2: {
            const int n = vm + vp;
            require(n, 3);
            return detail::from_template(label, Family::quaternion, one_mod_four ? "3A" : "3K", n, n, {1, half, half});
        }
        case GroupFamily::gu2:
        case GroupFamily::gl2: {
            const bool unitary = family == GroupFamily::gu2;
            const std::uint64_t a = std::uint64_t{1} << vp;
            const std::uint64_t c = std::uint64_t{1} << vm;
            // |GU2(q)| = q (q+1)^2 (q-1), |GL2(q)| = q (q-1)^2 (q+1)
            const int n = unitary ? 2 * vp + vm : 2 * vm + vp;
            const std::uint64_t outer = unitary ? a : c;
            std::map<BigInt, std::uint64_t> degrees;
            detail::add_degree(degrees, 1, outer);
            detail::add_degree(degrees, BigInt(q), outer);
            detail::add_degree(degrees, BigInt(q - 1), outer * (a - 1) / 2);
            detail::add_degree(degrees, BigInt(q + 1), outer * (c - 1) / 2);
            FamilyBlock out;
            out.block.group_label = label;
            out.block.n = n;
            out.block.v2_group_order = n;
            out.block.l = 2;
            out.block.characters = detail::to_characters(degrees);
            const bool tame = unitary ? one_mod_four : !one_mod_four;
            if (tame) {
                require(n, 4);
                out.block.family = Family::semidihedral;
                const auto& entry = find_class(Family::semidihedral, unitary ? "2A1" : "2B2");
                TemplateSolution<BigInt> solution;
                solution.entry = &entry;
                solution.n = n;
                solution.brauer_degrees = {1, qm1};
                for (const auto& row : instantiate(entry, n).rows) {
                    solution.row_degrees.push_back(detail::dot(row.coefficients, solution.brauer_degrees));
                }
                out.solution = std::move(solution);
            }
            return out;
        }
    }
    throw std::logic_error("unreachable");
}

inline FamilyBlock family_block(std::string_view family_name, std::int64_t q) {
    return family_block(parse_group_family(family_name), q);
}

}  // namespace tame
