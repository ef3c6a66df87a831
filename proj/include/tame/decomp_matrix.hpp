// include/tame/decomp_matrix.hpp - concrete decomposition matrices with row multiplicities,
// and their canonical form up to row and column permutation.

#pragma once

#include "tame/catalog.hpp"
#include "tame/integer.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace tame {

struct DecompRow {
    BigInt degree;
    std::vector<int> coefficients;
    std::uint64_t multiplicity = 1;

    friend bool operator==(const DecompRow&, const DecompRow&) = default;
};

struct DecompMatrix {
    std::vector<DecompRow> rows;
    /// One slot per column; a Brauer degree when known.
    std::vector<std::optional<BigInt>> brauer;

    std::size_t columns() const { return brauer.size(); }

    std::uint64_t k() const {
        std::uint64_t total = 0;
        for (const auto& row : rows) total += row.multiplicity;
        return total;
    }

    bool brauer_known() const {
        return std::all_of(brauer.begin(), brauer.end(), [](const auto& b) { return b.has_value(); });
    }

    friend bool operator==(const DecompMatrix&, const DecompMatrix&) = default;
};

/// Throws std::invalid_argument describing the first violated invariant.
inline void validate(const DecompMatrix& m) {
    const auto l = m.columns();
    if (l == 0) {
        throw std::invalid_argument("decomposition matrix has no columns");
    }
    std::vector<bool> column_used(l, false);
    for (const auto& row : m.rows) {
        if (row.coefficients.size() != l) {
            throw std::invalid_argument("row length does not match column count");
        }
        if (row.degree <= 0 || row.multiplicity == 0) {
            throw std::invalid_argument("rows need a positive degree and multiplicity");
        }
        bool nonzero = false;
        BigInt weighted = 0;
        for (std::size_t j = 0; j < l; ++j) {
            if (row.coefficients[j] < 0) {
                throw std::invalid_argument("negative decomposition number");
            }
            if (row.coefficients[j] > 0) {
                nonzero = true;
                column_used[j] = true;
            }
            if (m.brauer[j]) weighted += row.coefficients[j] * *m.brauer[j];
        }
        if (!nonzero) {
            throw std::invalid_argument("zero row in decomposition matrix");
        }
        if (m.brauer_known() && weighted != row.degree) {
            throw std::invalid_argument("row degree " + row.degree.str() + " differs from its Brauer sum " +
                                        weighted.str());
        }
    }
    if (std::find(column_used.begin(), column_used.end(), false) != column_used.end()) {
        throw std::invalid_argument("zero column in decomposition matrix");
    }
}

/// Sorts rows by (degree, coefficients) and merges identical rows.
inline void merge_rows(DecompMatrix& m) {
    std::sort(m.rows.begin(), m.rows.end(), [](const DecompRow& a, const DecompRow& b) {
        return std::tie(a.degree, a.coefficients) < std::tie(b.degree, b.coefficients);
    });
    std::vector<DecompRow> merged;
    for (auto& row : m.rows) {
        if (!merged.empty() && merged.back().degree == row.degree && merged.back().coefficients == row.coefficients) {
            merged.back().multiplicity += row.multiplicity;
        } else {
            merged.push_back(std::move(row));
        }
    }
    m.rows = std::move(merged);
}

namespace detail {

inline bool canonical_less(const DecompMatrix& a, const DecompMatrix& b) {
    if (a.brauer != b.brauer) {
        return std::lexicographical_compare(a.brauer.begin(), a.brauer.end(), b.brauer.begin(), b.brauer.end());
    }
    return std::lexicographical_compare(a.rows.begin(), a.rows.end(), b.rows.begin(), b.rows.end(),
                                        [](const DecompRow& x, const DecompRow& y) {
                                            return std::tie(x.degree, x.coefficients, x.multiplicity) <
                                                   std::tie(y.degree, y.coefficients, y.multiplicity);
                                        });
}

}  // namespace detail

/// The representative of m up to row and column permutation: rows sorted and merged,
/// columns permuted (brute force over all orders) to the lexicographically least matrix.
inline DecompMatrix canonical(const DecompMatrix& m) {
    const auto l = m.columns();
    std::vector<std::size_t> order(l);
    std::iota(order.begin(), order.end(), 0);
    std::optional<DecompMatrix> best;
    do {
        DecompMatrix permuted;
        permuted.brauer.reserve(l);
        for (auto j : order) permuted.brauer.push_back(m.brauer[j]);
        for (const auto& row : m.rows) {
            DecompRow r{row.degree, {}, row.multiplicity};
            for (auto j : order) r.coefficients.push_back(row.coefficients[j]);
            permuted.rows.push_back(std::move(r));
        }
        merge_rows(permuted);
        if (!best || detail::canonical_less(permuted, *best)) {
            best = std::move(permuted);
        }
    } while (std::next_permutation(order.begin(), order.end()));
    return *best;
}

inline bool equivalent(const DecompMatrix& a, const DecompMatrix& b) {
    return canonical(a) == canonical(b);
}

/// A template instantiated with concrete Brauer degrees.
inline DecompMatrix to_matrix(const DecompTemplate& tmpl, const std::vector<BigInt>& brauer_degrees) {
    if (static_cast<int>(brauer_degrees.size()) != tmpl.columns) {
        throw std::invalid_argument("to_matrix: need one Brauer degree per column");
    }
    DecompMatrix out;
    for (const auto& b : brauer_degrees) out.brauer.emplace_back(b);
    for (const auto& row : tmpl.rows) {
        BigInt degree = 0;
        for (int j = 0; j < tmpl.columns; ++j) degree += row.coefficients[j] * brauer_degrees[j];
        out.rows.push_back({degree, row.coefficients, row.multiplicity});
    }
    return out;
}

}  // namespace tame
