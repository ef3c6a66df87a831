// include/tame/clifford.hpp - index-2 Clifford calculus at the prime 2.
//
// For N normal of index 2 in G, an ordinary character of N either is G-invariant (and
// splits on induction into two characters of equal degree) or fuses with its conjugate
// into one character of twice the degree. Brauer characters never split: an invariant
// one extends uniquely, a conjugate pair fuses into one. Conjugation by G \ N is an
// involution on rows and columns preserving decomposition numbers, which is what the
// enumeration below is built on.

#pragma once

#include "tame/block.hpp"
#include "tame/catalog.hpp"
#include "tame/decomp_matrix.hpp"
#include "tame/integer.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace tame {

class SearchLimitExceeded : public std::runtime_error {
  public:
    explicit SearchLimitExceeded(std::uint64_t cap)
        : std::runtime_error("fusion search exceeded the cap of " + std::to_string(cap) + " patterns") {}
};

/// Instances of `row` that are G-invariant (no partner), or `count` pairs of conjugate
/// instances of `row` and `partner` (partner may equal row).
struct RowOrbit {
    std::size_t row = 0;
    std::optional<std::size_t> partner;
    std::uint64_t count = 0;

    friend bool operator==(const RowOrbit&, const RowOrbit&) = default;
};

/// How the rows and columns of the matrix of N behave under conjugation by G. Row and
/// column indices refer to the matrix of N (rows merged, first occurrence order).
struct FusionPattern {
    std::vector<RowOrbit> row_orbits;
    std::vector<std::vector<std::size_t>> column_orbits;
    /// Some column pair was formed without Brauer degrees to justify it.
    bool unconstrained_columns = false;

    friend bool operator==(const FusionPattern&, const FusionPattern&) = default;
};

struct CliffordCandidate {
    FusionPattern pattern;
    DecompMatrix matrix;
};

struct HeightTarget {
    Family family;
    int n;
};

struct CliffordOptions {
    std::uint64_t cap = 1'000'000;
    /// When set, candidates whose degree valuations do not give a legal height
    /// histogram for this family and defect are dropped.
    std::optional<HeightTarget> target;
};

/// Every row's multiplicity times factor, as for a central product with a cyclic 2-group.
inline DecompMatrix duplicate_rows(DecompMatrix m, std::uint64_t factor) {
    if (factor < 1) {
        throw std::invalid_argument("duplicate_rows: factor must be at least 1");
    }
    for (auto& row : m.rows) row.multiplicity *= factor;
    return m;
}

/// Heights from degree valuations relative to the smallest one.
inline std::map<int, std::uint64_t> degree_height_histogram(const DecompMatrix& m) {
    int lowest = -1;
    for (const auto& row : m.rows) {
        int v = static_cast<int>(v2(row.degree));
        lowest = lowest < 0 ? v : std::min(lowest, v);
    }
    std::map<int, std::uint64_t> out;
    for (const auto& row : m.rows) out[static_cast<int>(v2(row.degree)) - lowest] += row.multiplicity;
    return out;
}

namespace detail {

/// Merges identical rows keeping first-occurrence order.
inline DecompMatrix merge_stable(const DecompMatrix& m) {
    DecompMatrix out;
    out.brauer = m.brauer;
    for (const auto& row : m.rows) {
        auto it = std::find_if(out.rows.begin(), out.rows.end(), [&](const DecompRow& r) {
            return r.degree == row.degree && r.coefficients == row.coefficients;
        });
        if (it == out.rows.end()) {
            out.rows.push_back(row);
        } else {
            it->multiplicity += row.multiplicity;
        }
    }
    return out;
}

/// All involutions of {0..l-1} with exactly `pairs` transpositions, as image maps.
inline std::vector<std::vector<std::size_t>> column_involutions(std::size_t l, std::size_t pairs) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> sigma(l);
    std::vector<bool> assigned(l, false);
    std::function<void(std::size_t, std::size_t)> recurse = [&](std::size_t j, std::size_t remaining) {
        while (j < l && assigned[j]) ++j;
        if (j == l) {
            if (remaining == 0) out.push_back(sigma);
            return;
        }
        assigned[j] = true;
        sigma[j] = j;
        recurse(j + 1, remaining);
        if (remaining > 0) {
            for (std::size_t i = j + 1; i < l; ++i) {
                if (assigned[i]) continue;
                assigned[i] = true;
                sigma[j] = i;
                sigma[i] = j;
                recurse(j + 1, remaining - 1);
                assigned[i] = false;
            }
        }
        assigned[j] = false;
    };
    recurse(0, pairs);
    return out;
}

inline bool passes_target(const DecompMatrix& m, const CliffordOptions& options) {
    if (!options.target) return true;
    return is_legal_histogram(degree_height_histogram(m), options.target->n, options.target->family);
}

inline bool columns_nonzero(const DecompMatrix& m) {
    for (std::size_t j = 0; j < m.columns(); ++j) {
        bool used = false;
        for (const auto& row : m.rows) used = used || row.coefficients[j] > 0;
        if (!used) return false;
    }
    return true;
}

inline void insert_candidate(std::vector<CliffordCandidate>& out, FusionPattern pattern, DecompMatrix matrix) {
    matrix = canonical(matrix);
    for (const auto& existing : out) {
        if (existing.matrix == matrix) return;
    }
    out.push_back({std::move(pattern), std::move(matrix)});
}

inline void sort_candidates(std::vector<CliffordCandidate>& out) {
    std::sort(out.begin(), out.end(), [](const CliffordCandidate& a, const CliffordCandidate& b) {
        return canonical_less(a.matrix, b.matrix);
    });
}

}  // namespace detail

/// Candidate matrices for the block of G covering the block of N with matrix d_b, given
/// the target counts k_B and l_B. Each returned pattern satisfies
///   d_B(chi, Phi) = sum over psi in the row orbit of chi of d_b(psi, phi), any phi in Phi
/// with the sum independent of phi. An empty result means no extension is consistent.
inline std::vector<CliffordCandidate> induce_candidates(const DecompMatrix& d_b, std::uint64_t k_B, std::size_t l_B,
                                                        const CliffordOptions& options = {}) {
    validate(d_b);
    const auto types = detail::merge_stable(d_b);
    const auto l = types.columns();
    std::vector<CliffordCandidate> out;
    if (l_B == 0 || l_B > l || 2 * (l - l_B) > l) {
        return out;
    }
    std::uint64_t explored = 0;

    for (const auto& sigma : detail::column_involutions(l, l - l_B)) {
        bool unconstrained = false;
        bool admissible = true;
        for (std::size_t j = 0; j < l; ++j) {
            if (sigma[j] == j) continue;
            const auto& a = types.brauer[j];
            const auto& b = types.brauer[sigma[j]];
            if (a && b) {
                admissible = admissible && *a == *b;
            } else {
                unconstrained = true;
            }
        }
        if (!admissible) continue;

        // Image of each row type under conjugation.
        const auto t = types.rows.size();
        std::vector<std::size_t> image(t);
        for (std::size_t r = 0; r < t && admissible; ++r) {
            std::vector<int> permuted(l);
            for (std::size_t j = 0; j < l; ++j) permuted[j] = types.rows[r].coefficients[sigma[j]];
            auto it = std::find_if(types.rows.begin(), types.rows.end(), [&](const DecompRow& row) {
                return row.degree == types.rows[r].degree && row.coefficients == permuted;
            });
            if (it == types.rows.end()) {
                admissible = false;
                break;
            }
            image[r] = static_cast<std::size_t>(it - types.rows.begin());
            if (types.rows[image[r]].multiplicity != types.rows[r].multiplicity) admissible = false;
        }
        if (!admissible) continue;

        std::vector<std::size_t> self_types;
        std::uint64_t base = 0;
        for (std::size_t r = 0; r < t; ++r) {
            if (image[r] == r) {
                self_types.push_back(r);
                base += 2 * types.rows[r].multiplicity;
            } else if (r < image[r]) {
                base += types.rows[r].multiplicity;
            }
        }
        // Each self-conjugate pair among a type lowers k by 3 relative to all-split.
        if (base < k_B || (base - k_B) % 3 != 0) continue;
        const std::uint64_t pairs_needed = (base - k_B) / 3;

        // Column orbits, ordered by their smallest member.
        std::vector<std::vector<std::size_t>> orbits;
        std::vector<std::size_t> orbit_of(l);
        for (std::size_t j = 0; j < l; ++j) {
            if (sigma[j] < j) continue;
            orbit_of[j] = orbits.size();
            if (sigma[j] != j) orbit_of[sigma[j]] = orbits.size();
            orbits.push_back(sigma[j] == j ? std::vector<std::size_t>{j} : std::vector<std::size_t>{j, sigma[j]});
        }

        std::vector<std::uint64_t> self_pairs(self_types.size(), 0);
        auto emit = [&]() {
            if (++explored > options.cap) throw SearchLimitExceeded(options.cap);
            DecompMatrix d_B;
            for (const auto& orbit : orbits) {
                std::optional<BigInt> degree = BigInt(0);
                for (auto j : orbit) {
                    if (!types.brauer[j]) {
                        degree.reset();
                        break;
                    }
                    *degree += *types.brauer[j];
                }
                d_B.brauer.push_back(degree);
            }
            auto restrict_coefficients = [&](const DecompRow& row, int scale) {
                std::vector<int> c;
                for (const auto& orbit : orbits) c.push_back(scale * row.coefficients[orbit.front()]);
                return c;
            };
            FusionPattern pattern;
            pattern.column_orbits = orbits;
            pattern.unconstrained_columns = unconstrained;
            for (std::size_t s = 0; s < self_types.size(); ++s) {
                const auto& row = types.rows[self_types[s]];
                const auto fixed = row.multiplicity - 2 * self_pairs[s];
                if (fixed > 0) {
                    d_B.rows.push_back({row.degree, restrict_coefficients(row, 1), 2 * fixed});
                    pattern.row_orbits.push_back({self_types[s], std::nullopt, fixed});
                }
                if (self_pairs[s] > 0) {
                    d_B.rows.push_back({2 * row.degree, restrict_coefficients(row, 2), self_pairs[s]});
                    pattern.row_orbits.push_back({self_types[s], self_types[s], self_pairs[s]});
                }
            }
            for (std::size_t r = 0; r < t; ++r) {
                if (image[r] == r || r > image[r]) continue;
                const auto& row = types.rows[r];
                const auto& partner = types.rows[image[r]];
                std::vector<int> c;
                for (const auto& orbit : orbits) {
                    c.push_back(row.coefficients[orbit.front()] + partner.coefficients[orbit.front()]);
                }
                d_B.rows.push_back({2 * row.degree, std::move(c), row.multiplicity});
                pattern.row_orbits.push_back({r, image[r], row.multiplicity});
            }
            if (!detail::columns_nonzero(d_B) || !detail::passes_target(d_B, options)) return;
            detail::insert_candidate(out, std::move(pattern), std::move(d_B));
        };

        std::function<void(std::size_t, std::uint64_t)> distribute = [&](std::size_t s, std::uint64_t remaining) {
            if (s == self_types.size()) {
                if (remaining == 0) emit();
                return;
            }
            std::uint64_t capacity = 0;
            for (std::size_t u = s + 1; u < self_types.size(); ++u) capacity += types.rows[self_types[u]].multiplicity / 2;
            const auto most = std::min<std::uint64_t>(remaining, types.rows[self_types[s]].multiplicity / 2);
            for (std::uint64_t p = 0; p <= most; ++p) {
                if (remaining - p > capacity) continue;
                self_pairs[s] = p;
                distribute(s + 1, remaining - p);
            }
            self_pairs[s] = 0;
        };
        distribute(0, pairs_needed);
    }
    detail::sort_candidates(out);
    return out;
}

/// Candidate matrices for a block of N covered by the block of G with matrix d_B, given
/// the target counts k_b and l_b. Every candidate d_b returned satisfies: inducing d_b
/// back to k(d_B), l(d_B) yields d_B up to canonical form; the pattern returned is that
/// induction.
inline std::vector<CliffordCandidate> restrict_candidates(const DecompMatrix& d_B, std::uint64_t k_b, std::size_t l_b,
                                                          const CliffordOptions& options = {}) {
    validate(d_B);
    const auto types = detail::merge_stable(d_B);
    const auto L = types.columns();
    std::vector<CliffordCandidate> out;
    if (l_b < L || l_b > 2 * L) {
        return out;
    }
    const auto split_count = l_b - L;
    const auto target = canonical(d_B);
    std::uint64_t explored = 0;
    std::vector<DecompMatrix> seen;

    // Subsets of G-columns whose Brauer character restricts to a conjugate pair.
    std::vector<std::vector<bool>> subsets;
    for (std::uint32_t mask = 0; mask < (1u << L); ++mask) {
        if (static_cast<std::size_t>(__builtin_popcount(mask)) != split_count) continue;
        std::vector<bool> split(L);
        for (std::size_t j = 0; j < L; ++j) split[j] = (mask >> j) & 1u;
        subsets.push_back(std::move(split));
    }

    for (const auto& split : subsets) {
        bool ok = true;
        for (std::size_t j = 0; j < L; ++j) {
            if (split[j] && types.brauer[j] && *types.brauer[j] % 2 != 0) ok = false;
        }
        if (!ok) continue;

        // Per row type, the ways a fused instance can distribute its split columns.
        struct TypeChoices {
            bool can_fuse = false;
            std::vector<std::vector<int>> options;  // values on split columns, up to swapping with the conjugate
        };
        std::vector<TypeChoices> choices(types.rows.size());
        for (std::size_t r = 0; r < types.rows.size(); ++r) {
            const auto& row = types.rows[r];
            bool can_fuse = row.degree % 2 == 0;
            std::vector<std::size_t> split_columns;
            for (std::size_t j = 0; j < L; ++j) {
                if (split[j]) {
                    split_columns.push_back(j);
                } else if (row.coefficients[j] % 2 != 0) {
                    can_fuse = false;
                }
            }
            choices[r].can_fuse = can_fuse;
            if (!can_fuse) continue;
            std::vector<int> x(split_columns.size(), 0);
            std::function<void(std::size_t)> enumerate = [&](std::size_t i) {
                if (i == split_columns.size()) {
                    std::vector<int> flipped;
                    for (std::size_t u = 0; u < x.size(); ++u) flipped.push_back(row.coefficients[split_columns[u]] - x[u]);
                    if (x <= flipped) choices[r].options.push_back(x);
                    return;
                }
                for (int v = 0; v <= row.coefficients[split_columns[i]]; ++v) {
                    x[i] = v;
                    enumerate(i + 1);
                }
            };
            enumerate(0);
        }

        // fused[r][o]: number of instances of type r fused with option o.
        std::vector<std::vector<std::uint64_t>> fused(types.rows.size());
        for (std::size_t r = 0; r < types.rows.size(); ++r) fused[r].assign(choices[r].options.size(), 0);

        auto emit = [&]() {
            if (++explored > options.cap) throw SearchLimitExceeded(options.cap);
            DecompMatrix d_b;
            for (std::size_t j = 0; j < L; ++j) {
                if (!split[j]) {
                    d_b.brauer.push_back(types.brauer[j]);
                } else {
                    std::optional<BigInt> half;
                    if (types.brauer[j]) half = *types.brauer[j] / 2;
                    d_b.brauer.push_back(half);
                    d_b.brauer.push_back(half);
                }
            }
            for (std::size_t r = 0; r < types.rows.size(); ++r) {
                const auto& row = types.rows[r];
                std::uint64_t fused_total = 0;
                for (auto f : fused[r]) fused_total += f;
                const auto extended = (row.multiplicity - fused_total) / 2;
                if (extended > 0) {
                    std::vector<int> c;
                    for (std::size_t j = 0; j < L; ++j) {
                        c.push_back(row.coefficients[j]);
                        if (split[j]) c.push_back(row.coefficients[j]);
                    }
                    d_b.rows.push_back({row.degree, std::move(c), extended});
                }
                for (std::size_t o = 0; o < fused[r].size(); ++o) {
                    if (fused[r][o] == 0) continue;
                    const auto& x = choices[r].options[o];
                    std::vector<int> psi;
                    std::vector<int> conjugate;
                    std::size_t s = 0;
                    for (std::size_t j = 0; j < L; ++j) {
                        const int c = row.coefficients[j];
                        if (split[j]) {
                            psi.push_back(x[s]);
                            psi.push_back(c - x[s]);
                            conjugate.push_back(c - x[s]);
                            conjugate.push_back(x[s]);
                            ++s;
                        } else {
                            psi.push_back(c / 2);
                            conjugate.push_back(c / 2);
                        }
                    }
                    d_b.rows.push_back({row.degree / 2, std::move(psi), fused[r][o]});
                    d_b.rows.push_back({row.degree / 2, std::move(conjugate), fused[r][o]});
                }
            }
            if (!detail::columns_nonzero(d_b) || !detail::passes_target(d_b, options)) return;
            auto candidate = canonical(d_b);
            if (std::find(seen.begin(), seen.end(), candidate) != seen.end()) return;
            seen.push_back(candidate);
            // Round trip: the induction of the candidate must reproduce d_B.
            for (auto& induced : induce_candidates(candidate, types.k(), L, CliffordOptions{options.cap, {}})) {
                if (induced.matrix == target) {
                    out.push_back({std::move(induced.pattern), std::move(candidate)});
                    return;
                }
            }
        };

        // Backtracking over row types; k_b counts extended pairs once and fused rows twice.
        std::function<void(std::size_t, std::uint64_t)> assign = [&](std::size_t r, std::uint64_t k_so_far) {
            if (r == types.rows.size()) {
                if (k_so_far == k_b) emit();
                return;
            }
            const auto m = types.rows[r].multiplicity;
            const auto& opts = choices[r].options;
            // Distribute j fused instances over the options (multiset), j with m - j even.
            std::function<void(std::size_t, std::uint64_t)> spread = [&](std::size_t o, std::uint64_t left) {
                if (o + 1 >= opts.size()) {
                    if (!opts.empty()) fused[r][opts.size() - 1] = left;
                    std::uint64_t total = 0;
                    for (auto f : fused[r]) total += f;
                    const auto contribution = (m - total) / 2 + 2 * total;
                    if (k_so_far + contribution <= k_b) assign(r + 1, k_so_far + contribution);
                    if (!opts.empty()) fused[r][opts.size() - 1] = 0;
                    return;
                }
                for (std::uint64_t f = 0; f <= left; ++f) {
                    fused[r][o] = f;
                    spread(o + 1, left - f);
                }
                fused[r][o] = 0;
            };
            for (std::uint64_t j = (m % 2); j <= m; j += 2) {
                if (j > 0 && (!choices[r].can_fuse || opts.empty())) break;
                const auto contribution = (m - j) / 2 + 2 * j;
                if (k_so_far + contribution > k_b) break;
                spread(0, j);
            }
        };
        assign(0, 0);
    }
    detail::sort_candidates(out);
    return out;
}

}  // namespace tame
