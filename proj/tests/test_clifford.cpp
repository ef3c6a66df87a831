#include "tame/clifford.hpp"
#include "tame/families.hpp"

#include <catch_amalgamated.hpp>

#include <numeric>

using tame::BigInt;
using tame::DecompMatrix;
using tame::Family;

namespace {

DecompMatrix template_matrix(Family family, const char* tag, int n, const std::vector<BigInt>& phi) {
    return tame::to_matrix(tame::decomp_template(family, tag, n), phi);
}

DecompMatrix su2_3() {
    const auto fb = tame::family_block(tame::GroupFamily::sl2, 3);
    return tame::to_matrix(tame::instantiate(*fb.solution->entry, fb.block.n), fb.solution->brauer_degrees);
}

DecompMatrix gu2_3() {
    DecompMatrix m;
    m.brauer = {BigInt(1), BigInt(2)};
    m.rows = {{BigInt(1), {1, 0}, 4}, {BigInt(3), {1, 1}, 4}, {BigInt(2), {0, 1}, 6}, {BigInt(4), {2, 1}, 2}};
    return m;
}

BigInt degree_sum(const DecompMatrix& m) {
    BigInt total = 0;
    for (const auto& row : m.rows) total += row.degree * row.multiplicity;
    return total;
}

bool contains(const std::vector<tame::CliffordCandidate>& candidates, const DecompMatrix& m) {
    const auto want = tame::canonical(m);
    return std::any_of(candidates.begin(), candidates.end(), [&](const auto& c) { return c.matrix == want; });
}

/// Recomputes d_B from d_b and a pattern by the consistency relation.
bool pattern_consistent(const DecompMatrix& d_b, const tame::CliffordCandidate& c) {
    const auto types = tame::detail::merge_stable(d_b);
    for (const auto& orbit : c.pattern.row_orbits) {
        for (const auto& cols : c.pattern.column_orbits) {
            std::optional<int> value;
            for (auto psi : cols) {
                int sum = types.rows[orbit.row].coefficients[psi];
                if (orbit.partner) sum += types.rows[*orbit.partner].coefficients[psi];
                if (value && *value != sum) return false;
                value = sum;
            }
        }
    }
    return true;
}

}  // namespace

TEST_CASE("duplicate_rows") {
    const auto m = su2_3();
    CHECK(tame::duplicate_rows(m, 1) == m);
    const auto doubled = tame::duplicate_rows(m, 2);
    REQUIRE(doubled.rows.size() == m.rows.size());
    for (std::size_t i = 0; i < m.rows.size(); ++i) CHECK(doubled.rows[i].multiplicity == 2 * m.rows[i].multiplicity);
    CHECK(doubled.brauer == m.brauer);
    DecompMatrix single;
    single.brauer = {BigInt(1)};
    single.rows = {{BigInt(1), {1}, 1}};
    CHECK(tame::duplicate_rows(single, 3).rows.front().multiplicity == 3);
    CHECK_THROWS_AS(tame::duplicate_rows(m, 0), std::invalid_argument);
}

TEST_CASE("doubled SU2(3) induces to the GU2(3) matrix") {
    const auto candidates = tame::induce_candidates(tame::duplicate_rows(su2_3(), 2), 16, 2);
    REQUIRE(candidates.size() == 1);
    CHECK(candidates.front().matrix == tame::canonical(gu2_3()));
}

TEST_CASE("3K induces with the last two columns fused") {
    const auto d_b = template_matrix(Family::dihedral, "3K", 3, {1, 3, 3});
    REQUIRE(d_b.k() == 5);
    const auto candidates = tame::induce_candidates(d_b, 7, 2);
    DecompMatrix want;
    want.brauer = {BigInt(1), BigInt(6)};
    want.rows = {{BigInt(1), {1, 0}, 2}, {BigInt(7), {1, 1}, 2}, {BigInt(6), {0, 1}, 3}};
    CHECK(contains(candidates, want));
    for (const auto& c : candidates) {
        CHECK(c.matrix.k() == 7);
        CHECK(c.matrix.columns() == 2);
    }
    // k = 2^(n-2)+3 at n = 4 is 7; no index-2 extension has eight characters and two columns.
    CHECK(tame::induce_candidates(d_b, 8, 2).empty());
}

TEST_CASE("distinct degrees induce by splitting every row") {
    DecompMatrix d_b;
    d_b.brauer = {BigInt(1), BigInt(4)};
    d_b.rows = {{BigInt(1), {1, 0}, 1}, {BigInt(5), {1, 1}, 1}, {BigInt(4), {0, 1}, 1}, {BigInt(9), {1, 2}, 1}};
    const auto candidates = tame::induce_candidates(d_b, 8, 2);
    REQUIRE(candidates.size() == 1);
    CHECK(candidates.front().matrix == tame::canonical(tame::duplicate_rows(d_b, 2)));
}

TEST_CASE("Sym(9) restricts to the 3B matrix of Alt(9)") {
    DecompMatrix sym;
    sym.brauer = {BigInt(8), BigInt(48), BigInt(160)};
    for (auto [d, row] : std::vector<std::pair<int, std::vector<int>>>{
             {8, {1, 0, 0}}, {56, {1, 1, 0}}, {168, {1, 0, 1}}, {216, {1, 1, 1}}, {48, {0, 1, 0}}}) {
        sym.rows.push_back({BigInt(d), row, 2});
    }
    const auto candidates = tame::restrict_candidates(sym, 5, 3);
    REQUIRE(candidates.size() == 1);
    CHECK(candidates.front().matrix == tame::canonical(template_matrix(Family::dihedral, "3B", 3, {8, 48, 160})));
}

TEST_CASE("GU2(3) restricts to the doubled SU2(3) matrix") {
    const auto doubled = tame::duplicate_rows(su2_3(), 2);
    REQUIRE(doubled.k() == 14);
    const auto candidates = tame::restrict_candidates(gu2_3(), 14, 3);
    CHECK(contains(candidates, doubled));
    // Thirty-two characters cannot lie below sixteen.
    CHECK(tame::restrict_candidates(gu2_3(), 32, 3).empty());
}

TEST_CASE("restriction candidates always induce back") {
    for (int n = 3; n <= 5; ++n) {
        const auto one_a = template_matrix(Family::dihedral, "1A", n, {1});
        const auto k = one_a.k();
        for (std::uint64_t k_b = k / 2; k_b <= 2 * k; ++k_b) {
            for (std::size_t l_b = 1; l_b <= 2; ++l_b) {
                for (const auto& c : tame::restrict_candidates(one_a, k_b, l_b)) {
                    CHECK(c.matrix.k() == k_b);
                    CHECK(contains(tame::induce_candidates(c.matrix, k, 1), one_a));
                }
            }
        }
    }
}

TEST_CASE("induction round trip and conservation laws") {
    std::vector<DecompMatrix> small{
        su2_3(),
        template_matrix(Family::dihedral, "1A", 3, {1}),
        template_matrix(Family::dihedral, "2A", 3, {1, 2}),
        template_matrix(Family::dihedral, "2B", 3, {1, 2}),
        template_matrix(Family::dihedral, "3A", 3, {1, 2, 2}),
        template_matrix(Family::dihedral, "3K", 3, {1, 3, 3}),
        template_matrix(Family::dihedral, "3B", 3, {1, 4, 4}),
    };
    for (const auto& d_b : small) {
        const auto k_b = d_b.k();
        const auto l_b = d_b.columns();
        for (std::uint64_t k_B = (k_b + 1) / 2; k_B <= 2 * k_b; ++k_B) {
            for (std::size_t l_B = (l_b + 1) / 2; l_B <= l_b; ++l_B) {
                for (const auto& c : tame::induce_candidates(d_b, k_B, l_B)) {
                    CHECK(c.matrix.k() == k_B);
                    CHECK(c.pattern.column_orbits.size() == l_B);
                    // Each orbit, split row or fused pair, contributes twice its degree.
                    const auto types = tame::detail::merge_stable(d_b);
                    std::uint64_t split = 0, fused = 0, rows = 0;
                    BigInt orbit_degrees = 0;
                    for (const auto& orbit : c.pattern.row_orbits) {
                        orbit_degrees += 2 * types.rows[orbit.row].degree * orbit.count;
                        if (orbit.partner) {
                            CHECK(types.rows[*orbit.partner].degree == types.rows[orbit.row].degree);
                            fused += orbit.count;
                            rows += 2 * orbit.count;
                        } else {
                            split += orbit.count;
                            rows += orbit.count;
                        }
                    }
                    CHECK(rows == k_b);
                    CHECK(k_B == 2 * split + fused);
                    CHECK(degree_sum(c.matrix) == orbit_degrees);
                    CHECK(pattern_consistent(d_b, c));
                    CHECK(contains(tame::restrict_candidates(c.matrix, k_b, l_b), d_b));
                }
            }
        }
    }
}

TEST_CASE("search cap and height target") {
    const auto d_b = tame::duplicate_rows(su2_3(), 2);
    CHECK_THROWS_AS(tame::induce_candidates(d_b, 16, 2, {1, {}}), tame::SearchLimitExceeded);
    const auto d_3k = template_matrix(Family::dihedral, "3K", 3, {1, 3, 3});
    tame::CliffordOptions wrong;
    wrong.target = tame::HeightTarget{Family::dihedral, 5};
    CHECK(tame::induce_candidates(d_3k, 7, 2, wrong).empty());
    tame::CliffordOptions right;
    right.target = tame::HeightTarget{Family::dihedral, 4};
    const auto kept = tame::induce_candidates(d_3k, 7, 2, right);
    CHECK_FALSE(kept.empty());
    for (const auto& c : kept) CHECK(tame::is_legal_histogram(tame::degree_height_histogram(c.matrix), 4));
}

TEST_CASE("degree height histogram") {
    const auto h = tame::degree_height_histogram(gu2_3());
    CHECK(h == std::map<int, std::uint64_t>{{0, 8}, {1, 6}, {2, 2}});
}
