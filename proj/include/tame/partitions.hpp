// include/tame/partitions.hpp - hook/core calculus for blocks of symmetric groups.

#pragma once

#include <algorithm>
#include <charconv>
#include <compare>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace tame {

/// An integer partition: weakly decreasing positive parts. Immutable once built.
class Partition {
  public:
    Partition() = default;

    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] < 1) {
                throw std::invalid_argument("partition parts must be positive");
            }
            if (i > 0 && parts_[i] > parts_[i - 1]) {
                throw std::invalid_argument("partition parts must be weakly decreasing");
            }
        }
    }

    /// The staircase (t, t-1, ..., 1).
    static Partition staircase(int t) {
        std::vector<int> parts;
        for (int part = t; part >= 1; --part) {
            parts.push_back(part);
        }
        return Partition(std::move(parts));
    }

    /// Parses "8,1"; "-" (or the empty string) is the empty partition.
    static Partition parse(std::string_view text) {
        if (text.empty() || text == "-") {
            return {};
        }
        std::vector<int> parts;
        std::size_t pos = 0;
        while (pos <= text.size()) {
            auto comma = text.find(',', pos);
            auto field = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
            int value = 0;
            auto [end, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
            if (field.empty() || ec != std::errc{} || end != field.data() + field.size()) {
                throw std::invalid_argument("malformed partition '" + std::string(text) + "'");
            }
            parts.push_back(value);
            if (comma == std::string_view::npos) {
                break;
            }
            pos = comma + 1;
        }
        return Partition(std::move(parts));
    }

    std::span<const int> parts() const noexcept { return parts_; }
    std::size_t length() const noexcept { return parts_.size(); }
    bool empty() const noexcept { return parts_.empty(); }
    int size() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), 0); }

    std::string to_string() const {
        if (parts_.empty()) {
            return "-";
        }
        std::string out;
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i > 0) {
                out += ',';
            }
            out += std::to_string(parts_[i]);
        }
        return out;
    }

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition&, const Partition&) = default;

  private:
    std::vector<int> parts_;
};

struct CoreWeight {
    Partition core;
    int weight = 0;

    friend bool operator==(const CoreWeight&, const CoreWeight&) = default;
};

/// Removes all ell-rim-hooks using the abacus: slide every bead on each runner as
/// far up as it goes. The weight counts the single-step slides.
inline CoreWeight ell_core(const Partition& lambda, int ell) {
    if (ell < 2) {
        throw std::invalid_argument("ell_core: ell must be at least 2");
    }
    const auto parts = lambda.parts();
    const int length = static_cast<int>(parts.size());
    // beta-numbers: lambda_i + (length - 1 - i), distinct and strictly decreasing.
    std::vector<int> beads_on_runner(ell, 0);
    int weight = 0;
    for (int i = 0; i < length; ++i) {
        int beta = parts[i] + (length - 1 - i);
        beads_on_runner[beta % ell] += 1;
        weight += beta / ell;
    }
    std::vector<int> betas;
    betas.reserve(length);
    for (int runner = 0; runner < ell; ++runner) {
        for (int level = 0; level < beads_on_runner[runner]; ++level) {
            betas.push_back(level * ell + runner);
            weight -= level;
        }
    }
    std::sort(betas.begin(), betas.end(), std::greater<>());
    std::vector<int> core;
    for (int i = 0; i < length; ++i) {
        int part = betas[i] - (length - 1 - i);
        if (part > 0) {
            core.push_back(part);
        }
    }
    return {Partition(std::move(core)), weight};
}

/// t when lambda is the staircase (t, ..., 1); the empty partition gives 0.
inline std::optional<int> is_triangular(const Partition& lambda) {
    const auto parts = lambda.parts();
    const int t = static_cast<int>(parts.size());
    for (int i = 0; i < t; ++i) {
        if (parts[i] != t - i) {
            return std::nullopt;
        }
    }
    return t;
}

/// t with t(t+1)/2 == m, if any.
inline std::optional<int> triangular_root(long long m) {
    if (m < 0) {
        return std::nullopt;
    }
    long long t = 0;
    while (t * (t + 1) / 2 < m) {
        ++t;
    }
    if (t * (t + 1) / 2 == m) {
        return static_cast<int>(t);
    }
    return std::nullopt;
}

/// 2-blocks of Sym(n) of weight w, labelled by their 2-cores (the staircases of size n - 2w).
inline std::vector<Partition> sym_blocks_of_weight(int n, int w) {
    if (n < 1 || w < 0) {
        throw std::invalid_argument("sym_blocks_of_weight: need n >= 1 and w >= 0");
    }
    auto t = triangular_root(static_cast<long long>(n) - 2LL * w);
    if (!t) {
        return {};
    }
    return {Partition::staircase(*t)};
}

/// Whether Alt(n) has a 2-block with dihedral defect groups of order at least 8:
/// n = 6, or n - 6 a triangular number t >= 1.
inline bool alt_dihedral_block_exists(int n) {
    if (n < 5) {
        throw std::invalid_argument("alt_dihedral_block_exists: need n >= 5");
    }
    if (n == 6) {
        return true;
    }
    auto t = triangular_root(n - 6);
    return t.has_value() && *t >= 1;
}

/// All partitions of n in reverse lexicographic order.
inline std::vector<Partition> partitions_of(int n) {
    if (n < 0) {
        throw std::invalid_argument("partitions_of: n must be nonnegative");
    }
    std::vector<Partition> out;
    std::vector<int> current;
    auto recurse = [&](auto&& self, int remaining, int max_part) -> void {
        if (remaining == 0) {
            out.emplace_back(current);
            return;
        }
        for (int part = std::min(remaining, max_part); part >= 1; --part) {
            current.push_back(part);
            self(self, remaining - part, part);
            current.pop_back();
        }
    };
    recurse(recurse, n, n);
    return out;
}

}  // namespace tame
