// include/tame/polyq.hpp - exact integer polynomials in q: cyclotomic polynomials,
// root bounds and degree-coincidence checks.

#pragma once

#include "tame/integer.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace tame {

/// Coefficient i multiplies q^i. The highest stored coefficient is nonzero; the zero
/// polynomial has no coefficients.
class IntPoly {
  public:
    IntPoly() = default;
    explicit IntPoly(std::vector<BigInt> coefficients) : coefficients_(std::move(coefficients)) { trim(); }
    IntPoly(std::int64_t constant) : coefficients_{BigInt(constant)} { trim(); }  // NOLINT(google-explicit-constructor)

    static IntPoly q() { return IntPoly({BigInt(0), BigInt(1)}); }

    /// c * q^power
    static IntPoly monomial(const BigInt& c, std::size_t power) {
        std::vector<BigInt> coefficients(power + 1, BigInt(0));
        coefficients[power] = c;
        return IntPoly(std::move(coefficients));
    }

    const std::vector<BigInt>& coefficients() const { return coefficients_; }
    bool is_zero() const { return coefficients_.empty(); }

    /// Degree; -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coefficients_.size()) - 1; }

    const BigInt& leading() const {
        if (is_zero()) throw std::domain_error("zero polynomial has no leading coefficient");
        return coefficients_.back();
    }

    BigInt coefficient(std::size_t power) const {
        return power < coefficients_.size() ? coefficients_[power] : BigInt(0);
    }

    BigInt eval(const BigInt& at) const {
        BigInt value = 0;
        for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) value = value * at + *it;
        return value;
    }

    IntPoly operator-() const {
        auto out = *this;
        for (auto& c : out.coefficients_) c = -c;
        return out;
    }

    friend IntPoly operator+(const IntPoly& a, const IntPoly& b) {
        std::vector<BigInt> out(std::max(a.coefficients_.size(), b.coefficients_.size()), BigInt(0));
        for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.coefficient(i) + b.coefficient(i);
        return IntPoly(std::move(out));
    }

    friend IntPoly operator-(const IntPoly& a, const IntPoly& b) { return a + (-b); }

    friend IntPoly operator*(const IntPoly& a, const IntPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<BigInt> out(a.coefficients_.size() + b.coefficients_.size() - 1, BigInt(0));
        for (std::size_t i = 0; i < a.coefficients_.size(); ++i) {
            for (std::size_t j = 0; j < b.coefficients_.size(); ++j) out[i + j] += a.coefficients_[i] * b.coefficients_[j];
        }
        return IntPoly(std::move(out));
    }

    friend bool operator==(const IntPoly&, const IntPoly&) = default;

  private:
    void trim() {
        while (!coefficients_.empty() && coefficients_.back() == 0) coefficients_.pop_back();
    }

    std::vector<BigInt> coefficients_;
};

/// Quotient and remainder over Z. Throws std::domain_error when the division leaves the
/// integers, which cannot happen for a monic divisor.
inline std::pair<IntPoly, IntPoly> divmod(const IntPoly& numerator, const IntPoly& divisor) {
    if (divisor.is_zero()) throw std::domain_error("division by the zero polynomial");
    auto remainder = numerator.coefficients();
    const auto& d = divisor.coefficients();
    if (numerator.degree() < divisor.degree()) return {IntPoly{}, numerator};
    std::vector<BigInt> quotient(remainder.size() - d.size() + 1, BigInt(0));
    for (std::size_t i = quotient.size(); i-- > 0;) {
        const BigInt& top = remainder[i + d.size() - 1];
        if (top % d.back() != 0) throw std::domain_error("polynomial division is not exact over the integers");
        quotient[i] = top / d.back();
        for (std::size_t j = 0; j < d.size(); ++j) remainder[i + j] -= quotient[i] * d[j];
    }
    return {IntPoly(std::move(quotient)), IntPoly(std::move(remainder))};
}

/// Throws std::domain_error unless divisor divides numerator exactly.
inline IntPoly exact_divide(const IntPoly& numerator, const IntPoly& divisor) {
    auto [quotient, remainder] = divmod(numerator, divisor);
    if (!remainder.is_zero()) throw std::domain_error("polynomial division leaves a remainder");
    return quotient;
}

inline BigInt eval(const IntPoly& p, const BigInt& at) { return p.eval(at); }

inline std::string to_string(const IntPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (int i = p.degree(); i >= 0; --i) {
        const BigInt& c = p.coefficients()[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        const BigInt magnitude = abs(c);
        if (out.empty()) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? "-" : "+";
        }
        if (i == 0 || magnitude != 1) out += magnitude.str();
        if (i >= 1) out += "q";
        if (i >= 2) out += "^" + std::to_string(i);
    }
    return out;
}

/// Parses text such as "q^2+q-1", "2*q^3 - 7q + 3" or "-q". Whitespace is ignored.
inline IntPoly parse_poly(std::string_view text) {
    std::string s;
    for (char ch : text) {
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    }
    if (s.empty()) throw std::invalid_argument("empty polynomial");
    auto fail = [&](std::size_t at, const std::string& what) {
        throw std::invalid_argument("polynomial '" + std::string(text) + "' at offset " + std::to_string(at) + ": " +
                                    what);
    };
    auto digits = [&](std::size_t& i) {
        const auto start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        return s.substr(start, i - start);
    };
    IntPoly out;
    std::size_t i = 0;
    bool first = true;
    while (i < s.size()) {
        int sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            sign = s[i] == '-' ? -1 : 1;
            ++i;
        } else if (!first) {
            fail(i, "expected '+' or '-'");
        }
        first = false;
        BigInt coefficient = 1;
        bool has_coefficient = false;
        if (auto number = digits(i); !number.empty()) {
            coefficient = BigInt(number);
            has_coefficient = true;
        }
        std::size_t power = 0;
        if (i < s.size() && s[i] == '*') {
            if (!has_coefficient) fail(i, "'*' without a coefficient");
            ++i;
            if (i >= s.size() || s[i] != 'q') fail(i, "expected 'q' after '*'");
        }
        if (i < s.size() && s[i] == 'q') {
            ++i;
            power = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                auto exponent = digits(i);
                if (exponent.empty()) fail(i, "expected an exponent after '^'");
                power = static_cast<std::size_t>(std::stoul(exponent));
            }
        } else if (!has_coefficient) {
            fail(i, "expected a coefficient or 'q'");
        }
        out = out + IntPoly::monomial(sign * coefficient, power);
    }
    return out;
}

/// The d-th cyclotomic polynomial: q^d - 1 divided by the product of Phi_e over the
/// proper divisors e of d. Results are memoized.
inline IntPoly cyclotomic(int d) {
    if (d < 1) throw std::invalid_argument("cyclotomic: d must be at least 1");
    static std::mutex lock;
    static std::map<int, IntPoly> memo;
    {
        std::lock_guard guard(lock);
        if (auto it = memo.find(d); it != memo.end()) return it->second;
    }
    IntPoly result = IntPoly::monomial(1, static_cast<std::size_t>(d)) - IntPoly(1);
    for (int e = 1; e < d; ++e) {
        if (d % e == 0) result = exact_divide(result, cyclotomic(e));
    }
    std::lock_guard guard(lock);
    memo.emplace(d, result);
    return result;
}

inline int euler_totient(int d) {
    int out = d;
    for (int p = 2; p * p <= d; ++p) {
        if (d % p == 0) {
            while (d % p == 0) d /= p;
            out -= out / p;
        }
    }
    if (d > 1) out -= out / d;
    return out;
}

/// d with p = Phi_d, if any. Only d with totient(d) = deg p and d <= 2 deg(p)^2 qualify.
inline std::optional<int> is_cyclotomic(const IntPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("is_cyclotomic: zero polynomial");
    const int degree = p.degree();
    if (degree < 1) return std::nullopt;
    for (int d = 1; d <= 2 * degree * degree; ++d) {
        if (euler_totient(d) == degree && cyclotomic(d) == p) return d;
    }
    return std::nullopt;
}

namespace detail {

inline void require_nonconstant(const IntPoly& p, const char* who) {
    if (p.degree() < 1) throw std::domain_error(std::string(who) + ": polynomial must be nonconstant");
}

inline BigInt max_abs_coefficient(const IntPoly& p, bool skip_leading) {
    BigInt best = 0;
    const auto count = p.coefficients().size() - (skip_leading ? 1 : 0);
    for (std::size_t i = 0; i < count; ++i) best = std::max(best, BigInt(abs(p.coefficients()[i])));
    return best;
}

}  // namespace detail

/// 2 max|c_i| / |c_lead|, taken over all coefficients including the leading one.
inline Rational root_bound(const IntPoly& p) {
    detail::require_nonconstant(p, "root_bound");
    return Rational(2 * detail::max_abs_coefficient(p, false), abs(p.leading()));
}

/// 1 + max|c_i| / |c_lead| over the non-leading coefficients.
inline Rational cauchy_bound(const IntPoly& p) {
    detail::require_nonconstant(p, "cauchy_bound");
    return Rational(1) + Rational(detail::max_abs_coefficient(p, true), abs(p.leading()));
}

/// Smallest integer at least r.
inline BigInt ceil(const Rational& r) {
    BigInt q = numerator(r) / denominator(r);
    if (q * denominator(r) < numerator(r)) ++q;
    return q;
}

/// Positive integer roots in increasing order, found by evaluating at 1..ceil(root_bound).
/// A nonzero constant has none. Any root r satisfies |r| <= cauchy_bound <= root_bound.
inline std::vector<BigInt> positive_integer_roots(const IntPoly& p) {
    if (p.is_zero()) throw std::domain_error("positive_integer_roots: every value is a root of the zero polynomial");
    std::vector<BigInt> roots;
    if (p.degree() < 1) return roots;
    // Roots divide the lowest nonzero coefficient, so huge bounds need not be scanned.
    std::size_t low = 0;
    while (p.coefficients()[low] == 0) ++low;
    const BigInt limit = std::min(ceil(root_bound(p)), BigInt(abs(p.coefficients()[low])));
    for (BigInt r = 1; r <= limit; ++r) {
        if (p.coefficients()[low] % r != 0) continue;
        if (p.eval(r) == 0) roots.push_back(r);
    }
    return roots;
}

struct Coincidence {
    /// nullopt when the table entry equals the candidate identically.
    std::optional<BigInt> q;
    std::size_t index = 0;

    friend bool operator==(const Coincidence&, const Coincidence&) = default;
};

/// Every (q0, i) with table[i](q0) = candidate(q0) and q0 >= q_min, in table order then
/// increasing q0. An identical entry is reported once with q unset.
inline std::vector<Coincidence> degree_coincides(const IntPoly& candidate, const std::vector<IntPoly>& table,
                                                 const BigInt& q_min = 2) {
    if (table.empty()) throw std::invalid_argument("degree_coincides: empty table");
    std::vector<Coincidence> out;
    for (std::size_t i = 0; i < table.size(); ++i) {
        const auto difference = table[i] - candidate;
        if (difference.is_zero()) {
            out.push_back({std::nullopt, i});
            continue;
        }
        for (const auto& root : positive_integer_roots(difference)) {
            if (root >= q_min) out.push_back({root, i});
        }
    }
    return out;
}

/// Degree polynomials of small rank-one groups. Only integral polynomials are listed, so
/// the PSL2 characters of degree (q+-1)/2 are absent.
struct PolyTable {
    std::string name;
    std::vector<IntPoly> degrees;
};

inline const std::vector<PolyTable>& bundled_poly_tables() {
    static const std::vector<PolyTable> tables = [] {
        std::vector<IntPoly> rank_one{parse_poly("1"), parse_poly("q"), parse_poly("q+1"), parse_poly("q-1")};
        return std::vector<PolyTable>{
            {"psl2", rank_one},
            {"pgl2", rank_one},
            {"gl2", rank_one},
            {"gu2", rank_one},
        };
    }();
    return tables;
}

inline const PolyTable& bundled_poly_table(std::string_view name) {
    for (const auto& table : bundled_poly_tables()) {
        if (table.name == name) return table;
    }
    throw std::invalid_argument("no bundled polynomial table '" + std::string(name) + "'");
}

}  // namespace tame
