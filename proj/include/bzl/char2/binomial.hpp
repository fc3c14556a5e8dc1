#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "bzl/gf2/bitvec.hpp"

namespace bzl::char2 {

/// Parity of C(a, b) by Lucas' theorem for p = 2.
constexpr bool binom_mod2(std::uint64_t a, std::uint64_t b) noexcept { return b <= a && (a & b) == b; }

inline constexpr std::uint64_t kPascalOracleBound = std::uint64_t{1} << 20;

/// Rows of Pascal's triangle reduced mod 2, built by C(n+1,k) = C(n,k) + C(n,k-1).
///
/// Rows are generated on demand and kept, so repeated queries with nearby
/// numerators cost one row step each. Not thread-safe; use one instance per thread.
class PascalParity {
public:
    explicit PascalParity(std::uint64_t bound = kPascalOracleBound) : bound_(bound) {
        rows_.push_back(gf2::BitVec::from_bits({1}));
    }

    bool operator()(std::uint64_t a, std::uint64_t b) {
        if (a > bound_) throw std::out_of_range("PascalParity: numerator " + std::to_string(a) + " exceeds bound");
        if (b > a) return false;
        return row(a).get(b);
    }

    const gf2::BitVec& row(std::uint64_t a) {
        while (rows_.size() <= a) {
            const auto& prev = rows_.back();
            gf2::BitVec next(prev.size() + 1);
            for (std::size_t k = prev.lowest(); k < prev.size(); k = prev.next_set(k + 1)) {
                next.flip(k);
                next.flip(k + 1);
            }
            rows_.push_back(std::move(next));
        }
        return rows_[a];
    }

private:
    std::uint64_t bound_;
    std::vector<gf2::BitVec> rows_;
};

/// Parity of C(a, b) by iterating Pascal's rule, no digit shortcut.
inline bool binom_mod2_oracle(std::uint64_t a, std::uint64_t b) {
    if (a > kPascalOracleBound) throw std::out_of_range("binom_mod2_oracle: a exceeds 2^20");
    if (b > a) return false;
    // Single row, updated in place right to left.
    std::vector<std::uint8_t> row(static_cast<std::size_t>(a) + 1, 0);
    row[0] = 1;
    for (std::uint64_t n = 1; n <= a; ++n)
        for (std::uint64_t k = n; k >= 1; --k) row[k] ^= row[k - 1];
    return row[b] != 0;
}

/// Both sides of identity (I): sum_{j=0}^{s} C((Q-1)s + r, (Q-1)j + k) against C(r, k), mod 2.
struct IdentityISides {
    bool lhs = false;
    bool rhs = false;
    bool holds() const noexcept { return lhs == rhs; }
};

inline bool is_power_of_two(std::uint64_t v) noexcept { return v != 0 && (v & (v - 1)) == 0; }

inline IdentityISides identity_I_check(std::uint64_t Q, std::uint64_t s, std::uint64_t r, std::uint64_t k,
                                       PascalParity& pascal) {
    if (!is_power_of_two(Q) || Q < 2) throw std::invalid_argument("identity_I_check: Q must be 2^w with w >= 1");
    if (r > Q - 2 || k > Q - 2) throw std::out_of_range("identity_I_check: r and k must lie in [0, Q-2]");
    const std::uint64_t n = (Q - 1) * s + r;
    IdentityISides out;
    for (std::uint64_t j = 0; j <= s; ++j) out.lhs ^= pascal(n, (Q - 1) * j + k);
    out.rhs = binom_mod2(r, k);
    return out;
}

inline IdentityISides identity_I_check(std::uint64_t Q, std::uint64_t s, std::uint64_t r, std::uint64_t k) {
    PascalParity pascal;
    return identity_I_check(Q, s, r, k, pascal);
}

}  // namespace bzl::char2
