#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "bzl/char2/binomial.hpp"

namespace bzl::char2 {

namespace detail {

inline int poly_degree(std::uint32_t p) noexcept { return p == 0 ? -1 : 31 - std::countl_zero(p); }

inline std::uint32_t poly_mod(std::uint32_t a, std::uint32_t m) noexcept {
    const int dm = poly_degree(m);
    for (int da = poly_degree(a); da >= dm; da = poly_degree(a)) a ^= m << (da - dm);
    return a;
}

}  // namespace detail

/// True iff p (bitmask, bit i = coefficient of t^i) has no factor of degree 1..deg(p)-1.
inline bool is_irreducible(std::uint32_t p) {
    const int deg = detail::poly_degree(p);
    if (deg < 1) return false;
    for (std::uint32_t f = 2; detail::poly_degree(f) < deg; ++f)
        if (detail::poly_mod(p, f) == 0) return false;
    return true;
}

/// The finite field GF(2^w), elements as bitmasks of polynomial residues.
class GF2wField {
public:
    static constexpr unsigned kMaxDegree = 16;

    /// Uses the numerically smallest irreducible modulus of degree w.
    explicit GF2wField(unsigned w) : w_(w) {
        if (w < 1 || w > kMaxDegree) throw std::invalid_argument("GF2wField: degree must be in [1,16]");
        for (std::uint32_t p = std::uint32_t{1} << w;; ++p) {
            if (is_irreducible(p)) {
                modulus_ = p;
                break;
            }
        }
    }

    GF2wField(unsigned w, std::uint32_t modulus) : w_(w), modulus_(modulus) {
        if (w < 1 || w > kMaxDegree) throw std::invalid_argument("GF2wField: degree must be in [1,16]");
        if (detail::poly_degree(modulus) != static_cast<int>(w))
            throw std::invalid_argument("GF2wField: modulus degree differs from w");
        if (!is_irreducible(modulus)) throw std::invalid_argument("GF2wField: modulus is reducible");
    }

    unsigned degree() const noexcept { return w_; }
    std::uint32_t modulus() const noexcept { return modulus_; }
    std::uint32_t order() const noexcept { return std::uint32_t{1} << w_; }

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const noexcept { return a ^ b; }

    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const noexcept {
        std::uint32_t acc = 0;
        const std::uint32_t top = std::uint32_t{1} << w_;
        while (b != 0) {
            if (b & 1U) acc ^= a;
            b >>= 1;
            a <<= 1;
            if (a & top) a ^= modulus_;
        }
        return acc;
    }

    std::uint32_t pow(std::uint32_t a, std::uint64_t e) const noexcept {
        std::uint32_t result = 1;
        while (e != 0) {
            if (e & 1U) result = mul(result, a);
            a = mul(a, a);
            e >>= 1;
        }
        return result;
    }

    std::uint32_t inverse(std::uint32_t a) const {
        if (a == 0) throw std::domain_error("GF2wField: zero has no inverse");
        return pow(a, order() - 2);
    }

private:
    unsigned w_;
    std::uint32_t modulus_ = 0;
};

/// Sum of alpha^z over the nonzero field elements, reported as 0 or 1.
inline bool power_sum_parity(const GF2wField& field, std::uint64_t z) {
    if (z == 0) throw std::invalid_argument("power_sum_parity: z must be positive");
    std::uint32_t sum = 0;
    for (std::uint32_t a = 1; a < field.order(); ++a) sum ^= field.pow(a, z);
    if (sum > 1) throw std::logic_error("power_sum_parity: power sum left the prime field");
    return sum == 1;
}

struct GlaisherSides {
    bool fieldside = false;
    bool binomside = false;
    bool agree() const noexcept { return fieldside == binomside; }
};

/// sum_{alpha != 0} (1+alpha)^n alpha^{-k} against sum_j C(n, (Q-1)j + k) mod 2, with n = (Q-1)s + r.
inline GlaisherSides glaisher_check(const GF2wField& field, std::uint64_t s, std::uint64_t r, std::uint64_t k,
                                    PascalParity& pascal) {
    const std::uint64_t Q = field.order();
    if (r > Q - 2 || k > Q - 2) throw std::out_of_range("glaisher_check: r and k must lie in [0, Q-2]");
    const std::uint64_t n = (Q - 1) * s + r;
    if (n == 0) throw std::invalid_argument("glaisher_check: n = (Q-1)s + r must be positive");
    std::uint32_t sum = 0;
    for (std::uint32_t a = 1; a < Q; ++a) {
        const std::uint32_t term = field.mul(field.pow(field.add(1, a), n), field.pow(field.inverse(a), k));
        sum ^= term;
    }
    if (sum > 1) throw std::logic_error("glaisher_check: field sum left the prime field");
    GlaisherSides out;
    out.fieldside = sum == 1;
    for (std::uint64_t j = 0; (Q - 1) * j + k <= n; ++j) out.binomside ^= pascal(n, (Q - 1) * j + k);
    return out;
}

inline GlaisherSides glaisher_check(const GF2wField& field, std::uint64_t s, std::uint64_t r, std::uint64_t k) {
    PascalParity pascal;
    return glaisher_check(field, s, r, k, pascal);
}

}  // namespace bzl::char2
