#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "bzl/gf2/echelon.hpp"
#include "bzl/lie/presentation.hpp"

namespace bzl::lie::oracle {

using gf2::BitVec;

inline constexpr int kMaxOracleClass = 14;

/// Moebius function by trial division.
inline int moebius(std::uint64_t n) {
    int mu = 1;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        n /= p;
        if (n % p == 0) return 0;
        mu = -mu;
    }
    return n > 1 ? -mu : mu;
}

/// Witt's formula for the degree-n component of the free Lie algebra on r generators.
inline std::uint64_t witt_dimension(unsigned n, std::uint64_t r = 2) {
    if (n == 0) throw std::invalid_argument("witt_dimension: n must be positive");
    std::int64_t acc = 0;
    for (unsigned d = 1; d <= n; ++d) {
        if (n % d != 0) continue;
        std::int64_t pw = 1;
        for (unsigned t = 0; t < n / d; ++t) pw *= static_cast<std::int64_t>(r);
        acc += moebius(d) * pw;
    }
    return static_cast<std::uint64_t>(acc / static_cast<std::int64_t>(n));
}

/// Lyndon words of length n over {0 < 1}, Duval's generation order.
inline std::vector<std::vector<int>> lyndon_words(int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> w{-1};
    while (!w.empty()) {
        ++w.back();
        if (static_cast<int>(w.size()) == n) out.push_back(w);
        const std::size_t m = w.size();
        while (static_cast<int>(w.size()) < n) w.push_back(w[w.size() - m]);
        while (!w.empty() && w.back() == 1) w.pop_back();
    }
    return out;
}

/// Homogeneous element of degree n of the free associative algebra on x, y:
/// coordinate idx is the word whose first letter is the most significant bit
/// (x = 0, y = 1).
struct AssocPoly {
    int degree = 1;
    BitVec c;
};

inline AssocPoly letter_poly(Symbol s) {
    AssocPoly p{1, BitVec(2)};
    if (s != Symbol::Y) p.c.flip(0);
    if (s != Symbol::X) p.c.flip(1);
    return p;
}

/// Commutator a*b + b*a in characteristic two.
inline AssocPoly commutator(const AssocPoly& a, const AssocPoly& b) {
    const int n = a.degree + b.degree;
    if (n > 30) throw std::out_of_range("oracle: degree too large");
    AssocPoly out{n, BitVec(std::size_t{1} << n)};
    for (std::size_t i = a.c.lowest(); i < a.c.size(); i = a.c.next_set(i + 1))
        for (std::size_t j = b.c.lowest(); j < b.c.size(); j = b.c.next_set(j + 1)) {
            out.c.flip((i << b.degree) | j);
            out.c.flip((j << a.degree) | i);
        }
    return out;
}

/// Left-normed commutator of a letter sequence, realised in the associative algebra.
inline AssocPoly lie_polynomial(const std::vector<Symbol>& letters) {
    if (letters.empty()) throw std::invalid_argument("lie_polynomial: empty word");
    AssocPoly p = letter_poly(letters.front());
    for (std::size_t i = 1; i < letters.size(); ++i) p = commutator(p, letter_poly(letters[i]));
    return p;
}

/// Standard bracketing of a Lyndon word: [P(u), P(v)] with v its longest proper Lyndon suffix.
inline AssocPoly lyndon_polynomial(const std::vector<int>& w) {
    if (w.size() == 1) return letter_poly(w[0] == 0 ? Symbol::X : Symbol::Y);
    auto is_lyndon = [](const std::vector<int>& u) {
        for (std::size_t k = 1; k < u.size(); ++k) {
            std::vector<int> rot(u.begin() + static_cast<std::ptrdiff_t>(k), u.end());
            rot.insert(rot.end(), u.begin(), u.begin() + static_cast<std::ptrdiff_t>(k));
            if (!(u < rot)) return false;
        }
        return true;
    };
    for (std::size_t k = 1; k < w.size(); ++k) {
        std::vector<int> v(w.begin() + static_cast<std::ptrdiff_t>(k), w.end());
        if (is_lyndon(v)) {
            std::vector<int> u(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(k));
            return commutator(lyndon_polynomial(u), lyndon_polynomial(v));
        }
    }
    throw std::logic_error("lyndon_polynomial: no Lyndon suffix");
}

/// Per-degree dims (index 0 = degree 1) of the free class-bounded quotient by the
/// relator ideal, computed inside the free associative algebra.
inline std::vector<std::size_t> free_nq_oracle(const Presentation& p, int class_bound) {
    if (class_bound < 1) throw std::invalid_argument("free_nq_oracle: class bound must be positive");
    if (class_bound > kMaxOracleClass)
        throw std::out_of_range("free_nq_oracle: class bound above " + std::to_string(kMaxOracleClass));
    std::vector<std::size_t> dims;
    gf2::EchelonBasis ideal(2);
    for (int n = 1; n <= class_bound; ++n) {
        const std::size_t len = std::size_t{1} << n;
        std::vector<BitVec> hall;
        for (const auto& w : lyndon_words(n)) hall.push_back(lyndon_polynomial(w).c);
        const std::size_t lie_dim = gf2::rank(hall, len);
        gf2::EchelonBasis next(len);
        if (n >= 2) {
            for (const auto& row : ideal.rows())
                for (Symbol s : {Symbol::X, Symbol::Y})
                    next.insert(commutator(AssocPoly{n - 1, row}, letter_poly(s)).c);
        }
        for (const auto& w : p.relators)
            if (w.weight() == static_cast<std::size_t>(n)) next.insert(lie_polynomial(w.letters()).c);
        ideal = std::move(next);
        dims.push_back(lie_dim - ideal.rank());
    }
    return dims;
}

}  // namespace bzl::lie::oracle
