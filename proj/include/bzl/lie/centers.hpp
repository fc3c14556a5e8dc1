#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "bzl/gf2/echelon.hpp"
#include "bzl/lie/graded_algebra.hpp"
#include "bzl/lie/nq.hpp"

namespace bzl::lie {

/// One subspace per degree 1..valid_up_to.
struct GradedSubspaceFamily {
    int valid_up_to = 0;
    std::vector<gf2::EchelonBasis> parts;

    const gf2::EchelonBasis& at(int n) const {
        if (n < 1 || n > valid_up_to) throw std::out_of_range("GradedSubspaceFamily: degree outside validity range");
        return parts[static_cast<std::size_t>(n - 1)];
    }

    static GradedSubspaceFamily zero(const GradedAlgebra& A, int valid_up_to) {
        GradedSubspaceFamily f;
        f.valid_up_to = valid_up_to;
        for (int n = 1; n <= valid_up_to; ++n) f.parts.emplace_back(A.dim(n));
        return f;
    }
};

class NotAnIdeal : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

namespace detail {

/// Kernel of v -> ([v,x], [v,y]) taken modulo target (or exactly, when target is null).
inline gf2::EchelonBasis ad_kernel(const GradedAlgebra& A, int n, const gf2::EchelonBasis* target) {
    const std::size_t dn1 = A.dim(n + 1);
    std::vector<BitVec> images;
    for (std::size_t k = 0; k < A.dim(n); ++k) {
        BitVec ix = A.action(n, Gen::X)[k];
        BitVec iy = A.action(n, Gen::Y)[k];
        if (target != nullptr) {
            ix = target->reduce(ix);
            iy = target->reduce(iy);
        }
        images.push_back(ix.concat(iy));
    }
    return gf2::kernel(images, A.dim(n), 2 * dn1);
}

}  // namespace detail

/// Z(A) in degrees 1..class_bound-1.
inline GradedSubspaceFamily graded_center(const GradedAlgebra& A) {
    if (A.class_bound() < 3) throw std::invalid_argument("graded_center: class bound must be >= 3");
    GradedSubspaceFamily z;
    z.valid_up_to = A.class_bound() - 1;
    for (int n = 1; n <= z.valid_up_to; ++n) z.parts.push_back(detail::ad_kernel(A, n, nullptr));
    return z;
}

/// Z_2(A) in degrees 1..class_bound-2.
inline GradedSubspaceFamily second_center(const GradedAlgebra& A) {
    if (A.class_bound() < 4) throw std::invalid_argument("second_center: class bound must be >= 4");
    const auto z = graded_center(A);
    GradedSubspaceFamily z2;
    z2.valid_up_to = A.class_bound() - 2;
    for (int n = 1; n <= z2.valid_up_to; ++n) z2.parts.push_back(detail::ad_kernel(A, n, &z.at(n + 1)));
    return z2;
}

/// Degrees n < valid_up_to where [I_n, g] is not inside I_{n+1}; empty for an ideal.
inline std::vector<int> ideal_violations(const GradedAlgebra& A, const GradedSubspaceFamily& I) {
    std::vector<int> bad;
    for (int n = 1; n < I.valid_up_to; ++n) {
        bool ok = true;
        for (const auto& row : I.at(n).rows())
            for (Gen g : kGenerators)
                if (!I.at(n + 1).contains(A.act(Element{n, row}, g).coords)) ok = false;
        if (!ok) bad.push_back(n);
    }
    return bad;
}

/// A / I truncated at I.valid_up_to. Basis vectors of degree n+1 are the
/// surviving formal brackets [b_k, g] in the same order as nq_compute.
inline GradedAlgebra quotient(const GradedAlgebra& A, const GradedSubspaceFamily& I) {
    const int C = I.valid_up_to;
    if (C < 1 || C > A.class_bound()) throw std::invalid_argument("quotient: validity range outside the algebra");
    if (static_cast<int>(I.parts.size()) < C) throw std::invalid_argument("quotient: family shorter than its range");
    for (int n = 1; n <= C; ++n)
        if (I.at(n).dim_ambient() != A.dim(n))
            throw std::invalid_argument("quotient: subspace dimension mismatch in degree " + std::to_string(n));
    if (!I.at(1).empty()) throw NotAnIdeal("quotient: ideal meets degree one");
    if (const auto bad = ideal_violations(A, I); !bad.empty())
        throw NotAnIdeal("quotient: family is not an ideal at degree " + std::to_string(bad.front()));

    std::vector<std::vector<BasisElement>> basis{detail::generator_basis()};
    std::vector<std::array<std::vector<BitVec>, 2>> action(static_cast<std::size_t>(C));
    std::vector<BitVec> reps{BitVec::unit(2, 0), BitVec::unit(2, 1)};
    for (int n = 1; n < C; ++n) {
        const std::size_t dn = reps.size();
        const std::size_t target = A.dim(n + 1);
        std::vector<BitVec> images;
        for (std::size_t k = 0; k < dn; ++k)
            for (Gen g : kGenerators) images.push_back(I.at(n + 1).reduce(A.act(Element{n, reps[k]}, g).coords));
        const detail::CosetMap map(gf2::kernel(images, 2 * dn, target));
        auto& rows = action[static_cast<std::size_t>(n - 1)];
        for (std::size_t k = 0; k < dn; ++k)
            for (Gen g : kGenerators) rows[gen_index(g)].push_back(map(BitVec::unit(2 * dn, 2 * k + gen_index(g))));
        std::vector<BasisElement> next;
        std::vector<BitVec> next_reps;
        const auto& prev = basis.back();
        for (std::size_t c : map.survivors()) {
            BasisElement e;
            e.degree = n + 1;
            e.index = next.size();
            e.parent = static_cast<int>(c / 2);
            e.generator = static_cast<Gen>(c % 2);
            e.letters = prev[c / 2].letters;
            e.letters.push_back(gen_symbol(e.generator));
            next.push_back(std::move(e));
            next_reps.push_back(images[c]);
        }
        basis.push_back(std::move(next));
        reps = std::move(next_reps);
    }
    for (Gen g : kGenerators) action.back()[gen_index(g)].assign(basis.back().size(), BitVec(0));
    return GradedAlgebra(C, std::move(basis), std::move(action));
}

/// One-dimensional two-step centralizers; OTHER when the centralizer is not Fx or Fy.
enum class Centralizer : std::uint8_t { FX, FY, OTHER };

inline char centralizer_char(Centralizer c) noexcept {
    return c == Centralizer::FX ? 'X' : c == Centralizer::FY ? 'Y' : '?';
}

/// entries[i-1] = C_i for degrees 1..class_bound-1, with C_1 := C_2.
inline std::vector<Centralizer> centralizer_sequence(const GradedAlgebra& A) {
    std::vector<Centralizer> out;
    for (int i = 2; i < A.class_bound(); ++i) {
        // Kernel of (a, b) -> [L_i, a x + b y].
        std::vector<BitVec> images;
        for (Gen g : kGenerators) {
            BitVec img(0);
            for (const auto& r : A.action(i, g)) img = img.concat(r);
            images.push_back(std::move(img));
        }
        const std::size_t len = A.dim(i) * A.dim(i + 1);
        const auto ker = gf2::kernel(images, 2, len);
        Centralizer c = Centralizer::OTHER;
        if (ker.rank() == 1 && ker.rows()[0] == BitVec::unit(2, 0)) c = Centralizer::FX;
        if (ker.rank() == 1 && ker.rows()[0] == BitVec::unit(2, 1)) c = Centralizer::FY;
        out.push_back(c);
    }
    if (!out.empty()) out.insert(out.begin(), out.front());
    return out;
}

inline std::string render_centralizers(const std::vector<Centralizer>& seq) {
    std::string s;
    for (auto c : seq) s += centralizer_char(c);
    return s;
}

struct JacobiReport {
    bool pass = true;
    std::size_t checked = 0;
    std::vector<std::string> failures;  ///< first few offending pairs or triples

    void fail(std::string what) {
        pass = false;
        if (failures.size() < 16) failures.push_back(std::move(what));
    }
};

/// [u,u] = 0, [u,v] = [v,u] and Jacobi on basis elements with degree sum <= class bound.
inline JacobiReport jacobi_check(const GradedAlgebra& A) {
    JacobiReport rep;
    const int C = A.class_bound();
    auto name = [&](int d, std::size_t k) { return "e" + std::to_string(d) + "_" + std::to_string(k); };
    for (int i = 1; 2 * i <= C; ++i)
        for (int j = i; i + j <= C; ++j)
            for (std::size_t a = 0; a < A.dim(i); ++a)
                for (std::size_t b = (i == j ? a : 0); b < A.dim(j); ++b) {
                    ++rep.checked;
                    const auto& ab = A.structure_constant(i, a, j, b);
                    if (i == j && a == b) {
                        if (!ab.is_zero()) rep.fail("[" + name(i, a) + "," + name(i, a) + "] != 0");
                    } else if (ab != A.structure_constant(j, b, i, a)) {
                        rep.fail("[" + name(i, a) + "," + name(j, b) + "] != [" + name(j, b) + "," + name(i, a) + "]");
                    }
                }
    for (int i = 1; 3 * i <= C; ++i)
        for (int j = i; i + 2 * j <= C; ++j)
            for (int k = j; i + j + k <= C; ++k)
                for (std::size_t a = 0; a < A.dim(i); ++a)
                    for (std::size_t b = (i == j ? a : 0); b < A.dim(j); ++b)
                        for (std::size_t c = (j == k ? b : 0); c < A.dim(k); ++c) {
                            ++rep.checked;
                            const Element u = A.unit(i, a), v = A.unit(j, b), w = A.unit(k, c);
                            const Element s =
                                A.bracket(A.bracket(u, v), w) + A.bracket(A.bracket(v, w), u) + A.bracket(A.bracket(w, u), v);
                            if (!s.is_zero())
                                rep.fail("Jacobi(" + name(i, a) + "," + name(j, b) + "," + name(k, c) + ") != 0");
                        }
    return rep;
}

class NoPreimage : public std::domain_error {
public:
    using std::domain_error::domain_error;
};
class AmbiguousPreimage : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// The unique u of degree n - c with [u x^c] = v.
inline Element adx_preimage(const GradedAlgebra& A, const Element& v, int c) {
    if (c < 1) throw std::invalid_argument("adx_preimage: c must be positive");
    const int n = v.degree;
    if (n - c < 1) throw std::invalid_argument("adx_preimage: degree of v must exceed c");
    if (v.is_zero()) throw AmbiguousPreimage("adx_preimage: v = 0 has no distinguished preimage");
    std::vector<BitVec> images;
    for (std::size_t k = 0; k < A.dim(n - c); ++k) {
        Element e = A.unit(n - c, k);
        for (int t = 0; t < c; ++t) e = A.act(e, Gen::X);
        images.push_back(e.coords);
    }
    const auto sol = gf2::solve(images, v.coords, A.dim(n));
    if (!sol.solution) throw NoPreimage("adx_preimage: v is not in the image of ad(x)^" + std::to_string(c));
    if (sol.kernel_rank != 0) throw AmbiguousPreimage("adx_preimage: preimage is not unique");
    return Element{n - c, *sol.solution};
}

/// [v letters] = [v z^n] whenever the left side is nonzero; nullopt when some
/// centralizer C_i..C_{i+n-1} is not Fx or Fy.
inline std::optional<bool> z_substitution_holds(const GradedAlgebra& A, const Element& v,
                                                const std::vector<Symbol>& letters) {
    const int i = v.degree;
    const int n = static_cast<int>(letters.size());
    if (n == 0) return true;
    if (i + n > A.class_bound()) return std::nullopt;
    const auto seq = centralizer_sequence(A);
    for (int t = i; t < i + n; ++t) {
        if (t < 1 || t > static_cast<int>(seq.size())) return std::nullopt;
        if (seq[static_cast<std::size_t>(t - 1)] == Centralizer::OTHER) return std::nullopt;
    }
    for (auto s : letters)
        if (s == Symbol::Z) throw std::invalid_argument("z_substitution_holds: letters must be x or y");
    Element lhs = v, rhs = v;
    for (auto s : letters) {
        lhs = A.act(lhs, s);
        rhs = A.act(rhs, Symbol::Z);
    }
    return lhs.is_zero() || lhs == rhs;
}

}  // namespace bzl::lie
