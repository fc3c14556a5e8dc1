#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "bzl/gf2/echelon.hpp"
#include "bzl/lie/graded_algebra.hpp"
#include "bzl/lie/presentation.hpp"

namespace bzl::lie {

namespace detail {

inline BitVec act_symbol(const Structure& s, const BitVec& v, int n, Symbol sym) {
    BitVec out(s.dim(n + 1));
    if (sym == Symbol::X || sym == Symbol::Z) out ^= s.act(v, n, Gen::X);
    if (sym == Symbol::Y || sym == Symbol::Z) out ^= s.act(v, n, Gen::Y);
    return out;
}

inline BitVec eval_in_structure(const Structure& s, const std::vector<Symbol>& letters) {
    BitVec v(2);
    if (letters.front() != Symbol::Y) v.flip(0);
    if (letters.front() != Symbol::X) v.flip(1);
    for (std::size_t i = 1; i < letters.size(); ++i) v = act_symbol(s, v, static_cast<int>(i), letters[i]);
    return v;
}

/// Relations among the formal brackets [b_k, g] spanning degree s:
/// antisymmetry, Jacobi on basis triples, and relators of weight s.
inline std::vector<BitVec> lifted_relations(const Structure& st, int s,
                                            const std::vector<std::vector<Symbol>>& relators) {
    std::vector<BitVec> rel;
    for (int i = 1; 2 * i <= s; ++i) {
        const int j = s - i;
        for (std::size_t a = 0; a < st.dim(i); ++a) {
            for (std::size_t b = 0; b < st.dim(j); ++b) {
                if (i == j && b < a) continue;
                if (i == j && a == b) {
                    rel.push_back(st.entry(i, a, i, a));
                    continue;
                }
                rel.push_back(st.entry(i, a, j, b) + st.entry(j, b, i, a));
            }
        }
    }
    for (int i = 1; 3 * i <= s; ++i) {
        for (int j = i; i + 2 * j <= s; ++j) {
            const int k = s - i - j;
            if (k < j) continue;
            for (std::size_t a = 0; a < st.dim(i); ++a)
                for (std::size_t b = (i == j ? a : 0); b < st.dim(j); ++b)
                    for (std::size_t c = (j == k ? b : 0); c < st.dim(k); ++c) {
                        BitVec r = st.vec_bracket(st.entry(i, a, j, b), i + j, k, c);
                        r ^= st.vec_bracket(st.entry(j, b, k, c), j + k, i, a);
                        r ^= st.vec_bracket(st.entry(k, c, i, a), k + i, j, b);
                        rel.push_back(std::move(r));
                    }
        }
    }
    for (const auto& w : relators)
        if (static_cast<int>(w.size()) == s) rel.push_back(eval_in_structure(st, w));
    return rel;
}

/// Projects formal coordinates onto the surviving (non-pivot) columns.
class CosetMap {
public:
    explicit CosetMap(gf2::EchelonBasis relations)
        : rel_(std::move(relations)), survivors_(rel_.free_columns()) {}

    const std::vector<std::size_t>& survivors() const noexcept { return survivors_; }

    BitVec operator()(const BitVec& v) const {
        const BitVec r = rel_.reduce(v);
        BitVec out(survivors_.size());
        for (std::size_t t = 0; t < survivors_.size(); ++t)
            if (r.get(survivors_[t])) out.set(t);
        return out;
    }

private:
    gf2::EchelonBasis rel_;
    std::vector<std::size_t> survivors_;
};

/// Appends degree n+1 as the free span of [b_k, g] (column 2k+g) with table entries.
inline void push_formal_degree(Structure& st) {
    const int n = st.class_bound;
    const std::size_t dn = st.dim(n);
    std::vector<BasisElement> formal;
    formal.reserve(2 * dn);
    for (std::size_t k = 0; k < dn; ++k) {
        for (Gen g : kGenerators) {
            BasisElement e;
            e.degree = n + 1;
            e.index = formal.size();
            e.parent = static_cast<int>(k);
            e.generator = g;
            e.letters = st.basis[static_cast<std::size_t>(n - 1)][k].letters;
            e.letters.push_back(gen_symbol(g));
            formal.push_back(std::move(e));
        }
    }
    auto& top = st.action[static_cast<std::size_t>(n - 1)];
    for (Gen g : kGenerators) {
        top[gen_index(g)].clear();
        for (std::size_t k = 0; k < dn; ++k) top[gen_index(g)].push_back(BitVec::unit(2 * dn, 2 * k + gen_index(g)));
    }
    st.class_bound = n + 1;
    st.basis.push_back(std::move(formal));
    st.action.emplace_back();
    for (Gen g : kGenerators) st.action.back()[gen_index(g)].assign(st.dim(n + 1), BitVec(0));
    st.fill_table_degree(n + 1);
}

/// Replaces the top degree by its quotient through map.
inline void collapse_top_degree(Structure& st, const CosetMap& map) {
    const int s = st.class_bound;
    const auto& old = st.basis[static_cast<std::size_t>(s - 1)];
    std::vector<BasisElement> kept;
    for (std::size_t c : map.survivors()) {
        BasisElement e = old[c];
        e.index = kept.size();
        kept.push_back(std::move(e));
    }
    st.basis[static_cast<std::size_t>(s - 1)] = std::move(kept);
    for (Gen g : kGenerators) {
        for (auto& row : st.action[static_cast<std::size_t>(s - 2)][gen_index(g)]) row = map(row);
        st.action[static_cast<std::size_t>(s - 1)][gen_index(g)].assign(st.dim(s), BitVec(0));
    }
    for (int i = 1; i < s; ++i)
        for (auto& v : st.entries(i, s - i)) v = map(v);
}

inline Structure degree_one_structure() {
    Structure st;
    st.class_bound = 1;
    st.basis.push_back(generator_basis());
    st.action.emplace_back();
    for (Gen g : kGenerators) st.action.back()[gen_index(g)].assign(2, BitVec(0));
    st.ensure_table_shape();
    return st;
}

}  // namespace detail

/// Largest graded algebra of class <= class_bound generated by x, y in degree
/// one satisfying every relator of weight <= class_bound.
inline GradedAlgebra nq_compute(const Presentation& p, int class_bound) {
    if (class_bound < 2) throw std::invalid_argument("nq_compute: class bound must be >= 2");
    std::vector<std::vector<Symbol>> relators;
    for (const auto& w : p.relators) {
        if (w.weight() < 2) throw std::invalid_argument("nq_compute: relator of weight < 2");
        if (w.weight() <= static_cast<std::size_t>(class_bound)) relators.push_back(w.letters());
    }
    detail::Structure st = detail::degree_one_structure();
    for (int n = 1; n < class_bound; ++n) {
        detail::push_formal_degree(st);
        const auto rel = detail::lifted_relations(st, n + 1, relators);
        detail::collapse_top_degree(st, detail::CosetMap(gf2::echelonize(rel, st.dim(n + 1))));
    }
    return GradedAlgebra(std::move(st));
}

}  // namespace bzl::lie
