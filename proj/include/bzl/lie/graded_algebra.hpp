#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bzl/gf2/bitvec.hpp"
#include "bzl/gf2/echelon.hpp"
#include "bzl/lie/word.hpp"

namespace bzl::lie {

using gf2::BitVec;

/// Degree-one generators. Index 0 is x, index 1 is y in degree-one coordinates.
enum class Gen : std::uint8_t { X = 0, Y = 1 };

inline constexpr std::array<Gen, 2> kGenerators{Gen::X, Gen::Y};
inline char gen_char(Gen g) noexcept { return g == Gen::X ? 'x' : 'y'; }
inline std::size_t gen_index(Gen g) noexcept { return static_cast<std::size_t>(g); }
inline Symbol gen_symbol(Gen g) noexcept { return g == Gen::X ? Symbol::X : Symbol::Y; }

/// A basis vector of one homogeneous component. For degree >= 2 it is the
/// bracket [parent, generator] with parent a basis vector of degree - 1.
struct BasisElement {
    int degree = 1;
    std::size_t index = 0;
    int parent = -1;  ///< index in degree - 1, or -1 in degree 1
    Gen generator = Gen::X;
    std::vector<Symbol> letters;  ///< left-normed letter sequence of the defining word

    std::string label() const {
        CommutatorWord w(letters.front());
        for (std::size_t i = 1; i < letters.size(); ++i) w.append(letters[i]);
        return w.render();
    }
};

/// Homogeneous element: a degree and coordinates in that degree's basis.
/// Components above the class bound have dimension zero.
struct Element {
    int degree = 1;
    BitVec coords;

    bool is_zero() const noexcept { return coords.is_zero(); }
    Element& operator+=(const Element& o) {
        if (o.degree != degree) throw std::invalid_argument("Element: adding elements of different degrees");
        coords ^= o.coords;
        return *this;
    }
    friend Element operator+(Element a, const Element& b) { return a += b; }
    friend bool operator==(const Element&, const Element&) = default;
};

class NonHomogeneous : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

namespace detail {

/// Raw tables of a truncated graded algebra generated in degree one.
///
/// basis[n-1] lists degree n; action[n-1][g][k] is [basis_n[k], g] in degree
/// n+1 (length 0 at the class bound); table[i][j][a*dim(j)+b] is [e_a, e_b]
/// for degrees i + j <= class bound (index 0 unused).
struct Structure {
    int class_bound = 0;
    std::vector<std::vector<BasisElement>> basis;
    std::vector<std::array<std::vector<BitVec>, 2>> action;
    std::vector<std::vector<std::vector<BitVec>>> table;

    std::size_t dim(int n) const {
        if (n < 1 || n > class_bound) return 0;
        return basis[static_cast<std::size_t>(n - 1)].size();
    }

    const std::vector<BitVec>& act_rows(int n, Gen g) const {
        return action[static_cast<std::size_t>(n - 1)][gen_index(g)];
    }

    BitVec act(const BitVec& v, int n, Gen g) const {
        BitVec out(dim(n + 1));
        if (n >= class_bound) return out;
        const auto& rows = act_rows(n, g);
        for (std::size_t k = v.lowest(); k < v.size(); k = v.next_set(k + 1)) out ^= rows[k];
        return out;
    }

    std::vector<BitVec>& entries(int i, int j) {
        return table[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }
    const std::vector<BitVec>& entries(int i, int j) const {
        return table[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }

    const BitVec& entry(int i, std::size_t a, int j, std::size_t b) const { return entries(i, j)[a * dim(j) + b]; }

    /// [v, e_b] for v in degree i and basis vector e_b of degree j, i + j <= class bound.
    BitVec vec_bracket(const BitVec& v, int i, int j, std::size_t b) const {
        BitVec out(dim(i + j));
        if (i + j > class_bound) return out;
        for (std::size_t a = v.lowest(); a < v.size(); a = v.next_set(a + 1)) out ^= entry(i, a, j, b);
        return out;
    }

    void ensure_table_shape() {
        table.resize(static_cast<std::size_t>(class_bound) + 1);
        for (auto& row : table) row.resize(static_cast<std::size_t>(class_bound) + 1);
    }

    /// Fills table entries of total degree s by recursion on the second argument:
    /// [u, [w, g]] = [[u, w], g] + [[u, g], w].
    void fill_table_degree(int s) {
        ensure_table_shape();
        for (int j = 1; j < s; ++j) {
            const int i = s - j;
            auto& out = entries(i, j);
            out.assign(dim(i) * dim(j), BitVec(dim(s)));
            for (std::size_t a = 0; a < dim(i); ++a) {
                for (std::size_t b = 0; b < dim(j); ++b) {
                    if (j == 1) {
                        out[a * dim(j) + b] = act_rows(i, static_cast<Gen>(b))[a];
                        continue;
                    }
                    const auto& el = basis[static_cast<std::size_t>(j - 1)][b];
                    const auto p = static_cast<std::size_t>(el.parent);
                    // [[u, w], g]
                    BitVec acc = act(entry(i, a, j - 1, p), s - 1, el.generator);
                    // [[u, g], w]
                    const BitVec& ug = act_rows(i, el.generator)[a];
                    acc ^= vec_bracket(ug, i + 1, j - 1, p);
                    out[a * dim(j) + b] = std::move(acc);
                }
            }
        }
    }

    void validate() const {
        if (class_bound < 1) throw std::invalid_argument("GradedAlgebra: class bound must be >= 1");
        if (basis.size() != static_cast<std::size_t>(class_bound) || action.size() != basis.size())
            throw std::invalid_argument("GradedAlgebra: tables do not cover 1..class_bound");
        if (basis[0].size() != 2) throw std::invalid_argument("GradedAlgebra: degree one must have dimension 2");
        for (int n = 1; n <= class_bound; ++n) {
            const auto& bn = basis[static_cast<std::size_t>(n - 1)];
            for (std::size_t k = 0; k < bn.size(); ++k) {
                if (bn[k].degree != n || bn[k].index != k)
                    throw std::invalid_argument("GradedAlgebra: basis bookkeeping mismatch in degree " +
                                                std::to_string(n));
                if (n >= 2 && (bn[k].parent < 0 || static_cast<std::size_t>(bn[k].parent) >= dim(n - 1)))
                    throw std::invalid_argument("GradedAlgebra: parent out of range in degree " + std::to_string(n));
            }
            for (Gen g : kGenerators) {
                const auto& rows = act_rows(n, g);
                if (rows.size() != bn.size())
                    throw std::invalid_argument("GradedAlgebra: action table size mismatch in degree " +
                                                std::to_string(n));
                for (const auto& r : rows)
                    if (r.size() != dim(n + 1))
                        throw std::invalid_argument("GradedAlgebra: action row length mismatch in degree " +
                                                    std::to_string(n));
            }
        }
    }
};

inline std::vector<BasisElement> generator_basis() {
    std::vector<BasisElement> b(2);
    b[0] = BasisElement{1, 0, -1, Gen::X, {Symbol::X}};
    b[1] = BasisElement{1, 1, -1, Gen::Y, {Symbol::Y}};
    return b;
}

}  // namespace detail

/// Truncated graded Lie algebra over GF(2) generated by x, y in degree one.
///
/// Immutable after construction. Brackets whose degree exceeds the class bound
/// are zero. All structure constants are derived from the generator action and
/// the basis definitions.
class GradedAlgebra {
public:
    GradedAlgebra() = default;

    /// Builds from basis definitions and action tables; derives every bracket.
    GradedAlgebra(int class_bound, std::vector<std::vector<BasisElement>> basis,
                  std::vector<std::array<std::vector<BitVec>, 2>> action) {
        s_.class_bound = class_bound;
        s_.basis = std::move(basis);
        s_.action = std::move(action);
        s_.validate();
        for (int s = 2; s <= class_bound; ++s) s_.fill_table_degree(s);
        s_.ensure_table_shape();
    }

    /// Adopts a fully built structure (table included).
    explicit GradedAlgebra(detail::Structure s) : s_(std::move(s)) {
        s_.validate();
        s_.ensure_table_shape();
    }

    int class_bound() const noexcept { return s_.class_bound; }
    std::size_t dim(int n) const { return s_.dim(n); }

    /// dims()[n-1] is the dimension of degree n, n = 1..class_bound.
    std::vector<std::size_t> dims() const {
        std::vector<std::size_t> out;
        for (int n = 1; n <= s_.class_bound; ++n) out.push_back(dim(n));
        return out;
    }

    std::size_t total_dim() const {
        std::size_t t = 0;
        for (int n = 1; n <= s_.class_bound; ++n) t += dim(n);
        return t;
    }

    const std::vector<BasisElement>& basis(int n) const {
        check_degree(n);
        return s_.basis[static_cast<std::size_t>(n - 1)];
    }

    /// Rows of ad(g) from degree n into degree n+1.
    const std::vector<BitVec>& action(int n, Gen g) const {
        check_degree(n);
        return s_.act_rows(n, g);
    }

    Element zero(int n) const { return Element{n, BitVec(dim(n))}; }
    Element unit(int n, std::size_t k) const {
        if (k >= dim(n)) throw std::out_of_range("GradedAlgebra: basis index out of range");
        return Element{n, BitVec::unit(dim(n), k)};
    }
    Element generator(Symbol s) const {
        Element e = zero(1);
        if (s == Symbol::X || s == Symbol::Z) e.coords.flip(0);
        if (s == Symbol::Y || s == Symbol::Z) e.coords.flip(1);
        return e;
    }

    /// [u, s] for a generator symbol (z = x + y).
    Element act(const Element& u, Symbol s) const {
        check_element(u);
        Element out{u.degree + 1, BitVec(dim(u.degree + 1))};
        if (s == Symbol::X || s == Symbol::Z) out.coords ^= s_.act(u.coords, u.degree, Gen::X);
        if (s == Symbol::Y || s == Symbol::Z) out.coords ^= s_.act(u.coords, u.degree, Gen::Y);
        return out;
    }
    Element act(const Element& u, Gen g) const { return act(u, gen_symbol(g)); }

    /// Bilinear bracket of homogeneous elements.
    Element bracket(const Element& u, const Element& v) const {
        check_element(u);
        check_element(v);
        const int s = u.degree + v.degree;
        Element out{s, BitVec(dim(s))};
        if (s > s_.class_bound) return out;
        for (std::size_t b = v.coords.lowest(); b < v.coords.size(); b = v.coords.next_set(b + 1))
            out.coords ^= s_.vec_bracket(u.coords, u.degree, v.degree, b);
        return out;
    }

    /// Structure constant [e_a, e_b] for basis vectors of degrees i and j.
    const BitVec& structure_constant(int i, std::size_t a, int j, std::size_t b) const {
        if (i + j > s_.class_bound) throw std::out_of_range("structure_constant: degree above class bound");
        return s_.entry(i, a, j, b);
    }

    /// "y x^3 + y x^2 y" style rendering; "0" for zero.
    std::string label(const Element& e) const {
        if (e.is_zero()) return "0";
        std::string out;
        const auto& b = basis(e.degree);
        for (std::size_t k = e.coords.lowest(); k < e.coords.size(); k = e.coords.next_set(k + 1)) {
            if (!out.empty()) out += " + ";
            out += b[k].label();
        }
        return out;
    }

    const detail::Structure& structure() const noexcept { return s_; }

    friend bool operator==(const GradedAlgebra& a, const GradedAlgebra& b) {
        if (a.s_.class_bound != b.s_.class_bound) return false;
        for (int n = 1; n <= a.s_.class_bound; ++n) {
            const auto& ba = a.basis(n);
            const auto& bb = b.basis(n);
            if (ba.size() != bb.size()) return false;
            for (std::size_t k = 0; k < ba.size(); ++k)
                if (ba[k].parent != bb[k].parent || ba[k].generator != bb[k].generator) return false;
            for (Gen g : kGenerators)
                if (a.action(n, g) != b.action(n, g)) return false;
        }
        return true;
    }

private:
    void check_degree(int n) const {
        if (n < 1 || n > s_.class_bound)
            throw std::out_of_range("GradedAlgebra: degree " + std::to_string(n) + " outside 1.." +
                                    std::to_string(s_.class_bound));
    }
    void check_element(const Element& e) const {
        if (e.degree < 1) throw NonHomogeneous("GradedAlgebra: element degree must be >= 1");
        if (e.coords.size() != dim(e.degree))
            throw NonHomogeneous("GradedAlgebra: element coordinates do not match degree " + std::to_string(e.degree));
    }

    detail::Structure s_;
};

/// Left fold of the bracket over the expanded letters (z = x + y).
inline Element eval_letters(const GradedAlgebra& A, const std::vector<Symbol>& letters) {
    if (letters.empty()) throw std::invalid_argument("eval: empty letter sequence");
    if (letters.size() > static_cast<std::size_t>(A.class_bound()))
        throw std::out_of_range("eval: word of weight " + std::to_string(letters.size()) + " exceeds class bound " +
                                std::to_string(A.class_bound()));
    Element e = A.generator(letters.front());
    for (std::size_t i = 1; i < letters.size(); ++i) e = A.act(e, letters[i]);
    return e;
}

inline Element eval_word(const GradedAlgebra& A, const CommutatorWord& w) { return eval_letters(A, w.letters()); }

}  // namespace bzl::lie
