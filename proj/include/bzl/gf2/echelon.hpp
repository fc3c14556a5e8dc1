#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "bzl/gf2/bitvec.hpp"

namespace bzl::gf2 {

class DimensionMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Fully reduced row-echelon basis of a subspace of GF(2)^n.
///
/// Rows are sorted by pivot, each pivot is the lowest set coordinate of its
/// row, and every pivot column vanishes in all other rows. Two bases span the
/// same subspace iff they compare equal.
class EchelonBasis {
public:
    EchelonBasis() = default;
    explicit EchelonBasis(std::size_t dim_ambient) : dim_(dim_ambient) {}

    std::size_t dim_ambient() const noexcept { return dim_; }
    std::size_t rank() const noexcept { return rows_.size(); }
    bool empty() const noexcept { return rows_.empty(); }
    const std::vector<BitVec>& rows() const noexcept { return rows_; }
    const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

    /// Canonical coset representative of v modulo the span.
    BitVec reduce(BitVec v) const {
        check(v);
        for (std::size_t r = 0; r < rows_.size(); ++r)
            if (v.get(pivots_[r])) v ^= rows_[r];
        return v;
    }

    bool contains(const BitVec& v) const { return reduce(v).is_zero(); }

    /// Coefficients c with sum c_r * rows[r] == v, or nullopt when v is outside the span.
    std::optional<BitVec> coordinates(const BitVec& v) const {
        check(v);
        BitVec coeffs(rows_.size());
        BitVec acc(dim_);
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            if (v.get(pivots_[r])) {
                coeffs.set(r);
                acc ^= rows_[r];
            }
        }
        if (!(acc == v)) return std::nullopt;
        return coeffs;
    }

    /// Adds v to the span. Returns true when the rank grew.
    bool insert(BitVec v) {
        v = reduce(std::move(v));
        if (v.is_zero()) return false;
        const std::size_t p = v.lowest();
        for (auto& row : rows_)
            if (row.get(p)) row ^= v;
        const auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), p) - pivots_.begin();
        pivots_.insert(pivots_.begin() + pos, p);
        rows_.insert(rows_.begin() + pos, std::move(v));
        return true;
    }

    /// Columns that are not pivots, increasing.
    std::vector<std::size_t> free_columns() const {
        std::vector<std::size_t> out;
        std::size_t r = 0;
        for (std::size_t c = 0; c < dim_; ++c) {
            if (r < pivots_.size() && pivots_[r] == c) {
                ++r;
                continue;
            }
            out.push_back(c);
        }
        return out;
    }

    /// Subspace inclusion: every row of *this lies in other.
    bool is_subspace_of(const EchelonBasis& other) const {
        if (other.dim_ != dim_) throw DimensionMismatch("EchelonBasis: ambient dimension mismatch");
        return std::all_of(rows_.begin(), rows_.end(), [&](const BitVec& r) { return other.contains(r); });
    }

    friend bool operator==(const EchelonBasis&, const EchelonBasis&) = default;

private:
    void check(const BitVec& v) const {
        if (v.size() != dim_)
            throw DimensionMismatch("EchelonBasis: vector of length " + std::to_string(v.size()) +
                                    " against ambient dimension " + std::to_string(dim_));
    }

    std::size_t dim_ = 0;
    std::vector<BitVec> rows_;
    std::vector<std::size_t> pivots_;
};

/// Row-reduces a list of vectors of a common length dim.
inline EchelonBasis echelonize(std::span<const BitVec> rows, std::size_t dim) {
    EchelonBasis basis(dim);
    for (const auto& r : rows) {
        if (r.size() != dim)
            throw DimensionMismatch("echelonize: row of length " + std::to_string(r.size()) + ", expected " +
                                    std::to_string(dim));
        basis.insert(r);
    }
    return basis;
}

/// Convenience overload: the dimension is taken from the first row (empty input gives dimension 0).
inline EchelonBasis echelonize(std::span<const BitVec> rows) {
    return echelonize(rows, rows.empty() ? 0 : rows.front().size());
}

inline BitVec reduce(const BitVec& v, const EchelonBasis& basis) { return basis.reduce(v); }

inline std::optional<BitVec> coordinates(const BitVec& v, const EchelonBasis& basis) {
    return basis.coordinates(v);
}

inline std::size_t rank(std::span<const BitVec> rows, std::size_t dim) { return echelonize(rows, dim).rank(); }

/// Kernel of the linear map sending domain basis vector i to images[i].
inline EchelonBasis kernel(std::span<const BitVec> images, std::size_t dim_domain, std::size_t dim_codomain) {
    if (images.size() != dim_domain)
        throw DimensionMismatch("kernel: expected " + std::to_string(dim_domain) + " images, got " +
                                std::to_string(images.size()));
    // Augmented rows [image | e_i]; after full reduction, rows pivoting in the
    // identity block have zero image part.
    EchelonBasis aug(dim_codomain + dim_domain);
    for (std::size_t i = 0; i < dim_domain; ++i) {
        if (images[i].size() != dim_codomain)
            throw DimensionMismatch("kernel: image of length " + std::to_string(images[i].size()) + ", expected " +
                                    std::to_string(dim_codomain));
        aug.insert(images[i].concat(BitVec::unit(dim_domain, i)));
    }
    EchelonBasis ker(dim_domain);
    for (std::size_t r = 0; r < aug.rank(); ++r)
        if (aug.pivots()[r] >= dim_codomain) ker.insert(aug.rows()[r].slice(dim_codomain, dim_domain));
    return ker;
}

/// Applies the map given by images to v.
inline BitVec apply(std::span<const BitVec> images, const BitVec& v, std::size_t dim_codomain) {
    if (v.size() != images.size()) throw DimensionMismatch("apply: vector length differs from domain dimension");
    BitVec out(dim_codomain);
    for (std::size_t i = v.lowest(); i < v.size(); i = v.next_set(i + 1)) out ^= images[i];
    return out;
}

/// Result of solving A u = target for the map with the given images.
struct SolveResult {
    std::optional<BitVec> solution;  ///< some particular solution, if any
    std::size_t kernel_rank = 0;     ///< dimension of the solution space's direction
};

inline SolveResult solve(std::span<const BitVec> images, const BitVec& target, std::size_t dim_codomain) {
    const std::size_t n = images.size();
    if (target.size() != dim_codomain) throw DimensionMismatch("solve: target length differs from codomain");
    EchelonBasis aug(dim_codomain + n);
    for (std::size_t i = 0; i < n; ++i) {
        if (images[i].size() != dim_codomain) throw DimensionMismatch("solve: image length differs from codomain");
        aug.insert(images[i].concat(BitVec::unit(n, i)));
    }
    SolveResult res;
    res.kernel_rank = kernel(images, n, dim_codomain).rank();
    // Reduce [target | 0]; a solution exists iff the image part vanishes.
    const BitVec red = aug.reduce(target.concat(BitVec(n)));
    if (!red.slice(0, dim_codomain).is_zero()) return res;
    res.solution = red.slice(dim_codomain, n);
    return res;
}

}  // namespace bzl::gf2
