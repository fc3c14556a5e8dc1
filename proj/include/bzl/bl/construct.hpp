#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "bzl/bl/params.hpp"
#include "bzl/lie/graded_algebra.hpp"

namespace bzl::bl {

using lie::BasisElement;
using lie::BitVec;
using lie::Gen;
using lie::GradedAlgebra;

/// Maximal-class algebra with the given centralizers C_1..C_{class_bound-1}:
/// e_2 = [y, x]; C_i = Fy gives [e_i, y] = 0 and e_{i+1} = [e_i, x]; C_i = Fx the reverse.
inline GradedAlgebra maximal_class_algebra(const std::vector<Centralizer>& seq, int class_bound) {
    if (class_bound < 2) throw std::invalid_argument("maximal_class_algebra: class bound must be >= 2");
    if (seq.size() + 1 < static_cast<std::size_t>(class_bound))
        throw std::invalid_argument("maximal_class_algebra: centralizer sequence too short");
    std::vector<std::vector<BasisElement>> basis{lie::detail::generator_basis()};
    std::vector<std::array<std::vector<BitVec>, 2>> action(static_cast<std::size_t>(class_bound));

    basis.push_back({BasisElement{2, 0, 1, Gen::X, {lie::Symbol::Y, lie::Symbol::X}}});
    auto& a1 = action[0];
    a1[0] = {BitVec(1), BitVec::unit(1, 0)};  // [x,x] = 0, [y,x] = e_2
    a1[1] = {BitVec::unit(1, 0), BitVec(1)};  // [x,y] = e_2, [y,y] = 0
    for (int i = 2; i < class_bound; ++i) {
        const auto c = seq[static_cast<std::size_t>(i - 1)];
        if (c == Centralizer::OTHER) throw std::invalid_argument("maximal_class_algebra: centralizer must be Fx or Fy");
        const Gen acting = c == Centralizer::FY ? Gen::X : Gen::Y;
        auto& ai = action[static_cast<std::size_t>(i - 1)];
        ai[lie::gen_index(acting)] = {BitVec::unit(1, 0)};
        ai[1 - lie::gen_index(acting)] = {BitVec(1)};
        BasisElement e{i + 1, 0, 0, acting, basis.back().front().letters};
        e.letters.push_back(lie::gen_symbol(acting));
        basis.push_back({std::move(e)});
    }
    for (Gen g : lie::kGenerators) action.back()[lie::gen_index(g)].assign(1, BitVec(0));
    return GradedAlgebra(class_bound, std::move(basis), std::move(action));
}

inline GradedAlgebra construct_bl(const BlParams& p, int class_bound) {
    if (class_bound < 4) throw std::invalid_argument("construct_bl: class bound must be >= 4");
    return maximal_class_algebra(bl_centralizer_sequence(p, std::max<int>(class_bound, static_cast<int>(2 * p.q))),
                                 class_bound);
}

}  // namespace bzl::bl
