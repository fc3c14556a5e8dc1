#include <gtest/gtest.h>

#include "bzl/bl/words.hpp"
#include "bzl/lie/nq.hpp"
#include "bzl/lie/oracle.hpp"
#include "gen.hpp"

using namespace bzl::lie;
using bzl::gf2::BitVec;

TEST(Oracle, WittFormula) {
    const std::vector<std::uint64_t> want{2, 1, 2, 3, 6, 9, 18, 30, 56, 99, 186, 335, 630, 1161};
    for (unsigned n = 1; n <= want.size(); ++n) EXPECT_EQ(oracle::witt_dimension(n), want[n - 1]) << n;
    EXPECT_EQ(oracle::moebius(1), 1);
    EXPECT_EQ(oracle::moebius(12), 0);
    EXPECT_EQ(oracle::moebius(30), -1);
}

TEST(Oracle, LyndonCountMatchesWitt) {
    for (int n = 1; n <= 12; ++n) EXPECT_EQ(oracle::lyndon_words(n).size(), oracle::witt_dimension(n));
}

TEST(Oracle, EmptyPresentationGivesWittDims) {
    const auto d = oracle::free_nq_oracle(Presentation{}, 12);
    for (int n = 1; n <= 12; ++n) EXPECT_EQ(d[n - 1], oracle::witt_dimension(n));
}

TEST(Oracle, AbelianPresentation) {
    EXPECT_EQ(oracle::free_nq_oracle(Presentation::parse({"y x"}), 6), (std::vector<std::size_t>{2, 0, 0, 0, 0, 0}));
    EXPECT_THROW(oracle::free_nq_oracle(Presentation{}, oracle::kMaxOracleClass + 1), std::out_of_range);
}

TEST(Oracle, AgreesWithNqOnDefiningPresentation) {
    const auto p = bzl::bl::presentation_R(bzl::bl::bl_params(2, 1));
    EXPECT_EQ(nq_compute(p, 12).dims(), oracle::free_nq_oracle(p, 12));
}

TEST(Oracle, AgreesWithNqOnFreeAlgebra) {
    EXPECT_EQ(nq_compute(Presentation{}, 11).dims(), oracle::free_nq_oracle(Presentation{}, 11));
}

TEST(Oracle, AgreesWithNqOnRandomPresentations) {
    for (int t = 0; t < 12; ++t) {
        const auto p = gen::presentation(6);
        std::string names;
        for (const auto& w : p.relators) names += "[" + w.render() + "]";
        EXPECT_EQ(nq_compute(p, 10).dims(), oracle::free_nq_oracle(p, 10)) << names;
    }
}

// Structure constants of the free class-5 algebra, realised as commutator polynomials.
TEST(Oracle, StructureConstantsMatchFreeAssociativeModel) {
    const auto F = nq_compute(Presentation{}, 5);
    auto poly = [&](int n, std::size_t k) { return oracle::lie_polynomial(F.basis(n)[k].letters); };
    for (int i = 1; i <= 4; ++i)
        for (int j = 1; i + j <= 5; ++j)
            for (std::size_t a = 0; a < F.dim(i); ++a)
                for (std::size_t b = 0; b < F.dim(j); ++b) {
                    const auto lhs = oracle::commutator(poly(i, a), poly(j, b));
                    const auto& sc = F.structure_constant(i, a, j, b);
                    BitVec rhs(std::size_t{1} << (i + j));
                    for (std::size_t k = 0; k < sc.size(); ++k)
                        if (sc.get(k)) rhs ^= poly(i + j, k).c;
                    EXPECT_EQ(lhs.c, rhs) << i << ":" << a << " " << j << ":" << b;
                }
}
