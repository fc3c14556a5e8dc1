#include <gtest/gtest.h>

#include "bzl/gf2/bitvec.hpp"
#include "bzl/gf2/echelon.hpp"
#include "gen.hpp"

using bzl::gf2::BitVec;
using bzl::gf2::EchelonBasis;
namespace gf2 = bzl::gf2;

TEST(BitVec, TailBitsStayZero) {
    BitVec v(70);
    v.set(69);
    v.set(3);
    EXPECT_EQ(v.popcount(), 2u);
    EXPECT_EQ(v.words().size(), 2u);
    EXPECT_EQ(v.words()[1] >> 6, 0u);
    EXPECT_THROW(v.set(70), std::out_of_range);
}

TEST(BitVec, XorIsAdditionAndSelfInverse) {
    for (int t = 0; t < 50; ++t) {
        const auto a = gen::bitvec(129);
        const auto b = gen::bitvec(129);
        EXPECT_TRUE((a + a).is_zero());
        EXPECT_EQ(a + b, b + a);
        EXPECT_EQ((a + b) + b, a);
    }
    EXPECT_THROW(BitVec(3) + BitVec(4), std::invalid_argument);
}

TEST(BitVec, LowestNextSetSupport) {
    const auto v = BitVec::from_bits({0, 0, 1, 0, 1, 1});
    EXPECT_EQ(v.lowest(), 2u);
    EXPECT_EQ(v.next_set(3), 4u);
    EXPECT_EQ(v.next_set(6), 6u);
    EXPECT_EQ(v.support(), (std::vector<std::size_t>{2, 4, 5}));
    EXPECT_EQ(BitVec(5).lowest(), 5u);
    EXPECT_EQ(v.to_string(), "001011");
}

TEST(BitVec, HexRoundTrip) {
    for (std::size_t len : {0u, 1u, 4u, 5u, 63u, 64u, 65u, 200u}) {
        const auto v = gen::bitvec(len);
        EXPECT_EQ(BitVec::from_hex(v.to_hex(), len), v);
    }
    EXPECT_EQ(BitVec::from_bits({1, 0, 0, 0, 1}).to_hex(), "11");
    EXPECT_THROW(BitVec::from_hex("1", 5), std::invalid_argument);
}

TEST(BitVec, ConcatAndSlice) {
    const auto a = gen::bitvec(37);
    const auto b = gen::bitvec(91);
    const auto c = a.concat(b);
    EXPECT_EQ(c.size(), 128u);
    EXPECT_EQ(c.slice(0, 37), a);
    EXPECT_EQ(c.slice(37, 91), b);
}

TEST(Echelon, HandReduction) {
    const std::vector<BitVec> rows{BitVec::from_bits({1, 1, 0}), BitVec::from_bits({0, 1, 1})};
    const auto e = gf2::echelonize(rows, 3);
    EXPECT_EQ(e.pivots(), (std::vector<std::size_t>{0, 1}));
    EXPECT_EQ(e.rows()[0], BitVec::from_bits({1, 0, 1}));
    EXPECT_EQ(e.rows()[1], BitVec::from_bits({0, 1, 1}));
}

TEST(Echelon, EmptyAndDuplicate) {
    EXPECT_EQ(gf2::echelonize(std::vector<BitVec>{}, 4).rank(), 0u);
    EXPECT_EQ(gf2::echelonize(std::vector<BitVec>{}).rank(), 0u);
    const std::vector<BitVec> dup{BitVec::from_bits({1, 0}), BitVec::from_bits({1, 0})};
    EXPECT_EQ(gf2::echelonize(dup).rank(), 1u);
}

TEST(Echelon, MismatchedDimensionsThrow) {
    const std::vector<BitVec> rows{BitVec(3), BitVec(4)};
    EXPECT_THROW(gf2::echelonize(rows), gf2::DimensionMismatch);
    EXPECT_THROW(gf2::echelonize(rows, 3), gf2::DimensionMismatch);
    EchelonBasis e(3);
    EXPECT_THROW(e.reduce(BitVec(2)), gf2::DimensionMismatch);
}

TEST(Echelon, ReduceExamples) {
    const auto e = gf2::echelonize(std::vector<BitVec>{BitVec::from_bits({1, 0, 1})}, 3);
    EXPECT_EQ(gf2::reduce(BitVec::from_bits({1, 1, 1}), e), BitVec::from_bits({0, 1, 0}));
    EXPECT_TRUE(gf2::reduce(BitVec(3), e).is_zero());
    EXPECT_TRUE(gf2::reduce(BitVec::from_bits({1, 0, 1}), e).is_zero());
}

TEST(Echelon, CoordinatesExamples) {
    const auto e = gf2::echelonize(std::vector<BitVec>{BitVec::from_bits({1, 0, 1}), BitVec::from_bits({0, 1, 1})}, 3);
    EXPECT_EQ(*gf2::coordinates(e.rows()[1], e), BitVec::from_bits({0, 1}));
    EXPECT_EQ(*gf2::coordinates(BitVec(3), e), BitVec(2));
    EXPECT_EQ(*gf2::coordinates(e.rows()[0] + e.rows()[1], e), BitVec::from_bits({1, 1}));
    EXPECT_FALSE(gf2::coordinates(BitVec::from_bits({0, 0, 1}), e).has_value());
}

TEST(Echelon, KernelExamples) {
    const std::vector<BitVec> zero(3, BitVec(2));
    EXPECT_EQ(gf2::kernel(zero, 3, 2).rank(), 3u);
    std::vector<BitVec> id;
    for (std::size_t i = 0; i < 4; ++i) id.push_back(BitVec::unit(4, i));
    EXPECT_EQ(gf2::kernel(id, 4, 4).rank(), 0u);
    const std::vector<BitVec> same{BitVec::from_bits({1}), BitVec::from_bits({1})};
    const auto k = gf2::kernel(same, 2, 1);
    ASSERT_EQ(k.rank(), 1u);
    EXPECT_EQ(k.rows()[0], BitVec::from_bits({1, 1}));
    EXPECT_THROW(gf2::kernel(same, 3, 1), gf2::DimensionMismatch);
    EXPECT_THROW(gf2::kernel(same, 2, 2), gf2::DimensionMismatch);
}

TEST(EchelonProperty, SpanPreservedByMutualMembership) {
    for (int t = 0; t < 200; ++t) {
        const auto len = gen::uniform(1, 90);
        const auto rs = gen::rows(gen::uniform(0, 30), len, t % 2 ? 0.5 : 0.08);
        const auto e = gf2::echelonize(rs, len);
        for (const auto& r : rs) EXPECT_TRUE(e.contains(r));
        auto back = gf2::echelonize(rs, len);
        for (const auto& r : e.rows()) {
            // Every echelon row is a combination of the inputs: adding it does not grow the span.
            EXPECT_FALSE(back.insert(r));
        }
        for (std::size_t i = 0; i + 1 < e.pivots().size(); ++i) EXPECT_LT(e.pivots()[i], e.pivots()[i + 1]);
        for (std::size_t i = 0; i < e.rank(); ++i) {
            EXPECT_EQ(e.rows()[i].lowest(), e.pivots()[i]);
            for (std::size_t j = 0; j < e.rank(); ++j)
                if (i != j) {
                    EXPECT_FALSE(e.rows()[j].get(e.pivots()[i]));
                }
        }
    }
}

TEST(EchelonProperty, IndependentOfInputOrder) {
    for (int t = 0; t < 100; ++t) {
        auto rs = gen::rows(gen::uniform(1, 20), 40, 0.3);
        const auto a = gf2::echelonize(rs, 40);
        std::reverse(rs.begin(), rs.end());
        EXPECT_EQ(a, gf2::echelonize(rs, 40));
    }
}

TEST(EchelonProperty, ReduceIsIdempotent) {
    for (int t = 0; t < 200; ++t) {
        const auto e = gf2::echelonize(gen::rows(gen::uniform(0, 20), 50, 0.2), 50);
        const auto v = gen::bitvec(50);
        const auto r = e.reduce(v);
        EXPECT_EQ(e.reduce(r), r);
        EXPECT_TRUE(e.contains(v + r));
        for (auto p : e.pivots()) EXPECT_FALSE(r.get(p));
    }
}

TEST(EchelonProperty, CoordinatesReconstruct) {
    for (int t = 0; t < 100; ++t) {
        const auto e = gf2::echelonize(gen::rows(gen::uniform(1, 20), 60), 60);
        BitVec v(60);
        for (const auto& r : e.rows())
            if (gen::uniform(0, 1)) v ^= r;
        const auto c = e.coordinates(v);
        ASSERT_TRUE(c.has_value());
        EXPECT_EQ(gf2::apply(e.rows(), *c, 60), v);
    }
}

TEST(EchelonProperty, RankNullity) {
    for (int t = 0; t < 200; ++t) {
        const auto dom = gen::uniform(0, 64);
        const auto cod = gen::uniform(1, 64);
        const auto images = gen::rows(dom, cod, t % 3 == 0 ? 0.05 : 0.5);
        const auto k = gf2::kernel(images, dom, cod);
        EXPECT_EQ(gf2::rank(images, cod) + k.rank(), dom);
        for (const auto& r : k.rows()) EXPECT_TRUE(gf2::apply(images, r, cod).is_zero());
    }
}

TEST(EchelonProperty, SolveFindsPreimages) {
    for (int t = 0; t < 100; ++t) {
        const auto dom = gen::uniform(1, 30);
        const auto images = gen::rows(dom, 25, 0.4);
        const auto u = gen::bitvec(dom);
        const auto target = gf2::apply(images, u, 25);
        const auto s = gf2::solve(images, target, 25);
        ASSERT_TRUE(s.solution.has_value());
        EXPECT_EQ(gf2::apply(images, *s.solution, 25), target);
        EXPECT_EQ(s.kernel_rank, gf2::kernel(images, dom, 25).rank());
    }
}
