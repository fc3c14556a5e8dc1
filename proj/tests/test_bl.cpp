#include <gtest/gtest.h>

#include "bzl/bl/analyze.hpp"
#include "bzl/bl/construct.hpp"
#include "bzl/bl/params.hpp"
#include "bzl/bl/words.hpp"
#include "bzl/lie/centers.hpp"
#include "bzl/lie/nq.hpp"

using namespace bzl::bl;
using bzl::lie::Centralizer;
using bzl::lie::parse_word;
using bzl::lie::Symbol;

namespace {
constexpr auto FX = Centralizer::FX;
constexpr auto FY = Centralizer::FY;
}  // namespace

TEST(Params, Examples) {
    const auto a = bl_params(2, 1);
    EXPECT_EQ(a.q, 2);
    EXPECT_EQ(a.eta, 3);
    EXPECT_EQ(a.d, 14);
    EXPECT_EQ(a.m, 20);
    const auto b = bl_params(3, 1);
    EXPECT_EQ(b.eta, 7);
    EXPECT_EQ(b.d, 30);
    EXPECT_EQ(b.m, 36);
    const auto c = bl_params(2, 2);
    EXPECT_EQ(c.q, 4);
    EXPECT_EQ(c.d, 30);
    EXPECT_EQ(c.m, 40);
    EXPECT_EQ(default_class(a), 48);
    EXPECT_THROW(bl_params(1, 1), std::invalid_argument);
    EXPECT_THROW(bl_params(2, 0), std::invalid_argument);
    EXPECT_THROW(bl_params(20, 20), std::out_of_range);
}

TEST(Params, PeriodAndTopWeightIdentities) {
    for (int g = 2; g <= 8; ++g)
        for (int h = 1; h <= 6; ++h) {
            const auto p = bl_params(g, h);
            EXPECT_EQ(p.d, 2 * p.q * (p.eta + 1) - 2);
            EXPECT_EQ(p.m, theta_weight(p, 0, kOmega));
        }
}

TEST(Centralizers, PatternForTwoOne) {
    const auto p = bl_params(2, 1);
    const auto seq = bl_centralizer_sequence(p, 40);
    EXPECT_EQ(seq.size(), 39u);
    EXPECT_EQ(constituent_lengths(seq).lengths, (std::vector<std::int64_t>{4, 3, 4, 4, 3, 3, 4, 4, 3, 3, 4}));
    EXPECT_EQ(seq[0], FY);
    EXPECT_EQ(seq[1], FY);
    EXPECT_EQ(seq[2], FY);
    EXPECT_EQ(seq[3], FX);  // C_{2q}
    EXPECT_THROW(bl_centralizer_sequence(p, 3), std::invalid_argument);
}

TEST(Centralizers, PrefixForTwoTwo) {
    const auto p = bl_params(2, 2);
    const auto s = constituent_lengths(bl_centralizer_sequence(p, 30));
    ASSERT_GE(s.lengths.size(), 2u);
    EXPECT_EQ(s.lengths[0], 8);
    EXPECT_EQ(s.lengths[1], 7);
}

TEST(Constituents, Examples) {
    const auto s = constituent_lengths({FY, FY, FY, FX, FY, FY, FX});
    EXPECT_EQ(s.lengths, (std::vector<std::int64_t>{4, 3}));
    EXPECT_EQ(s.partial, 0);
    const auto y = constituent_lengths({FY, FY, FY});
    EXPECT_TRUE(y.lengths.empty());
    EXPECT_EQ(y.partial, 3);
    const auto o = constituent_lengths({FY, Centralizer::OTHER, FY, FX});
    EXPECT_EQ(o.lengths, (std::vector<std::int64_t>{2}));
    EXPECT_EQ(o.other_positions, (std::vector<std::size_t>{2}));
}

TEST(Constituents, PropertyCL) {
    EXPECT_TRUE(check_CL(constituent_lengths(bl_centralizer_sequence(bl_params(2, 1), 100)), 2));
    EXPECT_TRUE(check_CL(ConstituentSequence{{4, 2}, 0, {}}, 2));
    EXPECT_FALSE(check_CL(ConstituentSequence{{4, 5}, 0, {}}, 2));
    EXPECT_FALSE(check_CL(ConstituentSequence{{8, 5}, 0, {}}, 4));
    EXPECT_TRUE(check_CL(ConstituentSequence{{8, 4, 6, 7}, 0, {}}, 4));
}

TEST(Construct, JacobiAndZAction) {
    const auto B = construct_bl(bl_params(2, 1), 60);
    EXPECT_TRUE(bzl::lie::jacobi_check(B).pass);
    EXPECT_EQ(B.dim(1), 2u);
    for (int i = 2; i < 60; ++i) {
        EXPECT_EQ(B.dim(i), 1u);
        EXPECT_EQ(B.act(B.unit(i, 0), Symbol::Z), B.unit(i + 1, 0)) << i;
    }
}

TEST(Construct, CentralizerRoundTrip) {
    for (auto [g, h] : {std::pair{2, 1}, {3, 1}, {2, 2}, {3, 2}}) {
        const auto p = bl_params(g, h);
        const auto B = construct_bl(p, 70);
        EXPECT_EQ(bzl::lie::centralizer_sequence(B), bl_centralizer_sequence(p, 70)) << g << "," << h;
    }
    EXPECT_THROW(construct_bl(bl_params(2, 1), 3), std::invalid_argument);
}

TEST(Words, Examples) {
    const auto p = bl_params(2, 1);
    EXPECT_EQ(v_word(p, 0).render(), "y x^3");
    EXPECT_EQ(v_word(p, 0).weight(), 4u);
    EXPECT_EQ(v_word(p, 1).letters(), parse_word("y x^3 (y x^2 (y x^3)^2 y x^2)^1").letters());
    EXPECT_EQ(theta_word(p, 0, 2).letters(), parse_word("y x^3 y x y").letters());
    EXPECT_EQ(theta_word(p, 0, 2).weight(), 7u);
    EXPECT_EQ(theta_word(p, 0, 3).letters(), parse_word("y x^3 y x^2 y x^3 y x^2 y").letters());
    EXPECT_EQ(theta_word(p, 0, 3).weight(), 15u);
    EXPECT_EQ(theta_word(p, 0, 1).letters(), parse_word("y x^4").letters());
    EXPECT_EQ(theta_name(kOmega, 2), "theta_2^omega");
    EXPECT_THROW(theta_word(p, 0, 4), std::invalid_argument);
    EXPECT_THROW(theta_word(p, 0, 0), std::invalid_argument);
    EXPECT_THROW(mu_word(p, 0, 0), std::invalid_argument);
    EXPECT_THROW(v_word(p, -1), std::invalid_argument);
}

TEST(Words, WeightsMatchClosedFormulas) {
    for (int g = 2; g <= 4; ++g)
        for (int h = 1; g + h <= 6; ++h) {
            const auto p = bl_params(g, h);
            for (std::int64_t n = 0; n <= 2; ++n) {
                EXPECT_EQ(static_cast<std::int64_t>(v_word(p, n).weight()), 2 * p.q + p.d * n);
                EXPECT_EQ(static_cast<std::int64_t>(mu_word(p, n, 1).weight()), 4 * p.q - 2 + p.d * n);
                for (std::int64_t i = 2; i <= p.eta + 1; ++i)
                    EXPECT_EQ(static_cast<std::int64_t>(mu_word(p, n, i).weight()), 2 * p.q * i + 2 * p.q - 2 + p.d * n);
                for (int t = 1; t <= g + h; ++t)
                    EXPECT_EQ(static_cast<std::int64_t>(theta_word(p, n, t).weight()), theta_weight(p, n, t));
                EXPECT_EQ(static_cast<std::int64_t>(theta_word(p, n, kOmega).weight()), theta_weight(p, n, kOmega));
            }
        }
}

// [mu_{0, eta - 2^{g+h+1-b} + 2} y] = theta_0^b, using the minus sign throughout.
TEST(Words, MuThetaBIdentity) {
    for (auto [g, h] : {std::pair{2, 1}, {3, 1}, {2, 2}}) {
        const auto p = bl_params(g, h);
        const auto M = bzl::lie::nq_compute(presentation_R(p), default_class(p));
        for (int b = h + 2; b <= g + h; ++b) {
            auto mu = mu_word(p, 0, p.eta - (std::int64_t{1} << (g + h + 1 - b)) + 2);
            mu.append(Symbol::Y);
            EXPECT_EQ(mu.letters(), theta_word(p, 0, b).letters());
            EXPECT_EQ(bzl::lie::eval_word(M, mu), bzl::lie::eval_word(M, theta_word(p, 0, b)));
        }
    }
}

TEST(Presentation, TwoOneRelators) {
    const auto R = presentation_R(bl_params(2, 1));
    ASSERT_EQ(R.size(), 6u);
    const std::vector<std::string> want{"y x y",
                                        "y x^5",
                                        "y x^3 y x y x",
                                        "y x^3 y x^2 y x^3 y x^2 y x",
                                        "y x^3 (y x^2 (y x^3)^2 y x^2) x y x",
                                        "y x^3 y x^2 y x^2 y"};
    for (std::size_t i = 0; i < want.size(); ++i) EXPECT_EQ(R.relators[i].letters(), parse_word(want[i]).letters()) << i;
    EXPECT_EQ(R.relators[4].weight(), 21u);
    EXPECT_EQ(R.relators[5].weight(), 11u);
}

TEST(Presentation, CountFormula) {
    EXPECT_EQ(presentation_R(bl_params(3, 1)).size(), 10u);
    for (int g = 2; g <= 5; ++g)
        for (int h = 1; g + h <= 6; ++h) {
            const auto p = bl_params(g, h);
            EXPECT_EQ(static_cast<std::int64_t>(presentation_R(p).size()), p.q + p.h + p.eta);
        }
}

TEST(Presentation, PowerOfTwoGapsExcluded) {
    const auto p = bl_params(3, 1);
    const auto R = presentation_R(p);
    for (std::int64_t t = 0; t <= p.eta - 2; ++t) {
        auto w = mu_word(p, 0, t + 2);
        w.append(Symbol::Y);
        bool present = false;
        for (const auto& r : R.relators) present = present || r.letters() == w.letters();
        const auto gap = p.eta - t;
        EXPECT_EQ(present, gap != 2 && gap != 4) << t;
    }
}

TEST(Analyze, TwoOneAtFifty) {
    const auto r = analyze(bl_params(2, 1), 50);
    for (const auto& c : r.checks) EXPECT_TRUE(c.pass) << c.name << ": " << c.detail;
    EXPECT_TRUE(r.all_pass());
    std::vector<int> degrees;
    for (const auto& c : r.centers) degrees.push_back(c.degree);
    EXPECT_EQ(degrees, (std::vector<int>{5, 7, 15, 20, 21, 29, 33, 35, 43, 48, 49}));
    std::vector<int> second;
    for (const auto& c : r.second_centers) second.push_back(c.degree);
    EXPECT_EQ(second, (std::vector<int>{19, 47}));
    const auto& L = r.quotient.constituents.lengths;
    ASSERT_GE(L.size(), 10u);
    EXPECT_EQ(std::vector<std::int64_t>(L.begin(), L.begin() + 10),
              (std::vector<std::int64_t>{4, 3, 4, 4, 3, 3, 4, 4, 3, 3}));
    EXPECT_THROW(analyze(bl_params(2, 1), 21), std::invalid_argument);
}

TEST(Analyze, ThreeOneAtEighty) {
    const auto r = analyze(bl_params(3, 1), 80);
    for (const auto& c : r.checks) EXPECT_TRUE(c.pass) << c.name << ": " << c.detail;
}

TEST(Analyze, ReportJsonIsDeterministic) {
    const auto a = to_json(analyze(bl_params(2, 1), 40)).dump(2);
    const auto b = to_json(analyze(bl_params(2, 1), 40)).dump(2);
    EXPECT_EQ(a, b);
    const auto j = nlohmann::json::parse(a);
    EXPECT_EQ(j.at("params").at("m"), 20);
    EXPECT_TRUE(j.at("all_pass").get<bool>());
}
