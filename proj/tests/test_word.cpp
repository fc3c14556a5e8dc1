#include <gtest/gtest.h>

#include "bzl/lie/presentation.hpp"
#include "bzl/lie/word.hpp"
#include "gen.hpp"

using namespace bzl::lie;

TEST(Word, Weights) {
    EXPECT_EQ(parse_word("y x^3").weight(), 4u);
    EXPECT_EQ(parse_word("y x^3 (y x^2 (y x^3)^2 y x^2)^1").weight(), 18u);
    EXPECT_EQ(parse_word("x").weight(), 1u);
    EXPECT_EQ(parse_word("  z  ").weight(), 1u);
}

TEST(Word, LettersExpandLeftNormed) {
    const auto w = parse_word("y x^2 (y x)^2");
    const std::vector<Symbol> want{Symbol::Y, Symbol::X, Symbol::X, Symbol::Y, Symbol::X, Symbol::Y, Symbol::X};
    EXPECT_EQ(w.letters(), want);
    EXPECT_EQ(w.head(), Symbol::Y);
}

TEST(Word, CanonicalRendering) {
    EXPECT_EQ(parse_word("y   x^3").render(), "y x^3");
    EXPECT_EQ(parse_word("y x^1").render(), "y x");
    EXPECT_EQ(parse_word("y x^3 (y x^2 (y x^3)^2 y x^2)^1").render(), "y x^3 (y x^2 (y x^3)^2 y x^2)");
}

TEST(Word, RoundTripProperty) {
    for (int t = 0; t < 300; ++t) {
        CommutatorWord w(static_cast<Symbol>(gen::uniform(0, 2)));
        const auto items = gen::uniform(0, 5);
        for (std::size_t i = 0; i < items; ++i) {
            const auto e = static_cast<std::uint32_t>(gen::uniform(1, 4));
            if (gen::uniform(0, 3) == 0) {
                std::vector<Item> inner{Item::letter(Symbol::Y), Item::letter(Symbol::X, e)};
                w.append_group(inner, static_cast<std::uint32_t>(gen::uniform(1, 3)));
            } else {
                w.append(static_cast<Symbol>(gen::uniform(0, 2)), e);
            }
        }
        const auto text = w.render();
        const auto back = parse_word(text);
        EXPECT_EQ(back.render(), text);
        EXPECT_EQ(back.letters(), w.letters());
        EXPECT_EQ(back.weight(), w.weight());
    }
}

TEST(Word, ErrorsCarryPositions) {
    auto pos = [](std::string_view s) -> std::size_t {
        try {
            parse_word(s);
        } catch (const ParseError& e) {
            return e.position();
        }
        return std::string_view::npos;
    };
    EXPECT_EQ(pos(""), 0u);
    EXPECT_EQ(pos("y x^0"), 4u);
    EXPECT_EQ(pos("y x^"), 4u);
    EXPECT_EQ(pos("y w"), 2u);
    EXPECT_EQ(pos("y (x"), 4u);
    EXPECT_EQ(pos("y x)"), 3u);
    EXPECT_EQ(pos("(y x)"), 0u);
    EXPECT_EQ(pos("y^2 x"), 1u);
    EXPECT_EQ(pos("y ()"), 2u);
}

TEST(Presentation, RejectsWeightOne) {
    Presentation p;
    EXPECT_THROW(p.add(parse_word("x")), std::invalid_argument);
    const auto q = Presentation::parse({"y x y", "y x^2"});
    EXPECT_EQ(q.size(), 2u);
}
