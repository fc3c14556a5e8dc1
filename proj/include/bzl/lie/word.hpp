#pragma once

#include <cctype>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace bzl::lie {

/// Letters of a commutator word. Z stands for x + y.
enum class Symbol : std::uint8_t { X = 0, Y = 1, Z = 2 };

inline char symbol_char(Symbol s) noexcept { return s == Symbol::X ? 'x' : s == Symbol::Y ? 'y' : 'z'; }

class ParseError : public std::invalid_argument {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::invalid_argument(what + " at position " + std::to_string(position)), position_(position) {}
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// One tail item: a letter with exponent, or a parenthesised sequence with exponent.
struct Item {
    struct Letter {
        Symbol symbol;
        friend bool operator==(const Letter&, const Letter&) = default;
    };
    std::variant<Letter, std::vector<Item>> body;
    std::uint32_t exponent = 1;

    static Item letter(Symbol s, std::uint32_t e = 1) { return Item{Letter{s}, e}; }
    static Item group(std::vector<Item> items, std::uint32_t e = 1) { return Item{std::move(items), e}; }

    bool is_letter() const noexcept { return std::holds_alternative<Letter>(body); }

    friend bool operator==(const Item& a, const Item& b) { return a.exponent == b.exponent && a.body == b.body; }
};

/// Left-normed commutator word in exponential form, e.g. "y x^3 (y x^2)^2 y".
///
/// [a b c] is read as [[a, b], c]; an exponent repeats its atom, and a group
/// exponent repeats the group's letters in place.
class CommutatorWord {
public:
    CommutatorWord() = default;
    explicit CommutatorWord(Symbol head, std::vector<Item> tail = {}) : head_(head), tail_(std::move(tail)) {}

    Symbol head() const noexcept { return head_; }
    const std::vector<Item>& tail() const noexcept { return tail_; }

    CommutatorWord& append(Symbol s, std::uint32_t e = 1) {
        if (e == 0) return *this;
        if (!tail_.empty() && tail_.back().is_letter() &&
            std::get<Item::Letter>(tail_.back().body).symbol == s)
            tail_.back().exponent += e;
        else
            tail_.push_back(Item::letter(s, e));
        return *this;
    }

    CommutatorWord& append_group(std::vector<Item> items, std::uint32_t e = 1) {
        if (e == 0 || items.empty()) return *this;
        tail_.push_back(Item::group(std::move(items), e));
        return *this;
    }

    /// Appends the letters of other (head included) as plain items.
    CommutatorWord& append_word(const CommutatorWord& other) {
        append(other.head_);
        for (const auto& it : other.tail_) tail_.push_back(it);
        return *this;
    }

    /// The word viewed as a tail group (head first).
    std::vector<Item> as_items() const {
        std::vector<Item> items{Item::letter(head_)};
        items.insert(items.end(), tail_.begin(), tail_.end());
        return items;
    }

    /// Fully expanded letter sequence, head first.
    std::vector<Symbol> letters() const {
        std::vector<Symbol> out{head_};
        expand(tail_, out);
        return out;
    }

    std::size_t weight() const {
        std::size_t w = 1;
        for (const auto& it : tail_) w += item_weight(it);
        return w;
    }

    std::string render() const {
        std::string out(1, symbol_char(head_));
        for (const auto& it : tail_) {
            out += ' ';
            render_item(it, out);
        }
        return out;
    }

    friend bool operator==(const CommutatorWord&, const CommutatorWord&) = default;

private:
    static std::size_t item_weight(const Item& it) {
        if (it.is_letter()) return it.exponent;
        std::size_t w = 0;
        for (const auto& sub : std::get<std::vector<Item>>(it.body)) w += item_weight(sub);
        return w * it.exponent;
    }

    static void expand(const std::vector<Item>& items, std::vector<Symbol>& out) {
        for (const auto& it : items) {
            for (std::uint32_t r = 0; r < it.exponent; ++r) {
                if (it.is_letter())
                    out.push_back(std::get<Item::Letter>(it.body).symbol);
                else
                    expand(std::get<std::vector<Item>>(it.body), out);
            }
        }
    }

    static void render_item(const Item& it, std::string& out) {
        if (it.is_letter()) {
            out += symbol_char(std::get<Item::Letter>(it.body).symbol);
        } else {
            out += '(';
            bool first = true;
            for (const auto& sub : std::get<std::vector<Item>>(it.body)) {
                if (!first) out += ' ';
                first = false;
                render_item(sub, out);
            }
            out += ')';
        }
        if (it.exponent != 1) out += '^' + std::to_string(it.exponent);
    }

    Symbol head_ = Symbol::X;
    std::vector<Item> tail_;
};

namespace detail {

class WordParser {
public:
    explicit WordParser(std::string_view text) : text_(text) {}

    CommutatorWord parse() {
        skip_ws();
        if (at_end()) throw ParseError("empty word", pos_);
        const std::size_t head_pos = pos_;
        const char c = text_[pos_];
        if (c == '(') throw ParseError("leftmost atom must be a single generator", head_pos);
        const Symbol head = symbol(c, head_pos);
        ++pos_;
        skip_ws();
        if (!at_end() && text_[pos_] == '^') throw ParseError("leftmost atom must be a single generator", pos_);
        auto tail = sequence(/*in_group=*/false);
        if (!at_end()) throw ParseError("unexpected character", pos_);
        return CommutatorWord(head, std::move(tail));
    }

private:
    std::vector<Item> sequence(bool in_group) {
        std::vector<Item> items;
        while (true) {
            skip_ws();
            if (at_end()) {
                if (in_group) throw ParseError("unbalanced parenthesis", pos_);
                break;
            }
            const char c = text_[pos_];
            if (c == ')') {
                if (!in_group) throw ParseError("unbalanced parenthesis", pos_);
                break;
            }
            if (c == '(') {
                const std::size_t open = pos_;
                ++pos_;
                auto inner = sequence(true);
                ++pos_;  // ')'
                if (inner.empty()) throw ParseError("empty group", open);
                items.push_back(Item::group(std::move(inner), exponent()));
            } else {
                const Symbol s = symbol(c, pos_);
                ++pos_;
                items.push_back(Item::letter(s, exponent()));
            }
        }
        return items;
    }

    std::uint32_t exponent() {
        skip_ws();
        if (at_end() || text_[pos_] != '^') return 1;
        ++pos_;
        skip_ws();
        const std::size_t start = pos_;
        std::uint64_t v = 0;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            v = v * 10 + static_cast<std::uint64_t>(text_[pos_] - '0');
            if (v > 1'000'000) throw ParseError("exponent too large", start);
            ++pos_;
        }
        if (pos_ == start) throw ParseError("expected exponent after '^'", start);
        if (v == 0) throw ParseError("exponent must be positive", start);
        return static_cast<std::uint32_t>(v);
    }

    Symbol symbol(char c, std::size_t at) const {
        switch (c) {
            case 'x': return Symbol::X;
            case 'y': return Symbol::Y;
            case 'z': return Symbol::Z;
            default: throw ParseError(std::string("unexpected character '") + c + "'", at);
        }
    }

    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool at_end() const noexcept { return pos_ >= text_.size(); }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses WORD := ATOM+, ATOM := ('x'|'y'|'z')('^' INT)? | '(' WORD ')' ('^' INT)?.
inline CommutatorWord parse_word(std::string_view text) { return detail::WordParser(text).parse(); }

}  // namespace bzl::lie
