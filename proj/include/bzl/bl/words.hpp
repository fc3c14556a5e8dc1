#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "bzl/bl/params.hpp"
#include "bzl/lie/presentation.hpp"
#include "bzl/lie/word.hpp"

namespace bzl::bl {

using lie::CommutatorWord;
using lie::Item;
using lie::Symbol;

/// Index of a theta family: 1, a in [2, h+1], b in [h+2, g+h], or omega.
inline constexpr int kOmega = -1;

namespace detail {

inline std::uint32_t u32(std::int64_t v) {
    if (v < 0 || v > 0xFFFFFFFFLL) throw std::out_of_range("word exponent out of range");
    return static_cast<std::uint32_t>(v);
}

/// Items of y x^e.
inline std::vector<Item> yx(std::int64_t e) {
    std::vector<Item> items{Item::letter(Symbol::Y)};
    if (e > 0) items.push_back(Item::letter(Symbol::X, u32(e)));
    return items;
}

/// Appends items repeated e times: flat when e = 1, grouped otherwise.
inline void append_repeat(CommutatorWord& w, const std::vector<Item>& items, std::int64_t e) {
    if (e <= 0) return;
    if (e == 1) {
        for (const auto& it : items) {
            if (it.is_letter())
                w.append(std::get<Item::Letter>(it.body).symbol, it.exponent);
            else
                w.append_group(std::get<std::vector<Item>>(it.body), it.exponent);
        }
        return;
    }
    w.append_group(items, u32(e));
}

/// The period block y x^{2q-2} (y x^{2q-1})^{eta-1} y x^{2q-2}.
inline std::vector<Item> period(const BlParams& p) {
    std::vector<Item> items = yx(2 * p.q - 2);
    items.push_back(Item::group(yx(2 * p.q - 1), u32(p.eta - 1)));
    for (auto& it : yx(2 * p.q - 2)) items.push_back(std::move(it));
    return items;
}

/// Appends y x^{2q-2} (y x^{2q-1})^i y x^{2q-2}.
inline void append_mu_tail(CommutatorWord& w, const BlParams& p, std::int64_t i) {
    append_repeat(w, yx(2 * p.q - 2), 1);
    append_repeat(w, yx(2 * p.q - 1), i);
    append_repeat(w, yx(2 * p.q - 2), 1);
}

}  // namespace detail

/// v_n = [y x^{2q-1} (y x^{2q-2} (y x^{2q-1})^{eta-1} y x^{2q-2})^n], weight 2q + dn.
inline CommutatorWord v_word(const BlParams& p, std::int64_t n) {
    if (n < 0) throw std::invalid_argument("v_word: n must be >= 0");
    CommutatorWord w(Symbol::Y);
    w.append(Symbol::X, detail::u32(2 * p.q - 1));
    detail::append_repeat(w, detail::period(p), n);
    return w;
}

/// mu_{n,1} = [v_n y x^{2q-3}]; mu_{n,i} = [v_n y x^{2q-2} (y x^{2q-1})^{i-2} y x^{2q-2}] for i >= 2.
inline CommutatorWord mu_word(const BlParams& p, std::int64_t n, std::int64_t i) {
    if (i < 1) throw std::invalid_argument("mu_word: i must be >= 1");
    CommutatorWord w = v_word(p, n);
    if (i == 1) {
        detail::append_repeat(w, detail::yx(2 * p.q - 3), 1);
        return w;
    }
    detail::append_mu_tail(w, p, i - 2);
    return w;
}

inline bool theta_index_valid(const BlParams& p, int t) { return t == kOmega || (t >= 1 && t <= p.g + p.h); }

inline std::string theta_name(int t, std::int64_t n) {
    return "theta_" + std::to_string(n) + "^" + (t == kOmega ? std::string("omega") : std::to_string(t));
}

inline CommutatorWord theta_word(const BlParams& p, std::int64_t n, int t) {
    if (!theta_index_valid(p, t)) throw std::invalid_argument("theta_word: index outside {1..g+h, omega}");
    if (n < 0) throw std::invalid_argument("theta_word: n must be >= 0");
    if (t == kOmega) {
        CommutatorWord w = v_word(p, 2 * n + 1);
        w.append(Symbol::X).append(Symbol::Y);
        return w;
    }
    CommutatorWord w = v_word(p, n);
    if (t == 1) {
        w.append(Symbol::X);
    } else if (t <= p.h + 1) {
        detail::append_repeat(w, detail::yx(2 * p.q - (std::int64_t{1} << (p.h + 2 - t)) - 1), 1);
        w.append(Symbol::Y);
    } else {
        detail::append_mu_tail(w, p, p.eta - (std::int64_t{1} << (p.g + p.h + 1 - t)));
        w.append(Symbol::Y);
    }
    return w;
}

/// Weight from the closed formulas (independent of the word construction).
inline std::int64_t theta_weight(const BlParams& p, std::int64_t n, int t) {
    if (!theta_index_valid(p, t)) throw std::invalid_argument("theta_weight: index outside {1..g+h, omega}");
    if (t == kOmega) return 2 * p.q + 2 + p.d * (2 * n + 1);
    if (t == 1) return 2 * p.q + 1 + p.d * n;
    if (t <= p.h + 1) return 4 * p.q - (std::int64_t{1} << (p.h + 2 - t)) + 1 + p.d * n;
    return 2 * p.q * (p.eta + 3 - (std::int64_t{1} << (p.g + p.h + 1 - t))) - 1 + p.d * n;
}

/// The q + h + eta relators.
inline lie::Presentation presentation_R(const BlParams& p) {
    lie::Presentation r;
    for (std::int64_t j = 0; j <= p.q - 2; ++j) {
        CommutatorWord w(Symbol::Y);
        w.append(Symbol::X, detail::u32(2 * j + 1)).append(Symbol::Y);
        r.add(std::move(w), "[y x^" + std::to_string(2 * j + 1) + " y]");
    }
    for (int t = 1; t <= p.g + p.h; ++t) {
        CommutatorWord w = theta_word(p, 0, t);
        w.append(Symbol::X);
        r.add(std::move(w), "[" + theta_name(t, 0) + " x]");
    }
    {
        CommutatorWord w = v_word(p, 1);
        w.append(Symbol::X).append(Symbol::Y).append(Symbol::X);
        r.add(std::move(w), "[" + theta_name(kOmega, 0) + " x]");
    }
    for (std::int64_t t = 0; t <= p.eta - 2; ++t) {
        bool excluded = false;
        for (int a = 1; a <= p.g - 1; ++a) excluded = excluded || p.eta - t == (std::int64_t{1} << a);
        if (excluded) continue;
        CommutatorWord w = mu_word(p, 0, t + 2);
        w.append(Symbol::Y);
        r.add(std::move(w), "[mu_{0," + std::to_string(t + 2) + "} y]");
    }
    const auto expected = static_cast<std::size_t>(p.q + p.h + p.eta);
    if (r.size() != expected)
        throw std::logic_error("presentation_R: emitted " + std::to_string(r.size()) + " relators, expected " +
                               std::to_string(expected));
    return r;
}

}  // namespace bzl::bl
