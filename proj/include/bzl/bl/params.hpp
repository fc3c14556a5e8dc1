#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "bzl/lie/centers.hpp"

namespace bzl::bl {

using lie::Centralizer;

struct BlParams {
    int g = 2;
    int h = 1;
    std::int64_t q = 2;    ///< 2^h
    std::int64_t eta = 3; ///< 2^g - 1
    std::int64_t d = 14;  ///< 2^{g+h+1} - 2
    std::int64_t m = 20;  ///< 2q(eta + 2)

    friend bool operator==(const BlParams&, const BlParams&) = default;
};

inline constexpr int kMaxGh = 24;

inline BlParams bl_params(int g, int h) {
    if (g < 2 || h < 1) throw std::invalid_argument("bl_params: need g >= 2 and h >= 1");
    if (g + h > kMaxGh) throw std::out_of_range("bl_params: g + h too large");
    BlParams p;
    p.g = g;
    p.h = h;
    p.q = std::int64_t{1} << h;
    p.eta = (std::int64_t{1} << g) - 1;
    p.d = (std::int64_t{1} << (g + h + 1)) - 2;
    p.m = 2 * p.q * (p.eta + 2);
    return p;
}

/// CLI default: two full periods past the defining quotient.
inline int default_class(const BlParams& p) { return static_cast<int>(p.m + 2 * p.d); }

/// Constituent lengths 2q, 2q-1, ((2q)^{eta-1}, (2q-1)^2)^inf, as many as cover `count` positions.
inline std::vector<std::int64_t> bl_constituent_pattern(const BlParams& p, std::int64_t count) {
    std::vector<std::int64_t> out{2 * p.q, 2 * p.q - 1};
    std::int64_t covered = 4 * p.q - 1;
    while (covered < count) {
        for (std::int64_t r = 0; r + 1 < p.eta; ++r) out.push_back(2 * p.q);
        out.push_back(2 * p.q - 1);
        out.push_back(2 * p.q - 1);
        covered += 2 * p.q * (p.eta + 1) - 2;
    }
    return out;
}

/// C_1..C_{class_bound-1} for B_l(g,h): each constituent of length L is L-1 times Fy then Fx.
inline std::vector<Centralizer> bl_centralizer_sequence(const BlParams& p, int class_bound) {
    if (class_bound < 2 * p.q) throw std::invalid_argument("bl_centralizer_sequence: class bound below 2q");
    const auto count = static_cast<std::size_t>(class_bound - 1);
    std::vector<Centralizer> out;
    for (auto len : bl_constituent_pattern(p, static_cast<std::int64_t>(count))) {
        for (std::int64_t t = 0; t + 1 < len; ++t) out.push_back(Centralizer::FY);
        out.push_back(Centralizer::FX);
        if (out.size() >= count) break;
    }
    out.resize(count);
    return out;
}

struct ConstituentSequence {
    std::vector<std::int64_t> lengths;     ///< complete constituents
    std::int64_t partial = 0;              ///< trailing run without its terminating Fx
    std::vector<std::size_t> other_positions;  ///< degrees whose centralizer is neither Fx nor Fy
};

/// Splits at Fx entries. An OTHER entry is reported and breaks the current run,
/// which is then discarded.
inline ConstituentSequence constituent_lengths(const std::vector<Centralizer>& seq) {
    ConstituentSequence out;
    std::int64_t run = 0;
    for (std::size_t i = 0; i < seq.size(); ++i) {
        switch (seq[i]) {
            case Centralizer::FY: ++run; break;
            case Centralizer::FX:
                out.lengths.push_back(run + 1);
                run = 0;
                break;
            case Centralizer::OTHER:
                out.other_positions.push_back(i + 1);
                run = 0;
                break;
        }
    }
    out.partial = run;
    return out;
}

/// Property (CL): complete lengths lie in {2q} and {2q - 2^s : 0 <= s <= h}.
inline bool check_CL(const ConstituentSequence& s, std::int64_t q) {
    if (q < 1 || (q & (q - 1)) != 0) throw std::invalid_argument("check_CL: q must be a power of two");
    for (auto len : s.lengths) {
        bool ok = len == 2 * q;
        for (std::int64_t t = 1; t <= q && !ok; t <<= 1) ok = len == 2 * q - t;
        if (!ok) return false;
    }
    return true;
}

}  // namespace bzl::bl
