#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "bzl/lie/word.hpp"

namespace bzl::lie {

/// Two generators x, y and a list of homogeneous relators.
struct Presentation {
    std::vector<CommutatorWord> relators;
    std::vector<std::string> names;  ///< optional display names, parallel to relators

    void add(CommutatorWord w, std::string name = {}) {
        if (w.weight() < 2) throw std::invalid_argument("Presentation: relator weight must be >= 2");
        relators.push_back(std::move(w));
        names.push_back(std::move(name));
    }

    static Presentation parse(const std::vector<std::string_view>& texts) {
        Presentation p;
        for (auto t : texts) p.add(parse_word(t));
        return p;
    }

    std::size_t size() const noexcept { return relators.size(); }
};

}  // namespace bzl::lie
