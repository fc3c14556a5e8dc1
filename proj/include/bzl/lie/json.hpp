#pragma once

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "bzl/lie/graded_algebra.hpp"

namespace bzl::lie {

inline constexpr int kAlgebraFormatVersion = 1;

/// {format_version, class_bound, dims, basis[{degree,index,label,parent,generator}],
///  action[{degree, x:[hex rows], y:[hex rows]}]}.
inline nlohmann::json to_json(const GradedAlgebra& A) {
    nlohmann::json j;
    j["format_version"] = kAlgebraFormatVersion;
    j["class_bound"] = A.class_bound();
    j["dims"] = A.dims();
    auto basis = nlohmann::json::array();
    auto action = nlohmann::json::array();
    for (int n = 1; n <= A.class_bound(); ++n) {
        for (const auto& b : A.basis(n)) {
            nlohmann::json e;
            e["degree"] = b.degree;
            e["index"] = b.index;
            e["label"] = b.label();
            e["parent"] = b.parent < 0 ? nlohmann::json(nullptr) : nlohmann::json(b.parent);
            e["generator"] = std::string(1, gen_char(b.generator));
            basis.push_back(std::move(e));
        }
        nlohmann::json rows;
        rows["degree"] = n;
        for (Gen g : kGenerators) {
            auto hex = nlohmann::json::array();
            for (const auto& r : A.action(n, g)) hex.push_back(r.to_hex());
            rows[std::string(1, gen_char(g))] = std::move(hex);
        }
        action.push_back(std::move(rows));
    }
    j["basis"] = std::move(basis);
    j["action"] = std::move(action);
    return j;
}

inline std::string dump_algebra(const GradedAlgebra& A) { return to_json(A).dump(2) + "\n"; }

inline GradedAlgebra algebra_from_json(const nlohmann::json& j) {
    if (j.at("format_version").get<int>() != kAlgebraFormatVersion)
        throw std::invalid_argument("algebra_from_json: unsupported format_version");
    const int C = j.at("class_bound").get<int>();
    if (C < 1) throw std::invalid_argument("algebra_from_json: class_bound must be >= 1");
    std::vector<std::vector<BasisElement>> basis(static_cast<std::size_t>(C));
    for (const auto& e : j.at("basis")) {
        BasisElement b;
        b.degree = e.at("degree").get<int>();
        b.index = e.at("index").get<std::size_t>();
        b.parent = e.at("parent").is_null() ? -1 : e.at("parent").get<int>();
        const auto gen = e.at("generator").get<std::string>();
        if (gen != "x" && gen != "y") throw std::invalid_argument("algebra_from_json: bad generator");
        b.generator = gen == "x" ? Gen::X : Gen::Y;
        if (b.degree < 1 || b.degree > C) throw std::invalid_argument("algebra_from_json: basis degree out of range");
        auto& slot = basis[static_cast<std::size_t>(b.degree - 1)];
        if (b.index != slot.size()) throw std::invalid_argument("algebra_from_json: basis not in index order");
        if (b.degree == 1) {
            b.letters = {gen_symbol(b.generator)};
        } else {
            const auto& prev = basis[static_cast<std::size_t>(b.degree - 2)];
            if (b.parent < 0 || static_cast<std::size_t>(b.parent) >= prev.size())
                throw std::invalid_argument("algebra_from_json: parent out of range");
            b.letters = prev[static_cast<std::size_t>(b.parent)].letters;
            b.letters.push_back(gen_symbol(b.generator));
        }
        slot.push_back(std::move(b));
    }
    std::vector<std::array<std::vector<BitVec>, 2>> action(static_cast<std::size_t>(C));
    const auto& rows = j.at("action");
    if (rows.size() != static_cast<std::size_t>(C)) throw std::invalid_argument("algebra_from_json: action size");
    for (int n = 1; n <= C; ++n) {
        const auto& r = rows[static_cast<std::size_t>(n - 1)];
        if (r.at("degree").get<int>() != n) throw std::invalid_argument("algebra_from_json: action out of order");
        const std::size_t len = n < C ? basis[static_cast<std::size_t>(n)].size() : 0;
        for (Gen g : kGenerators)
            for (const auto& h : r.at(std::string(1, gen_char(g))))
                action[static_cast<std::size_t>(n - 1)][gen_index(g)].push_back(
                    BitVec::from_hex(h.get<std::string>(), len));
    }
    return GradedAlgebra(C, std::move(basis), std::move(action));
}

}  // namespace bzl::lie
