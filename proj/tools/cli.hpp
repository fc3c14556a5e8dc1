#pragma once

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "bzl/bl/analyze.hpp"
#include "bzl/bl/construct.hpp"
#include "bzl/bl/words.hpp"
#include "bzl/char2/appendix.hpp"
#include "bzl/char2/binomial.hpp"
#include "bzl/lie/json.hpp"
#include "bzl/lie/nq.hpp"

namespace bzl::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

struct Config {
    std::string subcommand;
    int g = 2;
    int h = 1;
    int class_bound = 0;  ///< 0 means the subcommand default
    std::string format = "text";
    std::string output;
    int verbosity = 0;
    std::string word;
    std::string json_path;
    int gh_max = 6;
    std::uint64_t check_max = 1024;
    std::uint64_t Q = 2;
    std::uint64_t s_max = 8;
};

namespace detail {

inline std::string header(const bl::BlParams& p, int class_bound) {
    std::ostringstream os;
    os << "# g=" << p.g << " h=" << p.h << " q=" << p.q << " eta=" << p.eta << " d=" << p.d << " m=" << p.m;
    if (class_bound > 0) os << " class=" << class_bound;
    os << "\n";
    return os.str();
}

inline nlohmann::json params_json(const bl::BlParams& p) {
    return {{"g", p.g}, {"h", p.h}, {"q", p.q}, {"eta", p.eta}, {"d", p.d}, {"m", p.m}};
}

inline std::string join(const std::vector<std::size_t>& v) {
    std::string s;
    for (auto x : v) s += (s.empty() ? "" : " ") + std::to_string(x);
    return s;
}

inline void algebra_table(std::ostream& os, const lie::GradedAlgebra& A) {
    os << "dims: " << join(A.dims()) << "\n";
    os << std::left << std::setw(8) << "degree" << std::setw(7) << "index" << "label\n";
    for (int n = 1; n <= A.class_bound(); ++n)
        for (const auto& b : A.basis(n)) os << std::setw(8) << n << std::setw(7) << b.index << b.label() << "\n";
}

inline int present(const Config& c, std::ostream& os) {
    const auto p = bl::bl_params(c.g, c.h);
    const auto R = bl::presentation_R(p);
    if (c.format == "json") {
        auto rel = nlohmann::json::array();
        for (std::size_t i = 0; i < R.size(); ++i)
            rel.push_back({{"word", R.relators[i].render()}, {"weight", R.relators[i].weight()}, {"name", R.names[i]}});
        os << nlohmann::json{{"params", params_json(p)}, {"relators", rel}}.dump(2) << "\n";
        return kExitOk;
    }
    if (c.verbosity > 0) os << header(p, 0);
    for (std::size_t i = 0; i < R.size(); ++i) {
        os << R.relators[i].render();
        if (c.verbosity > 0) os << "    # weight " << R.relators[i].weight() << ", " << R.names[i];
        os << "\n";
    }
    return kExitOk;
}

inline int nq(const Config& c, std::ostream& os) {
    const auto p = bl::bl_params(c.g, c.h);
    const int C = c.class_bound > 0 ? c.class_bound : bl::default_class(p);
    const auto M = lie::nq_compute(bl::presentation_R(p), C);
    if (c.format == "json") {
        os << lie::dump_algebra(M);
        return kExitOk;
    }
    os << header(p, C);
    algebra_table(os, M);
    return kExitOk;
}

inline int construct(const Config& c, std::ostream& os) {
    const auto p = bl::bl_params(c.g, c.h);
    const int C = c.class_bound > 0 ? c.class_bound : bl::default_class(p);
    const auto B = bl::construct_bl(p, C);
    if (c.format == "json") {
        os << lie::dump_algebra(B);
        return kExitOk;
    }
    os << header(p, C);
    os << "centralizers: " << lie::render_centralizers(lie::centralizer_sequence(B)) << "\n";
    algebra_table(os, B);
    return kExitOk;
}

inline int analyze(const Config& c, std::ostream& os) {
    const auto p = bl::bl_params(c.g, c.h);
    const int C = c.class_bound > 0 ? c.class_bound : bl::default_class(p);
    const auto rep = bl::analyze(p, C);
    const auto j = bl::to_json(rep);
    if (!c.json_path.empty()) {
        std::ofstream f(c.json_path, std::ios::binary);
        if (!f) throw std::runtime_error("cannot write " + c.json_path);
        f << j.dump(2) << "\n";
    }
    if (c.format == "json") {
        os << j.dump(2) << "\n";
        return rep.all_pass() ? kExitOk : kExitCheckFailed;
    }
    os << header(p, C);
    os << "dims of M: " << join(rep.dims) << "\n";
    os << "central components:\n";
    for (const auto& e : rep.centers) {
        os << "  degree " << e.degree << ": " << e.basis_labels.front();
        if (!e.matched_theta.empty()) os << "  = " << e.matched_theta;
        os << "\n";
    }
    os << "second-central components (beyond the center):\n";
    for (const auto& e : rep.second_centers)
        os << "  degree " << e.degree << (e.matched_theta.empty() ? "" : ": " + e.matched_theta) << "\n";
    os << "quotient class " << rep.quotient.class_bound << ", centralizers " << rep.quotient.centralizers << "\n";
    std::string lens;
    for (auto l : rep.quotient.constituents.lengths) lens += (lens.empty() ? "" : ",") + std::to_string(l);
    os << "constituents: " << lens << "\n";
    for (const auto& ch : rep.checks) {
        os << (ch.pass ? "PASS " : "FAIL ") << ch.name;
        if (c.verbosity > 0 || !ch.pass) os << "  (" << ch.detail << ")";
        os << "\n";
    }
    os << (rep.all_pass() ? "ALL CHECKS PASS" : "SOME CHECKS FAILED") << "\n";
    return rep.all_pass() ? kExitOk : kExitCheckFailed;
}

inline int eval(const Config& c, std::ostream& os) {
    const auto p = bl::bl_params(c.g, c.h);
    const auto w = lie::parse_word(c.word);
    const int C = c.class_bound > 0 ? c.class_bound : std::max<int>(2, static_cast<int>(w.weight()));
    if (static_cast<int>(w.weight()) > C) throw CLI::ValidationError("--class", "word weight exceeds the class bound");
    const auto M = lie::nq_compute(bl::presentation_R(p), C);
    const auto e = lie::eval_word(M, w);
    if (c.format == "json") {
        os << nlohmann::json{{"word", w.render()},
                             {"weight", w.weight()},
                             {"class_bound", C},
                             {"coordinates", e.coords.to_string()},
                             {"value", M.label(e)}}
                  .dump(2)
           << "\n";
        return kExitOk;
    }
    os << M.label(e) << "\n";
    return kExitOk;
}

inline int verify_appendix(const Config& c, std::ostream& os) {
    std::size_t total = 0, failed = 0;
    auto rows = nlohmann::json::array();
    for (int g = 2; g <= c.gh_max; ++g)
        for (int h = 1; g + h <= c.gh_max; ++h) {
            const auto claims = char2::verify_appendix(g, h);
            std::size_t f = 0;
            auto fails = nlohmann::json::array();
            for (const auto& cl : claims) {
                if (cl.pass()) continue;
                ++f;
                nlohmann::json ps = nlohmann::json::object();
                for (const auto& [k, v] : cl.parameters) ps[k] = v;
                fails.push_back({{"label", cl.label}, {"statement", cl.statement}, {"parameters", ps},
                                 {"claimed", cl.claimed ? 1 : 0}, {"computed", cl.computed ? 1 : 0}});
            }
            total += claims.size();
            failed += f;
            rows.push_back({{"g", g}, {"h", h}, {"claims", claims.size()}, {"failed", f}, {"failures", fails}});
            if (c.format != "json") {
                os << "g=" << g << " h=" << h << ": " << claims.size() << " claims, " << f << " failed\n";
                for (const auto& x : fails) os << "  FAIL " << x["label"].get<std::string>() << ": " << x["statement"].get<std::string>() << "\n";
            }
        }
    if (c.format == "json")
        os << nlohmann::json{{"total", total}, {"failed", failed}, {"pairs", rows}}.dump(2) << "\n";
    else
        os << (failed == 0 ? "ALL CLAIMS PASS" : "SOME CLAIMS FAILED") << " (" << total << " claims)\n";
    return failed == 0 ? kExitOk : kExitCheckFailed;
}

inline int binom(const Config& c, std::ostream& os) {
    if (c.check_max > char2::kPascalOracleBound) throw CLI::ValidationError("--check-max", "above 2^20");
    char2::PascalParity pascal;
    std::size_t mismatches = 0, total = 0;
    for (std::uint64_t a = 0; a <= c.check_max; ++a)
        for (std::uint64_t b = 0; b <= c.check_max; ++b) {
            ++total;
            if (char2::binom_mod2(a, b) != pascal(a, b)) ++mismatches;
        }
    if (c.format == "json")
        os << nlohmann::json{{"check_max", c.check_max}, {"pairs", total}, {"mismatches", mismatches}}.dump(2) << "\n";
    else
        os << total << " pairs, " << mismatches << " mismatches\n" << (mismatches == 0 ? "PASS" : "FAIL") << "\n";
    return mismatches == 0 ? kExitOk : kExitCheckFailed;
}

inline int identity_i(const Config& c, std::ostream& os) {
    if (!char2::is_power_of_two(c.Q) || c.Q < 2) throw CLI::ValidationError("--Q", "must be a power of two >= 2");
    char2::PascalParity pascal;
    std::size_t total = 0;
    auto bad = nlohmann::json::array();
    for (std::uint64_t s = 0; s <= c.s_max; ++s)
        for (std::uint64_t r = 0; r + 2 <= c.Q; ++r)
            for (std::uint64_t k = 0; k + 2 <= c.Q; ++k) {
                ++total;
                const auto sides = char2::identity_I_check(c.Q, s, r, k, pascal);
                if (!sides.holds())
                    bad.push_back({{"s", s}, {"r", r}, {"k", k}, {"lhs", sides.lhs ? 1 : 0}, {"rhs", sides.rhs ? 1 : 0}});
            }
    if (c.format == "json") {
        os << nlohmann::json{{"Q", c.Q}, {"s_max", c.s_max}, {"cases", total}, {"counterexamples", bad}}.dump(2) << "\n";
    } else {
        os << "Q=" << c.Q << " s<=" << c.s_max << ": " << total << " cases, " << bad.size() << " counterexamples\n";
        const std::size_t shown = c.verbosity > 0 ? bad.size() : std::min<std::size_t>(bad.size(), 8);
        for (std::size_t i = 0; i < shown; ++i)
            os << "  s=" << bad[i]["s"] << " r=" << bad[i]["r"] << " k=" << bad[i]["k"] << ": lhs=" << bad[i]["lhs"]
               << " rhs=" << bad[i]["rhs"] << "\n";
        os << (bad.empty() ? "PASS" : "FAIL") << "\n";
    }
    return bad.empty() ? kExitOk : kExitCheckFailed;
}

}  // namespace detail

/// Parses argv, runs the subcommand, writes to out (or --output). Returns the exit code.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    Config c;
    CLI::App app{"Nilpotent quotients and B_l(g,h) analysis over GF(2)", "bzl"};
    app.require_subcommand(1);
    app.add_option("--format", c.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("-o,--output", c.output, "Write output to this file");
    app.add_flag("-v,--verbose", c.verbosity, "Increase verbosity");

    auto gh = [&c](CLI::App* sub) {
        sub->set_help_flag("--help", "Print this help message and exit");
        sub->add_option("--g", c.g, "g >= 2")->required()->check(CLI::Range(2, bl::kMaxGh));
        sub->add_option("--h", c.h, "h >= 1")->required()->check(CLI::Range(1, bl::kMaxGh));
    };
    auto* present = app.add_subcommand("present", "Print the relators R(g,h)");
    gh(present);
    auto* nq = app.add_subcommand("nq", "Nilpotent quotient of R(g,h): dims and basis");
    gh(nq);
    nq->add_option("--class", c.class_bound, "Class bound (default m + 2d)")->check(CLI::Range(2, 4096));
    auto* analyze = app.add_subcommand("analyze", "Full structural analysis of NQ(R(g,h))");
    gh(analyze);
    analyze->add_option("--class", c.class_bound, "Class bound (default m + 2d)")->check(CLI::Range(2, 4096));
    analyze->add_option("--json", c.json_path, "Also write the JSON report here");
    auto* construct = app.add_subcommand("construct", "Direct B_l(g,h) structure table");
    gh(construct);
    construct->add_option("--class", c.class_bound, "Class bound (default m + 2d)")->check(CLI::Range(4, 4096));
    auto* eval = app.add_subcommand("eval", "Evaluate a commutator word in M(g,h)");
    gh(eval);
    eval->add_option("--word", c.word, "Word, e.g. \"y x^3 y\"")->required();
    eval->add_option("--class", c.class_bound, "Class bound (default: word weight)")->check(CLI::Range(2, 4096));
    auto* appendix = app.add_subcommand("verify-appendix", "Check every binomial parity claim for g+h <= N");
    appendix->add_option("--gh-max", c.gh_max, "Largest g+h")->check(CLI::Range(3, 12));
    auto* binom = app.add_subcommand("binom", "Compare Lucas parity with Pascal rows");
    binom->add_option("--check-max", c.check_max, "Largest a and b")->required();
    auto* ident = app.add_subcommand("identity-i", "Check identity (I) for one Q");
    ident->add_option("--Q", c.Q, "Q = 2^w")->required();
    ident->add_option("--s-max", c.s_max, "Largest s")->required()->check(CLI::Range(0, 64));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << app.help();
        return kExitUsage;
    }

    std::ostringstream buf;
    int code = kExitOk;
    try {
        if (present->parsed()) code = detail::present(c, buf);
        else if (nq->parsed()) code = detail::nq(c, buf);
        else if (analyze->parsed()) code = detail::analyze(c, buf);
        else if (construct->parsed()) code = detail::construct(c, buf);
        else if (eval->parsed()) code = detail::eval(c, buf);
        else if (appendix->parsed()) code = detail::verify_appendix(c, buf);
        else if (binom->parsed()) code = detail::binom(c, buf);
        else if (ident->parsed()) code = detail::identity_i(c, buf);
    } catch (const lie::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const CLI::ValidationError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    if (c.output.empty()) {
        out << buf.str();
    } else {
        std::ofstream f(c.output, std::ios::binary);
        if (!f) {
            err << "error: cannot write " << c.output << "\n";
            return kExitUsage;
        }
        f << buf.str();
    }
    return code;
}

}  // namespace bzl::cli
