#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "bzl/bl/construct.hpp"
#include "bzl/bl/params.hpp"
#include "bzl/bl/words.hpp"
#include "bzl/lie/centers.hpp"
#include "bzl/lie/nq.hpp"

namespace bzl::bl {

using lie::Element;

struct Check {
    std::string name;
    bool pass = true;
    std::string detail;
};

struct CenterEntry {
    int degree = 0;
    std::vector<std::string> basis_labels;
    std::string matched_theta;  ///< empty when no predicted theta lives in this degree
};

struct ThetaSpec {
    int t = 1;
    std::int64_t n = 0;
    CommutatorWord word;
    std::int64_t weight = 0;

    bool central() const noexcept { return t != 1 || n % 2 == 0; }
    std::string name() const { return theta_name(t, n); }
};

/// Every theta_n^t of weight <= max_weight, ordered by weight then kind.
inline std::vector<ThetaSpec> theta_specs(const BlParams& p, std::int64_t max_weight) {
    std::vector<ThetaSpec> out;
    std::vector<int> kinds;
    for (int t = 1; t <= p.g + p.h; ++t) kinds.push_back(t);
    kinds.push_back(kOmega);
    for (int t : kinds)
        for (std::int64_t n = 0; theta_weight(p, n, t) <= max_weight; ++n)
            out.push_back(ThetaSpec{t, n, theta_word(p, n, t), theta_weight(p, n, t)});
    std::stable_sort(out.begin(), out.end(), [](const ThetaSpec& a, const ThetaSpec& b) { return a.weight < b.weight; });
    return out;
}

struct AnalysisReport {
    BlParams params;
    int class_bound = 0;
    std::vector<std::size_t> dims;
    std::vector<CenterEntry> centers;
    std::vector<CenterEntry> second_centers;  ///< degrees where Z_2 exceeds Z
    struct Quotient {
        int class_bound = 0;
        std::vector<std::size_t> dims;
        std::string centralizers;
        ConstituentSequence constituents;
    } quotient;
    std::vector<Check> checks;

    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
    const Check* find(const std::string& name) const {
        for (const auto& c : checks)
            if (c.name == name) return &c;
        return nullptr;
    }
};

namespace detail {

class Recorder {
public:
    explicit Recorder(std::vector<Check>& out) : out_(out) {}

    void add(std::string name, bool pass, std::string detail) {
        out_.push_back(Check{std::move(name), pass, std::move(detail)});
    }

    /// Every word of weight <= class bound evaluates to zero in A.
    void vanish(const std::string& name, const lie::GradedAlgebra& A, const std::vector<CommutatorWord>& words) {
        std::size_t tested = 0;
        std::vector<std::string> bad;
        for (const auto& w : words) {
            if (w.weight() > static_cast<std::size_t>(A.class_bound())) continue;
            ++tested;
            if (!lie::eval_word(A, w).is_zero() && bad.size() < 4) bad.push_back(w.render());
        }
        std::string detail = std::to_string(tested) + " instances";
        for (const auto& b : bad) detail += "; nonzero: [" + b + "]";
        add(name, bad.empty(), detail);
    }

private:
    std::vector<Check>& out_;
};

inline CommutatorWord extend(CommutatorWord w, std::initializer_list<std::pair<Symbol, std::int64_t>> tail) {
    for (auto [s, e] : tail) w.append(s, static_cast<std::uint32_t>(e));
    return w;
}

/// Appends y x^{2q-2} (y x^{2q-1})^i y x^e.
inline CommutatorWord long_tail(const BlParams& p, CommutatorWord w, std::int64_t i, std::int64_t e) {
    append_repeat(w, yx(2 * p.q - 2), 1);
    append_repeat(w, yx(2 * p.q - 1), i);
    append_repeat(w, yx(e), 1);
    return w;
}

inline std::vector<std::string> labels_of(const lie::GradedAlgebra& A, int n, const gf2::EchelonBasis& b) {
    std::vector<std::string> out;
    for (const auto& r : b.rows()) out.push_back(A.label(Element{n, r}));
    return out;
}

}  // namespace detail

/// Expansion conclusions of the structure proof, each evaluated inside A.
inline void semantic_checks(const BlParams& p, const lie::GradedAlgebra& A, std::vector<Check>& out) {
    detail::Recorder rec(out);
    const std::int64_t C = A.class_bound();
    const std::int64_t q = p.q;
    std::int64_t nmax = 0;
    while (2 * q + p.d * (nmax + 1) <= C) ++nmax;
    using S = Symbol;
    auto v = [&](std::int64_t n) { return v_word(p, n); };
    auto yxk = [](std::int64_t e) {
        CommutatorWord w(S::Y);
        if (e > 0) w.append(S::X, static_cast<std::uint32_t>(e));
        return w;
    };

    std::vector<CommutatorWord> ws;
    for (std::int64_t j = 0; j <= 2 * q - 2; ++j) ws.push_back(detail::extend(yxk(j), {{S::Y, 1}}));
    ws.push_back(detail::extend(yxk(2 * q - 1), {{S::Y, 2}}));
    rec.vanish("vanishing [y x^j y], j <= 2q-2, and [y x^(2q-1) y y]", A, ws);

    ws.clear();
    for (std::int64_t j = 0; j <= 2 * q - 3; ++j) {
        bool special = false;
        for (std::int64_t s = 1; s <= p.h; ++s) special = special || j == 2 * q - (std::int64_t{1} << s) - 1;
        if (!special) ws.push_back(detail::extend(yxk(2 * q - 1), {{S::Y, 1}, {S::X, j}, {S::Y, 1}}));
    }
    rec.vanish("vanishing [y x^(2q-1) y x^j y] off the intermediate lengths", A, ws);

    ws.clear();
    for (std::int64_t s = 1; s <= p.h; ++s) {
        const std::int64_t k = 2 * q - (std::int64_t{1} << s);
        ws.push_back(detail::extend(yxk(2 * q - 1), {{S::Y, 1}, {S::X, 2 * q - 2}, {S::Y, 1}, {S::X, k - 1}, {S::Y, 1}}));
    }
    rec.vanish("square-first: [y x^(2q-1) y x^(2q-2) y x^(k-1) y] = 0, k = 2q-2^s", A, ws);

    ws.clear();
    for (std::int64_t n = 0; n <= nmax; n += 2) ws.push_back(detail::extend(v(n), {{S::X, 1}, {S::Y, 1}}));
    rec.vanish("square-v-even: [v_n x y] = [theta_n^1 y] = 0 for even n", A, ws);

    ws.clear();
    for (std::int64_t n = 1; n <= nmax; n += 2) ws.push_back(detail::extend(v(n), {{S::X, 1}, {S::Y, 1}, {S::X, 1}}));
    rec.vanish("omega-x: [v_n x y x] = [theta^omega x] = 0 for odd n", A, ws);

    ws.clear();
    for (std::int64_t n = 1; n <= nmax; n += 2) ws.push_back(detail::extend(v(n), {{S::X, 1}, {S::Y, 2}}));
    rec.vanish("[v_n x y y] = [theta^omega y] = 0 for odd n", A, ws);

    ws.clear();
    for (int a = 2; a <= p.h + 1; ++a)
        for (std::int64_t n = 0; n <= nmax; ++n) {
            ws.push_back(detail::extend(theta_word(p, n, a), {{S::X, 1}}));
            ws.push_back(detail::extend(theta_word(p, n, a), {{S::Y, 1}}));
        }
    rec.vanish("theta-a-x: [theta_n^a x] = [theta_n^a y] = 0", A, ws);

    ws.clear();
    for (std::int64_t n = 0; n <= nmax; ++n) ws.push_back(detail::extend(v(n), {{S::Y, 1}, {S::X, 2 * q - 1}}));
    rec.vanish("square-xi: [v_n y x^(2q-1)] = 0", A, ws);

    ws.clear();
    for (int b = p.h + 2; b <= p.g + p.h; ++b)
        for (std::int64_t n = 0; n <= nmax; ++n) {
            ws.push_back(detail::extend(theta_word(p, n, b), {{S::X, 1}}));
            ws.push_back(detail::extend(theta_word(p, n, b), {{S::Y, 1}}));
        }
    rec.vanish("theta-b-x: [theta_n^b x] = [theta_n^b y] = 0", A, ws);

    ws.clear();
    for (std::int64_t s = 1; s <= p.h; ++s)
        for (std::int64_t n = 0; n <= nmax; ++n) {
            const std::int64_t k = 2 * q - (std::int64_t{1} << s);
            ws.push_back(detail::extend(detail::long_tail(p, v(n), 0, k - 1), {{S::Y, 1}}));
        }
    rec.vanish("mu-0-2-y: [v_n y x^(2q-2) y x^(k-1) y] = 0, k = 2q-2^s", A, ws);

    ws.clear();
    for (std::int64_t s = 1; s <= p.h; ++s)
        for (std::int64_t i = 1; i <= p.eta - 1; ++i) {
            if (i == p.eta - 1 && s == 1) continue;
            const std::int64_t k = 2 * q - (std::int64_t{1} << s);
            for (std::int64_t n = 0; n <= nmax; ++n)
                ws.push_back(detail::extend(detail::long_tail(p, v(n), i, k - 1), {{S::Y, 1}}));
        }
    rec.vanish("mu-theta-s-x: [v_n y x^(2q-2) (y x^(2q-1))^i y x^(k-1) y] = 0, k = 2q-2^s, i >= 1", A, ws);

    ws.clear();
    for (std::int64_t i = 0; i <= p.eta - 2; ++i) {
        bool theta_b = false;
        for (int b = p.h + 2; b <= p.g + p.h; ++b) theta_b = theta_b || i == p.eta - (std::int64_t{1} << (p.g + p.h + 1 - b));
        if (theta_b) continue;
        for (std::int64_t n = 0; n <= nmax; ++n)
            ws.push_back(detail::extend(detail::long_tail(p, v(n), i, 2 * q - 2), {{S::Y, 1}}));
    }
    rec.vanish("mu-lambda-y: [v_n y x^(2q-2) (y x^(2q-1))^i y x^(2q-2) y] = 0 off the theta^b indices", A, ws);

    ws.clear();
    for (std::int64_t n = 0; n <= nmax; ++n) {
        ws.push_back(detail::extend(v(n), {{S::Y, 2}}));
        ws.push_back(detail::extend(v(n), {{S::X, 2}}));
    }
    rec.vanish("[v_n y y] = [v_n x x] = 0", A, ws);

    ws.clear();
    for (std::int64_t n = 0; n <= nmax; ++n)
        for (std::int64_t k = 0; k <= 2 * q - 2; ++k) {
            bool special = false;
            for (std::int64_t s = 0; s <= p.h; ++s) special = special || k == 2 * q - (std::int64_t{1} << s) - 1;
            if (!special) ws.push_back(detail::extend(v(n), {{S::Y, 1}, {S::X, k}, {S::Y, 1}}));
        }
    rec.vanish("[v_n y x^k y] = 0 for k != 2q-2^s-1", A, ws);

    if (q > 2) {
        ws.clear();
        for (std::int64_t n = 0; n <= nmax; ++n) ws.push_back(detail::extend(v(n), {{S::Y, 1}, {S::X, 1}, {S::Y, 1}}));
        rec.vanish("[v_n y x y] = 0 for q > 2", A, ws);
    } else {
        std::size_t tested = 0, bad = 0;
        for (std::int64_t n = 0; n <= nmax; ++n) {
            const auto w = detail::extend(v(n), {{S::Y, 1}, {S::X, 1}, {S::Y, 1}});
            if (w.weight() > static_cast<std::size_t>(C)) continue;
            ++tested;
            if (lie::eval_word(A, w) != lie::eval_word(A, theta_word(p, n, 2))) ++bad;
        }
        rec.add("[v_n y x y] = theta_n^2 for q = 2", bad == 0, std::to_string(tested) + " instances");
    }

    {
        std::size_t tested = 0;
        std::vector<std::string> bad;
        for (std::int64_t n = 0; n <= nmax; ++n) {
            const auto w = v(n);
            ++tested;
            const auto e = lie::eval_word(A, w);
            if (e.is_zero() || A.dim(e.degree) != 1) bad.push_back("v_" + std::to_string(n));
        }
        for (const auto& th : theta_specs(p, C)) {
            ++tested;
            if (lie::eval_word(A, th.word).is_zero()) bad.push_back(th.name());
        }
        std::string detail = std::to_string(tested) + " elements";
        for (const auto& b : bad) detail += "; failed: " + b;
        rec.add("v_n spans its component and every theta is nonzero", bad.empty(), detail);
    }
}

/// Full pipeline: M = NQ(R), its centers, Q = M / Z_2(M), and comparison with B_l.
inline AnalysisReport analyze(const BlParams& p, int class_bound) {
    if (class_bound < p.m + 2) throw std::invalid_argument("analyze: class bound must be >= m + 2");
    AnalysisReport rep;
    rep.params = p;
    rep.class_bound = class_bound;
    detail::Recorder rec(rep.checks);

    const auto R = presentation_R(p);
    rec.add("relator count q+h+eta", R.size() == static_cast<std::size_t>(p.q + p.h + p.eta),
            std::to_string(R.size()) + " relators");

    const auto M = lie::nq_compute(R, class_bound);
    rep.dims = M.dims();
    const auto thetas = theta_specs(p, class_bound);

    {
        std::string bad;
        for (const auto& th : thetas) {
            const auto e = lie::eval_word(M, th.word);
            if (static_cast<std::int64_t>(th.word.weight()) != th.weight || e.degree != th.weight)
                bad += " " + th.name();
        }
        rec.add("theta weights match the closed formulas", bad.empty(),
                std::to_string(thetas.size()) + " thetas" + (bad.empty() ? "" : "; mismatched:" + bad));
    }

    {
        std::string bad;
        for (int n = 1; n <= class_bound; ++n) {
            std::size_t expected = n == 1 ? 2 : 1;
            for (const auto& th : thetas) expected += th.weight == n ? 1 : 0;
            if (M.dim(n) != expected) bad += " " + std::to_string(n);
        }
        rec.add("dims of M: 1 + number of thetas per degree", bad.empty(), bad.empty() ? "all degrees" : "degrees:" + bad);
    }

    const auto Z = lie::graded_center(M);
    const auto Z2 = lie::second_center(M);

    {
        std::string bad;
        for (int n = 1; n <= Z.valid_up_to; ++n) {
            const ThetaSpec* predicted = nullptr;
            std::size_t count = 0;
            for (const auto& th : thetas)
                if (th.weight == n && th.central()) {
                    predicted = &th;
                    ++count;
                }
            const auto& zn = Z.at(n);
            if (!zn.empty()) {
                CenterEntry e{n, detail::labels_of(M, n, zn), predicted ? predicted->name() : ""};
                rep.centers.push_back(std::move(e));
            }
            if (count == 0) {
                if (!zn.empty()) bad += " unexpected@" + std::to_string(n);
                continue;
            }
            const auto ev = lie::eval_word(M, predicted->word).coords;
            if (count != 1 || zn.rank() != 1 || ev.is_zero() || !zn.contains(ev)) bad += " " + predicted->name();
        }
        rec.add("center census: Z(M) is spanned by the central thetas, nothing else", bad.empty(),
                std::to_string(rep.centers.size()) + " central components up to degree " + std::to_string(Z.valid_up_to) +
                    (bad.empty() ? "" : "; failures:" + bad));
    }

    {
        std::string bad;
        std::size_t checked = 0;
        for (int n = 1; n <= Z2.valid_up_to; ++n) {
            const ThetaSpec* predicted = nullptr;
            for (const auto& th : thetas)
                if (th.weight == n && !th.central()) predicted = &th;
            const auto& z2 = Z2.at(n);
            const auto& z1 = Z.at(n);
            if (z2.rank() != z1.rank())
                rep.second_centers.push_back(
                    CenterEntry{n, detail::labels_of(M, n, z2), predicted ? predicted->name() : ""});
            if (!predicted) {
                if (z2.rank() != z1.rank()) bad += " unexpected@" + std::to_string(n);
                continue;
            }
            ++checked;
            const auto ev = lie::eval_word(M, predicted->word).coords;
            if (z2.rank() != z1.rank() + 1 || !z2.contains(ev) || z1.contains(ev)) bad += " " + predicted->name();
        }
        rec.add("second center census: Z_2(M)/Z(M) is spanned by theta_n^1, n odd", bad.empty(),
                std::to_string(checked) + " second-central thetas" + (bad.empty() ? "" : "; failures:" + bad));
    }

    {
        std::string bad;
        std::size_t checked = 0;
        for (const auto& th : thetas) {
            if (th.central() || th.weight + 1 > class_bound) continue;
            ++checked;
            const auto lhs = M.act(lie::eval_word(M, th.word), Symbol::Y);
            const auto rhs = lie::eval_word(M, theta_word(p, (th.n - 1) / 2, kOmega));
            if (lhs != rhs || lhs.is_zero()) bad += " " + th.name();
        }
        rec.add("[theta_n^1 y] = theta^omega_((n-1)/2) for odd n", bad.empty(),
                std::to_string(checked) + " instances" + (bad.empty() ? "" : "; failures:" + bad));
    }

    const auto Q = lie::quotient(M, Z2);
    rep.quotient.class_bound = Q.class_bound();
    rep.quotient.dims = Q.dims();
    const auto qseq = lie::centralizer_sequence(Q);
    rep.quotient.centralizers = lie::render_centralizers(qseq);
    rep.quotient.constituents = constituent_lengths(qseq);

    {
        bool ok = Q.dim(1) == 2;
        for (int n = 2; n <= Q.class_bound(); ++n) ok = ok && Q.dim(n) == 1;
        rec.add("M/Z_2(M) has maximal class", ok, "degrees 1.." + std::to_string(Q.class_bound()));
    }
    const auto expected_seq = bl_centralizer_sequence(p, Q.class_bound());
    rec.add("centralizers of M/Z_2(M) follow the B_l pattern", qseq == expected_seq,
            rep.quotient.centralizers + " vs " + lie::render_centralizers(expected_seq));
    const auto B = construct_bl(p, Q.class_bound());
    rec.add("M/Z_2(M) equals B_l degree-wise", Q == B, "class " + std::to_string(Q.class_bound()));
    {
        const auto& got = rep.quotient.constituents.lengths;
        const auto pattern = bl_constituent_pattern(p, Q.class_bound());
        bool ok = got.size() <= pattern.size() && rep.quotient.constituents.other_positions.empty();
        for (std::size_t i = 0; ok && i < got.size(); ++i) ok = got[i] == pattern[i];
        std::string s;
        for (auto l : got) s += (s.empty() ? "" : ",") + std::to_string(l);
        rec.add("constituent lengths follow 2q, 2q-1, ((2q)^(eta-1), (2q-1)^2)^inf", ok, s);
        bool only_long = true;
        for (auto l : got) only_long = only_long && (l == 2 * p.q || l == 2 * p.q - 1);
        rec.add("property CL, no short constituents", check_CL(rep.quotient.constituents, p.q) && only_long, s);
    }

    semantic_checks(p, M, rep.checks);

    {
        std::size_t tested = 0;
        bool ok = true;
        for (int i = 2; i + 3 < Q.class_bound(); ++i)
            for (int mask = 0; mask < 8; ++mask) {
                std::vector<Symbol> letters;
                for (int b = 0; b < 3; ++b) letters.push_back((mask >> b) & 1 ? Symbol::Y : Symbol::X);
                const auto r = lie::z_substitution_holds(Q, Q.unit(i, 0), letters);
                ++tested;
                ok = ok && r.has_value() && *r;
            }
        rec.add("z-substitution on M/Z_2(M)", ok, std::to_string(tested) + " instances");
    }

    for (const auto& [name, alg] : {std::pair<std::string, const lie::GradedAlgebra*>{"M", &M}, {"M/Z_2(M)", &Q}, {"B_l", &B}}) {
        const auto j = lie::jacobi_check(*alg);
        rec.add("Jacobi identity on " + name, j.pass,
                std::to_string(j.checked) + " pairs and triples" + (j.failures.empty() ? "" : "; " + j.failures.front()));
    }
    return rep;
}

inline nlohmann::json to_json(const AnalysisReport& r) {
    nlohmann::json j;
    j["params"] = {{"g", r.params.g}, {"h", r.params.h}, {"q", r.params.q}, {"eta", r.params.eta},
                   {"d", r.params.d},  {"m", r.params.m},  {"class_bound", r.class_bound}};
    j["dims"] = r.dims;
    auto centers = [](const std::vector<CenterEntry>& v) {
        auto arr = nlohmann::json::array();
        for (const auto& c : v)
            arr.push_back({{"degree", c.degree},
                           {"basis_labels", c.basis_labels},
                           {"matched_theta", c.matched_theta.empty() ? nlohmann::json(nullptr) : nlohmann::json(c.matched_theta)}});
        return arr;
    };
    j["centers"] = centers(r.centers);
    j["second_centers"] = centers(r.second_centers);
    j["quotient"] = {{"class_bound", r.quotient.class_bound},
                     {"dims", r.quotient.dims},
                     {"centralizers", r.quotient.centralizers},
                     {"constituents", r.quotient.constituents.lengths},
                     {"partial_constituent", r.quotient.constituents.partial}};
    auto checks = nlohmann::json::array();
    for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    j["checks"] = std::move(checks);
    j["all_pass"] = r.all_pass();
    return j;
}

}  // namespace bzl::bl
