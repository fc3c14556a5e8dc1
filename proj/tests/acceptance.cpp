// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fail.
#include <chrono>
#include <cstdio>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include "bzl/bl/analyze.hpp"
#include "bzl/bl/construct.hpp"
#include "bzl/char2/appendix.hpp"
#include "bzl/char2/binomial.hpp"
#include "bzl/char2/gf2w.hpp"
#include "bzl/lie/centers.hpp"
#include "bzl/lie/nq.hpp"
#include "bzl/lie/oracle.hpp"
#include "gen.hpp"

using namespace bzl;
using Clock = std::chrono::steady_clock;

namespace {

struct Triple {
    bl::BlParams p;
    int C;
    lie::GradedAlgebra M, Q, B;
};

std::vector<Triple>& triples() {
    static std::vector<Triple> t = [] {
        std::vector<Triple> out;
        for (auto [g, h] : {std::pair{2, 1}, {3, 1}, {2, 2}}) {
            const auto p = bl::bl_params(g, h);
            const int C = bl::default_class(p);
            auto M = lie::nq_compute(bl::presentation_R(p), C);
            auto Q = lie::quotient(M, lie::second_center(M));
            auto B = bl::construct_bl(p, Q.class_bound());
            out.push_back({p, C, std::move(M), std::move(Q), std::move(B)});
        }
        return out;
    }();
    return t;
}

std::string gh(const bl::BlParams& p) { return "(" + std::to_string(p.g) + "," + std::to_string(p.h) + ")"; }

int failures = 0;

void report(int n, bool ok, const std::string& what, const std::string& detail) {
    std::cout << "CRITERION " << n << " " << (ok ? "PASS" : "FAIL") << ": " << what;
    if (!detail.empty()) std::cout << " [" << detail << "]";
    std::cout << std::endl;
    if (!ok) ++failures;
}

double seconds(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

void criterion1() {
    const auto t0 = Clock::now();
    bool ok = true;
    std::string detail;
    for (const auto& t : triples()) {
        bool mc = t.Q.dim(1) == 2;
        for (int i = 2; i <= t.Q.class_bound(); ++i) mc = mc && t.Q.dim(i) == 1;
        const bool eq = t.Q == t.B;
        ok = ok && mc && eq;
        detail += gh(t.p) + " class " + std::to_string(t.C) + " -> " + std::to_string(t.Q.class_bound()) +
                  (mc ? " maximal" : " NOT maximal") + (eq ? " =B_l; " : " !=B_l; ");
    }
    const double s = seconds(t0);
    ok = ok && s < 60;
    report(1, ok, "M/Z_2(M) is maximal class and equals B_l degree-wise", detail + std::to_string(s) + "s");
}

void criterion2() {
    std::size_t pairs = 0;
    bool ok = true;
    for (int g = 2; g <= 5; ++g)
        for (int h = 1; g + h <= 6; ++h) {
            const auto p = bl::bl_params(g, h);
            ok = ok && static_cast<std::int64_t>(bl::presentation_R(p).size()) == p.q + p.h + p.eta;
            ++pairs;
        }
    report(2, ok, "presentation_R emits q+h+eta relators", std::to_string(pairs) + " (g,h) pairs");
}

void criterion3() {
    const auto p = bl::bl_params(2, 1);
    const auto M = lie::nq_compute(bl::presentation_R(p), 50);
    const auto Z = lie::graded_center(M);
    const auto Z2 = lie::second_center(M);
    const auto thetas = bl::theta_specs(p, 50);
    bool ok = true;
    std::string degrees;
    for (int n = 1; n <= Z.valid_up_to; ++n) {
        std::vector<const bl::ThetaSpec*> here;
        for (const auto& th : thetas)
            if (th.weight == n && th.central()) here.push_back(&th);
        const auto& z = Z.at(n);
        if (z.rank() > 0) degrees += (degrees.empty() ? "" : ",") + std::to_string(n);
        if (here.empty()) {
            ok = ok && z.rank() == 0;
            continue;
        }
        ok = ok && here.size() == 1 && z.rank() == 1 &&
             z.contains(lie::eval_word(M, here.front()->word).coords) &&
             !lie::eval_word(M, here.front()->word).is_zero();
    }
    std::string second;
    for (const auto& th : thetas) {
        if (th.central() || th.weight > Z2.valid_up_to) continue;
        const auto e = lie::eval_word(M, th.word);
        const auto ty = M.act(e, lie::Symbol::Y);
        const auto om = lie::eval_word(M, bl::theta_word(p, (th.n - 1) / 2, bl::kOmega));
        ok = ok && Z2.at(th.weight).contains(e.coords) && !Z.at(th.weight).contains(e.coords) && ty == om;
        second += (second.empty() ? "" : ",") + th.name();
    }
    report(3, ok, "center of M(2,1) at class 50 is exactly the theta census", "Z at " + degrees + "; second-central " + second);
}

void criterion4() {
    bool ok = true;
    std::string detail;
    for (const auto& t : triples()) {
        const auto s = bl::constituent_lengths(lie::centralizer_sequence(t.Q));
        const auto pattern = bl::bl_constituent_pattern(t.p, t.Q.class_bound());
        bool match = s.other_positions.empty() && s.lengths.size() <= pattern.size() && !s.lengths.empty();
        for (std::size_t i = 0; match && i < s.lengths.size(); ++i) match = s.lengths[i] == pattern[i];
        const bool cl = bl::check_CL(s, t.p.q);
        ok = ok && match && cl;
        detail += gh(t.p) + " " + std::to_string(s.lengths.size()) + " constituents" + (match ? "" : " MISMATCH") +
                  (cl ? "" : " CL-violated") + "; ";
    }
    report(4, ok, "constituent lengths follow the B_l pattern and satisfy CL", detail);
}

void criterion5() {
    const auto t0 = Clock::now();
    bool ok = true;
    const auto R = bl::presentation_R(bl::bl_params(2, 1));
    ok = ok && lie::nq_compute(R, 12).dims() == lie::oracle::free_nq_oracle(R, 12);
    int agreed = 0;
    for (int t = 0; t < 10; ++t) {
        const auto p = gen::presentation(6);
        const bool same = lie::nq_compute(p, 12).dims() == lie::oracle::free_nq_oracle(p, 12);
        agreed += same;
        ok = ok && same;
    }
    const double s = seconds(t0);
    ok = ok && s < 120;
    report(5, ok, "nq_compute dims equal the free-algebra oracle at class 12",
           "R(2,1) and " + std::to_string(agreed) + "/10 random presentations; " + std::to_string(s) + "s");
}

void criterion6() {
    char2::PascalParity pascal;
    std::size_t lucas_bad = 0;
    for (std::uint64_t a = 0; a <= 4096; ++a)
        for (std::uint64_t b = 0; b <= 4096; ++b) lucas_bad += char2::binom_mod2(a, b) != pascal(a, b);

    std::size_t id_total = 0, id_bad = 0, id_bad_r_positive = 0;
    for (std::uint64_t Q : {2u, 4u, 8u, 16u})
        for (std::uint64_t s = 0; s <= 8; ++s)
            for (std::uint64_t r = 0; r + 2 <= Q; ++r)
                for (std::uint64_t k = 0; k + 2 <= Q; ++k) {
                    ++id_total;
                    if (!char2::identity_I_check(Q, s, r, k, pascal).holds()) {
                        ++id_bad;
                        id_bad_r_positive += r > 0;
                    }
                }

    std::size_t ps_bad = 0;
    for (unsigned w = 1; w <= 6; ++w) {
        const char2::GF2wField F(w);
        const std::uint64_t Q = F.order();
        for (std::uint64_t z = 1; z <= 3 * (Q - 1); ++z) ps_bad += char2::power_sum_parity(F, z) != (z % (Q - 1) == 0);
    }

    std::size_t gl_total = 0, gl_bad = 0;
    for (unsigned w : {1u, 2u, 3u}) {
        const char2::GF2wField F(w);
        const std::uint64_t Q = F.order();
        for (std::uint64_t s = 0; s <= 4; ++s)
            for (std::uint64_t r = 0; r + 2 <= Q; ++r)
                for (std::uint64_t k = 0; k + 2 <= Q; ++k) {
                    if ((Q - 1) * s + r == 0) continue;
                    ++gl_total;
                    gl_bad += !char2::glaisher_check(F, s, r, k, pascal).agree();
                }
    }
    std::ostringstream d;
    d << "Lucas mismatches " << lucas_bad << "; identity (I) counterexamples " << id_bad << "/" << id_total << " ("
      << id_bad_r_positive << " with r>0); power-sum mismatches " << ps_bad << "; glaisher disagreements " << gl_bad
      << "/" << gl_total;
    report(6, lucas_bad == 0 && id_bad == 0 && ps_bad == 0 && gl_bad == 0, "binomial suite", d.str());
}

void criterion7() {
    std::size_t total = 0, bad = 0;
    for (int g = 2; g <= 5; ++g)
        for (int h = 1; g + h <= 6; ++h)
            for (const auto& c : char2::verify_appendix(g, h)) {
                ++total;
                bad += !c.pass();
            }
    report(7, bad == 0, "every appendix parity claim holds for g+h <= 6",
           std::to_string(total) + " claims, " + std::to_string(bad) + " failed");
}

void criterion8() {
    bool ok = true;
    std::string detail;
    for (const auto& t : triples()) {
        std::vector<bl::Check> checks;
        bl::semantic_checks(t.p, t.M, checks);
        std::size_t bad = 0;
        for (const auto& c : checks) {
            bad += !c.pass;
            if (!c.pass) detail += gh(t.p) + " " + c.name + "; ";
        }
        ok = ok && bad == 0 && !checks.empty();
        detail += gh(t.p) + " " + std::to_string(checks.size() - bad) + "/" + std::to_string(checks.size()) + "; ";
    }
    report(8, ok, "semantic expansion conclusions hold in M at class m+2d", detail);
}

void criterion9() {
    bool ok = true;
    std::size_t checked = 0;
    auto run = [&](const lie::GradedAlgebra& A) {
        const auto r = lie::jacobi_check(A);
        checked += r.checked;
        ok = ok && r.pass;
    };
    for (const auto& t : triples()) {
        run(t.M);
        run(t.Q);
        run(t.B);
    }
    run(lie::nq_compute(bl::presentation_R(bl::bl_params(2, 1)), 50));
    run(bl::construct_bl(bl::bl_params(2, 1), 60));
    run(lie::nq_compute(lie::Presentation{}, 10));

    // Negative control: y acting alongside x at degree 3 of B_l(2,1).
    const auto B = bl::construct_bl(bl::bl_params(2, 1), 20);
    std::vector<std::vector<lie::BasisElement>> basis;
    std::vector<std::array<std::vector<gf2::BitVec>, 2>> action;
    for (int n = 1; n <= B.class_bound(); ++n) {
        basis.push_back(B.basis(n));
        action.push_back({B.action(n, lie::Gen::X), B.action(n, lie::Gen::Y)});
    }
    action[2][1][0].flip(0);
    const auto bad = lie::jacobi_check(lie::GradedAlgebra(B.class_bound(), basis, action));
    const bool control = !bad.pass && !bad.failures.empty();
    report(9, ok && control, "Jacobi holds on every constructed algebra; corrupted table is caught",
           std::to_string(checked) + " pairs and triples; control " + (control ? "caught: " + bad.failures.front() : "MISSED"));
}

}  // namespace

int main() {
    const auto t0 = Clock::now();
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    std::cout << (failures == 0 ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL") << " (" << 9 - failures << "/9, "
              << seconds(t0) << "s)" << std::endl;
    return failures == 0 ? 0 : 1;
}
