#pragma once

// Parity verifiers for the binomial coefficients that arise when the
// generalized Jacobi identities behind the B_l(g,h) presentation are expanded.
// Every computed value comes from Pascal-row parity; the claimed value is the
// parity the hand derivation asserts.

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bzl/char2/binomial.hpp"

namespace bzl::char2 {

struct ParityClaim {
    std::string label;      ///< expansion the coefficient belongs to, e.g. "theta-a-x"
    std::string statement;  ///< human-readable form of the evaluated expression
    std::vector<std::pair<std::string, std::int64_t>> parameters;
    bool claimed = false;
    bool computed = false;

    bool pass() const noexcept { return claimed == computed; }
};

namespace detail {

inline std::int64_t pow2(std::int64_t e) {
    if (e < 0 || e > 62) throw std::out_of_range("pow2: exponent out of range");
    return std::int64_t{1} << e;
}

class ClaimSink {
public:
    ClaimSink(std::vector<ParityClaim>& out, PascalParity& pascal) : out_(out), pascal_(pascal) {}

    bool C(std::int64_t a, std::int64_t b) {
        if (a < 0) throw std::logic_error("negative binomial numerator in appendix verifier");
        if (b < 0 || b > a) return false;
        return pascal_(static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(b));
    }

    void emit(std::string label, std::string statement,
              std::initializer_list<std::pair<std::string, std::int64_t>> params, bool claimed, bool computed) {
        out_.push_back(ParityClaim{std::move(label), std::move(statement), params, claimed, computed});
    }

private:
    std::vector<ParityClaim>& out_;
    PascalParity& pascal_;
};

struct Shape {
    std::int64_t g, h, q, eta, d;
};

inline Shape shape_of(std::int64_t g, std::int64_t h) {
    if (g < 2 || h < 1) throw std::out_of_range("appendix verifier: requires g >= 2 and h >= 1");
    if (g + h > 40) throw std::out_of_range("appendix verifier: g + h too large");
    const std::int64_t q = pow2(h);
    const std::int64_t eta = pow2(g) - 1;
    return Shape{g, h, q, eta, pow2(g + h + 1) - 2};
}

}  // namespace detail

/// C(3q - 2^{s-1} - 1, q + 2^{s-1} - 1) is even, 1 <= s <= h.
inline void verify_square_first(std::int64_t g, std::int64_t h, std::vector<ParityClaim>& out, PascalParity& pascal) {
    const auto p = detail::shape_of(g, h);
    detail::ClaimSink sink(out, pascal);
    for (std::int64_t s = 1; s <= h; ++s) {
        const std::int64_t e = detail::pow2(s - 1);
        sink.emit("square-first", "C(3q-2^(s-1)-1, q+2^(s-1)-1)", {{"g", g}, {"h", h}, {"s", s}}, false,
                  sink.C(3 * p.q - e - 1, p.q + e - 1));
    }
}

/// Coefficient of the expansion giving [theta_n^1 y] = 0 for n = 2s even.
inline void verify_square_v_even(std::int64_t g, std::int64_t h, std::int64_t s, std::vector<ParityClaim>& out,
                          PascalParity& pascal) {
    const auto p = detail::shape_of(g, h);
    if (s < 1) throw std::out_of_range("verify_square_v_even: s must be >= 1");
    detail::ClaimSink sink(out, pascal);
    const auto q = p.q, eta = p.eta, d = p.d;
    const std::int64_t N = d * s + q;
    bool raw = false;
    for (std::int64_t i = 1; i <= eta; ++i) raw ^= sink.C(N, 2 * q * i);
    const bool lone = sink.C(N, 2 * q * (eta + 1) - 1);
    raw ^= lone;
    sink.emit("square-v-even", "C(ds+q, 2q(eta+1)-1) [odd over even]", {{"g", g}, {"h", h}, {"s", s}}, false, lone);
    for (std::int64_t j = 0; j <= s - 2; ++j) {
        raw ^= sink.C(N, d * j - 2 + 2 * q * (eta + 2));
        for (std::int64_t i = 1; i <= eta - 1; ++i) raw ^= sink.C(N, d * j - 2 + 2 * q * (eta + 2 + i));
        const bool last = sink.C(N, d * j - 3 + 2 * q * (2 * eta + 2));
        raw ^= last;
        sink.emit("square-v-even", "C(ds+q, dj-3+2q(2eta+2)) [odd over even]", {{"g", g}, {"h", h}, {"s", s}, {"j", j}},
                  false, last);
    }
    sink.emit("square-v-even", "full coefficient of [... z^(ds+q+1)]", {{"g", g}, {"h", h}, {"s", s}}, false, raw);

    bool assembled = false;
    for (std::int64_t j = 0; j <= s - 1; ++j)
        for (std::int64_t i = 1; i <= detail::pow2(g) - 1; ++i)
            assembled ^= sink.C((detail::pow2(g + h + 1) - 2) * s + detail::pow2(h),
                                (detail::pow2(g + h + 1) - 2) * j + detail::pow2(h + 1) * i);
    sink.emit("square-v-even", "sum_j sum_i C((2^(g+h+1)-2)s+2^h, (2^(g+h+1)-2)j+2^(h+1)i)", {{"g", g}, {"h", h}, {"s", s}},
              false, assembled);

    bool halved = false;
    for (std::int64_t j = 0; j <= s - 1; ++j)
        for (std::int64_t i = 1; i <= detail::pow2(g) - 1; ++i)
            halved ^= sink.C((detail::pow2(g + h) - 1) * s + detail::pow2(h - 1),
                             (detail::pow2(g + h) - 1) * j + detail::pow2(h) * i);
    sink.emit("square-v-even", "sum_j sum_i C((2^(g+h)-1)s+2^(h-1), (2^(g+h)-1)j+2^h i)", {{"g", g}, {"h", h}, {"s", s}},
              false, halved);
}

/// Coefficients a_t, b, c_t of the expansion proving [theta^omega x] = 0, plus the
/// Lucas factorisation they rest on.
inline void verify_omega_x(std::int64_t g, std::int64_t h, std::vector<ParityClaim>& out, PascalParity& pascal) {
    const auto p = detail::shape_of(g, h);
    detail::ClaimSink sink(out, pascal);
    const auto q = p.q, eta = p.eta;
    const std::int64_t N = 2 * q * (eta + 1) + 2 * q - 2;

    bool a[2] = {false, false};
    bool c[2] = {false, false};
    for (int t = 0; t <= 1; ++t) {
        bool v = sink.C(N, t) ^ sink.C(N, 2 * q - 1 + t) ^ sink.C(N, 2 * q + 2 * q - 2 + t);
        for (std::int64_t i = 1; i <= eta - 1; ++i) v ^= sink.C(N, 2 * q * (i + 1) + 2 * q - 2 + t);
        a[t] = v;
        c[t] = sink.C(N, 2 * q * (eta + 1) + 2 * q - 4 + t);
    }
    bool b = sink.C(N, 2 * q - 2) ^ sink.C(N, 2 * q + 2 * q - 3);
    for (std::int64_t i = 1; i <= eta - 1; ++i) b ^= sink.C(N, 2 * q * (i + 1) + 2 * q - 3);

    sink.emit("omega-x", "a_0", {{"g", g}, {"h", h}}, true, a[0]);
    sink.emit("omega-x", "a_1", {{"g", g}, {"h", h}}, false, a[1]);
    sink.emit("omega-x", "b", {{"g", g}, {"h", h}}, true, b);
    sink.emit("omega-x", "c_0", {{"g", g}, {"h", h}}, true, c[0]);
    sink.emit("omega-x", "c_1", {{"g", g}, {"h", h}}, false, c[1]);
    sink.emit("omega-x", "b + c_0", {{"g", g}, {"h", h}}, false, b ^ c[0]);
    sink.emit("omega-x", "b + c_1", {{"g", g}, {"h", h}}, true, b ^ c[1]);

    // C(N, 2q a + 2q - b) == C(2^g, a) C(2q-2, 2q-b) for 0 <= a <= eta+1, 1 <= b <= 2q.
    for (std::int64_t aa = 0; aa <= eta + 1; ++aa) {
        for (std::int64_t bb = 1; bb <= 2 * q; ++bb) {
            const bool lucas = binom_mod2(static_cast<std::uint64_t>(eta + 1), static_cast<std::uint64_t>(aa)) &&
                               binom_mod2(static_cast<std::uint64_t>(2 * q - 2), static_cast<std::uint64_t>(2 * q - bb));
            sink.emit("omega-x", "C(2q(eta+1)+2q-2, 2qa+2q-b) vs C(2^g,a)C(2q-2,2q-b)",
                      {{"g", g}, {"h", h}, {"a", aa}, {"b", bb}}, lucas, sink.C(N, 2 * q * aa + 2 * q - bb));
        }
    }
    // Support over the b values that occur in a_t, b, c_t.
    std::vector<std::int64_t> bs{1, 2, 3, 4, 2 * q - 1, 2 * q};
    std::sort(bs.begin(), bs.end());
    bs.erase(std::unique(bs.begin(), bs.end()), bs.end());
    for (std::int64_t bb : bs) {
        for (std::int64_t aa = 0; aa <= eta + 1; ++aa) {
            const bool expected = (aa == 0 || aa == eta + 1) && (bb == 2 || bb == 4 || bb == 2 * q);
            sink.emit("omega-x", "support of C(2q(eta+1)+2q-2, 2qa+2q-b)", {{"g", g}, {"h", h}, {"a", aa}, {"b", bb}},
                      expected, sink.C(N, 2 * q * aa + 2 * q - bb));
        }
    }
}

/// Coefficients of the expansion proving [theta_n^a x] = 0, a = h+2-s.
inline void verify_theta_a_x(std::int64_t g, std::int64_t h, std::vector<ParityClaim>& out, PascalParity& pascal) {
    const auto p = detail::shape_of(g, h);
    detail::ClaimSink sink(out, pascal);
    const auto q = p.q;
    for (std::int64_t s = 1; s <= h; ++s) {
        const std::int64_t N = 4 * q - detail::pow2(s);
        const std::initializer_list<std::pair<std::string, std::int64_t>> ps = {{"g", g}, {"h", h}, {"s", s}};
        sink.emit("theta-a-x", "C(4q-2^s, 2q)", ps, true, sink.C(N, 2 * q));
        sink.emit("theta-a-x", "C(4q-2^s, 2q+2q-2^s)", ps, true, sink.C(N, 2 * q + 2 * q - detail::pow2(s)));
        sink.emit("theta-a-x", "C(4q-2^s, 2q-1)", ps, false, sink.C(N, 2 * q - 1));
        sink.emit("theta-a-x", "C(4q-2^s, 2q+2q-2^s-1)", ps, false, sink.C(N, 2 * q + 2 * q - detail::pow2(s) - 1));
        sink.emit("theta-a-x", "C(4q-2^s,1) + C(4q-2^s,2q)", ps, true, sink.C(N, 1) ^ sink.C(N, 2 * q));
        sink.emit("theta-a-x", "C(4q-2^s,0) + C(4q-2^s,2q-1) + C(4q-2^s,4q-2^s-1)", ps, true,
                  sink.C(N, 0) ^ sink.C(N, 2 * q - 1) ^ sink.C(N, 4 * q - detail::pow2(s) - 1));
        sink.emit("theta-a-x", "C(4q-2^s,0) + C(4q-2^s,2q-1)", ps, true, sink.C(N, 0) ^ sink.C(N, 2 * q - 1));
    }
}

/// Coefficients of [Xi_n Xi_n] = 0: n = 2s even (s >= 1) and n = 2s+1 odd (s >= 0).
inline void verify_square_xi(std::int64_t g, std::int64_t h, std::int64_t s, std::vector<ParityClaim>& out,
                      PascalParity& pascal) {
    const auto p = detail::shape_of(g, h);
    if (s < 0) throw std::out_of_range("verify_square_xi: s must be >= 0");
    detail::ClaimSink sink(out, pascal);
    const auto q = p.q, eta = p.eta, d = p.d;
    const std::int64_t G = detail::pow2(g + h) - 1;

    if (s >= 1) {
        const std::initializer_list<std::pair<std::string, std::int64_t>> ps = {{"g", g}, {"h", h}, {"s", s}};
        const std::int64_t N = 2 * q - 1 + d * s;
        bool raw = sink.C(N, d * s);
        for (std::int64_t l = 0; l <= s - 1; ++l) {
            raw ^= sink.C(N, d * l);
            for (std::int64_t j = 0; j <= eta - 1; ++j) raw ^= sink.C(N, 2 * q - 1 + 2 * q * j + d * l);
        }
        sink.emit("square-xi", "n even: full coefficient of [v_s z^(2q+ds)]", ps, true, raw);

        bool l1 = false, l2 = false, l3 = false, l4 = false;
        for (std::int64_t l = 1; l <= s; ++l) {
            for (std::int64_t j = 1; j <= eta - 1; ++j) {
                l1 ^= sink.C(N, d * l - 2 * q * j);
                l2 ^= sink.C(N - 1, d * l - 2 * q * j);
                l3 ^= sink.C(G * s + q - 1, G * l - q * j);
            }
        }
        for (std::int64_t l = 0; l <= s - 1; ++l)
            for (std::int64_t j = 1; j <= detail::pow2(g) - 2; ++j)
                l4 ^= sink.C(G * s + q - 1, G * l + (G + 1 - q * j - 1));
        sink.emit("square-xi", "n even: sum_l sum_j C(2q-1+ds, dl-2qj)", ps, false, l1);
        sink.emit("square-xi", "n even: sum_l sum_j C(2q-2+ds, dl-2qj)", ps, false, l2);
        sink.emit("square-xi", "n even: sum_l sum_j C((2^(g+h)-1)s+2^h-1, (2^(g+h)-1)l-2^h j)", ps, false, l3);
        sink.emit("square-xi", "n even: sum_l sum_j C((2^(g+h)-1)s+2^h-1, (2^(g+h)-1)l+2^(g+h)-2^h j-1)", ps, false, l4);
    }

    {
        const std::initializer_list<std::pair<std::string, std::int64_t>> ps = {{"g", g}, {"h", h}, {"s", s}};
        const std::int64_t half_up = (eta + 1) / 2;
        const std::int64_t half_dn = (eta - 1) / 2;
        const std::int64_t N = 2 * q * half_up + 2 * q - 2 + d * s;

        bool S = false;
        for (std::int64_t j = 0; j <= half_dn; ++j) S ^= sink.C(N, 2 * q * j);
        for (std::int64_t l = 0; l <= s - 1; ++l)
            for (std::int64_t j = 0; j <= eta - 1; ++j) S ^= sink.C(N, 2 * q * (half_up + j) + 2 * q - 2 + d * l);

        const bool second = sink.C(N, 2 * q * half_dn + 2 * q - 1);
        sink.emit("square-xi", "n odd: C(N, 2q(eta-1)/2+2q-1) [odd over even]", ps, false, second);
        bool raw = S ^ second;
        for (std::int64_t l = 0; l <= s - 1; ++l) {
            const bool last = sink.C(N, 2 * q * half_up + d * (l + 1) - 1);
            raw ^= last;
            sink.emit("square-xi", "n odd: C(N, 2q(eta+1)/2+d(l+1)-1) [odd over even]",
                      {{"g", g}, {"h", h}, {"s", s}, {"l", l}}, false, last);
        }
        sink.emit("square-xi", "n odd: S", ps, true, S);
        sink.emit("square-xi", "n odd: full coefficient", ps, true, raw);

        const std::int64_t Nh = G * s + detail::pow2(g + h - 1) + q - 1;
        bool Sh = false;
        for (std::int64_t j = 0; j <= detail::pow2(g - 1) - 1; ++j) Sh ^= sink.C(Nh, q * j);
        for (std::int64_t l = 0; l <= s - 1; ++l)
            for (std::int64_t j = 0; j <= detail::pow2(g) - 2; ++j)
                Sh ^= sink.C(Nh, G * l + detail::pow2(g + h - 1) + q * (j + 1) - 1);
        sink.emit("square-xi", "n odd: S after halving the 2-adic digits", ps, true, Sh);

        bool tail = false;
        for (std::int64_t j = 0; j <= detail::pow2(g - 1) - 1; ++j)
            tail ^= sink.C(detail::pow2(g + h - 1) + q - 1, q * j);
        sink.emit("square-xi", "n odd: sum_j C(2^(g+h-1)+2^h-1, 2^h j)", ps, true, tail);
    }
}

/// Coefficients r_t of the expansion proving [theta_n^b x] = 0.
inline void verify_theta_b_x(std::int64_t g, std::int64_t h, std::vector<ParityClaim>& out, PascalParity& pascal) {
    const auto p = detail::shape_of(g, h);
    detail::ClaimSink sink(out, pascal);
    const auto q = p.q, eta = p.eta;
    for (std::int64_t b = h + 2; b <= g + h; ++b) {
        const std::int64_t i = eta - detail::pow2(g + h + 1 - b);
        const std::int64_t N = 2 * q * (i + 2) + 2 * q - 2;
        const std::initializer_list<std::pair<std::string, std::int64_t>> ps = {{"g", g}, {"h", h}, {"b", b}, {"i", i}};
        bool r[2] = {false, false};
        for (int t = 0; t <= 1; ++t) {
            bool v = sink.C(N, t) ^ sink.C(N, 2 * q - 1 + t) ^ sink.C(N, 2 * q + 2 * q - 2 + t);
            for (std::int64_t j = 1; j <= i; ++j) v ^= sink.C(N, 2 * q * (j + 1) + 2 * q - 2 + t);
            v ^= sink.C(N, 2 * q * (i + 2) + 2 * q - 3 + t);
            r[t] = v;
        }
        sink.emit("theta-b-x", "r_0", ps, true, r[0]);
        sink.emit("theta-b-x", "r_1", ps, false, r[1]);
        sink.emit("theta-b-x", "C(2q(i+2)+2q-2, 2q)", ps, true, sink.C(N, 2 * q));
        sink.emit("theta-b-x", "C(i+2, 1) = i+2 is odd", ps, true, ((i + 2) & 1) != 0);
        for (std::int64_t j = 1; j <= i; ++j) {
            sink.emit("theta-b-x", "C(2q(i+2)+2q-2, 2q(j+1)+2q-2) vs C(i+2, j+1)",
                      {{"g", g}, {"h", h}, {"b", b}, {"i", i}, {"j", j}},
                      binom_mod2(static_cast<std::uint64_t>(i + 2), static_cast<std::uint64_t>(j + 1)),
                      sink.C(N, 2 * q * (j + 1) + 2 * q - 2));
        }
    }
}

/// Coefficient A of the expansion built on [mu_{0,2} y] = 0.
inline void verify_mu02_y(std::int64_t g, std::int64_t h, std::vector<ParityClaim>& out, PascalParity& pascal) {
    const auto p = detail::shape_of(g, h);
    detail::ClaimSink sink(out, pascal);
    const auto q = p.q;
    for (std::int64_t s = 1; s <= h; ++s) {
        const std::int64_t e = detail::pow2(s);
        const std::initializer_list<std::pair<std::string, std::int64_t>> ps = {{"g", g}, {"h", h}, {"s", s}};
        const bool t1 = sink.C(6 * q - 3, e);
        const bool t2 = sink.C(6 * q - 3, 2 * q + e - 1);
        const bool t3 = sink.C(6 * q - 3, 4 * q + e - 2);
        sink.emit("mu-0-2-y", "C(6q-3, 2^s) vs C(2q-3, 2^s)", ps,
                  binom_mod2(static_cast<std::uint64_t>(2 * q - 3), static_cast<std::uint64_t>(e)), t1);
        sink.emit("mu-0-2-y", "C(6q-3, 2q+2^s-1)", ps, false, t2);
        sink.emit("mu-0-2-y", "C(6q-3, 4q+2^s-2) vs C(2q-3, 2^s-2)", ps,
                  binom_mod2(static_cast<std::uint64_t>(2 * q - 3), static_cast<std::uint64_t>(e - 2)), t3);
        sink.emit("mu-0-2-y", "A", ps, true, t1 ^ t2 ^ t3);
        sink.emit("mu-0-2-y", "C(2q-1, 2^s)", ps, true, sink.C(2 * q - 1, e));
    }
}

/// C(4q - 2^{h+1-s}, 2q alpha + beta) == 1 - beta and the two coefficients of the expansion.
inline void verify_mu_theta_s_x(std::int64_t g, std::int64_t h, std::vector<ParityClaim>& out, PascalParity& pascal) {
    const auto p = detail::shape_of(g, h);
    detail::ClaimSink sink(out, pascal);
    const auto q = p.q;
    for (std::int64_t s = 1; s <= h; ++s) {
        const std::int64_t N = 4 * q - detail::pow2(h + 1 - s);
        for (std::int64_t alpha = 0; alpha <= 1; ++alpha)
            for (std::int64_t beta = 0; beta <= 1; ++beta)
                sink.emit("mu-theta-s-x", "C(4q-2^(h+1-s), 2q alpha + beta)",
                          {{"g", g}, {"h", h}, {"s", s}, {"alpha", alpha}, {"beta", beta}}, beta == 0,
                          sink.C(N, 2 * q * alpha + beta));
        const std::initializer_list<std::pair<std::string, std::int64_t>> ps = {{"g", g}, {"h", h}, {"s", s}};
        sink.emit("mu-theta-s-x", "C(N,1) + C(N,2q+1)", ps, false, sink.C(N, 1) ^ sink.C(N, 2 * q + 1));
        sink.emit("mu-theta-s-x", "C(N,0) + C(N,2q)", ps, false, sink.C(N, 0) ^ sink.C(N, 2 * q));
    }
}

/// 2-adic valuation of a positive integer.
inline std::int64_t two_adic_valuation(std::int64_t v) {
    if (v <= 0) throw std::invalid_argument("two_adic_valuation: argument must be positive");
    std::int64_t e = 0;
    while ((v & 1) == 0) {
        v >>= 1;
        ++e;
    }
    return e;
}

/// Indices i in [0, eta-3] handled by the lambda expansion (i != 2^g - 2^gamma - 1).
inline std::vector<std::int64_t> lambda_indices(std::int64_t g, std::int64_t h) {
    const auto p = detail::shape_of(g, h);
    std::vector<std::int64_t> out;
    for (std::int64_t i = 0; i <= p.eta - 3; ++i) {
        bool special = false;
        for (std::int64_t gamma = 1; gamma <= g - 1; ++gamma)
            if (i == detail::pow2(g) - detail::pow2(gamma) - 1) special = true;
        if (!special) out.push_back(i);
    }
    return out;
}

/// Coefficient of the expansion built on [mu_{0,i+2^lambda+1} y] = 0.
inline void verify_mu_lambda_y(std::int64_t g, std::int64_t h, std::vector<ParityClaim>& out, PascalParity& pascal) {
    const auto p = detail::shape_of(g, h);
    detail::ClaimSink sink(out, pascal);
    const auto q = p.q, eta = p.eta;
    for (std::int64_t i : lambda_indices(g, h)) {
        const std::int64_t lambda = two_adic_valuation(i + 1);
        const std::int64_t L = detail::pow2(lambda);
        const std::int64_t M = i + 1 + L;
        const std::int64_t N = 2 * q * M + 2 * q - 3;
        const std::initializer_list<std::pair<std::string, std::int64_t>> ps = {
            {"g", g}, {"h", h}, {"i", i}, {"lambda", lambda}};

        const std::int64_t used = i + L - 1;
        bool admissible = used <= eta - 2;
        for (std::int64_t alpha = 1; alpha <= g - 1; ++alpha)
            if (eta - used == detail::pow2(alpha)) admissible = false;
        sink.emit("mu-lambda-y", "relation [mu_{0,i+2^lambda+1} y] belongs to the presentation", ps, true, admissible);

        bool head = false;
        for (std::int64_t j = 0; j <= L - 1; ++j) head ^= sink.C(N, 2 * q * j + 1);
        head ^= sink.C(N, 2 * q * L);
        bool tail = false;
        for (std::int64_t j = 0; j <= i; ++j) tail ^= sink.C(N, 2 * q * (L + j) + 2 * q - 1);
        sink.emit("mu-lambda-y", "sum_j C(N, 2q(2^lambda+j)+2q-1)", ps, false, tail);
        sink.emit("mu-lambda-y", "full coefficient", ps, true, head ^ tail);

        bool reduced = false;
        for (std::int64_t j = 0; j <= L; ++j) reduced ^= sink.C(2 * q * M, 2 * q * j);
        sink.emit("mu-lambda-y", "sum_{j=0}^{2^lambda} C(2q(i+1+2^lambda), 2qj)", ps, true, reduced);
    }
}

inline constexpr std::int64_t kAppendixSweepMax = 4;

/// Every appendix parity claim for B_l(g, h), in a fixed order.
inline std::vector<ParityClaim> verify_appendix(std::int64_t g, std::int64_t h, std::int64_t s_max = kAppendixSweepMax) {
    detail::shape_of(g, h);
    std::vector<ParityClaim> out;
    PascalParity pascal;
    verify_square_first(g, h, out, pascal);
    for (std::int64_t s = 1; s <= s_max; ++s) verify_square_v_even(g, h, s, out, pascal);
    verify_omega_x(g, h, out, pascal);
    verify_theta_a_x(g, h, out, pascal);
    for (std::int64_t s = 0; s <= s_max; ++s) verify_square_xi(g, h, s, out, pascal);
    verify_theta_b_x(g, h, out, pascal);
    verify_mu02_y(g, h, out, pascal);
    verify_mu_theta_s_x(g, h, out, pascal);
    verify_mu_lambda_y(g, h, out, pascal);
    return out;
}

}  // namespace bzl::char2
