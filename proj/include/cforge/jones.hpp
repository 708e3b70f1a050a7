#pragma once

// Jones polynomial via the Kauffman bracket, evaluated by eliminating one
// crossing at a time while memoizing how the open strand ends of the
// processed tangle pair up.  Keeps state counts tied to the boundary size
// rather than 2^crossings.

#include <algorithm>
#include <array>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "cforge/diagram.hpp"
#include "cforge/laurent.hpp"
#include "cforge/pd.hpp"

namespace cforge {
namespace detail {

// exact long division; the divisor's leading coefficient is +-1 here
inline LaurentPoly lp_divexact(LaurentPoly num, const LaurentPoly& den) {
    if (den.is_zero()) throw std::logic_error("division by zero polynomial");
    LaurentPoly q;
    while (!num.is_zero()) {
        const std::int64_t lc = num.coeff(num.max_exp());
        const std::int64_t dc = den.coeff(den.max_exp());
        if (lc % dc != 0) throw std::logic_error("inexact polynomial division");
        const LaurentPoly term = LaurentPoly::monomial(lc / dc, num.max_exp() - den.max_exp());
        q = q + term;
        num = num - term * den;
    }
    return q;
}

// writhe-corrected bracket in the variable t, before normalization
inline LaurentPoly jones_raw(const Diagram& input) {
    const Diagram d = reduce_r1(input);
    const int n = static_cast<int>(d.crossings.size());
    if (n == 0) return LaurentPoly(1);

    // far end of the arc at (c, s), as a token 4*crossing + slot
    auto far_token = [&](int c, int s) {
        const int a = d.crossings[c].arc[s];
        const Diagram::End t = d.tail[a], h = d.head[a];
        const Diagram::End far = (t.crossing == c && t.slot == s) ? h : t;
        return 4 * far.crossing + far.slot;
    };

    // greedy elimination order: always take the crossing sharing the most
    // arcs with the processed part, to keep the open boundary small
    std::vector<int> order;
    {
        std::vector<char> done(n, 0);
        for (int step = 0; step < n; ++step) {
            int best = -1, best_score = -1;
            for (int c = 0; c < n; ++c) {
                if (done[c]) continue;
                int score = 0;
                for (int s = 0; s < 4; ++s) {
                    const int far = far_token(c, s) / 4;
                    if (far == c || done[far]) ++score;
                }
                if (score > best_score) {
                    best_score = score;
                    best = c;
                }
            }
            done[best] = 1;
            order.push_back(best);
        }
    }

    const LaurentPoly delta = LaurentPoly::monomial(-1, 2) + LaurentPoly::monomial(-1, -2);
    using Pairing = std::vector<std::pair<int, int>>;  // sorted pairs of end tokens
    std::map<Pairing, LaurentPoly> states{{Pairing{}, LaurentPoly(1)}};

    for (int c : order) {
        std::map<Pairing, LaurentPoly> next;
        for (const auto& [pairing, coeff] : states) {
            // ends[s]: where the strand at slot s leads outside this crossing;
            // may be another slot of c (token 4c+s'), via a direct arc or a
            // memoized connection through the processed tangle
            std::array<int, 4> ends{};
            Pairing base;
            for (std::size_t i = 0; i < pairing.size(); ++i) {
                const auto [x, y] = pairing[i];
                const bool xc = x / 4 == c, yc = y / 4 == c;
                if (xc) ends[x % 4] = y;
                if (yc) ends[y % 4] = x;
                if (!xc && !yc) base.push_back(pairing[i]);
            }
            for (int s = 0; s < 4; ++s) {
                const int tok = 4 * c + s;
                bool in_pairing = false;
                for (const auto& [x, y] : pairing)
                    if (x == tok || y == tok) in_pairing = true;
                if (!in_pairing) ends[s] = far_token(c, s);
            }
            // A-smoothing joins slots (0,3)(1,2); B joins (0,1)(2,3)
            for (int which = 0; which < 2; ++which) {
                const std::array<int, 4> smooth = which == 0 ? std::array<int, 4>{3, 2, 1, 0}
                                                             : std::array<int, 4>{1, 0, 3, 2};
                Pairing out = base;
                int loops = 0;
                std::array<char, 4> used{};
                for (int s = 0; s < 4; ++s) {  // chains with external endpoints
                    if (used[s] || ends[s] / 4 == c) continue;
                    used[s] = 1;
                    int t = smooth[s];
                    while (true) {
                        used[t] = 1;
                        if (ends[t] / 4 != c) {
                            out.emplace_back(std::min(ends[s], ends[t]), std::max(ends[s], ends[t]));
                            break;
                        }
                        const int u = ends[t] % 4;
                        used[u] = 1;
                        t = smooth[u];
                    }
                }
                for (int s = 0; s < 4; ++s) {  // closed loops
                    if (used[s]) continue;
                    int t = s;
                    do {
                        used[t] = 1;
                        const int u = smooth[t];
                        used[u] = 1;
                        t = ends[u] % 4;
                    } while (t != s);
                    ++loops;
                }
                LaurentPoly f = coeff * LaurentPoly::monomial(1, which == 0 ? 1 : -1);
                for (int l = 0; l < loops; ++l) f = f * delta;
                std::sort(out.begin(), out.end());
                auto it = next.find(out);
                if (it == next.end())
                    next.emplace(std::move(out), std::move(f));
                else
                    it->second = it->second + f;
            }
        }
        states = std::move(next);
    }
    if (states.size() != 1 || !states.begin()->first.empty())
        throw std::logic_error("jones: contraction left open ends");
    // every state closed at least one loop, so one delta factor is global
    LaurentPoly bracket = lp_divexact(states.begin()->second, delta);
    // writhe correction (-A^3)^{-w}, then substitute out the bracket variable;
    // the exponent sign is pinned by the right-trefoil value -t^-4 + t^-3 + t^-1
    const int w = writhe(d);
    bracket = bracket * LaurentPoly::monomial(w % 2 == 0 ? 1 : -1, -3 * w);
    LaurentPoly out;
    if (!bracket.is_zero()) {
        for (int e = bracket.min_exp(); e <= bracket.max_exp(); ++e) {
            const std::int64_t cf = bracket.coeff(e);
            if (cf == 0) continue;
            if (e % 4 != 0) throw std::logic_error("jones: exponent not a multiple of 4");
            out = out + LaurentPoly::monomial(cf, e / 4);
        }
    }
    return out;
}

}  // namespace detail

// Normalized Jones polynomial of a knot PD code.
inline LaurentPoly jones(const PDCode& pd) {
    if (pd.crossings.size() > 30) throw std::invalid_argument("jones: crossing budget exceeded");
    return detail::jones_raw(pd_to_diagram(pd)).normalized();
}

}  // namespace cforge
