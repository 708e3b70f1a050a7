#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

#include "cforge/braid.hpp"
#include "cforge/diagram.hpp"
#include "cforge/pd.hpp"
#include "cforge/rng.hpp"

namespace cforge {

// A genus-one concordance move. Positions are 0-based indices into the
// stored (unreduced) braid word, or crossing ids for PD-level moves.
// DeResolve inserts letter_i at position i first, then letter_j at position j
// of the already-extended word; sampling always takes i < j, so the two
// letters land at final positions i and j.
struct ConcordanceMove {
    enum class Kind { CrossingChange, SwitchPair, Resolve, DeResolve };
    Kind kind = Kind::CrossingChange;
    int i = 0;
    int j = 0;
    int letter_i = 0;  // DeResolve only
    int letter_j = 0;  // DeResolve only

    friend bool operator==(const ConcordanceMove&, const ConcordanceMove&) = default;
};

inline ConcordanceMove crossing_change(int i) {
    return {ConcordanceMove::Kind::CrossingChange, i, 0, 0, 0};
}
inline ConcordanceMove switch_pair(int i, int j) {
    return {ConcordanceMove::Kind::SwitchPair, i, j, 0, 0};
}
inline ConcordanceMove resolve_pair(int i, int j) {
    return {ConcordanceMove::Kind::Resolve, i, j, 0, 0};
}
inline ConcordanceMove deresolve_pair(int i, int letter_i, int j, int letter_j) {
    return {ConcordanceMove::Kind::DeResolve, i, j, letter_i, letter_j};
}

inline BraidWord apply_move(const BraidWord& b, const ConcordanceMove& m) {
    const int L = static_cast<int>(b.letters.size());
    BraidWord out = b;
    switch (m.kind) {
        case ConcordanceMove::Kind::CrossingChange: {
            if (m.i < 0 || m.i >= L) throw std::invalid_argument("crossing change: index out of range");
            out.letters[(std::size_t)m.i] = -out.letters[(std::size_t)m.i];
            return out;
        }
        case ConcordanceMove::Kind::SwitchPair: {
            if (m.i < 0 || m.j >= L || m.i >= m.j)
                throw std::invalid_argument("switch: need two indices i < j in range");
            if (b.letters[(std::size_t)m.i] * b.letters[(std::size_t)m.j] >= 0)
                throw std::invalid_argument("switch requires oppositely signed crossings");
            out.letters[(std::size_t)m.i] = -out.letters[(std::size_t)m.i];
            out.letters[(std::size_t)m.j] = -out.letters[(std::size_t)m.j];
            return out;
        }
        case ConcordanceMove::Kind::Resolve: {
            if (m.i < 0 || m.j < 0 || m.i >= L || m.j >= L || m.i >= m.j)
                throw std::invalid_argument("resolve: need two indices i < j in range");
            out.letters.erase(out.letters.begin() + m.j);
            out.letters.erase(out.letters.begin() + m.i);
            if (!closure_is_knot(out))
                throw std::invalid_argument("resolve: result closure is not a knot");
            return out;
        }
        case ConcordanceMove::Kind::DeResolve: {
            auto valid_letter = [&](int e) { return e != 0 && std::abs(e) <= b.strands - 1; };
            if (!valid_letter(m.letter_i) || !valid_letter(m.letter_j))
                throw std::invalid_argument("de-resolve: letter outside the generator range");
            // i < j are final positions in the extended word
            if (m.i < 0 || m.i >= m.j || m.j > L + 1)
                throw std::invalid_argument("de-resolve: need two positions i < j in range");
            out.letters.insert(out.letters.begin() + m.i, m.letter_i);
            out.letters.insert(out.letters.begin() + m.j, m.letter_j);
            if (!closure_is_knot(out))
                throw std::invalid_argument("de-resolve: result closure is not a knot");
            return out;
        }
    }
    throw std::logic_error("unreachable move kind");
}

struct MoveKinds {
    bool crossing_change = true;
    bool switch_pair = true;
    bool resolve = true;
    bool deresolve = true;
};

struct EnumeratedMove {
    ConcordanceMove move;
    BraidWord word;
};

struct MoveEnumeration {
    std::vector<EnumeratedMove> items;
    std::size_t filtered = 0;  // candidates dropped for multi-component closures
};

// All crossing changes, all sign-valid switches, all knot-preserving
// resolutions, and `sample_budget` seeded-random de-resolutions.
// Deterministic per seed; order is fixed (changes, switches, resolutions,
// then samples).
inline MoveEnumeration enumerate_moves(const BraidWord& b, MoveKinds kinds = {},
                                       int sample_budget = 800, std::uint64_t seed = 0) {
    const int L = static_cast<int>(b.letters.size());
    MoveEnumeration out;

    if (kinds.crossing_change) {
        for (int i = 0; i < L; ++i) {
            ConcordanceMove m = crossing_change(i);
            out.items.push_back({m, apply_move(b, m)});
        }
    }
    if (kinds.switch_pair) {
        for (int i = 0; i < L; ++i)
            for (int j = i + 1; j < L; ++j) {
                if (b.letters[(std::size_t)i] * b.letters[(std::size_t)j] >= 0) continue;
                ConcordanceMove m = switch_pair(i, j);
                out.items.push_back({m, apply_move(b, m)});
            }
    }
    if (kinds.resolve) {
        for (int i = 0; i < L; ++i)
            for (int j = i + 1; j < L; ++j) {
                BraidWord w = b;
                w.letters.erase(w.letters.begin() + j);
                w.letters.erase(w.letters.begin() + i);
                if (!closure_is_knot(w)) {
                    ++out.filtered;
                    continue;
                }
                out.items.push_back({resolve_pair(i, j), std::move(w)});
            }
    }
    if (kinds.deresolve && b.strands >= 2) {
        SplitMix64 rng(seed);
        for (int s = 0; s < sample_budget; ++s) {
            // final insertion positions i < j, uniform over the
            // (L+1)(L+2)/2 slot pairs
            std::int64_t r = rng.uniform(0, (std::int64_t)(L + 1) * (L + 2) / 2 - 1);
            int i = 0;
            while (r >= L + 1 - i) {
                r -= L + 1 - i;
                ++i;
            }
            int j = i + 1 + (int)r;
            auto draw = [&]() {
                int e = (int)rng.uniform(1, b.strands - 1);
                return rng.coin() ? -e : e;
            };
            ConcordanceMove m = deresolve_pair(i, draw(), j, draw());
            BraidWord w = b;
            w.letters.insert(w.letters.begin() + m.i, m.letter_i);
            w.letters.insert(w.letters.begin() + m.j, m.letter_j);
            if (!closure_is_knot(w)) {
                ++out.filtered;
                continue;
            }
            out.items.push_back({m, std::move(w)});
        }
    }
    return out;
}

namespace detail {

// Rotate a PD quadruple so that it starts at the old over-in slot, which
// swaps the over and under strands of the crossing in place.
inline std::array<int, 4> rotate_to_over(const std::array<int, 4>& q, int sign) {
    int s = sign > 0 ? 1 : 3;
    return {q[(std::size_t)(s % 4)], q[(std::size_t)((s + 1) % 4)],
            q[(std::size_t)((s + 2) % 4)], q[(std::size_t)((s + 3) % 4)]};
}

}  // namespace detail

// PD-level moves: crossing change, switch, and the oriented resolution of
// two crossings. De-resolution is not defined at the PD level.
inline PDCode pd_apply_move(const PDCode& pd, const ConcordanceMove& m) {
    Diagram d = pd_to_diagram(pd);  // validates knot + orientation, gives signs
    const int n = static_cast<int>(pd.crossings.size());
    auto check_id = [&](int c) {
        if (c < 0 || c >= n) throw std::invalid_argument("pd move: crossing id out of range");
    };
    switch (m.kind) {
        case ConcordanceMove::Kind::CrossingChange: {
            check_id(m.i);
            PDCode out = pd;
            out.crossings[(std::size_t)m.i] =
                detail::rotate_to_over(pd.crossings[(std::size_t)m.i], d.crossings[(std::size_t)m.i].sign);
            return diagram_to_pd(pd_to_diagram(out));
        }
        case ConcordanceMove::Kind::SwitchPair: {
            check_id(m.i);
            check_id(m.j);
            if (m.i >= m.j) throw std::invalid_argument("pd switch: need two crossings i < j");
            if (d.crossings[(std::size_t)m.i].sign * d.crossings[(std::size_t)m.j].sign >= 0)
                throw std::invalid_argument("switch requires oppositely signed crossings");
            PDCode out = pd;
            for (int c : {m.i, m.j})
                out.crossings[(std::size_t)c] =
                    detail::rotate_to_over(pd.crossings[(std::size_t)c], d.crossings[(std::size_t)c].sign);
            return diagram_to_pd(pd_to_diagram(out));
        }
        case ConcordanceMove::Kind::Resolve: {
            check_id(m.i);
            check_id(m.j);
            if (m.i >= m.j) throw std::invalid_argument("pd resolve: need two crossings i < j");
            // oriented (Seifert) smoothing: under-in joins over-out,
            // over-in joins under-out
            int maxl = 0;
            for (const auto& q : pd.crossings) maxl = std::max(maxl, *std::max_element(q.begin(), q.end()));
            std::vector<int> up((std::size_t)maxl + 1);
            std::iota(up.begin(), up.end(), 0);
            auto root = [&](int a) {
                while (up[(std::size_t)a] != a) a = up[(std::size_t)a] = up[(std::size_t)up[(std::size_t)a]];
                return a;
            };
            auto unite = [&](int a, int b) { up[(std::size_t)root(a)] = root(b); };
            for (int c : {m.i, m.j}) {
                const auto& q = pd.crossings[(std::size_t)c];
                if (d.crossings[(std::size_t)c].sign > 0) {
                    unite(q[0], q[3]);
                    unite(q[1], q[2]);
                } else {
                    unite(q[0], q[1]);
                    unite(q[3], q[2]);
                }
            }
            PDCode out;
            std::vector<char> seen((std::size_t)maxl + 1, 0), used((std::size_t)maxl + 1, 0);
            for (const auto& q : pd.crossings)
                for (int lbl : q) used[(std::size_t)lbl] = 1;
            for (int c = 0; c < n; ++c) {
                if (c == m.i || c == m.j) continue;
                std::array<int, 4> q = pd.crossings[(std::size_t)c];
                for (auto& lbl : q) {
                    lbl = root(lbl);
                    seen[(std::size_t)lbl] = 1;
                }
                out.crossings.push_back(q);
            }
            // a label class that vanished from every remaining crossing is a
            // split-off circle: the result is a link, not a knot
            int lost = 0, classes = 0;
            for (int a = 1; a <= maxl; ++a) {
                if (!used[(std::size_t)a] || root(a) != a) continue;
                ++classes;
                if (!seen[(std::size_t)a]) ++lost;
            }
            if (out.crossings.empty()) {
                if (classes != 1)
                    throw std::invalid_argument("pd resolve: result is a multi-component link");
                return out;  // crossing-free unknot
            }
            if (lost > 0) throw std::invalid_argument("pd resolve: result is a multi-component link");
            return diagram_to_pd(pd_to_diagram(out));  // throws on multi-component walks
        }
        case ConcordanceMove::Kind::DeResolve:
            throw std::invalid_argument("de-resolution is not defined on planar diagrams");
    }
    throw std::logic_error("unreachable move kind");
}

}  // namespace cforge
