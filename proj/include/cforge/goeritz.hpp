#pragma once

// Checkerboard colorings, Goeritz forms, and the signature computed from a
// diagram via the correction term over type II crossings.

#include <array>
#include <stdexcept>
#include <vector>

#include "cforge/diagram.hpp"
#include "cforge/exact.hpp"

namespace cforge {

// The two 2-colorings of the face set, each given as the sorted list of white
// face ids.  [0] is the coloring in which the first traced face is white, [1]
// its complement; together they partition the faces.
inline std::array<std::vector<int>, 2> checkerboard(const Diagram& d) {
    if (d.crossings.empty()) return {std::vector<int>{0}, std::vector<int>{}};
    const int F = d.face_count();
    std::vector<int> color(F, -1);
    std::vector<int> stack{0};
    color[0] = 0;
    // faces adjacent across an arc: at the head end (c,s), the arc separates
    // corner s-1 from corner s
    std::vector<std::vector<int>> adj(F);
    for (int a = 0; a < d.arc_count; ++a) {
        const Diagram::End h = d.head[a];
        const int f0 = d.corner_face.at(4 * h.crossing + (h.slot + 3) % 4);
        const int f1 = d.corner_face.at(4 * h.crossing + h.slot);
        adj[f0].push_back(f1);
        adj[f1].push_back(f0);
    }
    while (!stack.empty()) {
        const int f = stack.back();
        stack.pop_back();
        for (int g : adj[f]) {
            if (color[g] == -1) {
                color[g] = 1 - color[f];
                stack.push_back(g);
            } else if (color[g] == color[f]) {
                throw std::logic_error("checkerboard: faces not 2-colorable");
            }
        }
    }
    std::array<std::vector<int>, 2> out;
    for (int f = 0; f < F; ++f) {
        if (color[f] == -1) throw std::logic_error("checkerboard: disconnected face graph");
        out[color[f]].push_back(f);
    }
    return out;
}

struct GoeritzForm {
    IMatrix matrix;    // one white region deleted
    int correction;    // mu: signed count over type II crossings
    int coloring_id;   // which checkerboard coloring produced it
};

namespace detail {

// eta_sign and type_sign are the two sign conventions left free by the
// construction; the public API pins them (see below).
inline GoeritzForm goeritz_impl(const Diagram& d, int coloring_id, int eta_sign, int type_sign) {
    GoeritzForm out;
    out.coloring_id = coloring_id;
    out.correction = 0;
    const int n = static_cast<int>(d.crossings.size());
    if (n == 0) return out;

    const auto colorings = checkerboard(d);
    std::vector<int> region(d.faces.size(), -1);
    int m = 0;
    for (int f : colorings[coloring_id]) region[f] = m++;
    if (m == 0) throw std::logic_error("goeritz: coloring has no white region");

    IMatrix full(m, std::vector<std::int64_t>(m, 0));
    std::vector<int> incident(m, 0);
    for (int c = 0; c < n; ++c) {
        int p = -1;
        for (int q = 0; q < 2; ++q) {
            const bool w0 = region[d.corner_face.at(4 * c + q)] >= 0;
            const bool w2 = region[d.corner_face.at(4 * c + q + 2)] >= 0;
            if (w0 != w2) throw std::logic_error("goeritz: corners do not alternate");
            if (w0) p = q;
        }
        if (p == -1) throw std::logic_error("goeritz: crossing with no white corner");
        const int pi = p == 0 ? 1 : -1;
        const int eta = eta_sign * pi;
        const int i = region[d.corner_face.at(4 * c + p)];
        const int j = region[d.corner_face.at(4 * c + p + 2)];
        ++incident[i];
        if (j != i) {
            ++incident[j];
            full[i][j] -= eta;
            full[j][i] -= eta;
        }
        if (d.crossings[c].sign * pi == type_sign) out.correction += eta;
    }
    for (int i = 0; i < m; ++i) {
        std::int64_t s = 0;
        for (int j = 0; j < m; ++j)
            if (j != i) s += full[i][j];
        full[i][i] = -s;
    }
    int drop = 0;
    for (int i = 1; i < m; ++i)
        if (incident[i] > incident[drop]) drop = i;
    out.matrix.reserve(m - 1);
    for (int i = 0; i < m; ++i) {
        if (i == drop) continue;
        std::vector<std::int64_t> row;
        row.reserve(m - 1);
        for (int j = 0; j < m; ++j)
            if (j != drop) row.push_back(full[i][j]);
        out.matrix.push_back(std::move(row));
    }
    return out;
}

// pinned against the signature of the Seifert route over both trefoil
// chiralities and a random closed-braid corpus
constexpr int kGoeritzEta = -1;
constexpr int kGoeritzTypeII = -1;

}  // namespace detail

inline GoeritzForm goeritz_matrix(const Diagram& d, int coloring_id) {
    return detail::goeritz_impl(d, coloring_id, detail::kGoeritzEta, detail::kGoeritzTypeII);
}

// signature from either coloring; the two must agree
inline int gl_signature(const Diagram& d) {
    const GoeritzForm f0 = goeritz_matrix(d, 0);
    const int s0 = signature_exact(f0.matrix) - f0.correction;
    const GoeritzForm f1 = goeritz_matrix(d, 1);
    const int s1 = signature_exact(f1.matrix) - f1.correction;
    if (s0 != s1) throw std::logic_error("goeritz: colorings disagree on signature");
    return s0;
}

// Searches {two colorings} x {diagram, mirror} for a positive-definite
// reduced Goeritz matrix whose source diagram has sigma <= 0; returns the
// first found.  Existence is all callers need.
inline GoeritzForm positive_goeritz(const Diagram& d) {
    for (const Diagram& cand : {d, mirror(d)}) {
        if (gl_signature(cand) > 0) continue;
        for (int col : {0, 1}) {
            GoeritzForm f = goeritz_matrix(cand, col);
            if (!f.matrix.empty() && positive_definite(f.matrix)) return f;
        }
    }
    throw std::runtime_error("goeritz: no positive-definite representative found");
}

}  // namespace cforge
