#pragma once

// Seifert matrix of a braid closure, from the standard disk-and-band surface:
// one disk per strand, one twisted band per letter.  H1 generators are the
// loops running through consecutive bands of the same index; the matrix is
// filled from the linking numbers of their positive pushoffs.

#include <cstdlib>
#include <map>
#include <stdexcept>
#include <vector>

#include "cforge/braid.hpp"
#include "cforge/exact.hpp"

namespace cforge {

struct SeifertLoop {
    int index;  // 0-based band index (letter |e| - 1)
    int a, b;   // word positions of the two consecutive occurrences, a < b
};

// One loop per consecutive pair of equal-index letters, grouped by index,
// ordered by (index, position).
inline std::vector<SeifertLoop> seifert_loops(const BraidWord& w) {
    std::map<int, std::vector<int>> occ;
    for (int p = 0; p < static_cast<int>(w.letters.size()); ++p)
        occ[std::abs(w.letters[p]) - 1].push_back(p);
    std::vector<SeifertLoop> loops;
    for (const auto& [idx, ps] : occ)
        for (std::size_t k = 0; k + 1 < ps.size(); ++k)
            loops.push_back({idx, ps[k], ps[k + 1]});
    return loops;
}

// Seifert matrix V with V[i][j] = lk(x_i^+, x_j).  Conventions are pinned so
// that the closure of [1,1,1] has signature -2 and Alexander t^2 - t + 1.
inline IMatrix seifert_matrix(const BraidWord& w) {
    const auto loops = seifert_loops(w);
    const int g = static_cast<int>(loops.size());
    IMatrix V(g, std::vector<std::int64_t>(g, 0));
    auto sgn = [&](int pos) { return w.letters[pos] > 0 ? 1 : -1; };
    for (int i = 0; i < g; ++i)
        V[i][i] = -(sgn(loops[i].a) + sgn(loops[i].b)) / 2;
    for (int i = 0; i < g; ++i)
        for (int j = 0; j < g; ++j) {
            if (i == j) continue;
            const SeifertLoop &x = loops[i], &y = loops[j];
            if (x.index == y.index) {
                // adjacent loops sharing a band: the twist decides the slot
                if (x.b == y.a) V[i][j] += sgn(x.b) > 0 ? 1 : 0;
                if (x.a == y.b) V[i][j] += sgn(x.a) > 0 ? 0 : -1;
            } else if (y.index == x.index - 1) {
                // interleaved loops on neighboring indices link once; the
                // nonzero entry sits in the higher-index row
                const int a = y.a, b = y.b, c = x.a, d = x.b;
                if (a < c && c < b && b < d) V[i][j] += -1;
                else if (c < a && a < d && d < b) V[i][j] += 1;
            }
        }
    return V;
}

// Genus of the disk-and-band surface; for a knot closure this is
// (letters - strands + 1) / 2.
inline int seifert_genus(const BraidWord& w) {
    const auto loops = seifert_loops(w);
    if (loops.size() % 2 != 0)
        throw std::invalid_argument("seifert_genus: odd first homology rank (closure is not a knot)");
    return static_cast<int>(loops.size() / 2);
}

}  // namespace cforge
