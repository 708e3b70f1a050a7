#pragma once

// Combinatorial knot diagrams: crossings with over/under and sign data,
// oriented arcs, and the face structure of the sphere embedding.
//
// Slot convention at a crossing: slots 0..3 counterclockwise, slot 0 the
// incoming under-strand, so the under-strand runs 0 -> 2 and the over-strand
// occupies slots 1 and 3.  Corner k is the region between slots k and k+1.

#include <array>
#include <cstdlib>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "cforge/braid.hpp"
#include "cforge/pd.hpp"

namespace cforge {

struct Diagram {
    struct Crossing {
        std::array<int, 4> arc;  // 0-based arc ids, ccw from incoming under
        int sign = 0;            // +1 iff the over-strand runs slot 1 -> 3
    };
    struct End {
        int crossing = -1;
        int slot = -1;
    };

    std::vector<Crossing> crossings;
    int arc_count = 0;                   // a 0-crossing unknot diagram has 1 arc
    std::vector<End> tail, head;         // oriented arc endpoints, indexed by arc id
    std::vector<std::vector<int>> faces; // face -> corner codes 4*crossing + k
    std::vector<int> corner_face;        // corner code -> face id

    int face_count() const { return static_cast<int>(faces.size()); }
};

namespace detail {

// Face tracing on the rotation system: arriving at slot s, the face continues
// through corner s and departs along slot s+1.  Returns false if the map is
// not a sphere embedding (Euler count fails).
inline bool trace_faces(Diagram& d) {
    const int n = static_cast<int>(d.crossings.size());
    if (n == 0) {
        d.faces = {{}};  // one-face convention for the crossingless round unknot
        d.corner_face.clear();
        return true;
    }
    d.faces.clear();
    d.corner_face.assign(4 * n, -1);
    // directed edge id: 2*arc + dir, dir 0 = tail->head
    std::vector<char> used(2 * d.arc_count, 0);
    for (int start = 0; start < 2 * d.arc_count; ++start) {
        if (used[start]) continue;
        std::vector<int> corners;
        int e = start;
        while (!used[e]) {
            used[e] = 1;
            const int arc = e / 2, dir = e % 2;
            const Diagram::End at = dir == 0 ? d.head[arc] : d.tail[arc];
            corners.push_back(4 * at.crossing + at.slot);
            const int next_slot = (at.slot + 1) % 4;
            const int next_arc = d.crossings[at.crossing].arc[next_slot];
            const bool departs_at_tail =
                d.tail[next_arc].crossing == at.crossing && d.tail[next_arc].slot == next_slot;
            e = 2 * next_arc + (departs_at_tail ? 0 : 1);
        }
        const int fid = static_cast<int>(d.faces.size());
        for (int c : corners) {
            if (d.corner_face[c] != -1) return false;
            d.corner_face[c] = fid;
        }
        d.faces.push_back(std::move(corners));
    }
    // sphere check: V - E + F = 2
    return n - d.arc_count + static_cast<int>(d.faces.size()) == 2;
}

}  // namespace detail

// Builds the oriented diagram from a PD code: validates incidences, resolves
// the coherent orientation, requires a single closed cycle (a knot), and
// computes signs and faces.
inline Diagram pd_to_diagram(const PDCode& pd) {
    validate_pd(pd);
    const int n = static_cast<int>(pd.crossings.size());
    Diagram d;
    if (n == 0) {
        d.arc_count = 1;
        d.tail.assign(1, {});
        d.head.assign(1, {});
        detail::trace_faces(d);
        return d;
    }
    // map labels to 0-based ids
    std::map<int, int> id;
    for (const auto& x : pd.crossings)
        for (int a : x) id.emplace(a, static_cast<int>(id.size()));
    d.arc_count = static_cast<int>(id.size());
    if (d.arc_count != 2 * n)
        throw std::invalid_argument("pd code: knot diagram needs 2 arcs per crossing");
    d.crossings.resize(n);
    // occurrences of each arc id: (crossing, slot)
    std::vector<std::array<Diagram::End, 2>> occ(d.arc_count);
    std::vector<int> occ_n(d.arc_count, 0);
    for (int c = 0; c < n; ++c)
        for (int s = 0; s < 4; ++s) {
            const int a = id[pd.crossings[c][s]];
            d.crossings[c].arc[s] = a;
            if (occ_n[a] >= 2) throw std::invalid_argument("pd code: arc incidences inconsistent");
            occ[a][occ_n[a]++] = {c, s};
        }
    for (int a = 0; a < d.arc_count; ++a)
        if (occ_n[a] != 2) throw std::invalid_argument("pd code: arc incidences inconsistent");

    // orientation: is (crossing, slot) an inflow?  slot 0 yes, slot 2 no,
    // slots 1/3 opposite to each other; each arc has one inflow and one
    // outflow across its two occurrences.  Propagate to a fixed point.
    std::vector<std::array<int, 4>> inflow(n, {-1, -1, -1, -1});
    std::vector<Diagram::End> queue;
    auto set_end = [&](Diagram::End e, int v, auto&& push) {
        int& cur = inflow[e.crossing][e.slot];
        if (cur == v) return;
        if (cur != -1) throw std::invalid_argument("pd code: orientation conflict");
        cur = v;
        push(e);
    };
    auto push = [&](Diagram::End e) { queue.push_back(e); };
    for (int c = 0; c < n; ++c) {
        set_end({c, 0}, 1, push);
        set_end({c, 2}, 0, push);
    }
    while (!queue.empty()) {
        const Diagram::End e = queue.back();
        queue.pop_back();
        const int v = inflow[e.crossing][e.slot];
        // the arc's other occurrence flows the opposite way
        const int a = d.crossings[e.crossing].arc[e.slot];
        const Diagram::End other = (occ[a][0].crossing == e.crossing && occ[a][0].slot == e.slot)
                                       ? occ[a][1]
                                       : occ[a][0];
        set_end(other, 1 - v, push);
        // over-strand slots 1 and 3 flow oppositely
        if (e.slot == 1 || e.slot == 3)
            set_end({e.crossing, e.slot ^ 2}, 1 - v, push);
    }
    for (int c = 0; c < n; ++c)
        for (int s = 0; s < 4; ++s)
            if (inflow[c][s] == -1) throw std::invalid_argument("pd code: orientation underdetermined");

    d.tail.assign(d.arc_count, {});
    d.head.assign(d.arc_count, {});
    for (int a = 0; a < d.arc_count; ++a) {
        const auto &e0 = occ[a][0], &e1 = occ[a][1];
        const bool in0 = inflow[e0.crossing][e0.slot] == 1;
        const bool in1 = inflow[e1.crossing][e1.slot] == 1;
        if (in0 == in1) throw std::invalid_argument("pd code: arc with two inflows");
        d.head[a] = in0 ? e0 : e1;
        d.tail[a] = in0 ? e1 : e0;
    }
    for (int c = 0; c < n; ++c)
        d.crossings[c].sign = inflow[c][1] == 1 ? 1 : -1;

    // single closed cycle
    {
        std::vector<char> seen(d.arc_count, 0);
        int a = 0, visited = 0;
        while (!seen[a]) {
            seen[a] = 1;
            ++visited;
            const Diagram::End h = d.head[a];
            const int out_slot = h.slot == 0 ? 2 : (h.slot ^ 2);
            a = d.crossings[h.crossing].arc[out_slot];
        }
        if (visited != d.arc_count)
            throw std::invalid_argument("pd code: arcs do not form a single closed cycle");
    }

    if (!detail::trace_faces(d))
        throw std::invalid_argument("pd code: not a sphere embedding");
    return d;
}

// Emits arc labels 1..2n numbered along the knot's orientation.
inline PDCode diagram_to_pd(const Diagram& d) {
    PDCode pd;
    const int n = static_cast<int>(d.crossings.size());
    if (n == 0) return pd;
    std::vector<int> label(d.arc_count, 0);
    int a = 0;
    for (int step = 1; step <= d.arc_count; ++step) {
        label[a] = step;
        const Diagram::End h = d.head[a];
        const int out_slot = h.slot == 0 ? 2 : (h.slot ^ 2);
        a = d.crossings[h.crossing].arc[out_slot];
    }
    for (const auto& c : d.crossings) {
        std::array<int, 4> q{};
        for (int s = 0; s < 4; ++s) q[s] = label[c.arc[s]];
        pd.crossings.push_back(q);
    }
    return pd;
}

// Mirror image: every crossing switched.  The embedding is unchanged, so the
// new incoming under-strand is the old incoming over-strand.
inline Diagram mirror(const Diagram& d) {
    PDCode pd;
    const int n = static_cast<int>(d.crossings.size());
    std::vector<int> label(d.arc_count);
    for (int a = 0; a < d.arc_count; ++a) label[a] = a + 1;
    for (const auto& c : d.crossings) {
        const int over_in = c.sign > 0 ? 1 : 3;
        std::array<int, 4> q{};
        for (int s = 0; s < 4; ++s) q[s] = label[c.arc[(over_in + s) % 4]];
        pd.crossings.push_back(q);
    }
    return pd_to_diagram(pd);
}

inline int writhe(const Diagram& d) {
    int w = 0;
    for (const auto& c : d.crossings) w += c.sign;
    return w;
}

// Removes Reidemeister-I kinks until none remain.  A kink is an arc occupying
// two cyclically adjacent slots of one crossing.
inline Diagram reduce_r1(const Diagram& in) {
    PDCode pd = diagram_to_pd(in);
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t c = 0; c < pd.crossings.size(); ++c) {
            const auto& x = pd.crossings[c];
            int loop = -1;
            for (int s = 0; s < 4; ++s)
                if (x[s] == x[(s + 1) % 4]) loop = s;
            if (loop < 0) continue;
            const int u = x[(loop + 2) % 4], v = x[(loop + 3) % 4];
            pd.crossings.erase(pd.crossings.begin() + static_cast<long>(c));
            if (u != v) {
                for (auto& y : pd.crossings)
                    for (int& a : y)
                        if (a == u) a = v;
            } else if (!pd.crossings.empty()) {
                throw std::logic_error("reduce_r1: detached component");
            }
            changed = true;
            break;
        }
    }
    return pd_to_diagram(pd);
}

// PD code of a braid closure, strands oriented coherently (all downward).
// Arc count is exactly 2 * letters for a nonempty word.
inline PDCode braid_to_pd(const BraidWord& b) {
    validate_braid(b);
    if (!closure_is_knot(b)) throw std::invalid_argument("braid_to_pd: closure is not a knot");
    const int L = static_cast<int>(b.letters.size());
    if (L == 0) return {};
    const int n = b.strands;
    // temp arc ids: n initial strand tops, then two fresh per crossing
    std::vector<int> cur(n);
    for (int s = 0; s < n; ++s) cur[s] = s;
    int next = n;
    struct Row {
        std::array<int, 4> tmp;
        bool positive;
    };
    std::vector<Row> rows;
    for (int e : b.letters) {
        const int i = std::abs(e) - 1;
        const int out_l = next++, out_r = next++;
        if (e > 0)  // left strand passes over: incoming under is the right strand
            rows.push_back({{cur[i + 1], cur[i], out_l, out_r}, true});
        else
            rows.push_back({{cur[i], out_l, out_r, cur[i + 1]}, false});
        cur[i] = out_l;
        cur[i + 1] = out_r;
    }
    // closure: bottom of strand s is the same arc as its top
    std::vector<int> rep(next);
    for (int t = 0; t < next; ++t) rep[t] = t;
    for (int s = 0; s < n; ++s) rep[s] = cur[s];
    auto resolve = [&](int t) {
        while (rep[t] != t) t = rep[t];
        return t;
    };
    // number arcs 1..2L along the traversal starting at strand 0's closure arc
    std::map<int, int> label;
    {
        // head of each temp arc: where it is consumed
        std::map<int, std::pair<int, int>> head;  // temp -> (row, slot)
        for (int r = 0; r < L; ++r) {
            const auto& q = rows[r].tmp;
            const int under_in = 0;
            const int over_in = rows[r].positive ? 1 : 3;
            head[resolve(q[under_in])] = {r, under_in};
            head[resolve(q[over_in])] = {r, over_in};
        }
        int a = resolve(0);
        for (int step = 1; step <= 2 * L; ++step) {
            label[a] = step;
            const auto [r, s] = head.at(a);
            const int out_slot = s == 0 ? 2 : (s ^ 2);
            a = resolve(rows[r].tmp[out_slot]);
        }
    }
    PDCode pd;
    for (const auto& row : rows) {
        std::array<int, 4> q{};
        for (int s = 0; s < 4; ++s) q[s] = label.at(resolve(row.tmp[s]));
        pd.crossings.push_back(q);
    }
    return pd;
}

}  // namespace cforge
