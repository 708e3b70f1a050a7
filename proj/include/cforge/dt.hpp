#pragma once

// Dowker–Thistlethwaite codes.  The code pairs odd labels 1,3,...,2n-1 with
// signed even labels; an even label is negative exactly when the even-label
// strand passes under at that crossing.

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

#include "cforge/diagram.hpp"
#include "cforge/pd.hpp"

namespace cforge {

struct DTCode {
    std::vector<int> evens;  // evens[k] pairs with odd label 2k+1
    bool operator==(const DTCode&) const = default;
};

inline void validate_dt(const DTCode& dt) {
    const int n = static_cast<int>(dt.evens.size());
    std::vector<char> seen(n + 1, 0);
    for (int v : dt.evens) {
        const int a = std::abs(v);
        if (a == 0 || a % 2 != 0) throw std::invalid_argument("dt code: entries must be nonzero even integers");
        if (a > 2 * n) throw std::invalid_argument("dt code: entry " + std::to_string(v) + " out of range");
        if (seen[a / 2]) throw std::invalid_argument("dt code: duplicate entry " + std::to_string(a));
        seen[a / 2] = 1;
    }
}

inline DTCode parse_dt(const std::string& text) {
    DTCode dt;
    std::size_t i = 0;
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i >= text.size() || text[i] != '[') throw std::invalid_argument("dt parse: expected '['");
    ++i;
    bool expect_value = true;
    while (true) {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
        if (i >= text.size()) throw std::invalid_argument("dt parse: unterminated list");
        if (text[i] == ']') {
            if (expect_value && !dt.evens.empty()) throw std::invalid_argument("dt parse: trailing comma");
            ++i;
            break;
        }
        bool neg = false;
        if (text[i] == '-' || text[i] == '+') neg = text[i++] == '-';
        if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
            throw std::invalid_argument("dt parse: expected integer");
        long v = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) v = v * 10 + (text[i++] - '0');
        dt.evens.push_back(static_cast<int>(neg ? -v : v));
        expect_value = false;
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
        if (i < text.size() && text[i] == ',') {
            ++i;
            expect_value = true;
        }
    }
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i != text.size()) throw std::invalid_argument("dt parse: trailing characters");
    validate_dt(dt);
    return dt;
}

inline std::string format_dt(const DTCode& dt) {
    std::string s = "[";
    for (std::size_t k = 0; k < dt.evens.size(); ++k) {
        if (k) s += ",";
        s += std::to_string(dt.evens[k]);
    }
    return s + "]";
}

namespace detail {

// Face count of the rotation system encoded by one handedness bit per
// crossing.  Arc p runs from position p to position p+1 (1-based, cyclic);
// the rotation at a crossing interleaves the two passes.
struct DTRealizer {
    int n;
    std::vector<int> odd_pos, even_pos;     // per crossing
    std::vector<int> pos_crossing;          // 1..2n -> crossing
    std::vector<char> bits;

    explicit DTRealizer(const DTCode& dt) : n(static_cast<int>(dt.evens.size())) {
        odd_pos.resize(n);
        even_pos.resize(n);
        pos_crossing.assign(2 * n + 1, -1);
        for (int k = 0; k < n; ++k) {
            odd_pos[k] = 2 * k + 1;
            even_pos[k] = std::abs(dt.evens[k]);
            pos_crossing[odd_pos[k]] = k;
            pos_crossing[even_pos[k]] = k;
        }
        bits.assign(n, 0);
    }

    // slots ccw at crossing k: bit 0 -> [odd_in, even_in, odd_out, even_out],
    // bit 1 -> [odd_in, even_out, odd_out, even_in]
    std::array<int, 4> rotation_arcs(int k) const {
        auto in_arc = [&](int pos) { return pos == 1 ? 2 * n : pos - 1; };
        const int oi = in_arc(odd_pos[k]), oo = odd_pos[k];
        const int ei = in_arc(even_pos[k]), eo = even_pos[k];
        if (!bits[k]) return {oi, ei, oo, eo};
        return {oi, eo, oo, ei};
    }

    bool planar() const {
        // half-edge = 4*crossing + slot; arc endpoints
        std::vector<std::array<std::pair<int, int>, 2>> ends(2 * n + 1);  // arc -> two (crossing, slot)
        std::vector<int> cnt(2 * n + 1, 0);
        for (int k = 0; k < n; ++k) {
            const auto rot = rotation_arcs(k);
            for (int s = 0; s < 4; ++s) {
                const int a = rot[s];
                if (cnt[a] >= 2) return false;
                ends[a][cnt[a]++] = {k, s};
            }
        }
        std::vector<char> used(4 * n, 0);
        int faces = 0;
        for (int start = 0; start < 4 * n; ++start) {
            if (used[start]) continue;
            ++faces;
            int k = start / 4, s = start % 4;
            while (!used[4 * k + s]) {
                used[4 * k + s] = 1;
                // cross the edge at slot s+1, arrive at its other endpoint
                const int exit = (s + 1) % 4;
                const int a = rotation_arcs(k)[exit];
                const auto& e = ends[a];
                const auto other =
                    (e[0].first == k && e[0].second == exit) ? e[1] : e[0];
                k = other.first;
                s = other.second;
            }
        }
        return n - 2 * n + faces == 2;
    }
};

}  // namespace detail

// Realizes a DT code as a diagram: searches handedness assignments for a
// sphere embedding, fixing the first bit to quotient out reflection.  The
// result is deterministic; like any DT realization it fixes chirality only
// up to mirror.  Throws if no planar assignment exists.
inline Diagram realize_dt(const DTCode& dt) {
    validate_dt(dt);
    const int n = static_cast<int>(dt.evens.size());
    if (n == 0) return pd_to_diagram(PDCode{});
    detail::DTRealizer r(dt);
    bool found = false;
    // lexicographic enumeration over bits 1..n-1
    for (std::uint64_t mask = 0; mask < (1ull << (n - 1)) && !found; ++mask) {
        for (int k = 1; k < n; ++k) r.bits[k] = (mask >> (k - 1)) & 1;
        if (r.planar()) found = true;
    }
    if (!found) throw std::invalid_argument("dt code: not realizable as a planar diagram");
    PDCode pd;
    pd.crossings.resize(n);
    for (int k = 0; k < n; ++k) {
        const auto rot = r.rotation_arcs(k);
        // which pass goes under: the even one iff the even label is negative
        const bool even_under = dt.evens[k] < 0;
        // odd_in sits at slot 0 of rot, even_in at slot 1 (bit 0) or 3 (bit 1)
        const int under_in_slot = even_under ? (r.bits[k] ? 3 : 1) : 0;
        for (int s = 0; s < 4; ++s) pd.crossings[k][s] = rot[(under_in_slot + s) % 4];
    }
    return pd_to_diagram(pd);
}

// Reads a DT code back off a diagram, traversing from arc 0 along the
// orientation.  Realization and extraction agree up to dihedral relabeling.
inline DTCode extract_dt(const Diagram& d) {
    const int n = static_cast<int>(d.crossings.size());
    DTCode dt;
    if (n == 0) return dt;
    std::vector<std::array<int, 2>> visits(n, {0, 0});   // positions, in visit order
    std::vector<std::array<int, 2>> via_under(n, {0, 0});
    std::vector<int> visit_count(n, 0);
    int a = 0;
    for (int pos = 1; pos <= 2 * n; ++pos) {
        const Diagram::End h = d.head[a];
        const int c = h.crossing;
        if (visit_count[c] >= 2) throw std::logic_error("extract_dt: crossing visited three times");
        visits[c][visit_count[c]] = pos;
        via_under[c][visit_count[c]] = h.slot == 0;
        ++visit_count[c];
        const int out_slot = h.slot == 0 ? 2 : (h.slot ^ 2);
        a = d.crossings[c].arc[out_slot];
    }
    dt.evens.assign(n, 0);
    for (int c = 0; c < n; ++c) {
        if (visit_count[c] != 2 || visits[c][0] % 2 == visits[c][1] % 2)
            throw std::logic_error("extract_dt: visits do not alternate parity");
        const int odd_first = visits[c][0] % 2 == 1 ? 0 : 1;
        const int odd = visits[c][odd_first], even = visits[c][1 - odd_first];
        const bool even_under = via_under[c][1 - odd_first];
        dt.evens[(odd - 1) / 2] = even_under ? -even : even;
    }
    return dt;
}

}  // namespace cforge
