#pragma once

#include <string>
#include <vector>

#include "cforge/braid.hpp"
#include "cforge/dt.hpp"
#include "cforge/moves.hpp"

// Bundled source data: braid representatives of the knots whose 4-genus the
// pipeline pins down, the concordance witnesses connecting them to knots of
// known 4-genus, and DT codes of the large-diagram partners.

namespace cforge::corpus {

struct PulldownEntry {
    const char* source;        // knot whose g4 is being determined
    const char* target;        // slice knot reached by the move
    std::vector<int> word;     // braid representative of the source
    ConcordanceMove move;      // witness: apply_move(word) closes to `target`
};

inline const std::vector<PulldownEntry>& pulldown_entries() {
    static const std::vector<PulldownEntry> entries = {
        {"K11n80", "6_1",
         {5, 3, -4, 2, -4, 6, -1, 2, -3, -1, -1, 4, 2, 1, 6, 5, 6, -5, 2, 3, -6, 5, 4, -2},
         resolve_pair(1, 12)},
        {"K12a187", "6_1",
         {2, -3, 4, 6, 5, 5, -2, -6, -1, 4, -3, -6, 4, 2, 2, 5, 3, 4, -3, 4, -3, -5},
         resolve_pair(9, 17)},
        {"K12a230", "8_20",
         {-4, 3, -2, 1, 2, -3, 4, 4, -5, 6, -5, 3, 6, 4, 2, 3, 2, -1, 4, -5, -3, -3},
         resolve_pair(1, 9)},
        {"K12a317", "6_1",
         {4, 5, 5, -3, -2, -3, 4, 4, 3, 5, -4, 3, -2, 3, -5, 1, 2, 2, -3},
         resolve_pair(2, 13)},
        {"K12a450", "6_1",
         {1, -4, -3, 1, 2, -6, 4, -3, 4, -6, 2, 3, 5, -4, 5, -1, -3, 2, 6, 4},
         resolve_pair(8, 17)},
        {"K12a570", "6_1",
         {-4, 6, 6, -4, 3, 5, 4, 2, -1, -1, -2, 5, -6, -4, 5, 3, -2, 3, 5, 2, 1, 2, 4, -5},
         resolve_pair(1, 7)},
        {"K12a624", "6_1",
         {3, -2, 6, -5, -6, -4, -3, 5, 5, 6, -5, -5, -6, 1, 5, 2, 4, 6, 3, -5, 4, 5, 2, 2},
         resolve_pair(9, 15)},
        {"K12a636", "6_1",
         {-3, -6, 2, -1, -2, -5, 4, 5, -3, 3, 6, 6, 5, 4, -2, 3, -2, 6, 1, -5, 3, 4},
         resolve_pair(9, 21)},
        {"K12a905", "10_87",
         {1, 2, 2, -3, 2, -3, -3, -4, -2, 3, 4, 4, -3, -2, 1, 3, 2, -2, 3, -2},
         switch_pair(2, 17)},
        {"K12a1189", "10_137",
         {2, 2, -4, 3, 3, -2, 4, 1, 2, 1, -3, -4, 2, -1, 2, -3, -2, 1, -4, 3},
         resolve_pair(9, 17)},
        {"K12a1208", "10_137",
         {-2, 4, 1, -3, 4, -3, 4, -3, 2, -4, 3, 3, -2, 1, 1, 4, -2, 3, 3, -1, 4, -3},
         resolve_pair(6, 20)},
        {"K12n52", "10_75",
         {3, -1, 6, 4, -1, -5, 4, 6, -3, 2, -5, 2, 1, 3, 5, -5, -5, 4, 5, 3, -4, 2},
         resolve_pair(6, 14)},
        {"K12n63", "6_1",
         {-5, -5, 3, -2, 3, 3, 2, 6, 2, -1, -3, 2, 4, -1, 5, 6, 6, 3, 2, -3, -1, -3, 4, 1},
         resolve_pair(12, 23)},
        {"K12n225", "K11n74",
         {-2, 5, 1, -3, -6, -6, 4, 6, -6, 1, -2, 4, 4, -5, -3, 2, -6, 2, -4, 1, -2, 5, 4, 4},
         resolve_pair(7, 21)},
        {"K12n555", "6_1",
         {5, -3, -6, 5, 7, 4, 6, 1, 5, -3, 4, -2, 3, 5, 4, -6, -3, -6, -3, 4, 7},
         resolve_pair(3, 19)},
        {"K12n558", "8_8",
         {3, -4, -1, -1, 3, -1, 4, -2, 3, 1, -4, 3, 1, 4, -3, 2, 3, 2},
         resolve_pair(9, 17)},
        {"K12n665", "K12n256",
         {1, 6, 4, 5, -5, -1, 4, -3, 5, 2, -3, -1, 2, 4, -5, 3, 3, -2, -5, 3, 2, 1, -2, 3, -2, 3},
         resolve_pair(2, 3)},
        {"K12n886", "6_1",
         {4, 2, -3, 1, -5, 4, -3, -2, 3, 4, 3, 5, 2, 2, 4, 4, -3, -3, -1, -1, -2, -5, -3, 2, 3},
         resolve_pair(15, 22)},
    };
    return entries;
}

// 64-letter 11-strand braid closing to K12n512.
inline BraidWord k12n512_braid() {
    return make_braid({4, 6,  3,  -5, 2,  -4, 1,  3,  7,  4,  -6, 7,  -6, -8, -6, 9,
                       5, -10, -6, 9,  -5, 7,  -4, -3, 8,  2,  -7, -6, -5, 4,  3,  5,
                       7, 4,  -6, 5,  -7, -8, -7, -9, -6, 10, -7, -8, 7,  6,  -5, -4,
                       -3, -2, -1, -2, -3, -4, 5,  6,  -7, 8,  -9, 8,  -7, -6, -5, -7},
                      11);
}

// 66-letter braid closing to 18ah_2335674: the previous word with (-8, -1)
// appended, realizing the de-resolution that pulls g4(K12n512) up.
inline BraidWord k12n512_partner_braid() {
    BraidWord w = k12n512_braid();
    w.letters.push_back(-8);
    w.letters.push_back(-1);
    return w;
}

inline ConcordanceMove k12n512_deresolution() { return deresolve_pair(64, -8, 65, -1); }

// Regression fixture for the de-resolution witness.
inline BraidWord apply_deresolution_k12n512() {
    return apply_move(k12n512_braid(), k12n512_deresolution());
}

// Large-diagram DT codes exhibiting the two PD-level de-resolutions: each
// pair (knot diagram, partner diagram) differs by a clasp of two crossings.
inline DTCode dt_k12a153_17() {
    return parse_dt("[26,-30,-24,-18,-2,-28,-32,-34,-8,-6,-22,-20,-16,-10,-12,-4,-14]");
}
inline DTCode dt_17ah0168368_19() {
    return parse_dt("[28,-32,-36,-18,-2,-30,-24,-26,-8,-6,-34,-4,-14,-38,-10,-12,-22,-20,-16]");
}
inline DTCode dt_k12n239_18() {
    return parse_dt("[20,24,12,10,16,-18,30,8,6,34,2,32,14,28,26,4,22,36]");
}
inline DTCode dt_16a328556_20() {
    return parse_dt("[28,32,20,38,36,34,4,30,40,-26,12,8,6,16,2,14,22,10,24,-18]");
}

// Minimal-crossing DT codes of the three certified g4 >= 3 targets.
inline DTCode dt_17ah0168368() {
    return parse_dt("[18,20,30,28,24,4,8,26,10,2,32,34,16,14,6,12,22]");
}
inline DTCode dt_16a328556() {
    return parse_dt("[6,14,26,16,20,22,4,24,32,30,28,12,2,10,8,18]");
}
inline DTCode dt_18ah2335674() {
    return parse_dt("[32,14,30,28,24,22,36,4,6,26,12,10,34,18,16,2,20,8]");
}

}  // namespace cforge::corpus
