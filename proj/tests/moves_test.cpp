#include <gtest/gtest.h>

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "cforge/corpus.hpp"
#include "cforge/invariants.hpp"
#include "cforge/jones.hpp"
#include "cforge/moves.hpp"

using namespace cforge;

namespace {

RandomBraidOptions small_opts(int min_len, int max_len, int min_str = 3, int max_str = 4) {
    RandomBraidOptions o;
    o.min_strands = min_str;
    o.max_strands = max_str;
    o.min_length = min_len;
    o.max_length = max_len;
    return o;
}

int count_kind(const MoveEnumeration& en, ConcordanceMove::Kind k) {
    int c = 0;
    for (const auto& it : en.items) c += it.move.kind == k;
    return c;
}

}  // namespace

TEST(ApplyMove, CrossingChangeFlipsOneLetter) {
    BraidWord b = make_braid({1, 1, 1});
    BraidWord out = apply_move(b, crossing_change(1));
    EXPECT_EQ(out.letters, (std::vector<int>{1, -1, 1}));
    EXPECT_EQ(out.strands, 2);
    EXPECT_THROW(apply_move(b, crossing_change(-1)), std::invalid_argument);
    EXPECT_THROW(apply_move(b, crossing_change(3)), std::invalid_argument);
}

TEST(ApplyMove, CrossingChangeIsInvolution) {
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
        BraidWord b = random_braid(seed, small_opts(5, 14, 3, 5));
        const int i = static_cast<int>(seed % b.letters.size());
        BraidWord twice = apply_move(apply_move(b, crossing_change(i)), crossing_change(i));
        EXPECT_EQ(twice.letters, b.letters);
    }
}

TEST(ApplyMove, SwitchPairFlipsBothLetters) {
    BraidWord b = make_braid({1, -2, 1});
    BraidWord out = apply_move(b, switch_pair(0, 1));
    EXPECT_EQ(out.letters, (std::vector<int>{-1, 2, 1}));
    // same-sign and degenerate pairs are invalid
    EXPECT_THROW(apply_move(b, switch_pair(0, 2)), std::invalid_argument);
    EXPECT_THROW(apply_move(b, switch_pair(1, 1)), std::invalid_argument);
    EXPECT_THROW(apply_move(b, switch_pair(2, 1)), std::invalid_argument);
    EXPECT_THROW(apply_move(b, switch_pair(0, 3)), std::invalid_argument);
}

TEST(ApplyMove, SwitchPairIsInvolution) {
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
        BraidWord b = random_braid(seed, small_opts(6, 14, 3, 5));
        int i = -1, j = -1;
        for (std::size_t x = 0; x < b.letters.size() && j < 0; ++x)
            for (std::size_t y = x + 1; y < b.letters.size() && j < 0; ++y)
                if (b.letters[x] * b.letters[y] < 0) {
                    i = static_cast<int>(x);
                    j = static_cast<int>(y);
                }
        if (j < 0) continue;  // single-sign word
        BraidWord twice = apply_move(apply_move(b, switch_pair(i, j)), switch_pair(i, j));
        EXPECT_EQ(twice.letters, b.letters);
    }
}

TEST(ApplyMove, ResolveDeletesPair) {
    BraidWord fig8 = make_braid({1, -2, 1, -2});
    BraidWord out = apply_move(fig8, resolve_pair(0, 1));
    EXPECT_EQ(out.letters, (std::vector<int>{1, -2}));
    EXPECT_TRUE(closure_is_knot(out));
    // deleting {0,2} leaves [-2,-2], a 3-component closure
    EXPECT_THROW(apply_move(fig8, resolve_pair(0, 2)), std::invalid_argument);
    EXPECT_THROW(apply_move(fig8, resolve_pair(2, 2)), std::invalid_argument);
    EXPECT_THROW(apply_move(fig8, resolve_pair(3, 1)), std::invalid_argument);
    EXPECT_THROW(apply_move(fig8, resolve_pair(0, 4)), std::invalid_argument);
}

TEST(ApplyMove, DeResolveInsertsPair) {
    BraidWord tref = make_braid({1, 1, 1});
    BraidWord out = apply_move(tref, deresolve_pair(1, 1, 3, -1));
    EXPECT_EQ(out.letters, (std::vector<int>{1, 1, 1, -1, 1}));
    EXPECT_TRUE(closure_is_knot(out));

    BraidWord two = make_braid({1, 2});
    // [1,-1,-2,2] closes to a 3-component unlink
    EXPECT_THROW(apply_move(two, deresolve_pair(1, -1, 2, -2)), std::invalid_argument);
    EXPECT_THROW(apply_move(tref, deresolve_pair(0, 0, 1, 1)), std::invalid_argument);
    EXPECT_THROW(apply_move(tref, deresolve_pair(0, 2, 1, 1)), std::invalid_argument);
    EXPECT_THROW(apply_move(tref, deresolve_pair(2, 1, 1, 1)), std::invalid_argument);
    EXPECT_THROW(apply_move(tref, deresolve_pair(0, 1, 5, 1)), std::invalid_argument);
}

TEST(ApplyMove, ResolveAndDeResolveAreInverse) {
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
        BraidWord b = random_braid(seed, small_opts(6, 14, 3, 5));
        const int L = static_cast<int>(b.letters.size());
        SplitMix64 rng(seed * 77 + 1);
        for (int trial = 0; trial < 8; ++trial) {
            int i = static_cast<int>(rng.uniform(0, L - 2));
            int j = static_cast<int>(rng.uniform(i + 1, L - 1));
            BraidWord shrunk = b;
            shrunk.letters.erase(shrunk.letters.begin() + j);
            shrunk.letters.erase(shrunk.letters.begin() + i);
            if (!closure_is_knot(shrunk)) continue;
            BraidWord down = apply_move(b, resolve_pair(i, j));
            EXPECT_EQ(down.letters, shrunk.letters);
            BraidWord up = apply_move(down, deresolve_pair(i, b.letters[(std::size_t)i], j,
                                                           b.letters[(std::size_t)j]));
            EXPECT_EQ(up.letters, b.letters);
        }
    }
}

TEST(Enumerate, CountsOnThreeLetterWord) {
    // [1,-2,1]: 3 crossing changes, 2 = p*n switches; all three resolution
    // candidates {0,1},{0,2},{1,2} leave 2-component closures and are dropped.
    BraidWord b = make_braid({1, -2, 1});
    MoveKinds no_deres;
    no_deres.deresolve = false;
    MoveEnumeration en = enumerate_moves(b, no_deres);
    EXPECT_EQ(count_kind(en, ConcordanceMove::Kind::CrossingChange), 3);
    EXPECT_EQ(count_kind(en, ConcordanceMove::Kind::SwitchPair), 2);
    EXPECT_EQ(count_kind(en, ConcordanceMove::Kind::Resolve), 0);
    EXPECT_EQ(en.filtered, 3u);

    MoveKinds only_resolve{false, false, true, false};
    MoveEnumeration res = enumerate_moves(b, only_resolve);
    EXPECT_TRUE(res.items.empty());
    EXPECT_EQ(res.filtered, 3u);
}

TEST(Enumerate, CountsMatchClosedForms) {
    for (std::uint64_t seed = 1; seed <= 25; ++seed) {
        BraidWord b = random_braid(seed, small_opts(6, 16, 3, 5));
        const int L = static_cast<int>(b.letters.size());
        int pos = 0, neg = 0;
        for (int e : b.letters) (e > 0 ? pos : neg)++;
        MoveKinds no_deres;
        no_deres.deresolve = false;
        MoveEnumeration en = enumerate_moves(b, no_deres);
        EXPECT_EQ(count_kind(en, ConcordanceMove::Kind::CrossingChange), L);
        EXPECT_EQ(count_kind(en, ConcordanceMove::Kind::SwitchPair), pos * neg);
        const int retained = count_kind(en, ConcordanceMove::Kind::Resolve);
        EXPECT_EQ(retained + static_cast<int>(en.filtered), L * (L - 1) / 2);
    }
}

TEST(Enumerate, ResolutionsMatchExhaustiveOracle) {
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        BraidWord b = seed % 2 ? random_braid(seed, small_opts(8, 8, 3, 3))
                               : random_braid(seed, small_opts(7, 7, 4, 4));
        const int L = static_cast<int>(b.letters.size());
        std::set<std::pair<int, int>> oracle;
        for (int i = 0; i < L; ++i)
            for (int j = i + 1; j < L; ++j) {
                BraidWord w = b;
                w.letters.erase(w.letters.begin() + j);
                w.letters.erase(w.letters.begin() + i);
                if (closure_is_knot(w)) oracle.emplace(i, j);
            }
        MoveKinds only_resolve{false, false, true, false};
        MoveEnumeration en = enumerate_moves(b, only_resolve);
        std::set<std::pair<int, int>> got;
        for (const auto& it : en.items) {
            got.emplace(it.move.i, it.move.j);
            BraidWord w = b;
            w.letters.erase(w.letters.begin() + it.move.j);
            w.letters.erase(w.letters.begin() + it.move.i);
            EXPECT_EQ(it.word.letters, w.letters);
        }
        EXPECT_EQ(got, oracle);
        EXPECT_EQ(en.filtered, static_cast<std::size_t>(L * (L - 1) / 2) - oracle.size());
    }
}

TEST(Enumerate, DeResolutionSamplesAreDeterministicAndValid) {
    BraidWord b = random_braid(3, small_opts(9, 9, 4, 4));
    MoveKinds only_deres{false, false, false, true};
    MoveEnumeration a = enumerate_moves(b, only_deres, 120, 99);
    MoveEnumeration c = enumerate_moves(b, only_deres, 120, 99);
    ASSERT_EQ(a.items.size(), c.items.size());
    for (std::size_t k = 0; k < a.items.size(); ++k) {
        EXPECT_EQ(a.items[k].move, c.items[k].move);
        EXPECT_EQ(a.items[k].word.letters, c.items[k].word.letters);
    }
    EXPECT_EQ(a.items.size() + a.filtered, 120u);

    const int L = static_cast<int>(b.letters.size());
    for (const auto& it : a.items) {
        const auto& m = it.move;
        EXPECT_EQ(m.kind, ConcordanceMove::Kind::DeResolve);
        EXPECT_TRUE(0 <= m.i && m.i < m.j && m.j <= L + 1);
        for (int e : {m.letter_i, m.letter_j}) {
            EXPECT_NE(e, 0);
            EXPECT_LE(std::abs(e), b.strands - 1);
        }
        EXPECT_TRUE(closure_is_knot(it.word));
        EXPECT_EQ(it.word.letters.size(), b.letters.size() + 2);
        EXPECT_EQ(it.word.letters[(std::size_t)m.i], m.letter_i);
        EXPECT_EQ(it.word.letters[(std::size_t)m.j], m.letter_j);
    }

    MoveEnumeration other = enumerate_moves(b, only_deres, 120, 100);
    bool differs = other.items.size() != a.items.size();
    for (std::size_t k = 0; !differs && k < a.items.size(); ++k)
        differs = !(other.items[k].move == a.items[k].move);
    EXPECT_TRUE(differs);
}

TEST(Enumerate, ResultsAreKnotsWithBoundedSignatureJump) {
    // each operation realizes a genus-one concordance, so the signature moves
    // by at most 2
    for (std::uint64_t seed = 1; seed <= 12; ++seed) {
        BraidWord b = random_braid(seed, small_opts(8, 14, 3, 5));
        const int sig = signature(b);
        MoveEnumeration en = enumerate_moves(b, MoveKinds{}, 25, seed);
        for (const auto& it : en.items) {
            ASSERT_TRUE(closure_is_knot(it.word));
            EXPECT_LE(std::abs(signature(it.word) - sig), 2);
        }
    }
}

TEST(PaperWitnesses, PulldownRowsReachSliceFingerprints) {
    struct Expected {
        int signature;
        std::int64_t determinant;
        const char* alexander;
    };
    const std::map<std::string, Expected> want = {
        {"6_1", {0, 9, "2*t^2 - 5*t + 2"}},
        {"8_8", {0, 25, "2*t^4 - 6*t^3 + 9*t^2 - 6*t + 2"}},
        {"8_20", {0, 9, "t^4 - 2*t^3 + 3*t^2 - 2*t + 1"}},
        {"10_75", {0, 81, "t^6 - 7*t^5 + 19*t^4 - 27*t^3 + 19*t^2 - 7*t + 1"}},
        {"10_87", {0, 81, "2*t^6 - 9*t^5 + 18*t^4 - 23*t^3 + 18*t^2 - 9*t + 2"}},
        {"10_137", {0, 25, "t^4 - 6*t^3 + 11*t^2 - 6*t + 1"}},
        {"K11n74", {0, 9, "t^4 - 2*t^3 + 3*t^2 - 2*t + 1"}},
        {"K12n256", {0, 25, "2*t^4 - 6*t^3 + 9*t^2 - 6*t + 2"}},
    };
    ASSERT_EQ(corpus::pulldown_entries().size(), 18u);
    for (const auto& e : corpus::pulldown_entries()) {
        BraidWord src = make_braid(e.word);
        ASSERT_TRUE(closure_is_knot(src)) << e.source;
        BraidWord out = apply_move(src, e.move);
        InvariantFingerprint f = fingerprint(out);
        const Expected& x = want.at(e.target);
        EXPECT_EQ(f.signature, x.signature) << e.source;
        EXPECT_EQ(f.determinant, x.determinant) << e.source;
        EXPECT_EQ(f.alexander.str(), x.alexander) << e.source;
        // every source is obstructed from being slice: determinant not square
        std::int64_t r = 0;
        const std::int64_t d = fingerprint(src).determinant;
        while (r * r < d) ++r;
        EXPECT_NE(r * r, d) << e.source;
    }
}

TEST(PaperWitnesses, JonesSettlesFingerprintCollisions) {
    // (8_20, K11n74) and (8_8, K12n256) share Alexander, signature, and
    // determinant; the Jones polynomial separates both pairs even after
    // mirroring.
    auto result = [](const char* src) {
        for (const auto& e : corpus::pulldown_entries())
            if (std::string(e.source) == src) return apply_move(make_braid(e.word), e.move);
        throw std::logic_error("row not found");
    };
    LaurentPoly j820 = jones(braid_to_pd(result("K12a230")));
    LaurentPoly jk11 = jones(braid_to_pd(result("K12n225")));
    EXPECT_FALSE(j820 == jk11);
    EXPECT_FALSE(j820 == jk11.mirrored().normalized());

    LaurentPoly j88 = jones(braid_to_pd(result("K12n558")));
    LaurentPoly j256 = jones(braid_to_pd(result("K12n665")));
    EXPECT_FALSE(j88 == j256);
    EXPECT_FALSE(j88 == j256.mirrored().normalized());
}

TEST(PaperWitnesses, K12n512DeResolution) {
    BraidWord src = corpus::k12n512_braid();
    ASSERT_EQ(src.letters.size(), 64u);
    ASSERT_EQ(src.strands, 11);
    ASSERT_TRUE(closure_is_knot(src));
    EXPECT_EQ(signature(src), 2);
    EXPECT_EQ(determinant(src), 67);

    BraidWord up = corpus::apply_deresolution_k12n512();
    EXPECT_EQ(up.letters, corpus::k12n512_partner_braid().letters);
    ASSERT_EQ(up.letters.size(), 66u);
    EXPECT_EQ(signature(up), 4);

    // the de-resolution and the resolution of the inserted pair are inverse
    BraidWord back = apply_move(up, resolve_pair(64, 65));
    EXPECT_EQ(back.letters, src.letters);

    // the partner is the 18-crossing appendix knot, up to mirror
    InvariantFingerprint partner = fingerprint(up);
    InvariantFingerprint appendix = fingerprint(realize_dt(corpus::dt_18ah2335674()));
    EXPECT_EQ(appendix.signature, -4);
    EXPECT_TRUE(partner == mirrored(appendix));
}

TEST(PdMoves, CrossingChangeUnknotsTrefoil) {
    PDCode tref = parse_pd("X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]");
    for (int i = 0; i < 3; ++i) {
        PDCode out = pd_apply_move(tref, crossing_change(i));
        validate_pd(out);
        InvariantFingerprint f = fingerprint(out);
        EXPECT_EQ(f.determinant, 1);
        EXPECT_EQ(f.signature, 0);
    }
    EXPECT_THROW(pd_apply_move(tref, crossing_change(3)), std::invalid_argument);
}

TEST(PdMoves, CrossingChangeIsInvolution) {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        BraidWord b = random_braid(seed, small_opts(6, 12, 3, 4));
        PDCode pd = diagram_to_pd(pd_to_diagram(braid_to_pd(b)));
        const int i = static_cast<int>(seed % pd.crossings.size());
        PDCode twice = pd_apply_move(pd_apply_move(pd, crossing_change(i)), crossing_change(i));
        EXPECT_EQ(twice.crossings, pd.crossings);
    }
}

TEST(PdMoves, SwitchRequiresOppositeSigns) {
    PDCode tref = parse_pd("X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]");  // all positive
    EXPECT_THROW(pd_apply_move(tref, switch_pair(0, 1)), std::invalid_argument);

    BraidWord fig8 = make_braid({1, -2, 1, -2});
    PDCode pd = braid_to_pd(fig8);
    PDCode out = pd_apply_move(pd, switch_pair(0, 1));  // letters 1 and -2
    validate_pd(out);
    InvariantFingerprint f = fingerprint(out);
    EXPECT_LE(std::abs(f.signature - 0), 2);
}

TEST(PdMoves, ResolveMatchesBraidDeletion) {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        BraidWord b = random_braid(seed, small_opts(6, 10, 3, 4));
        PDCode pd = braid_to_pd(b);  // crossing k <-> letter k
        const int L = static_cast<int>(b.letters.size());
        for (int i = 0; i < L; ++i)
            for (int j = i + 1; j < L; ++j) {
                BraidWord w = b;
                w.letters.erase(w.letters.begin() + j);
                w.letters.erase(w.letters.begin() + i);
                if (closure_is_knot(w)) {
                    PDCode out = pd_apply_move(pd, resolve_pair(i, j));
                    validate_pd(out);
                    InvariantFingerprint via_pd =
                        out.crossings.empty() ? fingerprint(make_braid({}, 1)) : fingerprint(out);
                    EXPECT_TRUE(via_pd == fingerprint(w));
                } else {
                    EXPECT_THROW(pd_apply_move(pd, resolve_pair(i, j)), std::invalid_argument);
                }
            }
    }
}

TEST(PdMoves, TwoCrossingUnknotDiagramsAlwaysSplit) {
    // the oriented smoothing of both crossings of a 2-crossing knot diagram
    // yields three circles (one is impossible in the plane), so every such
    // resolve is rejected
    int diagrams = 0, rejected = 0;
    std::vector<int> perm = {1, 1, 2, 2, 3, 3, 4, 4};
    std::sort(perm.begin(), perm.end());
    do {
        PDCode pd;
        pd.crossings = {{perm[0], perm[1], perm[2], perm[3]}, {perm[4], perm[5], perm[6], perm[7]}};
        try {
            validate_pd(pd);
            InvariantFingerprint f = fingerprint(pd);
            ASSERT_EQ(f.determinant, 1);  // any 2-crossing knot is trivial
            ++diagrams;
            try {
                pd_apply_move(pd, resolve_pair(0, 1));
            } catch (const std::invalid_argument&) {
                ++rejected;
            }
        } catch (const std::invalid_argument&) {
        } catch (const std::logic_error&) {
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    EXPECT_GT(diagrams, 0);
    EXPECT_EQ(rejected, diagrams);
}

TEST(PdMoves, DeResolveIsRejected) {
    PDCode tref = parse_pd("X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]");
    EXPECT_THROW(pd_apply_move(tref, deresolve_pair(0, 1, 1, 1)), std::invalid_argument);
}

TEST(PdMoves, WorksOnDtRealizations) {
    Diagram d = realize_dt_normalized(parse_dt("[4,8,12,10,2,6]"));  // 6_1
    PDCode pd = diagram_to_pd(d);
    const int sig = gl_signature(d);
    for (std::size_t i = 0; i < pd.crossings.size(); ++i) {
        PDCode out = pd_apply_move(pd, crossing_change(static_cast<int>(i)));
        validate_pd(out);
        EXPECT_LE(std::abs(fingerprint(out).signature - sig), 2);
    }
}
