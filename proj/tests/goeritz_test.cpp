#include <gtest/gtest.h>

#include <algorithm>
#include <cstdlib>
#include <set>
#include <vector>

#include "cforge/braid.hpp"
#include "cforge/diagram.hpp"
#include "cforge/dt.hpp"
#include "cforge/exact.hpp"
#include "cforge/goeritz.hpp"
#include "cforge/invariants.hpp"
#include "cforge/pd.hpp"
#include "cforge/rng.hpp"

using namespace cforge;

namespace {
Diagram trefoil() { return pd_to_diagram(parse_pd("X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]")); }
}  // namespace

TEST(Checkerboard, TrefoilColoringSizes) {
    Diagram d = trefoil();
    auto cols = checkerboard(d);
    std::set<std::size_t> sizes{cols[0].size(), cols[1].size()};
    EXPECT_EQ(sizes, (std::set<std::size_t>{2, 3}));
}

TEST(Checkerboard, ColoringsPartitionFaces) {
    SplitMix64 rng(0xc0105eedu);
    for (int trial = 0; trial < 40; ++trial) {
        RandomBraidOptions opt;
        opt.min_strands = 2;
        opt.max_strands = 5;
        opt.min_length = 3;
        opt.max_length = 12;
        Diagram d = pd_to_diagram(braid_to_pd(random_braid(rng.next(), opt)));
        auto cols = checkerboard(d);
        std::set<int> all;
        for (int c = 0; c < 2; ++c)
            for (int f : cols[(std::size_t)c]) EXPECT_TRUE(all.insert(f).second);
        EXPECT_EQ(all.size(), d.face_count());
    }
}

TEST(Goeritz, UnknotDegenerate) {
    Diagram d = pd_to_diagram(PDCode{});
    GoeritzForm f = goeritz_matrix(d, 0);
    EXPECT_TRUE(f.matrix.empty());
    EXPECT_EQ(f.correction, 0);
    EXPECT_EQ(gl_signature(d), 0);
}

TEST(Goeritz, TrefoilBothChiralities) {
    Diagram right = trefoil();
    EXPECT_EQ(gl_signature(right), -2);
    EXPECT_EQ(gl_signature(mirror(right)), 2);
    // both colorings must produce the same corrected signature
    for (int c = 0; c < 2; ++c) {
        GoeritzForm f = goeritz_matrix(right, c);
        EXPECT_EQ(signature_exact(f.matrix) - f.correction, -2);
    }
}

TEST(Goeritz, DeterminantMagnitudeMatchesKnotDeterminant) {
    SplitMix64 rng(0xdecafBADu);
    int checked = 0;
    for (int trial = 0; trial < 80; ++trial) {
        RandomBraidOptions opt;
        opt.min_strands = 2;
        opt.max_strands = 5;
        opt.min_length = 3;
        opt.max_length = 11;
        BraidWord w = random_braid(rng.next(), opt);
        Diagram d = reduce_r1(pd_to_diagram(braid_to_pd(w)));
        if (d.crossings.empty()) continue;
        ++checked;
        std::int64_t det = determinant(w);
        for (int c = 0; c < 2; ++c) {
            GoeritzForm f = goeritz_matrix(d, c);
            ZMatrix g((std::size_t)f.matrix.size());
            for (std::size_t i = 0; i < f.matrix.size(); ++i)
                for (std::size_t j = 0; j < f.matrix.size(); ++j)
                    g[i].push_back(mpz_class((long)f.matrix[i][j]));
            mpz_class gd = det_exact(g);
            EXPECT_EQ(abs(gd), mpz_class((long)det)) << format_braid(w);
        }
    }
    EXPECT_GT(checked, 30);
}

TEST(Goeritz, SignatureAgreesWithSeifertRoute) {
    SplitMix64 rng(0x60e1e712345u);
    int checked = 0;
    for (int trial = 0; trial < 150; ++trial) {
        RandomBraidOptions opt;
        opt.min_strands = 2;
        opt.max_strands = 6;
        opt.min_length = 3;
        opt.max_length = 14;
        BraidWord w = random_braid(rng.next(), opt);
        Diagram d = pd_to_diagram(braid_to_pd(w));
        ASSERT_EQ(gl_signature(d), signature(w)) << format_braid(w);
        ++checked;
    }
    EXPECT_EQ(checked, 150);
}

TEST(Goeritz, MirrorNegatesSignature) {
    SplitMix64 rng(0x9155a9e5u);
    for (int trial = 0; trial < 40; ++trial) {
        RandomBraidOptions opt;
        opt.min_strands = 2;
        opt.max_strands = 5;
        opt.min_length = 3;
        opt.max_length = 10;
        Diagram d = pd_to_diagram(braid_to_pd(random_braid(rng.next(), opt)));
        EXPECT_EQ(gl_signature(mirror(d)), -gl_signature(d));
    }
}

TEST(Goeritz, SeventeenCrossingAlternatingCode) {
    // 17-crossing alternating knot: the GL route must certify sigma = -4.
    Diagram d = realize_dt_normalized(
        parse_dt("[18,20,30,28,24,4,8,26,10,2,32,34,16,14,6,12,22]"));
    EXPECT_EQ(gl_signature(d), -4);
}

TEST(PositiveDefinite, BasicExamples) {
    auto mk = [](std::vector<std::vector<long>> rows) {
        ZMatrix m(rows.size());
        for (std::size_t i = 0; i < rows.size(); ++i)
            for (long v : rows[i]) m[i].push_back(mpz_class(v));
        return m;
    };
    EXPECT_TRUE(positive_definite(mk({{1, 0}, {0, 1}})));
    EXPECT_TRUE(positive_definite(mk({{2, -1}, {-1, 2}})));
    EXPECT_FALSE(positive_definite(mk({{1, 2}, {2, 1}})));
    EXPECT_FALSE(positive_definite(mk({{0, 0}, {0, 1}})));
    EXPECT_THROW(positive_definite(mk({{1, 2}, {3, 4}})), std::invalid_argument);
}

TEST(Goeritz, PositiveRepresentativeForTrefoil) {
    // Searches the diagram and its mirror for a positive-definite form.
    Diagram d = trefoil();
    GoeritzForm f = positive_goeritz(d);
    ZMatrix g(f.matrix.size());
    for (std::size_t i = 0; i < f.matrix.size(); ++i)
        for (std::size_t j = 0; j < f.matrix.size(); ++j)
            g[i].push_back(mpz_class((long)f.matrix[i][j]));
    EXPECT_TRUE(positive_definite(g));
}
