#include <gtest/gtest.h>

#include <cstdlib>
#include <stdexcept>

#include "cforge/braid.hpp"
#include "cforge/diagram.hpp"
#include "cforge/dt.hpp"
#include "cforge/invariants.hpp"
#include "cforge/jones.hpp"
#include "cforge/laurent.hpp"
#include "cforge/pd.hpp"
#include "cforge/rng.hpp"

using namespace cforge;

namespace {
PDCode trefoil_pd() { return parse_pd("X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]"); }
}  // namespace

TEST(Jones, UnknotIsOne) {
    EXPECT_EQ(jones(PDCode{}).str(), "1");
    // one-kink diagrams: the writhe correction must cancel exactly
    EXPECT_EQ(jones(braid_to_pd(parse_braid("[1]"))).str(), "1");
    EXPECT_EQ(jones(braid_to_pd(parse_braid("[-1]"))).str(), "1");
}

TEST(Jones, RightTrefoilRawValue) {
    // chirality anchor: -t^-4 + t^-3 + t^-1 before normalization
    LaurentPoly raw = detail::jones_raw(pd_to_diagram(trefoil_pd()));
    LaurentPoly want =
        LaurentPoly::monomial(-1, -4) + LaurentPoly::monomial(1, -3) + LaurentPoly::monomial(1, -1);
    EXPECT_EQ(raw, want);
}

TEST(Jones, LeftTrefoilIsMirrorImage) {
    LaurentPoly raw = detail::jones_raw(mirror(pd_to_diagram(trefoil_pd())));
    LaurentPoly want = LaurentPoly::monomial(-1, 4) + LaurentPoly::monomial(1, 3) + LaurentPoly::monomial(1, 1);
    EXPECT_EQ(raw, want);
}

TEST(Jones, FigureEightClassicalValue) {
    // V(4_1) = t^-2 - t^-1 + 1 - t + t^2; symmetric under t <-> 1/t.
    PDCode pd = braid_to_pd(parse_braid("[1,-2,1,-2]"));
    LaurentPoly v = jones(pd);
    EXPECT_EQ(v.str(), "t^4 - t^3 + t^2 - t + 1");
    EXPECT_EQ(v.mirrored().normalized(), v);
}

TEST(Jones, MirrorProperty) {
    SplitMix64 rng(0x10ae5f00du);
    for (int trial = 0; trial < 25; ++trial) {
        RandomBraidOptions opt;
        opt.min_strands = 2;
        opt.max_strands = 4;
        opt.min_length = 3;
        opt.max_length = 10;
        BraidWord w = random_braid(rng.next(), opt);
        Diagram d = pd_to_diagram(braid_to_pd(w));
        LaurentPoly a = detail::jones_raw(d);
        LaurentPoly b = detail::jones_raw(mirror(d));
        EXPECT_EQ(a.mirrored(), b) << format_braid(w);
    }
}

TEST(Jones, InvariantUnderDiversify) {
    BraidWord w = parse_braid("[1,1,-2,1,-2,-2]");
    LaurentPoly base = jones(braid_to_pd(w));
    SplitMix64 rng(0xd17e25u);
    for (int trial = 0; trial < 6; ++trial) {
        BraidWord v = diversify(w, rng.next(), 5);
        if (2 * v.letters.size() > 30) continue;  // stay inside the budget
        EXPECT_EQ(jones(braid_to_pd(v)), base) << format_braid(v);
    }
}

TEST(Jones, EvaluationAtMinusOneMatchesDeterminant) {
    SplitMix64 rng(0xab5u);
    for (int trial = 0; trial < 20; ++trial) {
        RandomBraidOptions opt;
        opt.min_strands = 2;
        opt.max_strands = 4;
        opt.min_length = 4;
        opt.max_length = 11;
        BraidWord w = random_braid(rng.next(), opt);
        LaurentPoly v = detail::jones_raw(pd_to_diagram(braid_to_pd(w)));
        EXPECT_EQ(std::llabs(v.eval_int(-1)), determinant(w)) << format_braid(w);
    }
}

TEST(Jones, CrossingBudgetEnforced) {
    RandomBraidOptions opt;
    opt.min_strands = 3;
    opt.max_strands = 3;
    opt.min_length = 32;
    opt.max_length = 32;
    BraidWord w = random_braid(7u, opt);
    EXPECT_THROW(jones(braid_to_pd(w)), std::invalid_argument);
}

TEST(Jones, TwentyCrossingDiagramCompletes) {
    Diagram d = realize_dt(
        parse_dt("[28,32,20,38,36,34,4,30,40,-26,12,8,6,16,2,14,22,10,24,-18]"));
    LaurentPoly v = detail::jones_raw(d).normalized();
    EXPECT_EQ(std::llabs(v.eval_int(-1)), fingerprint(d).determinant);
}
