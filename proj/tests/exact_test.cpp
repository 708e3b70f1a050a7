#include <gtest/gtest.h>

#include "cforge/exact.hpp"
#include "cforge/laurent.hpp"

namespace {

using cforge::IMatrix;
using cforge::LaurentPoly;

TEST(Laurent, ArithmeticAndNormalization) {
    auto t = LaurentPoly::monomial(1, 1);
    auto p = t * t - t * LaurentPoly(3) + LaurentPoly(1);  // t^2 - 3t + 1
    EXPECT_EQ(p.str(), "t^2 - 3*t + 1");
    EXPECT_EQ(p.eval_int(1), -1);
    EXPECT_EQ(p.eval_int(-1), 5);
    EXPECT_EQ(p.mirrored().normalized(), p.normalized());

    auto shifted = LaurentPoly::monomial(-1, -3) * p;
    EXPECT_EQ(shifted.min_exp(), -3);
    EXPECT_EQ(shifted.normalized(), p);

    EXPECT_TRUE((p - p).is_zero());
    EXPECT_EQ(LaurentPoly().str(), "0");
}

TEST(Laurent, ParseRoundTrip) {
    for (const char* text : {"t^2 - 3*t + 1", "2*t^4 - 5*t^3 + 2*t^2 - 5*t + 2", "1", "0", "t", "-t^2 + t"}) {
        auto p = LaurentPoly::parse(text);
        EXPECT_EQ(LaurentPoly::parse(p.str()), p) << text;
    }
    EXPECT_EQ(LaurentPoly::parse("t^2-3*t+1").str(), "t^2 - 3*t + 1");
    EXPECT_THROW(LaurentPoly::parse("t^"), std::invalid_argument);
    EXPECT_THROW(LaurentPoly::parse(""), std::invalid_argument);
}

TEST(Exact, Determinant) {
    EXPECT_EQ(cforge::det_exact(IMatrix{}), 1);
    EXPECT_EQ(cforge::det_exact(IMatrix{{7}}), 7);
    EXPECT_EQ(cforge::det_exact(IMatrix{{1, 2}, {3, 4}}), -2);
    EXPECT_EQ(cforge::det_exact(IMatrix{{0, 1}, {1, 0}}), -1);
    // Singular with a zero pivot on the way.
    EXPECT_EQ(cforge::det_exact(IMatrix{{0, 0}, {0, 1}}), 0);
    // Vandermonde on 1..4: prod of differences = 12.
    IMatrix v(4, std::vector<std::int64_t>(4));
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            std::int64_t pw = 1;
            for (int k = 0; k < j; ++k) pw *= (i + 1);
            v[i][j] = pw;
        }
    EXPECT_EQ(cforge::det_exact(v), 12);
}

TEST(Exact, Inertia) {
    auto inert = cforge::inertia_exact(IMatrix{{2, 0}, {0, -3}});
    EXPECT_EQ(inert.positive, 1);
    EXPECT_EQ(inert.negative, 1);
    EXPECT_EQ(inert.signature(), 0);

    // Hyperbolic plane: zero diagonal handled by the row/column addition trick.
    auto hyp = cforge::inertia_exact(IMatrix{{0, 1}, {1, 0}});
    EXPECT_EQ(hyp.positive, 1);
    EXPECT_EQ(hyp.negative, 1);
    EXPECT_EQ(hyp.zero, 0);

    auto degenerate = cforge::inertia_exact(IMatrix{{1, 1}, {1, 1}});
    EXPECT_EQ(degenerate.rank(), 1);
    EXPECT_EQ(degenerate.zero, 1);
    EXPECT_EQ(degenerate.signature(), 1);

    EXPECT_THROW(cforge::inertia_exact(IMatrix{{0, 1}, {2, 0}}), std::invalid_argument);
}

TEST(Exact, PositiveDefinite) {
    EXPECT_TRUE(cforge::positive_definite(IMatrix{{2, -1}, {-1, 2}}));
    EXPECT_FALSE(cforge::positive_definite(IMatrix{{1, 2}, {2, 1}}));
    EXPECT_FALSE(cforge::positive_definite(IMatrix{{0, 0}, {0, 1}}));
    EXPECT_FALSE(cforge::positive_definite(IMatrix{{-2, 1}, {1, -2}}));
    // E8 Cartan-like chain A_4 is positive definite.
    IMatrix chain(4, std::vector<std::int64_t>(4, 0));
    for (int i = 0; i < 4; ++i) {
        chain[i][i] = 2;
        if (i + 1 < 4) chain[i][i + 1] = chain[i + 1][i] = -1;
    }
    EXPECT_TRUE(cforge::positive_definite(chain));
}

TEST(Exact, Interpolation) {
    // p(x) = x^3 - 2x + 5 through 4 nodes.
    std::vector<std::int64_t> xs{-1, 0, 1, 2};
    std::vector<mpq_class> ys;
    for (auto x : xs) ys.emplace_back(static_cast<long>(x * x * x - 2 * x + 5));
    auto poly = cforge::to_integer_poly(cforge::interpolate_rational(xs, ys));
    EXPECT_EQ(poly.str(), "t^3 - 2*t + 5");

    // Non-integer result must be rejected.
    std::vector<std::int64_t> xs2{0, 2};
    std::vector<mpq_class> ys2{mpq_class(0), mpq_class(1)};
    EXPECT_THROW(cforge::to_integer_poly(cforge::interpolate_rational(xs2, ys2)), std::logic_error);
}

}  // namespace
