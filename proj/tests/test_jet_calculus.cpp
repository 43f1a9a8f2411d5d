#include "kummer/jet3.hpp"
#include "kummer/jet_expr.hpp"
#include "kummer/vector_field.hpp"
#include "support/random.hpp"

#include <gtest/gtest.h>

using namespace kummer;
using kummer::testing::RandomRational;

namespace {

JetExpr lam(unsigned j = 0) { return JetExpr::frame(j); }
JetExpr a(unsigned i = 0) { return JetExpr::letter("a", i); }
JetExpr half(long n) { return JetExpr(make_rat(n, 2)); }

JetExpr random_poly(RandomRational& rng) {
    const JetExpr vars[] = {lam(0), lam(1), lam(2), a(0), a(1)};
    JetExpr acc;
    const int terms = static_cast<int>(rng.integer(1, 4));
    for (int t = 0; t < terms; ++t) {
        JetExpr m(rng.nonzero_rational(4, 3));
        for (const auto& v : vars) m *= v.pow(static_cast<int>(rng.integer(0, 2)));
        acc += m;
    }
    return acc;
}

JetExpr random_expr(RandomRational& rng) {
    JetExpr den = random_poly(rng);
    if (den.is_zero()) den = JetExpr(1);
    return random_poly(rng) / den;
}

FrameVectorField random_field(RandomRational& rng) {
    return FrameVectorField({random_poly(rng), random_poly(rng), random_poly(rng)});
}

} // namespace

TEST(MPoly, GcdAndDivision) {
    const MPoly x = MPoly::symbol(JetSymbol::frame(0));
    const MPoly y = MPoly::symbol(JetSymbol::letter("a"));
    const MPoly g = gcd(x * x - y * y, x * x - MPoly(Rat(2)) * x * y + y * y);
    EXPECT_TRUE(exact_div(x - y, g).has_value());
    EXPECT_TRUE(exact_div(g, x - y).has_value());
    EXPECT_FALSE(exact_div(x, y).has_value());
}

TEST(JetExpr, CanonicalEquality) {
    const JetExpr e = (lam(1) * lam(1) - JetExpr(1)) / (lam(1) - JetExpr(1));
    EXPECT_EQ(e, lam(1) + JetExpr(1));
    EXPECT_EQ((JetExpr(2) * lam(2)) / (JetExpr(4) * lam(1)), lam(2) / (JetExpr(2) * lam(1)));
}

TEST(TotalDerivative, Examples) {
    EXPECT_EQ(lam().total_derivative(), lam(1));
    EXPECT_EQ(a().total_derivative(), a(1) * lam(1));
    EXPECT_EQ((lam(2) / lam(1)).total_derivative(), lam(3) / lam(1) - lam(2) * lam(2) / (lam(1) * lam(1)));
    EXPECT_TRUE(JetExpr::constant("R0").total_derivative().is_zero());
}

TEST(Prolong, Coefficients) {
    const FrameVectorField x3 = prolong("a", 3);
    EXPECT_EQ(x3[0], a());
    EXPECT_EQ(x3[1], a(1) * lam(1));
    EXPECT_EQ(x3[2], a(2) * lam(1).pow(2) + a(1) * lam(2));
    EXPECT_EQ(x3[3], a(3) * lam(1).pow(3) + JetExpr(3) * a(2) * lam(1) * lam(2) + a(1) * lam(3));
    EXPECT_THROW(prolong("a", 4), std::out_of_range);
}

TEST(Prolong, TruncationConsistency) {
    EXPECT_EQ(prolong("a", 3).truncated(2), prolong("a", 2));
    EXPECT_EQ(prolong("a", 2).truncated(1), prolong("a", 1));
}

// With the top coefficient taken as a_lll lam_e^2 in place of
// a_lll lam_e^3, the invariant computation is off by -lam_e (lam_e - 1) a_lll.
TEST(Prolong, SquaredTopExponentLeavesResidual) {
    const JetExpr R = JetExpr::letter("R");
    const FrameVectorField x3 = prolong("a", 3);
    std::vector<JetExpr> variant = x3.coefficients();
    variant[3] = a(3) * lam(1).pow(2) + JetExpr(3) * a(2) * lam(1) * lam(2) + a(1) * lam(3);
    const JetExpr invariant = R * lam(1).pow(2) + schwarzian_frame();
    const JetExpr expected = (a(3) + JetExpr(2) * R * a(1) + R.d_lambda() * a()) * lam(1).pow(2);
    EXPECT_EQ(apply_vf(x3, invariant), expected);
    EXPECT_EQ(apply_vf(FrameVectorField(variant), invariant) - expected, -lam(1) * (lam(1) - JetExpr(1)) * a(3));
}

TEST(ApplyVf, Examples) {
    EXPECT_TRUE(apply_vf(prolong("a", 3), JetExpr(7)).is_zero());
    EXPECT_EQ(apply_vf(FrameVectorField::coordinate(0, 0), lam() * lam()), JetExpr(2) * lam());
}

TEST(LieBracket, Examples) {
    const FrameVectorField d = FrameVectorField::coordinate(0, 0);
    const FrameVectorField e = FrameVectorField({lam()});
    EXPECT_EQ(lie_bracket(d, e), d);

    const FrameVectorField y1({JetExpr(), lam(1), JetExpr(2) * lam(2)});
    const FrameVectorField y2({JetExpr(), JetExpr(), lam(1)});
    EXPECT_EQ(lie_bracket(y1, y2), JetExpr(-1) * y2);
    EXPECT_THROW(lie_bracket(d, y1), std::invalid_argument);
}

TEST(Schwarzian, FrameForm) {
    EXPECT_EQ(schwarzian_frame(), lam(3) / lam(1) - half(3) * (lam(2) / lam(1)).pow(2));
    const std::map<JetSymbol, Rat> affine{{JetSymbol::frame(1), 3}, {JetSymbol::frame(2), 0}, {JetSymbol::frame(3), 0}};
    EXPECT_EQ(schwarzian_frame().evaluate(affine), 0);
    const std::map<JetSymbol, Rat> mobius{{JetSymbol::frame(1), 1}, {JetSymbol::frame(2), 2}, {JetSymbol::frame(3), 6}};
    EXPECT_EQ(schwarzian_frame().evaluate(mobius), 0);
}

TEST(FaaDiBruno, Composition) {
    const DiffeoJet3 f{0, 2, 3, 5, 7};
    EXPECT_EQ(compose(identity_jet<Rat>(2), f), f);
    EXPECT_EQ(compose(f, identity_jet<Rat>(0)), f);
    const DiffeoJet3 g{2, 1, 2, -1, 4};
    const DiffeoJet3 h = compose(g, f);
    EXPECT_EQ(h.d2, g.d2 * f.d1 * f.d1 + g.d1 * f.d2);
    EXPECT_THROW(compose(g, DiffeoJet3{0, 3, 1, 0, 0}), std::invalid_argument);
}

TEST(FaaDiBruno, SchwarzianCocycleSymbolic) {
    const auto c = [](const char* n) { return JetExpr::constant(n); };
    const Jet3<JetExpr> f{c("p"), c("q"), c("f1"), c("f2"), c("f3")};
    const Jet3<JetExpr> g{c("q"), c("s"), c("g1"), c("g2"), c("g3")};
    EXPECT_EQ(schwarzian(compose(g, f)), schwarzian(g) * f.d1 * f.d1 + schwarzian(f));
}

TEST(FaaDiBruno, SchwarzianCocycleRandom) {
    RandomRational rng(21);
    for (int i = 0; i < 100; ++i) {
        const DiffeoJet3 f{rng.rational(), rng.rational(), rng.nonzero_rational(), rng.rational(), rng.rational()};
        const DiffeoJet3 g{f.value, rng.rational(), rng.nonzero_rational(), rng.rational(), rng.rational()};
        EXPECT_EQ(schwarzian(compose(g, f)), schwarzian(g) * f.d1 * f.d1 + schwarzian(f));
    }
}

TEST(Properties, TotalDerivativeLeibnizAndQuotient) {
    RandomRational rng(22);
    for (int i = 0; i < 60; ++i) {
        const JetExpr p = random_expr(rng);
        const JetExpr q = random_expr(rng);
        EXPECT_EQ((p * q).total_derivative(), p.total_derivative() * q + p * q.total_derivative());
        if (!q.is_zero()) {
            EXPECT_EQ((p / q).total_derivative(),
                      (p.total_derivative() * q - p * q.total_derivative()) / (q * q));
        }
    }
}

TEST(Properties, BracketAntisymmetryAndJacobi) {
    RandomRational rng(23);
    for (int i = 0; i < 25; ++i) {
        const auto x = random_field(rng);
        const auto y = random_field(rng);
        const auto z = random_field(rng);
        EXPECT_EQ(lie_bracket(x, y), JetExpr(-1) * lie_bracket(y, x));
        const auto jacobi = lie_bracket(x, lie_bracket(y, z)) + lie_bracket(y, lie_bracket(z, x)) +
                            lie_bracket(z, lie_bracket(x, y));
        EXPECT_TRUE(jacobi.is_zero());
    }
}
