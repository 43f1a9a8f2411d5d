#include "kummer/errors.hpp"
#include "kummer/local.hpp"
#include "kummer/projective.hpp"
#include "kummer/series.hpp"
#include "support/random.hpp"

#include <gtest/gtest.h>

using namespace kummer;
using kummer::testing::RandomRational;

namespace {

JetExpr lam(unsigned j = 0) { return JetExpr::frame(j); }
JetExpr letter(const std::string& f, unsigned i = 0) { return JetExpr::letter(f, i); }
JetExpr q(long n, long d = 1) { return JetExpr(make_rat(n, d)); }

const RatFunc x = RatFunc::x();

ProjectiveStructure structure(const RatFunc& r) { return ProjectiveStructure(r); }

FrameVectorField field(JetExpr c0, JetExpr c1, JetExpr c2) { return FrameVectorField({c0, c1, c2}); }

RatFunc random_admissible(RandomRational& rng) { return rng.ratfunc(2, 3); }

Rat ordinary_point(const RatFunc& f, RandomRational& rng) {
    for (;;) {
        const Rat p = rng.rational(3, 2);
        if (!f.is_pole(p)) return p;
    }
}

} // namespace

TEST(InvariantI, SymbolicForm) {
    const JetExpr expected = letter("R") * lam(1).pow(2) + lam(3) / lam(1) - q(3, 2) * (lam(2) / lam(1)).pow(2);
    EXPECT_EQ(invariant_I(letter("R")), expected);
    EXPECT_EQ(invariant_I(letter("R")), letter("R") * lam(1).pow(2) + schwarzian_frame());
}

TEST(InvariantI, ConcreteFrames) {
    EXPECT_EQ(invariant_I_at(structure(RatFunc()), make_frame(Rat(5), Rat(1), Rat(0), Rat(0))), 0);
    EXPECT_EQ(invariant_I_at(structure(RatFunc(-2)), make_frame(Rat(0), Rat(1), Rat(0), Rat(0))), -2);
}

TEST(KummerResidual, Examples) {
    const ProjectiveStructure zero(RatFunc{});
    const ProjectiveStructure p(RatFunc(1) / x);
    EXPECT_EQ(kummer_residual(identity_jet(Rat(2)), p), 0);
    // lambda -> 1/(1 - lambda) at 0
    EXPECT_EQ(kummer_residual(DiffeoJet3{Rat(0), Rat(1), Rat(1), Rat(2), Rat(6)}, zero), 0);
    EXPECT_EQ(kummer_residual(DiffeoJet3{Rat(0), Rat(0), Rat(1), Rat(1), Rat(0)}, zero), make_rat(-3, 2));
    EXPECT_THROW(kummer_residual(identity_jet(Rat(0)), p), PoleError);
}

TEST(AdaptedFrameResidual, Examples) {
    EXPECT_EQ(adapted_frame_residual(make_frame(Rat(0), Rat(1), Rat(0), Rat(0)), structure(RatFunc())), 0);
    EXPECT_EQ(adapted_frame_residual(make_frame(Rat(0), Rat(1), Rat(0), Rat(2)), structure(RatFunc(-2))), 0);
    EXPECT_EQ(adapted_frame_residual(make_frame(Rat(0), Rat(1), Rat(1), Rat(0)), structure(RatFunc())),
              make_rat(-3, 2));
    EXPECT_THROW(adapted_frame_residual(make_frame(Rat(0), Rat(0), Rat(1), Rat(0)), structure(RatFunc())),
                 std::domain_error);
}

TEST(LeftTranslation, Jacobian) {
    const Matrix3 id = left_translation_jacobian(identity_jet(Rat(3)));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) EXPECT_EQ(id[i][j], i == j ? 1 : 0);
    const DiffeoJet3 s{Rat(0), Rat(1), Rat(2), Rat(3), Rat(5)};
    const Matrix3 m = left_translation_jacobian(s);
    const Matrix3 expected{{{Rat(2), Rat(0), Rat(0)}, {Rat(3), Rat(2), Rat(0)}, {Rat(5), Rat(6), Rat(2)}}};
    EXPECT_EQ(m, expected);
    EXPECT_THROW(left_translation_jacobian(DiffeoJet3{Rat(0), Rat(0), Rat(0), Rat(1), Rat(1)}), std::domain_error);
}

TEST(ParallelBases, SymbolicForms) {
    const JetExpr R = letter("R");
    const JetExpr r0 = JetExpr::constant(kBaseValue);
    const auto y = parallel_basis_Y(R, r0);
    EXPECT_EQ(y[0], field(lam(1), lam(2), r0 * lam(1) + q(3, 2) * lam(2).pow(2) / lam(1) - R * lam(1).pow(3)));
    EXPECT_EQ(y[1], field(q(0), lam(1), q(2) * lam(2)));
    EXPECT_EQ(y[2], field(q(0), q(0), lam(1)));

    const auto e = sl2_basis_E(R);
    EXPECT_EQ(e[0], field(lam(1), lam(2), q(3, 2) * lam(2).pow(2) / lam(1) - R * lam(1).pow(3)));
    EXPECT_EQ(e[1], field(q(0), lam(1), q(2) * lam(2)));
    EXPECT_EQ(e[2], field(q(0), q(0), q(2) * lam(1)));
    EXPECT_EQ(e[1], y[1]);
}

TEST(ParallelBases, ZeroStructure) {
    const auto y = parallel_basis_Y(structure(RatFunc()), Rat(0));
    EXPECT_EQ(y[0], field(lam(1), lam(2), q(3, 2) * lam(2).pow(2) / lam(1)));
    EXPECT_THROW(parallel_basis_Y(structure(RatFunc(1) / x), Rat(0)), PoleError);
}

TEST(ParallelBases, Sl2Table) {
    const auto e = sl2_basis_E(letter("R"));
    EXPECT_EQ(lie_bracket(e[1], e[2]), q(-1) * e[2]);
    EXPECT_EQ(lie_bracket(e[1], e[0]), e[0]);
    EXPECT_EQ(lie_bracket(e[2], e[0]), q(2) * e[1]);
}

TEST(ChangeOfBasis, SolvedMatrix) {
    const ExprMatrix3 m = change_of_basis_symbolic();
    const JetExpr r0 = JetExpr::constant(kBaseValue);
    const ExprMatrix3 expected{{{q(1), q(0), r0 / q(2)}, {q(0), q(1), q(0)}, {q(0), q(0), q(1, 2)}}};
    EXPECT_EQ(m, expected);

    const Matrix3 zero = change_of_basis(structure(RatFunc()), Rat(0));
    const Matrix3 zero_expected{{{Rat(1), Rat(0), Rat(0)}, {Rat(0), Rat(1), Rat(0)}, {Rat(0), Rat(0), make_rat(1, 2)}}};
    EXPECT_EQ(zero, zero_expected);
    EXPECT_EQ(change_of_basis(structure(RatFunc(-2) * x), Rat(3))[0][2], Rat(-3));
}

TEST(ChangeOfBasis, BottomRowTwoLeavesResidual) {
    const auto y = parallel_basis_Y(letter("R"), JetExpr::constant(kBaseValue));
    const auto e = sl2_basis_E(letter("R"));
    EXPECT_EQ(y[2] - q(2) * e[2], field(q(0), q(0), q(-3) * lam(1)));
}

TEST(Operators, LieOperator) {
    EXPECT_EQ(lie_operator(structure(RatFunc())), LinearODE({RatFunc(), RatFunc(), RatFunc(), RatFunc(1)}));
    EXPECT_EQ(lie_operator(structure(RatFunc(-2))), LinearODE({RatFunc(), RatFunc(-4), RatFunc(), RatFunc(1)}));
    const JetExpr R = letter("R");
    EXPECT_EQ(lie_operator_expr("a", R), letter("a", 3) + q(2) * R * letter("a", 1) + letter("R", 1) * letter("a"));
}

TEST(Operators, AffineOperator) {
    EXPECT_EQ(affine_operator(AffineStructure(RatFunc())), LinearODE({RatFunc(), RatFunc(), RatFunc(1)}));
    EXPECT_EQ(affine_operator(AffineStructure(RatFunc(-2))), LinearODE({RatFunc(), RatFunc(-2), RatFunc(1)}));
    const RatFunc r = RatFunc(-4) / x;
    EXPECT_EQ(affine_operator(AffineStructure(r)), LinearODE({RatFunc(4) / (x * x), r, RatFunc(1)}));
}

TEST(Operators, AffineToProjective) {
    EXPECT_EQ(affine_to_projective(AffineStructure(RatFunc(-4) / x)).R(), RatFunc(-4) / (x * x));
    EXPECT_EQ(affine_to_projective(AffineStructure(RatFunc())).R(), RatFunc());
    EXPECT_EQ(affine_to_projective(AffineStructure(RatFunc(-2))).R(), RatFunc(-2));
}

TEST(Operators, VariationDeltaR) {
    const AffineStructure s(RatFunc(-2));
    EXPECT_TRUE(variation_delta_r("a", s).substitute_letter("a", RatFunc(1)).is_zero());
    const AffineStructure t(RatFunc(-4) / x);
    EXPECT_EQ(variation_delta_r("a", t), affine_operator_expr("a", JetExpr::from_ratfunc(t.r())));
    EXPECT_EQ(variation_delta_r("a", t).substitute_letter("a", RatFunc(1)),
              JetExpr::from_ratfunc(RatFunc(4) / (x * x)));
}

TEST(Operators, VariationVanishesOnSeriesKernel) {
    const AffineStructure s(RatFunc(-4) / x);
    const LinearODE op = affine_operator(s);
    const auto fs = series_solutions(op, Rat(1), 40);
    for (const auto& sol : fs.solutions)
        for (const auto& c : apply_series(op, sol, Rat(1), 40)) EXPECT_EQ(c, 0);
}

TEST(Structures, RejectIrrationalPoles) {
    EXPECT_THROW(ProjectiveStructure(RatFunc(1) / (x * x + RatFunc(1))), UnsupportedPoles);
    EXPECT_THROW(AffineStructure(RatFunc(1) / (x * x - RatFunc(2))), UnsupportedPoles);
    EXPECT_EQ(structure(RatFunc(1) / (x * (x - RatFunc(1)))).default_base_point(), Rat(2));
}

TEST(Properties, JacobianCompositionAndDeterminant) {
    RandomRational rng(101);
    for (int trial = 0; trial < 100; ++trial) {
        const Rat p = rng.rational();
        const DiffeoJet3 tau{p, rng.rational(), rng.nonzero_rational(), rng.rational(), rng.rational()};
        const DiffeoJet3 sigma{tau.value, rng.rational(), rng.nonzero_rational(), rng.rational(), rng.rational()};
        const Matrix3 lhs = left_translation_jacobian(compose(sigma, tau));
        const Matrix3 rhs = left_translation_jacobian_at(sigma, tau.d1, tau.d2) * left_translation_jacobian(tau);
        EXPECT_EQ(lhs, rhs);
        const Matrix3 m = left_translation_jacobian(sigma);
        EXPECT_EQ(m[0][1], 0);
        EXPECT_EQ(m[0][2], 0);
        EXPECT_EQ(m[1][2], 0);
        EXPECT_EQ(m[0][0] * m[1][1] * m[2][2], sigma.d1 * sigma.d1 * sigma.d1);
    }
}

TEST(Properties, InvariantUnderGroupoidElements) {
    RandomRational rng(102);
    for (int trial = 0; trial < 100; ++trial) {
        const ProjectiveStructure p(random_admissible(rng));
        const Rat base = ordinary_point(p.R(), rng);
        const Rat target = ordinary_point(p.R(), rng);
        DiffeoJet3 sigma{base, target, rng.nonzero_rational(), rng.rational(), Rat(0)};
        sigma.d3 = kummer_complete_d3(sigma, p);
        ASSERT_EQ(kummer_residual(sigma, p), 0);
        const Jet3<Rat> frame = make_frame(base, rng.nonzero_rational(), rng.rational(), rng.rational());
        EXPECT_EQ(invariant_I_at(p, compose(sigma, frame)), invariant_I_at(p, frame));
    }
}

TEST(Properties, AdaptedIffInvariantVanishes) {
    RandomRational rng(103);
    for (int trial = 0; trial < 100; ++trial) {
        const ProjectiveStructure p(random_admissible(rng));
        const Rat l = ordinary_point(p.R(), rng);
        Jet3<Rat> frame = make_frame(l, rng.nonzero_rational(), rng.rational(), rng.rational());
        if (trial % 2 == 0) frame.d3 -= adapted_frame_residual(frame, p);
        EXPECT_EQ(adapted_frame_residual(frame, p) == 0, invariant_I_at(p, frame) == 0);
        EXPECT_EQ(adapted_frame_residual(frame, p), frame.d1 * invariant_I_at(p, frame));
    }
}

TEST(Properties, AffineInsideLie) {
    RandomRational rng(104);
    for (int trial = 0; trial < 100; ++trial) {
        const RatFunc r = rng.ratfunc(2, 3);
        const AffineStructure s(r);
        const ProjectiveStructure p = affine_to_projective(s);
        const LinearODE affine = affine_operator(s);
        const LinearODE lie = lie_operator(p);
        EXPECT_EQ(compose(LinearODE({-r, RatFunc(1)}), affine), lie);
        const Rat at = ordinary_point(r, rng);
        const int n = 20;
        const auto fs = series_solutions(affine, at, n);
        for (const auto& sol : fs.solutions)
            for (const auto& c : apply_series(lie, sol, at, n)) EXPECT_EQ(c, 0);
    }
}
