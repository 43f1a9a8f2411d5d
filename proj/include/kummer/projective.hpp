#pragma once

// The Kummer groupoid of a rational projective structure on the line in
// frame coordinates (lambda, lambda_e, lambda_ee, lambda_eee): its
// differential invariant, adapted frames, left translations, the two
// parallel bases of the adapted frame bundle, and the linear operators of
// its Lie algebra and of an affine reduction.

#include "kummer/jet3.hpp"
#include "kummer/jet_expr.hpp"
#include "kummer/linear_ode.hpp"
#include "kummer/ratfunc.hpp"
#include "kummer/vector_field.hpp"

#include <array>
#include <string>

namespace kummer {

/// A chart tau of the structure solves S(tau) = R(lambda).
class ProjectiveStructure {
public:
    /// Throws UnsupportedPoles when R has a non-rational pole.
    explicit ProjectiveStructure(RatFunc r);

    const RatFunc& R() const { return r_; }
    /// R as a jet expression in lambda.
    JetExpr R_expr() const { return JetExpr::from_ratfunc(r_); }
    /// Smallest non-negative integer that is not a pole of R.
    Rat default_base_point() const;

    friend bool operator==(const ProjectiveStructure&, const ProjectiveStructure&) = default;

private:
    RatFunc r_;
};

/// Affine connection r; its flows preserve a'' + r a' + r' a = 0.
class AffineStructure {
public:
    /// Throws UnsupportedPoles when r has a non-rational pole.
    explicit AffineStructure(RatFunc r);

    const RatFunc& r() const { return r_; }

    friend bool operator==(const AffineStructure&, const AffineStructure&) = default;

private:
    RatFunc r_;
};

using Matrix3 = std::array<std::array<Rat, 3>, 3>;
using ExprMatrix3 = std::array<std::array<JetExpr, 3>, 3>;
using FrameTriple = std::array<FrameVectorField, 3>;

/// Symbolic names used by the identity suite.
inline const std::string kLetterR = "R";
inline const std::string kLetterA = "a";
inline const std::string kBaseValue = "R0"; // R(lambda0)

// ---- differential invariant and groupoid membership ----

/// I = R(lambda) lambda_e^2 + lambda_eee/lambda_e - 3/2 (lambda_ee/lambda_e)^2
/// for R given as an expression in lambda (a letter or a concrete function).
JetExpr invariant_I(const JetExpr& r);
JetExpr invariant_I(const ProjectiveStructure& p);
/// I evaluated on a concrete frame.
Rat invariant_I_at(const ProjectiveStructure& p, const Jet3<Rat>& frame);

/// S(phi) + phi'^2 R(phi) - R(source); zero iff sigma lies in the order-3
/// groupoid. Throws PoleError at poles, std::domain_error for phi' = 0.
Rat kummer_residual(const DiffeoJet3& sigma, const ProjectiveStructure& p);

/// The third derivative making sigma a groupoid element, given its lower
/// order data.
Rat kummer_complete_d3(const DiffeoJet3& sigma, const ProjectiveStructure& p);

/// lambda_eee - 3/2 lambda_ee^2/lambda_e + R(lambda) lambda_e^3; zero iff
/// the frame is adapted.
Rat adapted_frame_residual(const Jet3<Rat>& frame, const ProjectiveStructure& p);

// ---- left translation on the adapted frame bundle ----

/// Jacobian of (lambda, lambda_e, lambda_ee) -> (s, s' lambda_e,
/// s'' lambda_e^2 + s' lambda_ee) at the point (lambda, lambda_e, lambda_ee);
/// sigma must be based at `lambda`.
Matrix3 left_translation_jacobian_at(const DiffeoJet3& sigma, const Rat& lambda_e, const Rat& lambda_ee);
/// Same at the reference frame (lambda0, 1, 0).
Matrix3 left_translation_jacobian(const DiffeoJet3& sigma);

Matrix3 operator*(const Matrix3& a, const Matrix3& b);

// ---- parallel bases ----

/// Y0 = lambda_e d_lambda + lambda_ee d_lambda_e
///      + (R0 lambda_e + 3/2 lambda_ee^2/lambda_e - R lambda_e^3) d_lambda_ee,
/// Y1 = lambda_e d_lambda_e + 2 lambda_ee d_lambda_ee,
/// Y2 = lambda_e d_lambda_ee.
FrameTriple parallel_basis_Y(const JetExpr& r, const JetExpr& r_at_base);
/// Throws PoleError when lambda0 is a pole.
FrameTriple parallel_basis_Y(const ProjectiveStructure& p, const Rat& lambda0);

/// E-1 = lambda_e d_lambda + lambda_ee d_lambda_e
///       + (3/2 lambda_ee^2/lambda_e - R lambda_e^3) d_lambda_ee,
/// E0 = lambda_e d_lambda_e + 2 lambda_ee d_lambda_ee,
/// E1 = 2 lambda_e d_lambda_ee.
FrameTriple sl2_basis_E(const JetExpr& r);
FrameTriple sl2_basis_E(const ProjectiveStructure& p);

/// The matrix M with targets[i] = sum_j M[i][j] basis[j], obtained by exact
/// elimination over jet expressions. Throws VerificationError when the
/// targets are not in the span.
ExprMatrix3 decompose(const FrameTriple& targets, const FrameTriple& basis);

/// (Y0, Y1, Y2)^T = M (E-1, E0, E1)^T with R and R(lambda0) symbolic.
ExprMatrix3 change_of_basis_symbolic();
/// The same matrix for a concrete structure and base point.
Matrix3 change_of_basis(const ProjectiveStructure& p, const Rat& lambda0);

// ---- Lie algebra and affine reduction ----

/// a''' + 2 R a' + R' a (order 3, monic).
LinearODE lie_operator(const ProjectiveStructure& p);
/// The same operator applied to the letter `a` with R an expression in lambda.
JetExpr lie_operator_expr(const std::string& a, const JetExpr& r);

/// a'' + r a' + r' a.
LinearODE affine_operator(const AffineStructure& s);
JetExpr affine_operator_expr(const std::string& a, const JetExpr& r);

/// R = r' - r^2/2.
ProjectiveStructure affine_to_projective(const AffineStructure& s);

/// Infinitesimal variation of r under the flow of a(lambda) d/dlambda:
/// a'' + r a' + r' a.
JetExpr variation_delta_r(const std::string& a, const AffineStructure& s);

} // namespace kummer
