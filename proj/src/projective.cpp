#include "kummer/projective.hpp"

#include "kummer/errors.hpp"
#include "kummer/local.hpp"

#include <stdexcept>

namespace kummer {

ProjectiveStructure::ProjectiveStructure(RatFunc r) : r_(std::move(r)) {
    if (!r_.den().is_constant()) rational_factorization(r_.den());
}

Rat ProjectiveStructure::default_base_point() const {
    for (long k = 0;; ++k)
        if (!r_.is_pole(Rat(k))) return Rat(k);
}

AffineStructure::AffineStructure(RatFunc r) : r_(std::move(r)) {
    if (!r_.den().is_constant()) rational_factorization(r_.den());
}

JetExpr invariant_I(const JetExpr& r) { return r * JetExpr::frame(1).pow(2) + schwarzian_frame(); }

JetExpr invariant_I(const ProjectiveStructure& p) { return invariant_I(p.R_expr()); }

Rat invariant_I_at(const ProjectiveStructure& p, const Jet3<Rat>& frame) {
    return p.R().eval(frame.value) * frame.d1 * frame.d1 + schwarzian(frame);
}

Rat kummer_residual(const DiffeoJet3& sigma, const ProjectiveStructure& p) {
    return schwarzian(sigma) + sigma.d1 * sigma.d1 * p.R().eval(sigma.value) - p.R().eval(sigma.source);
}

Rat kummer_complete_d3(const DiffeoJet3& sigma, const ProjectiveStructure& p) {
    if (sigma.d1 == 0) throw std::domain_error("degenerate jet");
    const Rat ratio = sigma.d2 / sigma.d1;
    const Rat s = p.R().eval(sigma.source) - sigma.d1 * sigma.d1 * p.R().eval(sigma.value);
    return sigma.d1 * (s + make_rat(3, 2) * ratio * ratio);
}

Rat adapted_frame_residual(const Jet3<Rat>& frame, const ProjectiveStructure& p) {
    if (frame.d1 == 0) throw std::domain_error("degenerate frame: lambda_e = 0");
    return frame.d3 - make_rat(3, 2) * frame.d2 * frame.d2 / frame.d1 +
           p.R().eval(frame.value) * frame.d1 * frame.d1 * frame.d1;
}

Matrix3 left_translation_jacobian_at(const DiffeoJet3& sigma, const Rat& lambda_e, const Rat& lambda_ee) {
    if (sigma.d1 == 0) throw std::domain_error("degenerate jet");
    Matrix3 m{};
    m[0] = {sigma.d1, Rat(0), Rat(0)};
    m[1] = {sigma.d2 * lambda_e, sigma.d1, Rat(0)};
    m[2] = {sigma.d3 * lambda_e * lambda_e + sigma.d2 * lambda_ee, 2 * sigma.d2 * lambda_e, sigma.d1};
    return m;
}

Matrix3 left_translation_jacobian(const DiffeoJet3& sigma) {
    return left_translation_jacobian_at(sigma, Rat(1), Rat(0));
}

Matrix3 operator*(const Matrix3& a, const Matrix3& b) {
    Matrix3 m{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k) m[i][j] += a[i][k] * b[k][j];
    return m;
}

namespace {

const JetExpr& le() {
    static const JetExpr e = JetExpr::frame(1);
    return e;
}
const JetExpr& lee() {
    static const JetExpr e = JetExpr::frame(2);
    return e;
}

// 3/2 lambda_ee^2/lambda_e - R lambda_e^3
JetExpr adapted_third(const JetExpr& r) {
    return JetExpr(make_rat(3, 2)) * lee().pow(2) / le() - r * le().pow(3);
}

} // namespace

FrameTriple parallel_basis_Y(const JetExpr& r, const JetExpr& r_at_base) {
    return {FrameVectorField({le(), lee(), r_at_base * le() + adapted_third(r)}),
            FrameVectorField({JetExpr(), le(), JetExpr(2) * lee()}),
            FrameVectorField({JetExpr(), JetExpr(), le()})};
}

FrameTriple parallel_basis_Y(const ProjectiveStructure& p, const Rat& lambda0) {
    return parallel_basis_Y(p.R_expr(), JetExpr(p.R().eval(lambda0)));
}

FrameTriple sl2_basis_E(const JetExpr& r) {
    return {FrameVectorField({le(), lee(), adapted_third(r)}),
            FrameVectorField({JetExpr(), le(), JetExpr(2) * lee()}),
            FrameVectorField({JetExpr(), JetExpr(), JetExpr(2) * le()})};
}

FrameTriple sl2_basis_E(const ProjectiveStructure& p) { return sl2_basis_E(p.R_expr()); }

ExprMatrix3 decompose(const FrameTriple& targets, const FrameTriple& basis) {
    for (const auto& f : targets)
        if (f.order() != 2) throw std::invalid_argument("decompose expects order-2 fields");
    for (const auto& f : basis)
        if (f.order() != 2) throw std::invalid_argument("decompose expects order-2 fields");
    // Gauss-Jordan on [C | I] where C[j][k] = basis[j][k]; M = T C^-1.
    std::array<std::array<JetExpr, 6>, 3> a;
    for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k) {
            a[j][k] = basis[j][k];
            a[j][k + 3] = JetExpr(j == k ? 1 : 0);
        }
    for (int col = 0; col < 3; ++col) {
        int piv = col;
        while (piv < 3 && a[piv][col].is_zero()) ++piv;
        if (piv == 3) throw VerificationError("basis fields are linearly dependent");
        std::swap(a[piv], a[col]);
        const JetExpr inv = JetExpr(1) / a[col][col];
        for (auto& e : a[col]) e = e * inv;
        for (int r = 0; r < 3; ++r) {
            if (r == col || a[r][col].is_zero()) continue;
            const JetExpr f = a[r][col];
            for (int k = 0; k < 6; ++k) a[r][k] = a[r][k] - f * a[col][k];
        }
    }
    ExprMatrix3 m;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            JetExpr s;
            for (int k = 0; k < 3; ++k) s += targets[i][k] * a[k][j + 3];
            m[i][j] = s;
        }
    for (int i = 0; i < 3; ++i) {
        FrameVectorField combo = FrameVectorField::zero(2);
        for (int j = 0; j < 3; ++j) combo = combo + m[i][j] * basis[j];
        if (!(combo == targets[i])) throw VerificationError("decomposition does not reproduce the target field");
    }
    return m;
}

ExprMatrix3 change_of_basis_symbolic() {
    const JetExpr r = JetExpr::letter(kLetterR);
    return decompose(parallel_basis_Y(r, JetExpr::constant(kBaseValue)), sl2_basis_E(r));
}

Matrix3 change_of_basis(const ProjectiveStructure& p, const Rat& lambda0) {
    const ExprMatrix3 m = decompose(parallel_basis_Y(p, lambda0), sl2_basis_E(p));
    Matrix3 out{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            if (!m[i][j].is_constant())
                throw VerificationError("change of basis entry is not constant: " + m[i][j].to_string());
            out[i][j] = m[i][j].constant_value();
        }
    return out;
}

LinearODE lie_operator(const ProjectiveStructure& p) {
    const RatFunc& r = p.R();
    return LinearODE({r.derivative(), RatFunc(2) * r, RatFunc(), RatFunc(1)});
}

JetExpr lie_operator_expr(const std::string& a, const JetExpr& r) {
    return JetExpr::letter(a, 3) + JetExpr(2) * r * JetExpr::letter(a, 1) + r.d_lambda() * JetExpr::letter(a);
}

LinearODE affine_operator(const AffineStructure& s) {
    return LinearODE({s.r().derivative(), s.r(), RatFunc(1)});
}

JetExpr affine_operator_expr(const std::string& a, const JetExpr& r) {
    return JetExpr::letter(a, 2) + r * JetExpr::letter(a, 1) + r.d_lambda() * JetExpr::letter(a);
}

ProjectiveStructure affine_to_projective(const AffineStructure& s) {
    const RatFunc& r = s.r();
    return ProjectiveStructure(r.derivative() - RatFunc(make_rat(1, 2)) * r * r);
}

JetExpr variation_delta_r(const std::string& a, const AffineStructure& s) {
    return affine_operator_expr(a, JetExpr::from_ratfunc(s.r()));
}

} // namespace kummer
