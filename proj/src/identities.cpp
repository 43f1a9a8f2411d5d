#include "kummer/identities.hpp"

#include "kummer/jet3.hpp"
#include "kummer/projective.hpp"
#include "kummer/series.hpp"

#include <json.hpp>

#include <functional>

namespace kummer {

namespace {

using Check = std::function<IdentityResult()>;

IdentityResult residual_result(const std::string& name, const JetExpr& residual) {
    return {name, residual.is_zero(), "residual " + residual.to_string()};
}

IdentityResult field_result(const std::string& name, const FrameVectorField& lhs, const FrameVectorField& rhs) {
    const FrameVectorField diff = lhs - rhs;
    return {name, diff.is_zero(), "difference " + diff.to_string()};
}

JetExpr R() { return JetExpr::letter(kLetterR); }
JetExpr lie_a() { return lie_operator_expr(kLetterA, R()); }
JetExpr le() { return JetExpr::frame(1); }

IdentityResult schwarzian_cocycle() {
    const auto c = [](const char* n) { return JetExpr::constant(n); };
    const Jet3<JetExpr> f{c("p"), c("q"), c("f1"), c("f2"), c("f3")};
    const Jet3<JetExpr> g{c("q"), c("s"), c("g1"), c("g2"), c("g3")};
    const JetExpr lhs = schwarzian(compose(g, f));
    const JetExpr rhs = schwarzian(g) * f.d1 * f.d1 + schwarzian(f);
    return residual_result("schwarzian_cocycle", lhs - rhs);
}

IdentityResult prolonged_invariant() {
    const JetExpr lhs = apply_vf(prolong(kLetterA, 3), invariant_I(R()));
    return residual_result("x3_invariant", lhs - lie_a() * le() * le());
}

FrameTriple y_basis() { return parallel_basis_Y(R(), JetExpr::constant(kBaseValue)); }

IdentityResult bracket_y0() {
    const FrameVectorField expected({JetExpr(), JetExpr(), lie_a() * le().pow(3)});
    return field_result("bracket_y0_x2", lie_bracket(y_basis()[0], prolong(kLetterA, 2)), expected);
}

IdentityResult bracket_y(int i) {
    return field_result("bracket_y" + std::to_string(i) + "_x2", lie_bracket(y_basis()[i], prolong(kLetterA, 2)),
                        FrameVectorField::zero(2));
}

IdentityResult change_of_basis_identity() {
    const ExprMatrix3 m = change_of_basis_symbolic();
    const JetExpr half(make_rat(1, 2));
    const ExprMatrix3 solved{{{JetExpr(1), JetExpr(), half * JetExpr::constant(kBaseValue)},
                              {JetExpr(), JetExpr(1), JetExpr()},
                              {JetExpr(), JetExpr(), half}}};
    const FrameTriple y = y_basis();
    const FrameTriple e = sl2_basis_E(R());
    bool ok = m == solved;
    for (int i = 0; i < 3 && ok; ++i) {
        FrameVectorField acc = FrameVectorField::zero(2);
        for (int j = 0; j < 3; ++j) acc = acc + solved[i][j] * e[j];
        ok = acc == y[i];
    }
    const FrameVectorField row_with_two = y[2] - JetExpr(2) * e[2];
    return {"change_of_basis", ok,
            "(Y0,Y1,Y2) = [[1,0,R0/2],[0,1,0],[0,0,1/2]] (E-1,E0,E1); with 2 in place of 1/2 the last row leaves " +
                row_with_two.to_string()};
}

IdentityResult sl2_closure() {
    const FrameTriple e = sl2_basis_E(R());
    const FrameVectorField& em = e[0];
    const FrameVectorField& e0 = e[1];
    const FrameVectorField& ep = e[2];
    const FrameVectorField d = (lie_bracket(e0, ep) + ep) + (lie_bracket(e0, em) - em) +
                               (lie_bracket(ep, em) - JetExpr(2) * e0);
    const bool ok = (lie_bracket(e0, ep) + ep).is_zero() && (lie_bracket(e0, em) - em).is_zero() &&
                    (lie_bracket(ep, em) - JetExpr(2) * e0).is_zero();
    return {"sl2_closure", ok, "[E0,E1] = -E1, [E0,E-1] = E-1, [E1,E-1] = 2 E0; combined difference " + d.to_string()};
}

IdentityResult affine_inside_lie_symbolic() {
    const JetExpr r = JetExpr::letter("r");
    const JetExpr big_r = r.d_lambda() - JetExpr(make_rat(1, 2)) * r * r;
    const JetExpr inner = affine_operator_expr(kLetterA, r);
    const JetExpr factored = inner.d_lambda() - r * inner;
    return residual_result("affine_inside_lie", lie_operator_expr(kLetterA, big_r) - factored);
}

IdentityResult affine_inside_lie_series() {
    const RatFunc x = RatFunc::x();
    const RatFunc r = RatFunc(1) / (x - RatFunc(1)) + x - RatFunc(make_rat(1, 3)) / (x * x);
    const AffineStructure affine(r);
    const LinearODE lie = lie_operator(affine_to_projective(affine));
    const int n = 30;
    const Rat p = 2;
    bool ok = true;
    for (const auto& f : series_solutions(affine_operator(affine), p, n).solutions)
        for (const auto& c : apply_series(lie, f, p, n)) ok = ok && c == 0;
    return {"affine_inside_lie_series", ok,
            "series solutions of the affine operator for r = " + r.to_string() + " at 2 satisfy the Lie operator to order " +
                std::to_string(n - 3)};
}

IdentityResult riccati_round_trip() {
    const JetExpr r = JetExpr::letter("r");
    const JetExpr big_r = r.d_lambda() - JetExpr(make_rat(1, 2)) * r * r;
    const JetExpr u = JetExpr(make_rat(-1, 2)) * r;
    const JetExpr residual = u.d_lambda() + u * u + JetExpr(make_rat(1, 2)) * big_r;
    const RatFunc x = RatFunc::x();
    const bool concrete = affine_to_projective(AffineStructure(RatFunc(-4) / x)).R() == RatFunc(-4) / (x * x);
    return {"affine_round_trip", residual.is_zero() && concrete,
            "u = -r/2 solves u' + u^2 + R/2 = 0 for R = r' - r^2/2: residual " + residual.to_string()};
}

} // namespace

std::vector<IdentityResult> verify_identities() {
    const std::vector<std::pair<std::string, Check>> checks{
        {"schwarzian_cocycle", schwarzian_cocycle},
        {"x3_invariant", prolonged_invariant},
        {"bracket_y0_x2", bracket_y0},
        {"bracket_y1_x2", [] { return bracket_y(1); }},
        {"bracket_y2_x2", [] { return bracket_y(2); }},
        {"change_of_basis", change_of_basis_identity},
        {"sl2_closure", sl2_closure},
        {"affine_inside_lie", affine_inside_lie_symbolic},
        {"affine_inside_lie_series", affine_inside_lie_series},
        {"affine_round_trip", riccati_round_trip},
    };
    std::vector<IdentityResult> out;
    for (const auto& [name, check] : checks) {
        try {
            out.push_back(check());
        } catch (const std::exception& e) {
            out.push_back({name, false, std::string("exception: ") + e.what()});
        }
    }
    return out;
}

std::string render_identities(const std::vector<IdentityResult>& results) {
    std::string out;
    for (const auto& r : results) {
        nlohmann::ordered_json j;
        j["identity"] = r.name;
        j["passed"] = r.passed;
        j["detail"] = r.detail;
        out += j.dump() + "\n";
    }
    return out;
}

} // namespace kummer
