#pragma once

#include "kummer/jet_expr.hpp"

#include <string>
#include <vector>

namespace kummer {

/// Vector field on the order-k frame bundle of the line:
/// sum_j coeff[j] * d/d lambda^(j), j = 0..k.
class FrameVectorField {
public:
    explicit FrameVectorField(std::vector<JetExpr> coefficients);
    static FrameVectorField zero(unsigned order);
    /// d/d lambda^(j) on the order-k bundle.
    static FrameVectorField coordinate(unsigned j, unsigned order);

    unsigned order() const { return static_cast<unsigned>(c_.size()) - 1; }
    const JetExpr& operator[](unsigned j) const { return c_.at(j); }
    const std::vector<JetExpr>& coefficients() const { return c_; }
    bool is_zero() const;
    /// Drops the coefficients above `order`.
    FrameVectorField truncated(unsigned order) const;

    friend FrameVectorField operator+(const FrameVectorField& a, const FrameVectorField& b);
    friend FrameVectorField operator-(const FrameVectorField& a, const FrameVectorField& b);
    friend FrameVectorField operator*(const JetExpr& s, const FrameVectorField& v);
    friend bool operator==(const FrameVectorField&, const FrameVectorField&) = default;

    std::string to_string() const;

private:
    std::vector<JetExpr> c_;
};

/// X(e) = sum_j X_j * d e / d lambda^(j).
JetExpr apply_vf(const FrameVectorField& x, const JetExpr& e);

/// [X, Y]_j = X(Y_j) - Y(X_j). Orders must match.
FrameVectorField lie_bracket(const FrameVectorField& x, const FrameVectorField& y);

/// Prolongation of a(lambda) d/dlambda to the order-k frame bundle:
/// the coefficient on d/d lambda^(j) is the j-th total derivative of a.
/// Throws std::out_of_range unless 0 <= k <= 3.
FrameVectorField prolong(const std::string& letter, unsigned k);

/// lambda_eee/lambda_e - 3/2 (lambda_ee/lambda_e)^2
JetExpr schwarzian_frame();

} // namespace kummer
