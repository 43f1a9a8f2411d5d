#include "kummer/vector_field.hpp"

#include <sstream>
#include <stdexcept>

namespace kummer {

FrameVectorField::FrameVectorField(std::vector<JetExpr> coefficients) : c_(std::move(coefficients)) {
    if (c_.empty()) throw std::invalid_argument("frame vector field needs at least one coefficient");
}

FrameVectorField FrameVectorField::zero(unsigned order) { return FrameVectorField(std::vector<JetExpr>(order + 1)); }

FrameVectorField FrameVectorField::coordinate(unsigned j, unsigned order) {
    if (j > order) throw std::out_of_range("coordinate field above the bundle order");
    std::vector<JetExpr> c(order + 1);
    c[j] = JetExpr(Rat(1));
    return FrameVectorField(std::move(c));
}

bool FrameVectorField::is_zero() const {
    for (const auto& c : c_)
        if (!c.is_zero()) return false;
    return true;
}

FrameVectorField FrameVectorField::truncated(unsigned order) const {
    if (order > this->order()) throw std::out_of_range("cannot truncate to a higher order");
    return FrameVectorField(std::vector<JetExpr>(c_.begin(), c_.begin() + order + 1));
}

namespace {

void check_orders(const FrameVectorField& a, const FrameVectorField& b) {
    if (a.order() != b.order()) throw std::invalid_argument("frame vector fields of different orders");
}

} // namespace

FrameVectorField operator+(const FrameVectorField& a, const FrameVectorField& b) {
    check_orders(a, b);
    std::vector<JetExpr> c(a.c_.size());
    for (std::size_t j = 0; j < c.size(); ++j) c[j] = a.c_[j] + b.c_[j];
    return FrameVectorField(std::move(c));
}

FrameVectorField operator-(const FrameVectorField& a, const FrameVectorField& b) {
    check_orders(a, b);
    std::vector<JetExpr> c(a.c_.size());
    for (std::size_t j = 0; j < c.size(); ++j) c[j] = a.c_[j] - b.c_[j];
    return FrameVectorField(std::move(c));
}

FrameVectorField operator*(const JetExpr& s, const FrameVectorField& v) {
    std::vector<JetExpr> c(v.c_.size());
    for (std::size_t j = 0; j < c.size(); ++j) c[j] = s * v.c_[j];
    return FrameVectorField(std::move(c));
}

std::string FrameVectorField::to_string() const {
    std::ostringstream out;
    bool first = true;
    for (unsigned j = 0; j < c_.size(); ++j) {
        if (c_[j].is_zero()) continue;
        if (!first) out << " + ";
        first = false;
        out << "(" << c_[j].to_string() << ")*d/d" << JetSymbol::frame(j).to_string();
    }
    return first ? "0" : out.str();
}

JetExpr apply_vf(const FrameVectorField& x, const JetExpr& e) {
    JetExpr acc;
    for (unsigned j = 0; j <= x.order(); ++j) {
        if (x[j].is_zero()) continue;
        const JetExpr d = e.d_frame(j);
        if (!d.is_zero()) acc += x[j] * d;
    }
    return acc;
}

FrameVectorField lie_bracket(const FrameVectorField& x, const FrameVectorField& y) {
    check_orders(x, y);
    std::vector<JetExpr> c(x.order() + 1);
    for (unsigned j = 0; j <= x.order(); ++j) c[j] = apply_vf(x, y[j]) - apply_vf(y, x[j]);
    return FrameVectorField(std::move(c));
}

FrameVectorField prolong(const std::string& letter, unsigned k) {
    if (k > 3) throw std::out_of_range("prolongation order must be at most 3");
    std::vector<JetExpr> c;
    c.push_back(JetExpr::letter(letter));
    for (unsigned j = 1; j <= k; ++j) c.push_back(c.back().total_derivative());
    return FrameVectorField(std::move(c));
}

JetExpr schwarzian_frame() {
    const JetExpr le = JetExpr::frame(1), lee = JetExpr::frame(2), leee = JetExpr::frame(3);
    return leee / le - JetExpr(make_rat(3, 2)) * (lee / le).pow(2);
}

} // namespace kummer
