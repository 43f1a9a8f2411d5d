#pragma once

#include <compare>
#include <string>

namespace kummer {

/// A coordinate of the jet space of the line.
///
/// - Frame(j): the frame coordinate lambda^(j), i.e. lambda, lambda_e,
///   lambda_ee, lambda_eee, ...
/// - Letter(f, i): the i-th lambda-derivative of a named function f(lambda).
/// - Constant(c): a named parameter with vanishing derivatives, e.g. R(lambda0).
///
/// Symbols are totally ordered: frame coordinates first, then letters,
/// then constants; within a kind by name, then ascending derivative order.
struct JetSymbol {
    enum class Kind : unsigned char { Frame, Letter, Constant };

    Kind kind = Kind::Frame;
    std::string name;
    unsigned order = 0;

    static JetSymbol frame(unsigned j) { return {Kind::Frame, {}, j}; }
    static JetSymbol letter(std::string f, unsigned i = 0) { return {Kind::Letter, std::move(f), i}; }
    static JetSymbol constant(std::string c) { return {Kind::Constant, std::move(c), 0}; }

    bool is_frame() const { return kind == Kind::Frame; }
    bool is_letter() const { return kind == Kind::Letter; }

    /// lam, lam_e, lam_ee; a, a_l, a_ll; R0
    std::string to_string() const {
        switch (kind) {
        case Kind::Frame: return order == 0 ? "lam" : "lam_" + std::string(order, 'e');
        case Kind::Letter: return order == 0 ? name : name + "_" + std::string(order, 'l');
        case Kind::Constant: return name;
        }
        return name;
    }

    friend auto operator<=>(const JetSymbol&, const JetSymbol&) = default;
    friend bool operator==(const JetSymbol&, const JetSymbol&) = default;
};

} // namespace kummer
