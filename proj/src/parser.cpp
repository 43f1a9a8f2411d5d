#include "kummer/parser.hpp"

#include "kummer/errors.hpp"

#include <cctype>

namespace kummer {

namespace {

bool ident_start(unsigned char c) { return std::isalpha(c) || c == '_' || c >= 0x80; }
bool ident_char(unsigned char c) { return ident_start(c) || std::isdigit(c); }

class Parser {
public:
    explicit Parser(const std::string& text) : s_(text) {}

    ParsedExpression run() {
        auto ast = expr();
        skip();
        if (i_ != s_.size()) fail("unexpected '" + std::string(1, s_[i_]) + "'");
        return {std::move(ast), variable_};
    }

private:
    using Node = std::unique_ptr<ExprAST>;

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(i_, msg); }

    void skip() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    }

    bool accept(char c) {
        skip();
        if (i_ < s_.size() && s_[i_] == c) {
            ++i_;
            return true;
        }
        return false;
    }

    bool peek_digit() {
        skip();
        return i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]));
    }

    static Node node(ExprAST::Kind k, std::size_t pos) {
        auto n = std::make_unique<ExprAST>();
        n->kind = k;
        n->position = pos;
        return n;
    }

    static Node binary(ExprAST::Kind k, std::size_t pos, Node l, Node r) {
        auto n = node(k, pos);
        n->lhs = std::move(l);
        n->rhs = std::move(r);
        return n;
    }

    Node expr() {
        Node acc = term();
        while (true) {
            skip();
            const std::size_t pos = i_;
            if (accept('+')) acc = binary(ExprAST::Kind::Add, pos, std::move(acc), term());
            else if (accept('-')) acc = binary(ExprAST::Kind::Subtract, pos, std::move(acc), term());
            else return acc;
        }
    }

    Node term() {
        Node acc = factor(false);
        while (true) {
            skip();
            const std::size_t pos = i_;
            if (accept('*')) acc = binary(ExprAST::Kind::Multiply, pos, std::move(acc), factor(false));
            else if (accept('/')) acc = binary(ExprAST::Kind::Divide, pos, std::move(acc), factor(true));
            else return acc;
        }
    }

    Node factor(bool after_division) {
        Node b = base(after_division);
        skip();
        const std::size_t pos = i_;
        if (!accept('^')) return b;
        auto n = node(ExprAST::Kind::Power, pos);
        n->exponent = exponent();
        n->lhs = std::move(b);
        return n;
    }

    long exponent() {
        skip();
        const std::size_t start = i_;
        bool negative = false;
        if (accept('-')) negative = true;
        else accept('+');
        if (!peek_digit()) fail("expected an integer exponent");
        const Int v = digits();
        if (!v.fits_slong_p() || abs(v) > 1'000'000) {
            i_ = start;
            fail("exponent out of range");
        }
        return negative ? -v.get_si() : v.get_si();
    }

    Int digits() {
        const std::size_t start = i_;
        while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
        return Int(s_.substr(start, i_ - start));
    }

    // After '/', a literal p/q would regroup a/p/q as a/(p/q); only plain
    // integers are read there.
    Node base(bool after_division) {
        skip();
        const std::size_t pos = i_;
        if (i_ >= s_.size()) fail("unexpected end of input");
        const unsigned char c = static_cast<unsigned char>(s_[i_]);
        if (std::isdigit(c)) return number(pos, after_division);
        if (ident_start(c)) return identifier(pos);
        if (accept('(')) {
            Node inner = expr();
            if (!accept(')')) fail("expected ')'");
            return inner;
        }
        if (accept('-')) {
            auto n = node(ExprAST::Kind::Negate, pos);
            n->lhs = factor(after_division);
            return n;
        }
        fail("unexpected '" + std::string(1, s_[i_]) + "'");
    }

    Node number(std::size_t pos, bool after_division) {
        const Int num = digits();
        const std::size_t save = i_;
        if (!after_division && accept('/') && peek_digit()) {
            const Int den = digits();
            skip();
            const bool powered = i_ < s_.size() && s_[i_] == '^';
            if (!powered && den != 0) {
                auto n = node(ExprAST::Kind::Rational, pos);
                n->value = Rat(num, den);
                n->value.canonicalize();
                return n;
            }
        }
        i_ = save;
        auto n = node(ExprAST::Kind::Integer, pos);
        n->value = num;
        return n;
    }

    Node identifier(std::size_t pos) {
        while (i_ < s_.size() && ident_char(static_cast<unsigned char>(s_[i_]))) ++i_;
        std::string name = s_.substr(pos, i_ - pos);
        if (variable_ && *variable_ != name) {
            i_ = pos;
            fail("second identifier '" + name + "' (the variable is '" + *variable_ + "')");
        }
        variable_ = name;
        auto n = node(ExprAST::Kind::Variable, pos);
        n->name = std::move(name);
        return n;
    }

    const std::string& s_;
    std::size_t i_ = 0;
    std::optional<std::string> variable_;
};

} // namespace

ParsedExpression parse_expression(const std::string& text) { return Parser(text).run(); }

RatFunc evaluate(const ExprAST& ast) {
    using K = ExprAST::Kind;
    switch (ast.kind) {
    case K::Integer:
    case K::Rational:
        return RatFunc(ast.value);
    case K::Variable:
        return RatFunc::x();
    case K::Negate:
        return -evaluate(*ast.lhs);
    case K::Add:
        return evaluate(*ast.lhs) + evaluate(*ast.rhs);
    case K::Subtract:
        return evaluate(*ast.lhs) - evaluate(*ast.rhs);
    case K::Multiply:
        return evaluate(*ast.lhs) * evaluate(*ast.rhs);
    case K::Divide: {
        const RatFunc d = evaluate(*ast.rhs);
        if (d.is_zero()) throw ParseError(ast.position, "division by zero");
        return evaluate(*ast.lhs) / d;
    }
    case K::Power: {
        const RatFunc b = evaluate(*ast.lhs);
        if (b.is_zero() && ast.exponent < 0) throw ParseError(ast.position, "division by zero");
        return b.pow(static_cast<int>(ast.exponent));
    }
    }
    throw std::logic_error("unknown expression node");
}

RatFunc parse_ratfunc(const std::string& text) { return evaluate(*parse_expression(text).ast); }

RatFunc parse_ratfunc(const std::string& text, const std::string& variable) {
    auto parsed = parse_expression(text);
    if (parsed.variable && *parsed.variable != variable)
        throw ParseError(text.find(*parsed.variable), "expected the variable '" + variable + "', found '" +
                                                          *parsed.variable + "'");
    return evaluate(*parsed.ast);
}

} // namespace kummer
