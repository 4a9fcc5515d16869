#include "hamcheck/parser.hpp"

#include <cctype>
#include <string>

#include "hamcheck/errors.hpp"

namespace hamcheck {

namespace {

class Parser {
public:
    Parser(std::string_view text, VariableContext::Ptr ctx)
        : text_(text), ctx_(std::move(ctx)) {}

    Expression run() {
        Expression e = expr();
        skip_ws();
        if (pos_ != text_.size()) throw SyntaxError("unexpected trailing input", pos_);
        return e;
    }

private:
    Expression expr() {
        Expression e = term();
        while (true) {
            skip_ws();
            if (peek() == '+' || peek() == '-') {
                char op = take();
                Expression rhs = term();
                if (op == '+') {
                    e = Expression::sum(ctx_, {std::move(e), std::move(rhs)});
                } else {
                    Expression neg = Expression::product(
                        ctx_, {Expression::constant(ctx_, Rational(-1)), std::move(rhs)});
                    e = Expression::sum(ctx_, {std::move(e), std::move(neg)});
                }
            } else {
                return e;
            }
        }
    }

    Expression term() {
        Expression e = factor();
        while (true) {
            skip_ws();
            if (peek() == '*' || peek() == '/') {
                char op = take();
                Expression rhs = factor();
                if (op == '*')
                    e = Expression::product(ctx_, {std::move(e), std::move(rhs)});
                else
                    e = Expression::quotient(std::move(e), std::move(rhs));
            } else {
                return e;
            }
        }
    }

    Expression factor() {
        skip_ws();
        if (peek() == '-') {
            take();
            return Expression::product(
                ctx_, {Expression::constant(ctx_, Rational(-1)), factor()});
        }
        Expression b = base();
        skip_ws();
        if (peek() == '^') {
            take();
            return Expression::power(std::move(b), integer_exponent());
        }
        return b;
    }

    Expression base() {
        skip_ws();
        char c = peek();
        if (c == '(') {
            take();
            Expression e = expr();
            skip_ws();
            if (peek() != ')') throw SyntaxError("expected ')'", pos_);
            take();
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return number();
        if (std::isalpha(static_cast<unsigned char>(c))) return identifier();
        throw SyntaxError("expected a number, identifier or '('", pos_);
    }

    Expression number() {
        std::size_t start = pos_;
        bool saw_dot = false;
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (std::isdigit(static_cast<unsigned char>(c))) {
                ++pos_;
            } else if (c == '.' && !saw_dot) {
                saw_dot = true;
                ++pos_;
            } else {
                break;
            }
        }
        std::string lit(text_.substr(start, pos_ - start));
        if (lit == ".") throw SyntaxError("bad numeric literal", start);
        return Expression::constant(ctx_, rational_from_string(lit));
    }

    Expression identifier() {
        std::size_t start = pos_;
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (std::isalnum(static_cast<unsigned char>(c)) || c == '_')
                ++pos_;
            else
                break;
        }
        std::string name(text_.substr(start, pos_ - start));
        auto v = ctx_->find(name);
        if (!v) throw UnknownIdentifier(name, start);
        return Expression::variable(ctx_, *v);
    }

    long integer_exponent() {
        skip_ws();
        std::size_t start = pos_;
        bool neg = false;
        if (peek() == '-') {
            neg = true;
            take();
            skip_ws();
        }
        if (!std::isdigit(static_cast<unsigned char>(peek())))
            throw NonIntegerExponent(pos_);
        long value = 0;
        while (pos_ < text_.size() &&
               std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            value = value * 10 + (text_[pos_] - '0');
            if (value > 1000000) throw SyntaxError("exponent too large", start);
            ++pos_;
        }
        if (pos_ < text_.size() && text_[pos_] == '.') throw NonIntegerExponent(start);
        return neg ? -value : value;
    }

    void skip_ws() {
        while (pos_ < text_.size() &&
               std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }
    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
    char take() { return text_[pos_++]; }

    std::string_view text_;
    VariableContext::Ptr ctx_;
    std::size_t pos_ = 0;
};

}  // namespace

Expression parse_expression(std::string_view text, VariableContext::Ptr ctx) {
    return Parser(text, std::move(ctx)).run();
}

}  // namespace hamcheck
