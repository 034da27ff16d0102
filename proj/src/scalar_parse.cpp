#include "gammal/scalar_parse.hpp"

#include <cctype>

namespace gammal {

namespace {

class ExprParser {
public:
    ExprParser(std::string_view text, CycloCtxPtr ctx, bool allow_t, unsigned line, unsigned col)
        : text_(text), ctx_(std::move(ctx)), allow_t_(allow_t), line_(line), col0_(col) {}

    Scalar run() {
        Scalar v = expr();
        skip_ws();
        if (pos_ != text_.size()) error_here("unexpected trailing input");
        return v;
    }

private:
    [[noreturn]] void error_here(const std::string& msg) {
        throw ParseError(line_, col0_ + static_cast<unsigned>(pos_), msg);
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    Scalar expr() {
        Scalar v = term();
        for (;;) {
            if (eat('+'))
                v = v + term();
            else if (eat('-'))
                v = v - term();
            else
                return v;
        }
    }

    Scalar term() {
        Scalar v = unary();
        for (;;) {
            if (eat('*')) {
                v = v * unary();
            } else if (eat('/')) {
                Scalar d = unary();
                if (d.is_zero()) error_here("division by zero in expression");
                v = v / d;
            } else {
                return v;
            }
        }
    }

    Scalar unary() {
        bool neg = false;
        for (;;) {
            if (eat('-'))
                neg = !neg;
            else if (eat('+'))
                ;
            else
                break;
        }
        Scalar v = power();
        return neg ? -v : v;
    }

    Scalar power() {
        Scalar v = atom();
        while (eat('^')) {
            bool neg = eat('-');
            long e = integer("exponent");
            if (neg) {
                if (v.is_zero()) error_here("zero raised to a negative power");
                v = v.inverse();
            }
            Scalar acc = Scalar::one(ctx_);
            for (long i = 0; i < e; ++i) acc = acc * v;
            v = acc;
        }
        return v;
    }

    Scalar atom() {
        char c = peek();
        if (c == '(') {
            eat('(');
            Scalar v = expr();
            if (!eat(')')) error_here("expected ')'");
            return v;
        }
        if (c == 'z') {
            ++pos_;
            return Scalar::zeta_power(ctx_, 1);
        }
        if (c == 't') {
            if (!allow_t_) error_here("'t' is not allowed in this context");
            ++pos_;
            return Scalar::variable(ctx_);
        }
        if (std::isdigit(static_cast<unsigned char>(c)))
            return Scalar::from_rational(ctx_, Rational(integer("integer")));
        if (c == '\0') error_here("unexpected end of expression");
        error_here(std::string("unexpected character '") + c + "'");
    }

    long integer(const std::string& what) {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == start) error_here("expected " + what);
        if (pos_ - start > 18) error_here(what + " literal too long");
        return std::stol(std::string(text_.substr(start, pos_ - start)));
    }

    std::string_view text_;
    CycloCtxPtr ctx_;
    bool allow_t_;
    unsigned line_;
    unsigned col0_;
    std::size_t pos_ = 0;
};

} // namespace

Scalar parse_scalar(std::string_view text, const CycloCtxPtr& ctx, bool allow_t, unsigned line,
                    unsigned column) {
    return ExprParser(text, ctx, allow_t, line, column).run();
}

} // namespace gammal
