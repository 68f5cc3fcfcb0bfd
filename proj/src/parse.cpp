#include "rdu/parse.hpp"

#include <cctype>

namespace rdu {

ParseError::ParseError(const std::string& msg, std::size_t line, std::size_t column)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg),
      line_(line),
      column_(column) {}

namespace {

class Parser {
public:
    Parser(std::string_view s, const ContextPtr& ctx, std::size_t line) : s_(s), ctx_(ctx), line_(line) {}

    Polynomial run() {
        skip();
        if (pos_ == s_.size())
            fail("empty expression");
        Polynomial p = expr();
        skip();
        if (pos_ != s_.size())
            fail(std::string("unexpected '") + s_[pos_] + "'");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, line_, pos_ + 1); }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
    }

    bool accept(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Polynomial expr() {
        Polynomial acc = term();
        for (;;) {
            if (accept('+'))
                acc += term();
            else if (accept('-'))
                acc -= term();
            else
                return acc;
        }
    }

    Polynomial term() {
        Polynomial acc = unary();
        for (;;) {
            if (accept('*')) {
                acc = acc * unary();
            } else if (accept('/')) {
                std::size_t at = pos_;
                Polynomial d = unary();
                if (!d.is_constant() || d.is_zero()) {
                    pos_ = at;
                    fail("division is only allowed by a nonzero constant");
                }
                acc = acc.scaled(1 / Rational(d.constant_term()));
            } else {
                skip();
                if (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '(' ||
                                         s_[pos_] == '_'))
                    fail("implicit multiplication is not allowed; use '*'");
                return acc;
            }
        }
    }

    Polynomial unary() {
        if (accept('-'))
            return -unary();
        if (accept('+'))
            return unary();
        return power();
    }

    Polynomial power() {
        Polynomial base = atom();
        if (accept('^')) {
            skip();
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
                ++pos_;
            if (start == pos_)
                fail("expected a non-negative integer exponent");
            std::string digits(s_.substr(start, pos_ - start));
            if (digits.size() > 6)
                fail("exponent too large");
            return base.pow(static_cast<unsigned>(std::stoul(digits)));
        }
        return base;
    }

    Polynomial atom() {
        skip();
        if (pos_ == s_.size())
            fail("unexpected end of input");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            Polynomial p = expr();
            if (!accept(')'))
                fail("expected ')'");
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
                ++pos_;
            mpz_class v(std::string(s_.substr(start, pos_ - start)));
            return Polynomial::constant(ctx_, Rational(v));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
                ++pos_;
            std::string name(s_.substr(start, pos_ - start));
            auto slot = ctx_->find(name);
            if (!slot) {
                pos_ = start;
                fail("undeclared identifier '" + name + "'");
            }
            return Polynomial::monomial(ctx_, *slot);
        }
        fail(std::string("unexpected '") + c + "'");
    }

    std::string_view s_;
    const ContextPtr& ctx_;
    std::size_t line_;
    std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const ContextPtr& ctx, std::size_t line) {
    return Parser(text, ctx, line).run();
}

}  // namespace rdu
