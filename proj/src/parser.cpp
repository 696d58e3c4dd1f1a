#include "biharm/parser.hpp"

#include "biharm/error.hpp"

#include <cctype>
#include <string>

namespace biharm {

namespace {

constexpr unsigned long kMaxExponent = 100000;

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    RatFn parse() {
        RatFn r = expr();
        skip_space();
        if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return r;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    static RatFn fold(RatFn r) { return r.fold_constant_den(); }

    RatFn expr() {
        RatFn acc = term();
        for (;;) {
            if (accept('+'))
                acc = fold(acc + term());
            else if (accept('-'))
                acc = fold(acc - term());
            else
                return acc;
        }
    }

    RatFn term() {
        RatFn acc = unary();
        for (;;) {
            if (accept('*')) {
                acc = fold(acc * unary());
            } else if (accept('/')) {
                std::size_t at = pos_;
                RatFn d = unary();
                if (d.is_zero()) throw ParseError("division by zero", at);
                acc = fold(acc / d);
            } else {
                return acc;
            }
        }
    }

    RatFn unary() {
        if (accept('-')) return -unary();
        if (accept('+')) return unary();
        return power();
    }

    RatFn power() {
        RatFn base = atom();
        if (!accept('^')) return base;
        skip_space();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail("expected a non-negative integer exponent");
        std::string digits(text_.substr(start, pos_ - start));
        if (digits.size() > 6 || std::stoul(digits) > kMaxExponent)
            throw ParseError("exponent overflow", start);
        auto e = static_cast<unsigned>(std::stoul(digits));
        return fold(RatFn(base.num().pow(e), base.den().pow(e)));
    }

    RatFn atom() {
        skip_space();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            RatFn r = expr();
            if (!accept(')')) fail("expected ')'");
            return r;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            return RatFn(Poly(GaussRat(Integer(std::string(text_.substr(start, pos_ - start))))));
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            if (pos_ + 1 < text_.size() && text_[pos_] == '_' && text_[pos_ + 1] == '{') {
                std::size_t close = text_.find('}', pos_);
                if (close == std::string_view::npos) fail("unterminated '{'");
                pos_ = close + 1;
            }
            std::string_view name = text_.substr(start, pos_ - start);
            if (name == "i") return RatFn(Poly(GaussRat::i()));
            auto v = Var::parse(name);
            if (!v) throw ParseError("unknown variable '" + std::string(name) + "'", start);
            return RatFn(Poly(*v));
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace

RatFn parse_expr(std::string_view text) { return Parser(text).parse(); }

Poly parse_poly(std::string_view text) {
    RatFn r = parse_expr(text);
    if (!r.is_polynomial()) throw ParseError("expected a polynomial, got a quotient", 0);
    return r.fold_constant_den().num();
}

} // namespace biharm
