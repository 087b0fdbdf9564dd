#include "shufalg/expr.hpp"

#include <cctype>
#include <optional>

namespace shufalg {

ParseError::ParseError(size_t pos, const std::string& expected, const std::string& found)
    : std::invalid_argument("parse error at position " + std::to_string(pos) + ": expected " + expected +
                            ", found " + found),
      pos_(pos), expected_(expected) {}

namespace {

class Parser {
public:
    Parser(const ShuffleContext& ctx, std::string_view src) : ctx_(ctx), s_(src) {}

    FreeElement run() {
        FreeElement e = expr();
        skip();
        if (p_ != s_.size())
            fail("operator or end of input");
        return e;
    }

private:
    const ShuffleContext& ctx_;
    std::string_view s_;
    size_t p_ = 0;

    [[noreturn]] void fail(const std::string& expected) {
        skip();
        throw ParseError(p_, expected, p_ >= s_.size() ? "end of input" : "'" + std::string(1, s_[p_]) + "'");
    }

    void skip() {
        while (p_ < s_.size() && std::isspace((unsigned char)s_[p_]))
            ++p_;
    }
    bool peek(char c) {
        skip();
        return p_ < s_.size() && s_[p_] == c;
    }
    bool accept(char c) {
        if (!peek(c))
            return false;
        ++p_;
        return true;
    }
    void expect(char c) {
        if (!accept(c))
            fail(std::string("'") + c + "'");
    }
    bool keyword(std::string_view w) {
        skip();
        if (s_.substr(p_, w.size()) != w)
            return false;
        size_t e = p_ + w.size();
        if (e < s_.size() && (std::isalnum((unsigned char)s_[e]) || s_[e] == '_'))
            return false;
        p_ = e;
        return true;
    }
    std::optional<Rational> number() {
        skip();
        size_t b = p_;
        while (p_ < s_.size() && std::isdigit((unsigned char)s_[p_]))
            ++p_;
        if (b == p_)
            return std::nullopt;
        return Rational(std::string(s_.substr(b, p_ - b)));
    }
    int integer() {
        bool neg = accept('-');
        skip();
        size_t at = p_;
        auto n = number();
        if (!n)
            fail("integer");
        if (abs(*n) > 1000000) {
            p_ = at;
            fail("integer of moderate size");
        }
        int k = int(n->get_num().get_si());
        return neg ? -k : k;
    }

    std::optional<VRatFunc> scalar_of(const FreeElement& e) {
        if (e.is_zero())
            return VRatFunc();
        if (e.terms().size() == 1 && e.terms().begin()->first.empty())
            return e.terms().begin()->second;
        return std::nullopt;
    }
    FreeElement scalar(const VRatFunc& c) { return FreeElement::scalar(ctx_, c); }

    FreeElement expr() {
        FreeElement a = term();
        for (;;) {
            if (accept('+'))
                a += term();
            else if (accept('-'))
                a -= term();
            else
                return a;
        }
    }
    FreeElement term() {
        FreeElement a = unary();
        for (;;) {
            if (accept('*')) {
                a = a * unary();
            } else if (peek('/')) {
                ++p_;
                skip();
                size_t at = p_;
                auto d = scalar_of(unary());
                if (!d || d->is_zero()) {
                    p_ = at;
                    fail("nonzero scalar divisor");
                }
                a *= d->inverse();
            } else {
                return a;
            }
        }
    }
    FreeElement unary() {
        if (accept('-'))
            return -unary();
        return power();
    }
    FreeElement power() {
        skip();
        size_t at = p_;
        FreeElement a = atom();
        if (!accept('^'))
            return a;
        int k = integer();
        if (auto c = scalar_of(a)) {
            if (c->is_zero() && k < 0) {
                p_ = at;
                fail("nonzero base for a negative power");
            }
            return scalar(c->pow(k));
        }
        if (k < 0) {
            p_ = at;
            fail("scalar base for a negative power");
        }
        return a.pow(k);
    }
    FreeElement letter() {
        expect('[');
        skip();
        size_t at = p_;
        int i = integer();
        if (i < 1 || i > ctx_.rank()) {
            p_ = at;
            fail("color in 1.." + std::to_string(ctx_.rank()));
        }
        expect(',');
        skip();
        at = p_;
        int r = integer();
        if (ctx_.rational() && r < 0) {
            p_ = at;
            fail("nonnegative exponent");
        }
        expect(']');
        return FreeElement::letter(ctx_, i, r);
    }
    FreeElement atom() {
        skip();
        if (auto n = number())
            return scalar(*n);
        if (accept('(')) {
            FreeElement e = expr();
            expect(')');
            return e;
        }
        size_t at = p_;
        if (keyword("comm")) {
            expect('(');
            FreeElement a = expr();
            expect(',');
            FreeElement b = expr();
            VRatFunc u = 1;
            if (accept(';')) {
                skip();
                size_t uat = p_;
                auto c = scalar_of(expr());
                if (!c) {
                    p_ = uat;
                    fail("scalar commutator parameter");
                }
                u = *c;
            }
            expect(')');
            return vcomm(a, b, u);
        }
        if (keyword("hbar")) {
            if (!ctx_.rational()) {
                p_ = at;
                fail("v (hbar belongs to the rational flavor)");
            }
            return scalar(VRatFunc::v());
        }
        if (keyword("v")) {
            if (ctx_.rational()) {
                p_ = at;
                fail("hbar (v belongs to the trigonometric flavor)");
            }
            return scalar(VRatFunc::v());
        }
        if (p_ < s_.size() && (s_[p_] == 'e' || s_[p_] == 'x')) {
            ++p_;
            if (peek('['))
                return letter();
            p_ = at;
        }
        fail("number, v, hbar, e[i,r], x[i,r], comm( or (");
    }
};

}  // namespace

FreeElement parse_expression(const ShuffleContext& ctx, std::string_view src) { return Parser(ctx, src).run(); }

}  // namespace shufalg
