#include "fsplit/parser.hpp"

#include <cctype>
#include <cstdint>
#include <limits>
#include <string>

namespace fsplit {

namespace {

constexpr std::int64_t kMaxExponent = std::numeric_limits<std::uint32_t>::max();

class Parser {
public:
    Parser(std::string_view text, const RingPtr& ring) : text_(text), ring_(ring) {}

    Polynomial parse() {
        Polynomial result = expression();
        skip_space();
        if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return result;
    }

private:
    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    char peek() {
        skip_space();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    bool accept(char c) {
        if (peek() != c) return false;
        ++pos_;
        return true;
    }

    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }

    static bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
    static bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

    std::string identifier() {
        std::size_t start = pos_;
        while (pos_ < text_.size() && ident_char(text_[pos_])) ++pos_;
        return std::string(text_.substr(start, pos_ - start));
    }

    std::string digits() {
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        return std::string(text_.substr(start, pos_ - start));
    }

    bool starts_primary() {
        char c = peek();
        return c == '(' || ident_start(c) || std::isdigit(static_cast<unsigned char>(c));
    }

    Polynomial expression() {
        Polynomial acc = product();
        for (;;) {
            if (accept('+')) {
                acc += product();
            } else if (accept('-')) {
                acc -= product();
            } else {
                return acc;
            }
        }
    }

    Polynomial product() {
        Polynomial acc = unary();
        for (;;) {
            if (accept('*')) {
                acc *= unary();
            } else if (starts_primary()) {
                acc *= unary();
            } else {
                return acc;
            }
        }
    }

    Polynomial unary() {
        if (accept('-')) return -unary();
        return power();
    }

    Polynomial power() {
        Polynomial base = primary();
        if (!accept('^')) return base;
        std::size_t at = pos_;
        std::int64_t e = exponent_tower();
        if (e < 0) throw ParseError("negative exponent " + std::to_string(e), at);
        return pow(base, static_cast<std::uint64_t>(e));
    }

    Polynomial primary() {
        char c = peek();
        if (c == '(') {
            ++pos_;
            Polynomial inner = expression();
            expect(')');
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::uint32_t p = ring_->p();
            std::uint64_t v = 0;
            for (char d : digits()) v = (v * 10 + static_cast<std::uint64_t>(d - '0')) % p;
            return Polynomial::constant(ring_, static_cast<std::int64_t>(v));
        }
        if (ident_start(c)) {
            std::size_t at = pos_;
            std::string name = identifier();
            if (auto idx = ring_->index_of(name)) return Polynomial::variable(ring_, *idx);
            if (name == "p") return Polynomial::constant(ring_, 0);
            throw ParseError("unknown variable '" + name + "'", at);
        }
        if (c == '\0') fail("unexpected end of input");
        fail("unexpected '" + std::string(1, c) + "'");
    }

    // Integer arithmetic for exponents, evaluated exactly.
    // a^b^c groups as a^(b^c).
    std::int64_t exponent_tower() {
        std::size_t at = pos_;
        std::int64_t base = exponent_atom();
        if (!accept('^')) return base;
        std::int64_t e = exponent_tower();
        return int_power(base, e, at);
    }

    std::int64_t exponent_atom() {
        char c = peek();
        if (c == '(') {
            ++pos_;
            std::int64_t v = int_expression();
            expect(')');
            return v;
        }
        if (c == '-') {
            ++pos_;
            return -exponent_atom();
        }
        return int_primary();
    }

    std::int64_t int_primary() {
        char c = peek();
        if (c == '(') {
            ++pos_;
            std::int64_t v = int_expression();
            expect(')');
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t at = pos_;
            std::string d = digits();
            if (d.size() > 12) throw ParseError("integer literal too large", at);
            return std::stoll(d);
        }
        if (ident_start(c)) {
            std::size_t at = pos_;
            std::string name = identifier();
            if (name == "p") return ring_->p();
            throw ParseError("exponents may only use integers and p, found '" + name + "'", at);
        }
        fail("expected an integer exponent");
    }

    static std::int64_t checked(std::int64_t v, std::size_t at) {
        if (v > kMaxExponent || v < -kMaxExponent) throw ParseError("exponent arithmetic overflow", at);
        return v;
    }

    static std::int64_t checked_mul(std::int64_t a, std::int64_t b, std::size_t at) {
        std::int64_t v = 0;
        if (__builtin_mul_overflow(a, b, &v)) throw ParseError("exponent arithmetic overflow", at);
        return checked(v, at);
    }

    std::int64_t int_expression() {
        std::int64_t acc = int_product();
        for (;;) {
            std::size_t at = pos_;
            if (accept('+')) {
                acc = checked(acc + int_product(), at);
            } else if (accept('-')) {
                acc = checked(acc - int_product(), at);
            } else {
                return acc;
            }
        }
    }

    std::int64_t int_product() {
        std::int64_t acc = int_unary();
        while (accept('*')) {
            std::size_t at = pos_;
            acc = checked_mul(acc, int_unary(), at);
        }
        return acc;
    }

    std::int64_t int_unary() {
        if (accept('-')) return -int_unary();
        std::int64_t base = int_primary();
        if (accept('^')) {
            std::size_t at = pos_;
            return int_power(base, int_unary(), at);
        }
        return base;
    }

    std::int64_t int_power(std::int64_t base, std::int64_t e, std::size_t at) {
        if (e < 0) throw ParseError("negative exponent in integer expression", at);
        if (e == 0) return 1;
        if (base == 0 || base == 1) return base;
        if (base == -1) return e % 2 == 0 ? 1 : -1;
        std::int64_t r = 1;
        for (std::int64_t i = 0; i < e; ++i) r = checked_mul(r, base, at);
        return r;
    }

    std::string_view text_;
    const RingPtr& ring_;
    std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const RingPtr& ring) { return Parser(text, ring).parse(); }

}  // namespace fsplit
