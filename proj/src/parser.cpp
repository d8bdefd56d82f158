#include "toric/parser.hpp"

#include <cctype>
#include <limits>

namespace toric {
namespace {

class Parser {
  public:
    Parser(const std::string& text, const RosterPtr& roster)
        : text_(text), roster_(roster) {}

    MultiPoly run() {
        MultiPoly p = parse_expr();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return p;
    }

  private:
    const std::string& text_;
    const RosterPtr& roster_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& msg) const {
        throw SyntaxError(msg + " at position " + std::to_string(pos_ + 1));
    }

    void skip_ws() {
        while (pos_ < text_.size() &&
               std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    int peek() {
        skip_ws();
        return pos_ < text_.size()
                   ? static_cast<unsigned char>(text_[pos_])
                   : -1;
    }

    bool accept(char c) {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    MultiPoly parse_expr() {
        MultiPoly p = accept('-') ? poly_neg(parse_term()) : parse_term();
        for (;;) {
            if (accept('+'))
                p = poly_add(p, parse_term());
            else if (accept('-'))
                p = poly_sub(p, parse_term());
            else
                return p;
        }
    }

    MultiPoly parse_term() {
        MultiPoly p = parse_factor();
        while (accept('*')) p = poly_mul(p, parse_factor());
        return p;
    }

    MultiPoly parse_factor() {
        if (accept('-')) return poly_neg(parse_factor());
        MultiPoly p = parse_atom();
        if (accept('^')) {
            int e = parse_nat_int("exponent");
            p = poly_pow(p, e);
        }
        return p;
    }

    MultiPoly parse_atom() {
        int c = peek();
        if (c == '(') {
            ++pos_;
            MultiPoly p = parse_expr();
            if (!accept(')')) fail("expected ')'");
            return p;
        }
        if (c >= 0 && std::isdigit(c)) {
            Int num = parse_nat();
            if (accept('/')) {
                if (!std::isdigit(peek())) fail("expected denominator");
                Int den = parse_nat();
                if (den == 0) fail("zero denominator");
                return MultiPoly::constant(roster_, make_rat(num, den));
            }
            return MultiPoly::constant(roster_, Rat(num));
        }
        if (c >= 0 && (std::isalpha(c) || c == '_')) return parse_variable();
        fail("expected number, variable or '('");
    }

    MultiPoly parse_variable() {
        std::size_t start = pos_;
        while (pos_ < text_.size()) {
            unsigned char c = static_cast<unsigned char>(text_[pos_]);
            if (!std::isalnum(c) && c != '_') break;
            ++pos_;
        }
        std::string name = text_.substr(start, pos_ - start);
        for (std::size_t i = 0; i < roster_->size(); ++i)
            if ((*roster_)[i] == name)
                return MultiPoly::variable(roster_, static_cast<int>(i));
        pos_ = start;
        fail("unknown variable '" + name + "'");
    }

    Int parse_nat() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() &&
               std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (pos_ == start) fail("expected integer");
        return Int(text_.substr(start, pos_ - start));
    }

    int parse_nat_int(const char* what) {
        Int n = parse_nat();
        if (n > std::numeric_limits<int>::max())
            fail(std::string(what) + " out of range");
        return static_cast<int>(n.get_si());
    }
};

}  // namespace

MultiPoly parse_poly(const std::string& text, const RosterPtr& roster) {
    return Parser(text, roster).run();
}

}  // namespace toric
