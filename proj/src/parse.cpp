#include "darboux/parse.hpp"

#include <algorithm>
#include <cctype>

namespace darboux {

namespace {

class Parser {
public:
    Parser(const std::string& text, const std::vector<std::string>& vars)
        : text_(text), vars_(vars) {}

    Poly run() {
        Poly p = expr();
        skip_ws();
        if (pos_ != text_.size()) throw ParseError("unexpected trailing input", pos_);
        return p;
    }

private:
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

    Poly expr() {
        Poly acc = term();
        for (;;) {
            if (eat('+')) {
                acc = acc + term();
            } else if (eat('-')) {
                acc = acc - term();
            } else {
                return acc;
            }
        }
    }

    Poly term() {
        Poly acc = factor();
        for (;;) {
            if (eat('*')) {
                acc = acc * factor();
            } else if (eat('/')) {
                const std::size_t at = pos_;
                Poly d = factor();
                if (!d.is_constant())
                    throw ParseError("division only by a rational constant", at);
                if (d.constant_value().is_zero()) throw ParseError("division by zero", at);
                acc = acc.scaled(d.constant_value().inverse());
            } else {
                return acc;
            }
        }
    }

    // '^' binds tighter than unary minus: -x^2 is -(x^2)
    Poly factor() {
        if (eat('-')) return -factor();
        if (eat('+')) return factor();
        Poly base = atom();
        if (eat('^')) {
            const std::size_t at = pos_;
            long e = integer_literal();
            if (e < 0) throw ParseError("exponent must be a non-negative integer", at);
            if (e > degree_cap()) throw ParseError("exponent exceeds degree cap", at);
            return base.pow(static_cast<unsigned>(e));
        }
        return base;
    }

    Poly atom() {
        skip_ws();
        if (pos_ >= text_.size()) throw ParseError("unexpected end of input", pos_);
        const char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            Poly p = expr();
            if (!eat(')')) throw ParseError("expected ')'", pos_);
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            return Poly::constant(Rational(Integer(digits())), vars_);
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            const std::size_t at = pos_;
            std::string name;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_' ||
                    text_[pos_] == '\'')) {
                name += text_[pos_++];
            }
            if (std::find(vars_.begin(), vars_.end(), name) == vars_.end())
                throw ParseError("undeclared symbol '" + name + "'", at);
            return Poly::variable(name, vars_);
        }
        throw ParseError(std::string("unexpected character '") + c + "'", pos_);
    }

    long integer_literal() {
        skip_ws();
        bool neg = false;
        if (eat('-')) neg = true;
        skip_ws();
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            throw ParseError("expected integer", pos_);
        long v = std::stol(digits());
        return neg ? -v : v;
    }

    std::string digits() {
        std::string s;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            s += text_[pos_++];
        return s;
    }

    const std::string& text_;
    const std::vector<std::string>& vars_;
    std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(const std::string& text, const std::vector<std::string>& variables) {
    return Parser(text, variables).run();
}

}  // namespace darboux
