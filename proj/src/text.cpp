#include "gca/text.hpp"

#include <cctype>
#include <sstream>

namespace gca {

std::vector<std::string> default_names(std::size_t n) {
    std::vector<std::string> names;
    names.reserve(n);
    for (std::size_t i = 1; i <= n; ++i)
        names.push_back("x" + std::to_string(i));
    return names;
}

std::string to_string(const LaurentPolynomial& p, const std::vector<std::string>& names) {
    if (names.size() < p.arity())
        throw std::invalid_argument("not enough variable names for polynomial arity");
    if (p.is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    const auto& terms = p.terms();
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
        const auto& [e, c] = *it;
        Rational a = abs(c);
        if (first)
            os << (c < 0 ? "-" : "");
        else
            os << (c < 0 ? " - " : " + ");
        first = false;
        std::vector<std::string> factors;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0)
                continue;
            factors.push_back(e[i] == 1 ? names[i] : names[i] + "^" + std::to_string(e[i]));
        }
        if (a != 1 || factors.empty())
            factors.insert(factors.begin(), a.get_str());
        for (std::size_t k = 0; k < factors.size(); ++k)
            os << (k ? "*" : "") << factors[k];
    }
    return os.str();
}

namespace {

class Parser {
public:
    Parser(std::string_view text, const std::vector<std::string>& names) : text_(text), names_(names) {}

    LaurentPolynomial parse() {
        LaurentPolynomial r = expression();
        skip_space();
        if (pos_ != text_.size())
            throw ParseError("unexpected character '" + std::string(1, text_[pos_]) + "'", pos_);
        return r;
    }

private:
    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }
    bool accept(char c) {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    LaurentPolynomial expression() {
        LaurentPolynomial r = term();
        for (;;) {
            if (accept('+'))
                r += term();
            else if (accept('-'))
                r -= term();
            else
                return r;
        }
    }

    LaurentPolynomial term() {
        LaurentPolynomial r = unary();
        for (;;) {
            if (accept('*')) {
                r = r * unary();
            } else if (accept('/')) {
                const std::size_t at = pos_;
                LaurentPolynomial d = unary();
                if (d.is_zero())
                    throw ParseError("division by zero", at);
                auto q = divide_exact(r, d);
                if (!q)
                    throw ParseError("division is not exact", at);
                r = std::move(*q);
            } else {
                return r;
            }
        }
    }

    LaurentPolynomial unary() {
        if (accept('-'))
            return -unary();
        if (accept('+'))
            return unary();
        return power();
    }

    LaurentPolynomial power() {
        LaurentPolynomial base = primary();
        if (accept('^')) {
            skip_space();
            const std::size_t at = pos_;
            bool negative = false;
            if (accept('-'))
                negative = true;
            else
                accept('+');
            skip_space();
            Integer k = integer();
            if (!k.fits_slong_p())
                throw ParseError("exponent out of range", at);
            std::int64_t e = k.get_si();
            if (negative)
                e = -e;
            if (e < 0 && !base.is_monomial())
                throw ParseError("negative power of a non-monomial", at);
            return base.pow(e);
        }
        return base;
    }

    Integer integer() {
        skip_space();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (start == pos_)
            throw ParseError("expected integer", start);
        return Integer(std::string(text_.substr(start, pos_ - start)));
    }

    LaurentPolynomial primary() {
        skip_space();
        if (pos_ >= text_.size())
            throw ParseError("unexpected end of input", pos_);
        const char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            LaurentPolynomial r = expression();
            if (!accept(')'))
                throw ParseError("expected ')'", pos_);
            return r;
        }
        if (std::isdigit(static_cast<unsigned char>(c)))
            return LaurentPolynomial::constant(names_.size(), Rational(integer()));
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            const std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_' || text_[pos_] == '\''))
                ++pos_;
            const std::string_view id = text_.substr(start, pos_ - start);
            for (std::size_t i = 0; i < names_.size(); ++i)
                if (names_[i] == id)
                    return LaurentPolynomial::variable(names_.size(), i);
            throw ParseError("unknown variable '" + std::string(id) + "'", start);
        }
        throw ParseError("unexpected character '" + std::string(1, c) + "'", pos_);
    }

    std::string_view text_;
    const std::vector<std::string>& names_;
    std::size_t pos_ = 0;
};

}  // namespace

LaurentPolynomial parse_polynomial(std::string_view text, const std::vector<std::string>& names) {
    return Parser(text, names).parse();
}

}  // namespace gca
