#include "folinv/parse.hpp"

#include <cctype>
#include <sstream>

namespace folinv {

namespace {

enum class Tok {
    Int,
    Var, // x, y or t
    Dx,
    Dy,
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    LParen,
    RParen,
    LBracket,
    RBracket,
    End,
};

struct Token {
    Tok kind;
    std::size_t offset;
    Int value;  // Tok::Int
    char name = 0; // Tok::Var
};

class Lexer {
public:
    Lexer(std::string_view text, bool series_mode)
        : text_(text), series_(series_mode) {
        next();
    }

    const Token& peek() const { return tok_; }

    Token take() {
        Token t = tok_;
        next();
        return t;
    }

private:
    void next() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        tok_.offset = pos_;
        tok_.name = 0;
        if (pos_ >= text_.size()) {
            tok_.kind = Tok::End;
            return;
        }
        char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            tok_.kind = Tok::Int;
            tok_.value = Int(std::string(text_.substr(start, pos_ - start)), 10);
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            if (!series_ && c == 'd' && pos_ + 1 < text_.size() &&
                (text_[pos_ + 1] == 'x' || text_[pos_ + 1] == 'y')) {
                tok_.kind = text_[pos_ + 1] == 'x' ? Tok::Dx : Tok::Dy;
                pos_ += 2;
                return;
            }
            bool ok = series_ ? (c == 't') : (c == 'x' || c == 'y');
            if (!ok)
                throw UnknownVariable(pos_, std::string("unknown variable '") + c + "'" +
                                                (series_ ? " (series use the single variable t)"
                                                         : " (polynomials use the variables x, y)"));
            tok_.kind = Tok::Var;
            tok_.name = c;
            ++pos_;
            return;
        }
        switch (c) {
            case '+': tok_.kind = Tok::Plus; break;
            case '-': tok_.kind = Tok::Minus; break;
            case '*': tok_.kind = Tok::Star; break;
            case '^': tok_.kind = Tok::Caret; break;
            case '/': tok_.kind = Tok::Slash; break;
            case '(': tok_.kind = Tok::LParen; break;
            case ')': tok_.kind = Tok::RParen; break;
            case '[': tok_.kind = Tok::LBracket; break;
            case ']': tok_.kind = Tok::RBracket; break;
            default:
                throw SyntaxError(pos_, std::string("unexpected character '") + c + "'");
        }
        ++pos_;
    }

    std::string_view text_;
    bool series_;
    std::size_t pos_ = 0;
    Token tok_;
};

// Recursive-descent parser with the precedence ladder
//   ^  >  juxtaposition/*  >  unary -  >  binary + -
class Parser {
public:
    Parser(std::string_view text, bool series_mode) : lex_(text, series_mode) {}

    Poly parse_expression() {
        Poly acc = parse_signed();
        while (lex_.peek().kind == Tok::Plus || lex_.peek().kind == Tok::Minus) {
            bool minus = lex_.take().kind == Tok::Minus;
            Poly rhs = parse_signed();
            if (minus)
                acc -= rhs;
            else
                acc += rhs;
        }
        return acc;
    }

    void expect_end() {
        if (lex_.peek().kind != Tok::End)
            throw SyntaxError(lex_.peek().offset, "unexpected trailing input");
    }

    Poly parse_signed() {
        if (lex_.peek().kind == Tok::Minus) {
            lex_.take();
            return -parse_signed();
        }
        return parse_product();
    }

    // Product stops at dx/dy so 1-form coefficients can precede the symbol.
    Poly parse_product() {
        Poly acc = parse_power();
        for (;;) {
            Tok k = lex_.peek().kind;
            if (k == Tok::Star) {
                lex_.take();
                acc *= parse_power();
            } else if (k == Tok::Int || k == Tok::Var || k == Tok::LParen) {
                acc *= parse_power(); // juxtaposition
            } else {
                return acc;
            }
        }
    }

    Poly parse_power() {
        Poly base = parse_atom();
        if (lex_.peek().kind == Tok::Caret) {
            lex_.take();
            if (lex_.peek().kind != Tok::Int)
                throw SyntaxError(lex_.peek().offset, "exponent must be a bare natural number");
            Token e = lex_.take();
            if (!e.value.fits_uint_p() || e.value.get_ui() >= kMaxExponent)
                throw SyntaxError(e.offset, "exponent out of range");
            return base.pow(static_cast<std::uint32_t>(e.value.get_ui()));
        }
        return base;
    }

    Poly parse_atom() {
        const Token& t = lex_.peek();
        switch (t.kind) {
            case Tok::Int: {
                Token n = lex_.take();
                if (lex_.peek().kind == Tok::Slash) {
                    lex_.take();
                    if (lex_.peek().kind != Tok::Int)
                        throw SyntaxError(lex_.peek().offset, "expected denominator");
                    Token d = lex_.take();
                    if (d.value == 0) throw SyntaxError(d.offset, "zero denominator");
                    return Poly::constant(rat_from_parts(n.value, d.value));
                }
                return Poly::constant(Rat(n.value));
            }
            case Tok::Var: {
                Token v = lex_.take();
                // In series mode the single variable t occupies the x slot.
                return v.name == 'y' ? Poly::var_y() : Poly::var_x();
            }
            case Tok::LParen: {
                lex_.take();
                Poly inner = parse_expression();
                if (lex_.peek().kind != Tok::RParen)
                    throw SyntaxError(lex_.peek().offset, "expected ')'");
                lex_.take();
                return inner;
            }
            default:
                throw SyntaxError(t.offset, "expected a number, variable or '('");
        }
    }

    Lexer lex_;
};

} // namespace

Poly parse_polynomial(std::string_view text) {
    Parser p(text, false);
    Poly r = p.parse_expression();
    p.expect_end();
    return r;
}

Poly parse_series(std::string_view text) {
    Parser p(text, true);
    Poly r = p.parse_expression();
    p.expect_end();
    return r;
}

FormExpr parse_one_form(std::string_view text) {
    Parser p(text, false);
    Lexer& lex = p.lex_;
    FormExpr w;
    bool first = true;
    for (;;) {
        bool negate = false;
        if (first) {
            if (lex.peek().kind == Tok::Minus) {
                lex.take();
                negate = true;
            }
        } else {
            Tok k = lex.peek().kind;
            if (k == Tok::End) break;
            if (k != Tok::Plus && k != Tok::Minus)
                throw SyntaxError(lex.peek().offset, "expected '+' or '-' between form terms");
            negate = lex.take().kind == Tok::Minus;
        }
        // Optional coefficient, then the mandatory dx/dy symbol.
        Poly coeff = Poly::constant(1);
        Tok k = lex.peek().kind;
        if (k == Tok::Int || k == Tok::Var || k == Tok::LParen || k == Tok::Minus)
            coeff = p.parse_signed();
        k = lex.peek().kind;
        if (k != Tok::Dx && k != Tok::Dy)
            throw SyntaxError(lex.peek().offset, "expected dx or dy");
        bool is_dx = lex.take().kind == Tok::Dx;
        if (negate) coeff = -coeff;
        if (is_dx)
            w.dx_part += coeff;
        else
            w.dy_part += coeff;
        first = false;
    }
    if (w.dx_part.is_zero() && w.dy_part.is_zero())
        throw EmptyForm("both components of the 1-form are zero");
    return w;
}

std::vector<DivisorTerm> parse_divisor(std::string_view text) {
    std::vector<DivisorTerm> out;
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    bool first = true;
    for (;;) {
        skip_ws();
        if (pos >= text.size()) {
            if (first) throw SyntaxError(pos, "empty divisor");
            break;
        }
        long long sign = 1;
        if (text[pos] == '+' || text[pos] == '-') {
            if (text[pos] == '-') sign = -1;
            ++pos;
        } else if (!first) {
            throw SyntaxError(pos, "expected '+' or '-' between divisor terms");
        }
        skip_ws();
        long long coeff = 1;
        if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            std::size_t start = pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
            coeff = std::stoll(std::string(text.substr(start, pos - start)));
            if (coeff == 0) throw ZeroCoefficient(start, "divisor coefficient must be nonzero");
            skip_ws();
            if (pos < text.size() && text[pos] == '*') {
                ++pos;
                skip_ws();
            }
        }
        if (pos >= text.size() || text[pos] != '[')
            throw SyntaxError(pos, "expected '[' opening a divisor component");
        std::size_t open = pos++;
        std::size_t close = text.find(']', pos);
        if (close == std::string_view::npos)
            throw SyntaxError(open, "unterminated divisor component");
        std::string body(text.substr(pos, close - pos));
        pos = close + 1;
        out.push_back({sign * coeff, body});
        first = false;
    }
    return out;
}

namespace {

void print_monomial(std::ostringstream& os, Monomial m, const Rat& c, bool series) {
    bool unit = (c == 1 || c == -1) && !m.is_one();
    if (!unit) {
        os << rat_to_string(c < 0 ? Rat(-c) : c);
        if (!m.is_one()) os << "*";
    } else if (c == -1 && m.is_one()) {
        os << "1";
    }
    const char* xname = series ? "t" : "x";
    if (m.x > 0) {
        os << xname;
        if (m.x > 1) os << "^" << m.x;
        if (m.y > 0) os << "*";
    }
    if (m.y > 0) {
        os << "y";
        if (m.y > 1) os << "^" << m.y;
    }
}

std::string print_poly(const Poly& f, bool series) {
    if (f.is_zero()) return "0";
    // Canonical output order: global degree-lex, highest degree first.
    std::map<Monomial, Rat, GlobalTermOrder> ordered;
    for (const auto& [m, c] : f.terms()) ordered.emplace(m, c);
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : ordered) {
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        print_monomial(os, m, c, series);
    }
    return os.str();
}

} // namespace

std::string to_string(const Poly& f) { return print_poly(f, false); }

std::string to_string_series(const Poly& s) { return print_poly(s, true); }

std::string to_string(const FormExpr& w) {
    std::ostringstream os;
    bool have = false;
    if (!w.dx_part.is_zero()) {
        os << "(" << to_string(w.dx_part) << ") dx";
        have = true;
    }
    if (!w.dy_part.is_zero()) {
        if (have) os << " + ";
        os << "(" << to_string(w.dy_part) << ") dy";
    }
    return os.str();
}

} // namespace folinv
