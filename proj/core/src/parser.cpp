#include "realdescent/parser.hpp"

#include <cctype>
#include <optional>
#include <vector>

namespace realdescent {

namespace {

enum class Tok { Number, Ident, Plus, Minus, Star, Caret, LParen, RParen, End };

struct Token {
    Tok kind;
    std::string text;
    int column; // 1-based byte offset within the line
};

// Single-line tokenizer for polynomial expressions.
class Lexer {
public:
    Lexer(std::string_view text, int line) : text_(text), line_(line) {
        advance();
    }

    const Token& peek() const { return current_; }
    Token take() {
        Token t = current_;
        advance();
        return t;
    }
    int line() const { return line_; }

    [[noreturn]] void fail(const std::string& msg, int column) const {
        throw ParseError(msg, line_, column);
    }

private:
    void advance() {
        while (pos_ < text_.size() &&
               std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        int col = static_cast<int>(pos_) + 1;
        if (pos_ >= text_.size()) {
            current_ = Token{Tok::End, "", col};
            return;
        }
        char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   std::isdigit(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
            if (pos_ < text_.size() && text_[pos_] == '/') {
                std::size_t slash = pos_;
                ++pos_;
                if (pos_ >= text_.size() ||
                    !std::isdigit(static_cast<unsigned char>(text_[pos_])))
                    fail("expected digits after '/'",
                         static_cast<int>(slash) + 2);
                while (pos_ < text_.size() &&
                       std::isdigit(static_cast<unsigned char>(text_[pos_])))
                    ++pos_;
            }
            current_ = Token{Tok::Number,
                             std::string(text_.substr(start, pos_ - start)),
                             col};
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                    text_[pos_] == '_'))
                ++pos_;
            current_ = Token{Tok::Ident,
                             std::string(text_.substr(start, pos_ - start)),
                             col};
            return;
        }
        ++pos_;
        switch (c) {
        case '+':
            current_ = Token{Tok::Plus, "+", col};
            return;
        case '-':
            current_ = Token{Tok::Minus, "-", col};
            return;
        case '*':
            current_ = Token{Tok::Star, "*", col};
            return;
        case '^':
            current_ = Token{Tok::Caret, "^", col};
            return;
        case '(':
            current_ = Token{Tok::LParen, "(", col};
            return;
        case ')':
            current_ = Token{Tok::RParen, ")", col};
            return;
        default:
            fail(std::string("unexpected character '") + c + "'", col);
        }
    }

    std::string_view text_;
    int line_;
    std::size_t pos_ = 0;
    Token current_{Tok::End, "", 1};
};

Rational rational_from_token(const Lexer& lex, const Token& t) {
    Rational q(t.text);
    if (q.get_den() == 0)
        lex.fail("zero denominator in rational literal", t.column);
    q.canonicalize();
    return q;
}

// expr := term (('+'|'-') term)*
// term := factor ('*' factor)*
// factor := base ('^' nat)?
// base := rational | 'i' | 's' | var | '(' expr ')' | '-' factor
class PolyParser {
public:
    PolyParser(Lexer& lex, const VariableContext& ctx, const FieldSpec& field)
        : lex_(lex), ctx_(ctx), field_(field) {}

    Polynomial parse() {
        Polynomial p = expr();
        const Token& t = lex_.peek();
        if (t.kind != Tok::End)
            lex_.fail("unexpected trailing input '" + t.text + "'", t.column);
        return p;
    }

private:
    Polynomial expr() {
        Polynomial acc = term();
        for (;;) {
            Tok k = lex_.peek().kind;
            if (k == Tok::Plus) {
                lex_.take();
                acc += term();
            } else if (k == Tok::Minus) {
                lex_.take();
                acc -= term();
            } else {
                return acc;
            }
        }
    }

    Polynomial term() {
        Polynomial acc = factor();
        while (lex_.peek().kind == Tok::Star) {
            lex_.take();
            acc = acc * factor();
        }
        return acc;
    }

    Polynomial factor() {
        Polynomial b = base();
        if (lex_.peek().kind == Tok::Caret) {
            lex_.take();
            Token e = lex_.peek();
            if (e.kind != Tok::Number ||
                e.text.find('/') != std::string::npos)
                lex_.fail("exponent must be a nonnegative integer", e.column);
            lex_.take();
            unsigned long v = 0;
            try {
                v = std::stoul(e.text);
            } catch (...) {
                lex_.fail("exponent out of range", e.column);
            }
            if (v > 64)
                lex_.fail("exponent out of range (max 64)", e.column);
            return b.pow(static_cast<std::uint32_t>(v));
        }
        return b;
    }

    Polynomial base() {
        Token t = lex_.peek();
        switch (t.kind) {
        case Tok::Number:
            lex_.take();
            return Polynomial::constant(
                ctx_, FieldElement(rational_from_token(lex_, t), field_));
        case Tok::Ident: {
            lex_.take();
            if (t.text == "i") {
                if (field_.is_quadratic() && field_.radicand() == -1)
                    return Polynomial::constant(ctx_,
                                                FieldElement::root(field_));
                lex_.fail("'i' denotes sqrt(-1) and is only valid over Q(i)",
                          t.column);
            }
            if (t.text == "s") {
                if (field_.is_quadratic())
                    return Polynomial::constant(ctx_,
                                                FieldElement::root(field_));
                lex_.fail("'s' denotes the adjoined square root; the field "
                          "is Q",
                          t.column);
            }
            if (auto idx = ctx_.index_of(t.text))
                return Polynomial::variable(ctx_, field_, *idx);
            lex_.fail("undeclared variable '" + t.text + "'", t.column);
        }
        case Tok::LParen: {
            lex_.take();
            Polynomial inner = expr();
            Token close = lex_.peek();
            if (close.kind != Tok::RParen)
                lex_.fail("expected ')'", close.column);
            lex_.take();
            return inner;
        }
        case Tok::Minus:
            lex_.take();
            return -factor();
        default:
            lex_.fail("expected a number, variable, or '('", t.column);
        }
    }

    Lexer& lex_;
    const VariableContext& ctx_;
    const FieldSpec& field_;
};

Polynomial parse_poly_line(std::string_view text, const VariableContext& ctx,
                           const FieldSpec& field, int line) {
    Lexer lex(text, line);
    PolyParser parser(lex, ctx, field);
    return parser.parse();
}

std::string_view strip_comment(std::string_view line) {
    auto pos = line.find('#');
    return pos == std::string_view::npos ? line : line.substr(0, pos);
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split_ws(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t k = 0;
    while (k < s.size()) {
        while (k < s.size() &&
               std::isspace(static_cast<unsigned char>(s[k])))
            ++k;
        std::size_t start = k;
        while (k < s.size() &&
               !std::isspace(static_cast<unsigned char>(s[k])))
            ++k;
        if (k > start)
            out.push_back(s.substr(start, k - start));
    }
    return out;
}

bool valid_identifier(std::string_view s) {
    if (s.empty())
        return false;
    if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_')
        return false;
    for (char c : s)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_')
            return false;
    return true;
}

FieldSpec parse_field_spec(std::string_view text, int line, int column) {
    std::string_view s = trim(text);
    if (s == "Q")
        return FieldSpec::rationals();
    if (s == "Q(i)")
        return FieldSpec::gaussian();
    // Q(sqrt <int>)
    if (s.substr(0, 2) == "Q(" && s.back() == ')') {
        std::string_view inner = trim(s.substr(2, s.size() - 3));
        auto words = split_ws(inner);
        if (words.size() == 2 && words[0] == "sqrt") {
            std::string num(words[1]);
            char* end = nullptr;
            long m = std::strtol(num.c_str(), &end, 10);
            if (end && *end == '\0') {
                try {
                    return FieldSpec::quadratic(m);
                } catch (const Error& e) {
                    throw ParseError(e.what(), line, column);
                }
            }
        }
    }
    throw ParseError("invalid field '" + std::string(s) +
                         "'; expected Q, Q(i), or Q(sqrt -d)",
                     line, column);
}

} // namespace

Polynomial parse_poly(std::string_view text, const VariableContext& ctx,
                      const FieldSpec& field) {
    return parse_poly_line(strip_comment(text), ctx, field, 1);
}

DescentProblem parse_problem(std::string_view text) {
    // Split into lines, keeping 1-based numbering.
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto nl = text.find('\n', start);
        if (nl == std::string_view::npos) {
            lines.push_back(text.substr(start));
            break;
        }
        lines.push_back(text.substr(start, nl - start));
        start = nl + 1;
    }

    std::optional<FieldSpec> field;
    std::optional<VariableContext> vars;
    std::vector<Polynomial> ideal_polys;
    std::vector<Polynomial> symmetry_polys;
    MonomialOrder order = MonomialOrder::grevlex();
    bool saw_ideal = false, saw_symmetry = false, saw_options = false;
    int ideal_line = 0;

    enum class Section { None, Ideal, Symmetry, Options };
    Section section = Section::None;

    for (std::size_t li = 0; li < lines.size(); ++li) {
        int line_no = static_cast<int>(li) + 1;
        std::string_view raw = strip_comment(lines[li]);
        std::string_view line = trim(raw);
        if (line.empty())
            continue;
        int column =
            static_cast<int>(raw.find_first_not_of(" \t\r\f\v")) + 1;

        if (!field) {
            auto words = split_ws(line);
            if (words.empty() || words[0] != "field")
                throw ParseError("expected 'field' declaration", line_no,
                                 column);
            std::string_view rest =
                trim(line.substr(words[0].size() + (line.size() >
                                                    words[0].size())));
            if (rest.empty())
                throw ParseError("missing field specification", line_no,
                                 column);
            field = parse_field_spec(rest, line_no, column);
            continue;
        }
        if (!vars) {
            auto words = split_ws(line);
            if (words.empty() || words[0] != "vars")
                throw ParseError("expected 'vars' declaration", line_no,
                                 column);
            std::vector<std::string> names;
            for (std::size_t w = 1; w < words.size(); ++w) {
                std::string name(words[w]);
                if (!valid_identifier(name))
                    throw ParseError("invalid variable name '" + name + "'",
                                     line_no, column);
                if (name == "i" || name == "s")
                    throw ParseError("variable name '" + name +
                                         "' is reserved for the adjoined "
                                         "square root",
                                     line_no, column);
                for (const auto& seen : names)
                    if (seen == name)
                        throw ParseError("duplicate variable name '" + name +
                                             "'",
                                         line_no, column);
                names.push_back(std::move(name));
            }
            if (names.empty())
                throw ParseError("at least one variable is required", line_no,
                                 column);
            vars = VariableContext(std::move(names));
            continue;
        }

        if (line == "ideal:") {
            if (saw_ideal)
                throw ParseError("duplicate ideal section", line_no, column);
            saw_ideal = true;
            ideal_line = line_no;
            section = Section::Ideal;
            continue;
        }
        if (line == "symmetry:") {
            if (saw_symmetry)
                throw ParseError("duplicate symmetry section", line_no,
                                 column);
            saw_symmetry = true;
            section = Section::Symmetry;
            continue;
        }
        if (line == "options:") {
            if (saw_options)
                throw ParseError("duplicate options section", line_no,
                                 column);
            saw_options = true;
            section = Section::Options;
            continue;
        }

        switch (section) {
        case Section::None:
            throw ParseError("expected a section header (ideal:, symmetry:, "
                             "or options:)",
                             line_no, column);
        case Section::Ideal:
            ideal_polys.push_back(
                parse_poly_line(raw, *vars, *field, line_no));
            break;
        case Section::Symmetry:
            symmetry_polys.push_back(
                parse_poly_line(raw, *vars, *field, line_no));
            break;
        case Section::Options: {
            auto eq = line.find('=');
            if (eq == std::string_view::npos)
                throw ParseError("expected 'key = value'", line_no, column);
            std::string key(trim(line.substr(0, eq)));
            std::string value(trim(line.substr(eq + 1)));
            if (key == "order") {
                if (value == "grevlex")
                    order = MonomialOrder::grevlex();
                else if (value == "lex")
                    order = MonomialOrder::lex();
                else
                    throw ParseError("unknown order '" + value +
                                         "'; expected grevlex or lex",
                                     line_no, column);
            } else {
                throw ParseError("unknown option '" + key + "'", line_no,
                                 column);
            }
            break;
        }
        }
    }

    int last_line = static_cast<int>(lines.size());
    if (!field)
        throw ParseError("missing 'field' declaration", last_line, 1);
    if (!vars)
        throw ParseError("missing 'vars' declaration", last_line, 1);
    if (!saw_ideal)
        throw ParseError("missing ideal section", last_line, 1);
    if (ideal_polys.empty())
        throw ParseError("ideal must have at least one generator", ideal_line,
                         1);

    std::optional<PolyMap> symmetry;
    if (saw_symmetry) {
        if (symmetry_polys.size() != vars->size())
            throw ParseError(
                "symmetry section must have exactly one component per "
                "variable (expected " +
                    std::to_string(vars->size()) + ", got " +
                    std::to_string(symmetry_polys.size()) + ")",
                last_line, 1);
        symmetry = PolyMap(*vars, *vars, std::move(symmetry_polys));
    }

    DescentOptions options;
    options.order = order;
    return DescentProblem(*field, *vars, std::move(ideal_polys),
                          std::move(symmetry), options);
}

} // namespace realdescent
