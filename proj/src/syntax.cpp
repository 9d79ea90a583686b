#include "relang/syntax.hpp"

#include <string>
#include <vector>

namespace relang {

namespace {

constexpr char32_t kEpsilon = U'ε';
constexpr std::string_view kEpsilonUtf8 = "ε";

bool is_metachar(char32_t c) {
    return c == U'(' || c == U')' || c == U'*' || c == U'U' || c == kEpsilon ||
           c == U'\\' || c == U' ';
}

bool is_symbol_char(char32_t c) {
    return c < 0x80 && Symbol::is_admissible(static_cast<char>(c));
}

std::string describe(char32_t c) {
    if (c == kEpsilon) return "'ε'";
    if (c >= 0x20 && c < 0x7f) return std::string("'") + static_cast<char>(c) + "'";
    static const char hex[] = "0123456789ABCDEF";
    std::string out = "U+";
    for (int shift = 28; shift >= 0; shift -= 4) {
        unsigned digit = (static_cast<unsigned>(c) >> shift) & 0xf;
        if (out.size() > 2 || digit != 0 || shift < 16) out += hex[digit];
    }
    return out;
}

// Decodes UTF-8 so error offsets count characters, not bytes. Only strict,
// shortest-form sequences are accepted.
std::u32string decode_utf8(std::string_view bytes) {
    std::u32string out;
    std::size_t i = 0;
    while (i < bytes.size()) {
        unsigned char b0 = static_cast<unsigned char>(bytes[i]);
        char32_t cp = 0;
        std::size_t len = 0;
        if (b0 < 0x80) {
            cp = b0;
            len = 1;
        } else if ((b0 & 0xe0) == 0xc0) {
            cp = b0 & 0x1f;
            len = 2;
        } else if ((b0 & 0xf0) == 0xe0) {
            cp = b0 & 0x0f;
            len = 3;
        } else if ((b0 & 0xf8) == 0xf0) {
            cp = b0 & 0x07;
            len = 4;
        } else {
            throw ParseError(out.size(), "invalid UTF-8 byte");
        }
        if (i + len > bytes.size()) throw ParseError(out.size(), "truncated UTF-8 sequence");
        for (std::size_t k = 1; k < len; ++k) {
            unsigned char bk = static_cast<unsigned char>(bytes[i + k]);
            if ((bk & 0xc0) != 0x80) throw ParseError(out.size(), "invalid UTF-8 continuation");
            cp = (cp << 6) | (bk & 0x3f);
        }
        static constexpr char32_t kMin[] = {0, 0, 0x80, 0x800, 0x10000};
        if (cp < kMin[len] || cp > 0x10ffff || (cp >= 0xd800 && cp <= 0xdfff)) {
            throw ParseError(out.size(), "invalid UTF-8 sequence");
        }
        out += cp;
        i += len;
    }
    return out;
}

void render_into(const Regexp& r, std::string& out) {
    switch (r.kind()) {
        case Regexp::Kind::Empty:
            out += kEpsilonUtf8;
            break;
        case Regexp::Kind::Singleton: {
            char c = r.symbol().ch();
            if (is_metachar(static_cast<char32_t>(static_cast<unsigned char>(c)))) out += '\\';
            out += c;
            break;
        }
        case Regexp::Kind::Union:
            out += '(';
            render_into(r.left(), out);
            out += " U ";
            render_into(r.right(), out);
            out += ')';
            break;
        case Regexp::Kind::Concat:
            render_into(r.left(), out);
            render_into(r.right(), out);
            break;
        case Regexp::Kind::Star:
            // A concatenation body spans several atoms, so it needs grouping
            // for the star to apply to all of it; every other kind already
            // renders as one starrable unit.
            if (r.body().is_concat()) {
                out += '(';
                render_into(r.body(), out);
                out += ')';
            } else {
                render_into(r.body(), out);
            }
            out += '*';
            break;
    }
}

class SurfaceParser {
public:
    explicit SurfaceParser(std::u32string cps) : cps_(std::move(cps)) {}

    Regexp run() {
        if (cps_.empty()) throw ParseError(0, "empty pattern");
        Regexp r = parse_union();
        if (pos_ != cps_.size()) {
            if (cps_[pos_] == U')') throw ParseError(pos_, "unbalanced ')'");
            throw ParseError(pos_, "unexpected " + describe(cps_[pos_]));
        }
        return r;
    }

private:
    char32_t peek() const { return cps_[pos_]; }
    bool at_end() const { return pos_ >= cps_.size(); }

    bool at_atom_start() const {
        if (at_end()) return false;
        char32_t c = peek();
        return c == kEpsilon || c == U'%' || c == U'(' || c == U'\\' || is_symbol_char(c);
    }

    Regexp parse_union() {
        Regexp first = parse_concat();
        if (!at_end() && peek() == U' ') {
            if (pos_ + 1 >= cps_.size() || cps_[pos_ + 1] != U'U') {
                throw ParseError(pos_, "expected ' U ' separator");
            }
            if (pos_ + 2 >= cps_.size() || cps_[pos_ + 2] != U' ') {
                throw ParseError(pos_ + 2, "expected ' U ' separator");
            }
            pos_ += 3;
            return make_union(std::move(first), parse_union());
        }
        return first;
    }

    Regexp parse_concat() {
        Regexp first = parse_starred();
        if (at_atom_start()) {
            return make_concat(std::move(first), parse_concat());
        }
        return first;
    }

    Regexp parse_starred() {
        Regexp r = parse_atom();
        while (!at_end() && peek() == U'*') {
            r = make_kleenestar(std::move(r));
            ++pos_;
        }
        return r;
    }

    Regexp parse_atom() {
        if (at_end()) throw ParseError(pos_, "expected an expression");
        char32_t c = peek();
        if (c == kEpsilon) {
            ++pos_;
            return make_empty();
        }
        if (c == U'%') {
            if (pos_ + 1 < cps_.size() && cps_[pos_ + 1] == U'e') {
                pos_ += 2;
                return make_empty();
            }
            throw ParseError(pos_, "stray '%'");
        }
        if (c == U'(') {
            std::size_t open = pos_++;
            Regexp r = parse_union();
            if (at_end() || peek() != U')') {
                throw ParseError(open, "unbalanced '(': missing ')'");
            }
            ++pos_;
            return r;
        }
        if (c == U')') throw ParseError(pos_, "unbalanced ')'");
        if (c == U'*') throw ParseError(pos_, "dangling '*'");
        if (c == U'\\') {
            if (pos_ + 1 >= cps_.size()) throw ParseError(pos_, "incomplete escape");
            char32_t e = cps_[pos_ + 1];
            if (!is_metachar(e)) {
                throw ParseError(pos_, "invalid escape of " + describe(e));
            }
            if (!is_symbol_char(e)) {
                throw ParseError(pos_, "escaped " + describe(e) + " is not a symbol");
            }
            pos_ += 2;
            return make_singleton(Symbol::checked(static_cast<char>(e)));
        }
        if (c == U' ') throw ParseError(pos_, "unexpected ' '");
        if (c == U'U') throw ParseError(pos_, "unescaped metacharacter 'U'");
        if (is_symbol_char(c)) {
            ++pos_;
            return make_singleton(Symbol::checked(static_cast<char>(c)));
        }
        throw ParseError(pos_, "invalid character " + describe(c));
    }

    std::u32string cps_;
    std::size_t pos_ = 0;
};

void render_ast_into(const Regexp& r, std::string& out) {
    switch (r.kind()) {
        case Regexp::Kind::Empty:
            out += "(empty)";
            break;
        case Regexp::Kind::Singleton:
            out += "(sing \"";
            out += r.symbol().ch();
            out += "\")";
            break;
        case Regexp::Kind::Union:
            out += "(union ";
            render_ast_into(r.left(), out);
            out += ' ';
            render_ast_into(r.right(), out);
            out += ')';
            break;
        case Regexp::Kind::Concat:
            out += "(concat ";
            render_ast_into(r.left(), out);
            out += ' ';
            render_ast_into(r.right(), out);
            out += ')';
            break;
        case Regexp::Kind::Star:
            out += "(star ";
            render_ast_into(r.body(), out);
            out += ')';
            break;
    }
}

class AstParser {
public:
    explicit AstParser(std::u32string cps) : cps_(std::move(cps)) {}

    Regexp run() {
        skip_ws();
        if (at_end()) throw ParseError(pos_, "empty input");
        Regexp r = parse_expr();
        skip_ws();
        if (!at_end()) throw ParseError(pos_, "trailing content after expression");
        return r;
    }

private:
    bool at_end() const { return pos_ >= cps_.size(); }
    char32_t peek() const { return cps_[pos_]; }

    void skip_ws() {
        while (!at_end() && (peek() == U' ' || peek() == U'\t' || peek() == U'\n' ||
                             peek() == U'\r')) {
            ++pos_;
        }
    }

    void expect(char32_t c, const char* what) {
        if (at_end() || peek() != c) throw ParseError(pos_, std::string("expected ") + what);
        ++pos_;
    }

    Regexp parse_expr() {
        skip_ws();
        expect(U'(', "'('");
        skip_ws();
        std::size_t tag_at = pos_;
        std::string tag;
        while (!at_end() && peek() >= U'a' && peek() <= U'z') {
            tag += static_cast<char>(peek());
            ++pos_;
        }
        if (tag == "empty") {
            skip_ws();
            expect(U')', "')'");
            return make_empty();
        }
        if (tag == "sing") {
            skip_ws();
            std::size_t quote_at = pos_;
            expect(U'"', "'\"'");
            if (at_end()) throw ParseError(pos_, "unterminated string");
            char32_t c = peek();
            if (!is_symbol_char(c)) {
                throw ParseError(pos_, "symbol " + describe(c) + " is not admissible");
            }
            ++pos_;
            if (at_end() || peek() != U'"') {
                throw ParseError(quote_at, "expected a one-character string");
            }
            ++pos_;
            skip_ws();
            expect(U')', "')'");
            return make_singleton(Symbol::checked(static_cast<char>(c)));
        }
        if (tag == "union" || tag == "concat") {
            Regexp a = parse_expr();
            Regexp b = parse_expr();
            skip_ws();
            expect(U')', "')'");
            return tag == "union" ? make_union(std::move(a), std::move(b))
                                  : make_concat(std::move(a), std::move(b));
        }
        if (tag == "star") {
            Regexp a = parse_expr();
            skip_ws();
            expect(U')', "')'");
            return make_kleenestar(std::move(a));
        }
        throw ParseError(tag_at, "unknown form \"" + tag + "\"");
    }

    std::u32string cps_;
    std::size_t pos_ = 0;
};

}  // namespace

std::string render(const Regexp& r) {
    std::string out;
    render_into(r, out);
    return out;
}

Regexp parse(std::string_view pattern) {
    return SurfaceParser(decode_utf8(pattern)).run();
}

std::string render_ast(const Regexp& r) {
    std::string out;
    render_ast_into(r, out);
    return out;
}

Regexp parse_ast(std::string_view text) {
    return AstParser(decode_utf8(text)).run();
}

}  // namespace relang
