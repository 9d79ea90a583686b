#include "relang/regexp.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace relang {

namespace {

std::string quoted(char c) {
    return std::string("\"") + c + "\"";
}

std::string printable(std::string_view s) {
    // Byte-wise rendering for error messages; non-printable bytes as \xHH.
    static const char hex[] = "0123456789abcdef";
    std::string out;
    for (unsigned char b : s) {
        if (b >= 0x20 && b < 0x7f) {
            out += static_cast<char>(b);
        } else {
            out += "\\x";
            out += hex[b >> 4];
            out += hex[b & 0xf];
        }
    }
    return out;
}

}  // namespace

bool Symbol::is_admissible(char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
           (c >= '0' && c <= '9') || c == '$' || c == '&' || c == '!' || c == '*';
}

Symbol Symbol::checked(char c) {
    if (!is_admissible(c)) {
        throw std::invalid_argument(
            quoted(c) + " must be a lowercase letter, an uppercase letter, a digit, "
                        "or one of $ & ! *");
    }
    return Symbol(c);
}

struct Regexp::Node {
    Kind kind;
    std::optional<Symbol> sym;  // Singleton
    std::optional<Regexp> a;    // left child, or star body
    std::optional<Regexp> b;    // right child
};

Regexp::Kind Regexp::kind() const {
    return node_->kind;
}

Symbol Regexp::symbol() const {
    if (!is_singleton()) throw std::logic_error("symbol(): node is not a singleton");
    return *node_->sym;
}

const Regexp& Regexp::left() const {
    if (!is_union() && !is_concat()) throw std::logic_error("left(): node has no left child");
    return *node_->a;
}

const Regexp& Regexp::right() const {
    if (!is_union() && !is_concat()) throw std::logic_error("right(): node has no right child");
    return *node_->b;
}

const Regexp& Regexp::body() const {
    if (!is_star()) throw std::logic_error("body(): node is not a Kleene star");
    return *node_->a;
}

bool operator==(const Regexp& a, const Regexp& b) {
    if (a.node_ == b.node_) return true;
    if (a.kind() != b.kind()) return false;
    switch (a.kind()) {
        case Regexp::Kind::Empty:
            return true;
        case Regexp::Kind::Singleton:
            return a.symbol() == b.symbol();
        case Regexp::Kind::Union:
        case Regexp::Kind::Concat:
            return a.left() == b.left() && a.right() == b.right();
        case Regexp::Kind::Star:
            return a.body() == b.body();
    }
    return false;
}

Regexp make_empty() {
    // All empty-word expressions share one node.
    static const std::shared_ptr<const Regexp::Node> node =
        std::make_shared<const Regexp::Node>(Regexp::Node{Regexp::Kind::Empty, {}, {}, {}});
    return Regexp(node);
}

Regexp make_singleton(Symbol s) {
    return Regexp(std::make_shared<const Regexp::Node>(
        Regexp::Node{Regexp::Kind::Singleton, s, {}, {}}));
}

Regexp make_singleton(std::string_view s) {
    if (s.size() != 1) {
        throw std::invalid_argument(
            "\"" + printable(s) + "\" must be a string holding exactly one symbol character");
    }
    return make_singleton(Symbol::checked(s.front()));
}

Regexp make_union(Regexp r1, Regexp r2) {
    return Regexp(std::make_shared<const Regexp::Node>(
        Regexp::Node{Regexp::Kind::Union, {}, std::move(r1), std::move(r2)}));
}

Regexp make_concat(Regexp r1, Regexp r2) {
    return Regexp(std::make_shared<const Regexp::Node>(
        Regexp::Node{Regexp::Kind::Concat, {}, std::move(r1), std::move(r2)}));
}

Regexp make_kleenestar(Regexp r) {
    return Regexp(std::make_shared<const Regexp::Node>(
        Regexp::Node{Regexp::Kind::Star, {}, std::move(r), {}}));
}

Regexp create_union_regexp(std::span<const Regexp> rs) {
    if (rs.size() < 2) {
        throw std::invalid_argument("create-union-regexp: list too short");
    }
    if (rs.size() == 2) {
        return make_union(rs[0], rs[1]);
    }
    return make_union(rs[0], create_union_regexp(rs.subspan(1)));
}

namespace {

void collect_symbols(const Regexp& r, Alphabet& out) {
    switch (r.kind()) {
        case Regexp::Kind::Empty:
            break;
        case Regexp::Kind::Singleton:
            out.push_back(r.symbol());
            break;
        case Regexp::Kind::Union:
        case Regexp::Kind::Concat:
            collect_symbols(r.left(), out);
            collect_symbols(r.right(), out);
            break;
        case Regexp::Kind::Star:
            collect_symbols(r.body(), out);
            break;
    }
}

}  // namespace

Alphabet alphabet_of(const Regexp& r) {
    Alphabet out;
    collect_symbols(r, out);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::string word_to_string(const Word& w) {
    std::string out;
    out.reserve(w.size());
    for (Symbol s : w) out += s.ch();
    return out;
}

Word string_to_word(std::string_view s) {
    Word w;
    w.reserve(s.size());
    for (char c : s) w.push_back(Symbol::checked(c));
    return w;
}

}  // namespace relang
