// regexp.hpp -- inductive regular-expression data model
//
// A Regexp is an immutable tree with five node kinds: the empty-word
// expression, single-symbol expressions, union, concatenation, and Kleene
// star. Values share structure through shared_ptr and are safe to copy and
// to use from multiple threads once constructed.

#ifndef RELANG_REGEXP_HPP
#define RELANG_REGEXP_HPP

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace relang {

/// One symbol of the admitted alphabet: a lowercase or uppercase Roman
/// letter, a digit, or one of the special characters $ & ! *.
class Symbol {
public:
    static bool is_admissible(char c);

    /// Validating constructor; throws std::invalid_argument for characters
    /// outside the admitted classes.
    static Symbol checked(char c);

    char ch() const { return ch_; }

    friend auto operator<=>(Symbol, Symbol) = default;

private:
    constexpr explicit Symbol(char c) : ch_(c) {}
    char ch_;
};

/// A word is a finite, possibly empty sequence of symbols. The empty vector
/// is the empty word; there is no separate sentinel.
using Word = std::vector<Symbol>;

/// A finite, duplicate-free set of symbols, kept sorted by character code.
using Alphabet = std::vector<Symbol>;

class Regexp {
public:
    enum class Kind { Empty, Singleton, Union, Concat, Star };

    Kind kind() const;

    bool is_empty() const { return kind() == Kind::Empty; }
    bool is_singleton() const { return kind() == Kind::Singleton; }
    bool is_union() const { return kind() == Kind::Union; }
    bool is_concat() const { return kind() == Kind::Concat; }
    bool is_star() const { return kind() == Kind::Star; }

    /// The symbol of a Singleton node. Calling an accessor on the wrong
    /// node kind is a defect and throws std::logic_error.
    Symbol symbol() const;
    const Regexp& left() const;   // Union or Concat
    const Regexp& right() const;  // Union or Concat
    const Regexp& body() const;   // Star

    /// Structural (node-for-node) equality, not language equality.
    friend bool operator==(const Regexp& a, const Regexp& b);

private:
    struct Node;
    explicit Regexp(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;

    friend Regexp make_empty();
    friend Regexp make_singleton(Symbol s);
    friend Regexp make_union(Regexp r1, Regexp r2);
    friend Regexp make_concat(Regexp r1, Regexp r2);
    friend Regexp make_kleenestar(Regexp r);
};

/// The expression whose language is exactly {empty word}.
Regexp make_empty();

/// A single-symbol expression. The string form validates that the input is
/// exactly one admitted character and throws std::invalid_argument
/// otherwise.
Regexp make_singleton(std::string_view s);
Regexp make_singleton(Symbol s);

Regexp make_union(Regexp r1, Regexp r2);
Regexp make_concat(Regexp r1, Regexp r2);
Regexp make_kleenestar(Regexp r);

/// Right-nested union of two or more expressions:
/// [r1, r2, r3] becomes Union(r1, Union(r2, r3)).
/// Fewer than two elements throws std::invalid_argument.
Regexp create_union_regexp(std::span<const Regexp> rs);

/// The set of symbols appearing in Singleton leaves, sorted and deduplicated.
Alphabet alphabet_of(const Regexp& r);

/// Word <-> string conversions. string_to_word rejects characters outside
/// the admitted alphabet with std::invalid_argument.
std::string word_to_string(const Word& w);
Word string_to_word(std::string_view s);

}  // namespace relang

#endif  // RELANG_REGEXP_HPP
