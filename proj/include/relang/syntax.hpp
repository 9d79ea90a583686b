// syntax.hpp -- printable surface syntax and a lossless AST text format
//
// Surface grammar (star binds tighter than concatenation, which binds
// tighter than union; unparenthesized chains associate to the right):
//
//   regexp   := union
//   union    := concat (" U " concat)*
//   concat   := starred starred*
//   starred  := atom "*"*
//   atom     := "ε" | "%e" | symbol-char | "\" metachar | "(" regexp ")"
//
// Metacharacters are ( ) * U ε \ and the space; a symbol that collides with
// one of them ('*' and 'U') renders backslash-escaped. "%e" is an ASCII
// input alias for "ε" and is never emitted.
//
// The AST format is a parenthesized prefix encoding -- (empty), (sing "a"),
// (union X Y), (concat X Y), (star X) -- that round-trips structurally.

#ifndef RELANG_SYNTAX_HPP
#define RELANG_SYNTAX_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "relang/regexp.hpp"

namespace relang {

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t offset, const std::string& message)
        : std::runtime_error("offset " + std::to_string(offset) + ": " + message),
          offset_(offset) {}

    /// 0-based character offset of the offending position.
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

/// Canonical printable form; deterministic and byte-exact (UTF-8, the empty
/// word prints as U+03B5).
std::string render(const Regexp& r);

/// Parses the surface syntax. Throws ParseError with a character offset on
/// malformed input.
Regexp parse(std::string_view pattern);

/// Lossless AST encoding; parse_ast(render_ast(r)) == r. Whitespace between
/// tokens is insignificant on input.
std::string render_ast(const Regexp& r);
Regexp parse_ast(std::string_view text);

}  // namespace relang

#endif  // RELANG_SYNTAX_HPP
