#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <string>

#include "relang/oracle.hpp"
#include "relang/regexp.hpp"
#include "relang/syntax.hpp"
#include "support/fuzz.hpp"

using namespace relang;

namespace {

Regexp sing(const char* s) { return make_singleton(s); }

Regexp ends_with_a_tree() {
    return make_concat(make_kleenestar(make_union(sing("a"), sing("b"))), sing("a"));
}

Regexp bin_nums_tree() {
    Regexp zero = sing("0");
    Regexp one = sing("1");
    return make_union(zero, make_concat(one, make_kleenestar(make_union(zero, one))));
}

}  // namespace

TEST_CASE("[syntax] render matches the printable forms") {
    CHECK(render(make_empty()) == "ε");
    CHECK(render(sing("z")) == "z");
    CHECK(render(make_union(sing("z"), make_union(sing("1"), sing("q")))) == "(z U (1 U q))");
    CHECK(render(make_concat(sing("i"), sing("i"))) == "ii");
    CHECK(render(make_kleenestar(make_concat(sing("a"), sing("b")))) == "(ab)*");
    CHECK(render(ends_with_a_tree()) == "(a U b)*a");
    CHECK(render(bin_nums_tree()) == "(0 U 1(0 U 1)*)");
}

TEST_CASE("[syntax] render escapes symbols that collide with metacharacters") {
    CHECK(render(sing("*")) == "\\*");
    CHECK(render(sing("U")) == "\\U");
    CHECK(render(sing("$")) == "$");
    CHECK(render(make_kleenestar(sing("*"))) == "\\**");
    CHECK(render(make_concat(sing("a"), sing("U"))) == "a\\U");
}

TEST_CASE("[syntax] render groups only where the grammar needs it") {
    Regexp a = sing("a");
    CHECK(render(make_kleenestar(make_kleenestar(a))) == "a**");
    CHECK(render(make_kleenestar(make_empty())) == "ε*");
    CHECK(render(make_kleenestar(make_union(a, sing("b")))) == "(a U b)*");
    CHECK(render(make_union(make_union(a, sing("b")), sing("c"))) == "((a U b) U c)");
    CHECK(render(make_concat(make_union(a, sing("b")), make_union(sing("c"), sing("d")))) ==
          "(a U b)(c U d)");
}

TEST_CASE("[syntax] parse handles atoms and precedence") {
    CHECK(parse("ε") == make_empty());
    CHECK(parse("%e") == make_empty());
    CHECK(parse("a") == sing("a"));
    CHECK(parse("\\*") == sing("*"));
    CHECK(parse("\\U") == sing("U"));
    CHECK(parse("((a))") == sing("a"));
    CHECK(parse("(ab)*") == make_kleenestar(make_concat(sing("a"), sing("b"))));
    CHECK(parse("ab*") == make_concat(sing("a"), make_kleenestar(sing("b"))));
    CHECK(parse("a**") == make_kleenestar(make_kleenestar(sing("a"))));
    CHECK(parse("(a U b)*a") == ends_with_a_tree());
    CHECK(parse("(0 U 1(0 U 1)*)") == bin_nums_tree());
}

TEST_CASE("[syntax] unparenthesized chains associate to the right") {
    CHECK(parse("a U b U c") == make_union(sing("a"), make_union(sing("b"), sing("c"))));
    CHECK(parse("abc") == make_concat(sing("a"), make_concat(sing("b"), sing("c"))));
    CHECK(parse("(a U b) U c") == make_union(make_union(sing("a"), sing("b")), sing("c")));
}

TEST_CASE("[syntax] parse errors carry character offsets") {
    auto offset_of = [](const char* input) -> std::size_t {
        try {
            parse(input);
        } catch (const ParseError& e) {
            return e.offset();
        }
        FAIL("expected a ParseError for: " << input);
        return std::size_t(-1);
    };

    CHECK(offset_of("") == 0);
    CHECK(offset_of("(a") == 0);       // unbalanced, reported at the open paren
    CHECK(offset_of("a)") == 1);       // stray close
    CHECK(offset_of("*a") == 0);       // dangling star
    CHECK(offset_of("a U *") == 4);
    CHECK(offset_of("\\") == 0);       // incomplete escape
    CHECK(offset_of("\\x") == 0);      // only metacharacters can be escaped
    CHECK(offset_of("\\(") == 0);      // escapable but not a symbol
    CHECK(offset_of("a b") == 1);      // space only starts the ' U ' separator
    CHECK(offset_of("aUb") == 1);      // bare metacharacter
    CHECK(offset_of("a#b") == 1);
    CHECK(offset_of("#") == 0);
    CHECK(offset_of("%x") == 0);
    CHECK(offset_of("()") == 1);
    CHECK(offset_of("a U ") == 4);

    // offsets count characters, not bytes: ε is one character
    CHECK(offset_of("εε#") == 2);
}

TEST_CASE("[syntax] surface round-trip preserves the language") {
    std::mt19937_64 rng(11);
    const char alpha[] = {'a', 'U', '0', '*'};  // includes both escaped symbols
    for (int i = 0; i < 100; ++i) {
        Regexp r = testsupport::random_regexp(rng, 5, alpha);
        CAPTURE(render(r));
        CHECK(lang_equal_upto(parse(render(r)), r, 5));
    }
}

TEST_CASE("[syntax] surface round-trip may re-associate concatenation") {
    Regexp left_nested = make_concat(make_concat(sing("a"), sing("b")), sing("c"));
    Regexp reparsed = parse(render(left_nested));
    CHECK(reparsed != left_nested);
    CHECK(lang_equal_upto(reparsed, left_nested, 4));
}

TEST_CASE("[syntax] AST format encodes and decodes exactly") {
    CHECK(render_ast(make_union(sing("a"), sing("b"))) == "(union (sing \"a\") (sing \"b\"))");
    CHECK(render_ast(make_empty()) == "(empty)");
    CHECK(parse_ast("(star (concat (sing \"a\") (sing \"b\")))") ==
          make_kleenestar(make_concat(sing("a"), sing("b"))));
    CHECK(parse_ast("  ( star ( concat ( sing \"a\" ) ( sing \"b\" ) ) )  ") ==
          make_kleenestar(make_concat(sing("a"), sing("b"))));
}

TEST_CASE("[syntax] AST round-trip is structurally exact on fuzzed trees") {
    std::mt19937_64 rng(5);
    const char alpha[] = {'a', 'b', 'Z', '9', '$', '*'};
    for (int i = 0; i < 1000; ++i) {
        Regexp r = testsupport::random_regexp(rng, 6, alpha);
        CHECK(parse_ast(render_ast(r)) == r);
    }
}

TEST_CASE("[syntax] AST parse errors") {
    CHECK_THROWS_AS(parse_ast(""), ParseError);
    CHECK_THROWS_AS(parse_ast("(empty"), ParseError);
    CHECK_THROWS_AS(parse_ast("(empty))"), ParseError);
    CHECK_THROWS_AS(parse_ast("(sing \"ab\")"), ParseError);
    CHECK_THROWS_AS(parse_ast("(sing \"\")"), ParseError);
    CHECK_THROWS_AS(parse_ast("(sing \"#\")"), ParseError);
    CHECK_THROWS_AS(parse_ast("(union (sing \"a\"))"), ParseError);
    CHECK_THROWS_AS(parse_ast("(bogus)"), ParseError);
    CHECK_THROWS_AS(parse_ast("(empty) junk"), ParseError);

    try {
        parse_ast("(union (sing \"a\"))");
        FAIL("expected a ParseError");
    } catch (const ParseError& e) {
        CHECK(e.offset() == 17);
    }
}

TEST_CASE("[syntax] every unbalanced-paren mutation of a valid render is rejected") {
    std::mt19937_64 rng(17);
    const char alpha[] = {'a', 'b', 'c'};
    for (int i = 0; i < 300; ++i) {
        Regexp r = testsupport::random_regexp(rng, 5, alpha);
        std::string mutated = render(r);
        std::size_t paren = rng() % 2 == 0 ? mutated.find_first_of("()", rng() % mutated.size())
                                           : std::string::npos;
        if (paren != std::string::npos) {
            mutated.erase(paren, 1);
        } else {
            mutated.insert(rng() % (mutated.size() + 1), 1, rng() % 2 == 0 ? '(' : ')');
        }
        CAPTURE(mutated);
        CHECK_THROWS_AS(parse(mutated), ParseError);
    }
}
