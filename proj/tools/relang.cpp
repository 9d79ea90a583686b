// relang -- command-line front end for the regular-language toolkit.
//
// Exit codes: 0 success (or word is a member), 1 word is not a member,
// 2 pattern/word parse error, 3 refused enumeration bound, 4 generation
// failure.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "relang/oracle.hpp"
#include "relang/password.hpp"
#include "relang/regexp.hpp"
#include "relang/syntax.hpp"
#include "relang/wordgen.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNonMember = 1;
constexpr int kExitParseError = 2;
constexpr int kExitRefusedBound = 3;
constexpr int kExitGenFailure = 4;

constexpr std::size_t kEnumDefaultCap = 12;

const std::string kEpsilonUtf8 = "ε";

struct PatternSource {
    std::string inline_pattern;
    std::string file;
    bool ast = false;
};

// Registers PATTERN / --file / --ast on a subcommand.
void add_pattern_options(CLI::App* cmd, PatternSource& src) {
    auto* positional = cmd->add_option("pattern", src.inline_pattern,
                                       "pattern in surface syntax (or AST form with --ast)");
    auto* file = cmd->add_option("--file", src.file, "read the pattern from a file");
    cmd->add_flag("--ast", src.ast, "pattern is in the AST interchange format");
    positional->excludes(file);
    file->excludes(positional);
}

std::uint64_t entropy_seed() {
    std::random_device rd;
    return (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
}

// Loads and parses the pattern; prints a diagnostic and returns nullopt on
// any failure (missing source, unreadable file, syntax error).
std::optional<relang::Regexp> load_pattern(const CLI::App* cmd, const PatternSource& src) {
    std::string text;
    if (!src.file.empty()) {
        std::ifstream in(src.file, std::ios::binary);
        if (!in) {
            std::cerr << "relang: cannot open file '" << src.file << "'\n";
            return std::nullopt;
        }
        std::ostringstream buf;
        buf << in.rdbuf();
        text = buf.str();
        if (!text.empty() && text.back() == '\n') text.pop_back();
        if (!text.empty() && text.back() == '\r') text.pop_back();
    } else if (cmd->count("pattern") > 0) {
        text = src.inline_pattern;
    } else {
        std::cerr << "relang: a pattern is required (inline or --file)\n";
        return std::nullopt;
    }
    try {
        return src.ast ? relang::parse_ast(text) : relang::parse(text);
    } catch (const relang::ParseError& e) {
        std::cerr << "relang: parse error at " << e.what() << "\n";
        return std::nullopt;
    }
}

void print_word(const relang::Word& w, bool empty_as_blank) {
    if (w.empty() && !empty_as_blank) {
        std::cout << kEpsilonUtf8 << "\n";
    } else {
        std::cout << relang::word_to_string(w) << "\n";
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"relang: build, print, sample, and check regular languages"};
    app.require_subcommand(1);

    // render
    auto* render_cmd = app.add_subcommand("render", "print the canonical surface syntax");
    PatternSource render_src;
    add_pattern_options(render_cmd, render_src);

    // parse
    auto* parse_cmd =
        app.add_subcommand("parse", "parse a pattern and print its AST interchange form");
    PatternSource parse_src;
    add_pattern_options(parse_cmd, parse_src);

    // gen
    auto* gen_cmd = app.add_subcommand("gen", "generate random words of the language");
    PatternSource gen_src;
    add_pattern_options(gen_cmd, gen_src);
    std::size_t gen_count = 1;
    std::size_t gen_max_reps = relang::kDefaultMaxStarReps;
    std::optional<std::uint64_t> gen_seed;
    bool gen_empty_blank = false;
    gen_cmd->add_option("--count", gen_count, "number of words to generate");
    gen_cmd->add_option("--max-reps", gen_max_reps, "Kleene star repetition bound");
    gen_cmd->add_option("--seed", gen_seed, "random seed (entropy-seeded when omitted)");
    gen_cmd->add_flag("--empty-as-blank", gen_empty_blank,
                      "print the empty word as a blank line instead of ε");

    // enum
    auto* enum_cmd =
        app.add_subcommand("enum", "enumerate all words up to a length, shortlex order");
    PatternSource enum_src;
    add_pattern_options(enum_cmd, enum_src);
    std::size_t enum_max_len = 0;
    bool enum_force = false;
    enum_cmd->add_option("--max-len", enum_max_len, "maximum word length")->required();
    enum_cmd->add_flag("--force", enum_force,
                       "allow bounds above " + std::to_string(kEnumDefaultCap));

    // member
    auto* member_cmd = app.add_subcommand("member", "test whether a word is in the language");
    PatternSource member_src;
    add_pattern_options(member_cmd, member_src);
    std::string member_word;
    member_cmd->add_option("word", member_word, "word to test (ε or '' for the empty word)")
        ->required();

    // password
    auto* password_cmd = app.add_subcommand("password", "generate valid passwords");
    std::size_t password_count = 1;
    std::optional<std::uint64_t> password_seed;
    password_cmd->add_option("--count", password_count, "number of passwords");
    password_cmd->add_option("--seed", password_seed,
                             "random seed (entropy-seeded when omitted)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    if (*render_cmd) {
        auto r = load_pattern(render_cmd, render_src);
        if (!r) return kExitParseError;
        std::cout << relang::render(*r) << "\n";
        return kExitOk;
    }

    if (*parse_cmd) {
        auto r = load_pattern(parse_cmd, parse_src);
        if (!r) return kExitParseError;
        std::cout << relang::render_ast(*r) << "\n";
        return kExitOk;
    }

    if (*gen_cmd) {
        auto r = load_pattern(gen_cmd, gen_src);
        if (!r) return kExitParseError;
        relang::GenConfig cfg{gen_max_reps,
                              relang::RandomSource(gen_seed ? *gen_seed : entropy_seed())};
        for (std::size_t i = 0; i < gen_count; ++i) {
            print_word(relang::gen_word(*r, cfg), gen_empty_blank);
        }
        return kExitOk;
    }

    if (*enum_cmd) {
        if (enum_max_len > kEnumDefaultCap && !enum_force) {
            std::cerr << "relang: refusing --max-len " << enum_max_len << " above "
                      << kEnumDefaultCap << " without --force\n";
            return kExitRefusedBound;
        }
        auto r = load_pattern(enum_cmd, enum_src);
        if (!r) return kExitParseError;
        for (const relang::Word& w : relang::enumerate_upto(*r, enum_max_len).words) {
            print_word(w, false);
        }
        return kExitOk;
    }

    if (*member_cmd) {
        auto r = load_pattern(member_cmd, member_src);
        if (!r) return kExitParseError;
        relang::Word w;
        if (!member_word.empty() && member_word != kEpsilonUtf8) {
            try {
                w = relang::string_to_word(member_word);
            } catch (const std::invalid_argument& e) {
                std::cerr << "relang: bad word: " << e.what() << "\n";
                return kExitParseError;
            }
        }
        bool in = relang::member(*r, w);
        std::cout << (in ? "true" : "false") << "\n";
        return in ? kExitOk : kExitNonMember;
    }

    if (*password_cmd) {
        relang::RandomSource rng(password_seed ? *password_seed : entropy_seed());
        for (std::size_t i = 0; i < password_count; ++i) {
            try {
                std::cout << relang::generate_password(rng) << "\n";
            } catch (const std::runtime_error& e) {
                std::cerr << "relang: " << e.what() << "\n";
                return kExitGenFailure;
            }
        }
        return kExitOk;
    }

    return kExitOk;
}
