#include "relang/password.hpp"

#include <array>
#include <stdexcept>
#include <vector>

namespace relang {

namespace {

std::vector<Symbol> symbols_from(std::string_view chars) {
    std::vector<Symbol> out;
    out.reserve(chars.size());
    for (char c : chars) out.push_back(Symbol::checked(c));
    return out;
}

const std::vector<Symbol>& lowers() {
    static const std::vector<Symbol> v = symbols_from("abcdefghijklmnopqrstuvwxyz");
    return v;
}

const std::vector<Symbol>& uppers() {
    static const std::vector<Symbol> v = symbols_from("ABCDEFGHIJKLMNOPQRSTUVWXYZ");
    return v;
}

const std::vector<Symbol>& specials() {
    static const std::vector<Symbol> v = symbols_from("$&!*");
    return v;
}

Regexp class_union(const std::vector<Symbol>& symbols) {
    std::vector<Regexp> singletons;
    singletons.reserve(symbols.size());
    for (Symbol s : symbols) singletons.push_back(make_singleton(s));
    return create_union_regexp(singletons);
}

}  // namespace

std::span<const Symbol> lowercase_symbols() { return lowers(); }
std::span<const Symbol> uppercase_symbols() { return uppers(); }
std::span<const Symbol> special_symbols() { return specials(); }

const Regexp& password_regexp() {
    static const Regexp passwd = [] {
        const Regexp lower = class_union(lowers());
        const Regexp upper = class_union(uppers());
        const Regexp special = class_union(specials());
        const Regexp arbitrary =
            make_kleenestar(make_union(lower, make_union(upper, special)));

        // One required character from each class, in any of the six orders,
        // with arbitrary padding before, between, and after.
        auto ordering = [&](const Regexp& x, const Regexp& y, const Regexp& z) {
            return make_concat(
                arbitrary,
                make_concat(
                    x, make_concat(
                           arbitrary,
                           make_concat(y, make_concat(arbitrary,
                                                      make_concat(z, arbitrary))))));
        };
        const std::array<Regexp, 6> orders = {
            ordering(lower, upper, special), ordering(lower, special, upper),
            ordering(special, lower, upper), ordering(special, upper, lower),
            ordering(upper, special, lower), ordering(upper, lower, special)};
        return create_union_regexp(orders);
    }();
    return passwd;
}

bool is_passwd(std::string_view p) {
    if (p.size() < kPasswordMinLength) return false;
    bool has_lower = false;
    bool has_upper = false;
    bool has_special = false;
    for (char c : p) {
        if (c >= 'a' && c <= 'z') has_lower = true;
        else if (c >= 'A' && c <= 'Z') has_upper = true;
        else if (c == '$' || c == '&' || c == '!' || c == '*') has_special = true;
    }
    return has_lower && has_upper && has_special;
}

std::string generate_matching(const Regexp& pattern, GenConfig& cfg, std::size_t min_len,
                              std::size_t max_attempts) {
    for (std::size_t attempt = 0; attempt < max_attempts; ++attempt) {
        std::string candidate = word_to_string(gen_word(pattern, cfg));
        if (candidate.size() >= min_len) return candidate;
    }
    throw std::runtime_error("password generation exhausted its attempt budget");
}

std::string generate_password(RandomSource& rng) {
    GenConfig cfg{kPasswordMaxStarReps, rng};
    std::string p =
        generate_matching(password_regexp(), cfg, kPasswordMinLength, kPasswordMaxAttempts);
    rng = cfg.rng;  // hand back the advanced state for sequential callers
    return p;
}

std::string generate_password(std::uint64_t seed) {
    RandomSource rng(seed);
    return generate_password(rng);
}

}  // namespace relang
