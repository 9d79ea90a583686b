#include "relang/examples.hpp"

#include <array>

#include "relang/wordgen.hpp"

namespace relang {

const Regexp& ends_with_a() {
    static const Regexp r = [] {
        Regexp a = make_singleton("a");
        Regexp b = make_singleton("b");
        return make_concat(make_kleenestar(make_union(a, b)), a);
    }();
    return r;
}

const Regexp& bin_nums() {
    static const Regexp r = [] {
        Regexp zero = make_singleton("0");
        Regexp one = make_singleton("1");
        Regexp any_bits = make_kleenestar(make_union(zero, one));
        return make_union(zero, make_concat(one, any_bits));
    }();
    return r;
}

const Regexp& contains_fsm() {
    static const Regexp r = [] {
        const std::array<Regexp, 5> sigma = {
            make_singleton("f"), make_singleton("s"), make_singleton("m"),
            make_singleton("x"), make_singleton("y")};
        Regexp any = make_kleenestar(create_union_regexp(sigma));
        return make_concat(
            any, make_concat(sigma[0], make_concat(sigma[1], make_concat(sigma[2], any))));
    }();
    return r;
}

bool is_ends_with_a(const Word& w) {
    return !w.empty() && w.back().ch() == 'a';
}

bool is_bin_nums(const Word& w) {
    if (w.empty()) return false;
    if (w.size() > 1 && w.front().ch() != '1') return false;
    for (Symbol s : w) {
        if (s.ch() != '0' && s.ch() != '1') return false;
    }
    return true;
}

Word generate_bn(std::uint64_t seed, std::optional<std::size_t> max_reps) {
    GenConfig cfg{max_reps.value_or(10), RandomSource(seed)};
    return gen_word(bin_nums(), cfg);
}

}  // namespace relang
