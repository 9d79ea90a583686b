#include "relang/wordgen.hpp"

#include <limits>
#include <stdexcept>
#include <vector>

namespace relang {

std::uint64_t RandomSource::next_below(std::uint64_t bound) {
    if (bound == 0) throw std::logic_error("next_below: bound must be positive");
    // Reject the low slice that would make the modulo uneven.
    const std::uint64_t threshold = (0 - bound) % bound;  // 2^64 mod bound
    for (;;) {
        std::uint64_t raw = engine_();
        if (raw >= threshold) return raw % bound;
    }
}

std::size_t pick_reps(std::size_t n, RandomSource& rng) {
    return static_cast<std::size_t>(rng.next_below(static_cast<std::uint64_t>(n) + 1));
}

namespace {

void flatten_union(const Regexp& r, std::vector<Regexp>& out) {
    if (r.is_union()) {
        flatten_union(r.left(), out);
        flatten_union(r.right(), out);
    } else {
        out.push_back(r);
    }
}

}  // namespace

Regexp pick_regexp(const Regexp& r, RandomSource& rng) {
    if (!r.is_union()) throw std::logic_error("pick_regexp: input is not a union");
    std::vector<Regexp> alternatives;
    flatten_union(r, alternatives);
    return alternatives[rng.next_below(alternatives.size())];
}

Word convert_singleton(const Regexp& r) {
    if (!r.is_singleton()) throw std::logic_error("convert_singleton: input is not a singleton");
    return Word{r.symbol()};
}

Word gen_word(const Regexp& r, GenConfig& cfg) {
    switch (r.kind()) {
        case Regexp::Kind::Empty:
            return {};
        case Regexp::Kind::Singleton:
            return convert_singleton(r);
        case Regexp::Kind::Union:
            return gen_word(pick_regexp(r, cfg.rng), cfg);
        case Regexp::Kind::Concat: {
            Word w = gen_word(r.left(), cfg);
            Word w2 = gen_word(r.right(), cfg);
            w.insert(w.end(), w2.begin(), w2.end());
            return w;
        }
        case Regexp::Kind::Star: {
            std::size_t reps = pick_reps(cfg.max_star_reps, cfg.rng);
            Word w;
            for (std::size_t i = 0; i < reps; ++i) {
                Word part = gen_word(r.body(), cfg);
                w.insert(w.end(), part.begin(), part.end());
            }
            return w;
        }
    }
    throw std::logic_error("gen_word: unreachable");
}

Word gen_word(const Regexp& r, std::uint64_t seed) {
    GenConfig cfg{kDefaultMaxStarReps, RandomSource(seed)};
    return gen_word(r, cfg);
}

}  // namespace relang
