// wordgen.hpp -- seedable nondeterministic word generation
//
// Every construct whose language holds more than one word draws its choices
// from a RandomSource. Equal seeds give equal draw sequences on every
// platform, so generated words are reproducible test data.

#ifndef RELANG_WORDGEN_HPP
#define RELANG_WORDGEN_HPP

#include <cstdint>
#include <random>

#include "relang/regexp.hpp"

namespace relang {

/// Deterministic uniform source. next_below(k) is unbiased over [0, k-1];
/// the underlying engine is fully specified by the standard, so identical
/// seeds give identical sequences across standard libraries.
class RandomSource {
public:
    explicit RandomSource(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_below(std::uint64_t bound);

private:
    std::mt19937_64 engine_;
};

inline constexpr std::size_t kDefaultMaxStarReps = 20;

/// Knobs for one generation run. A RandomSource is single-owner: concurrent
/// generations each need their own GenConfig.
struct GenConfig {
    std::size_t max_star_reps;
    RandomSource rng;
};

/// Uniform natural number in [0, n] inclusive.
std::size_t pick_reps(std::size_t n, RandomSource& rng);

/// Uniform choice among the alternatives of a union. Nested unions reachable
/// through union children flatten into one alternative list, so
/// Union(r1, Union(r2, Union(r3, r4))) picks each of r1..r4 with equal
/// probability. Non-union input is a defect (std::logic_error).
Regexp pick_regexp(const Regexp& r, RandomSource& rng);

/// The one-symbol word of a singleton expression.
Word convert_singleton(const Regexp& r);

/// Generates a member of L(r). Each Kleene star visit draws a repetition
/// count in [0, cfg.max_star_reps] and generates that many body words.
Word gen_word(const Regexp& r, GenConfig& cfg);

/// gen_word with the default star bound and a fresh source seeded by `seed`.
Word gen_word(const Regexp& r, std::uint64_t seed);

}  // namespace relang

#endif  // RELANG_WORDGEN_HPP
