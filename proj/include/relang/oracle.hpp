// oracle.hpp -- deterministic bounded semantics for L(r)
//
// enumerate_upto computes the exact set of language members up to a length
// bound; member decides containment for a single word. The two are
// implemented independently of the random generator (and of each other's
// search order), so they can serve as oracles for it and for one another.

#ifndef RELANG_ORACLE_HPP
#define RELANG_ORACLE_HPP

#include <cstddef>
#include <vector>

#include "relang/regexp.hpp"

namespace relang {

/// Shortlex order: ascending length, then lexicographic by symbol code.
struct ShortlexLess {
    bool operator()(const Word& a, const Word& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    }
};

/// A bounded language slice: every member of L(r) with length <= bound,
/// shortlex-sorted and duplicate-free.
struct LanguageSample {
    std::vector<Word> words;
    std::size_t bound = 0;

    bool contains(const Word& w) const;
    std::size_t size() const { return words.size(); }
};

/// Exactly { w in L(r) : |w| <= max_len }.
LanguageSample enumerate_upto(const Regexp& r, std::size_t max_len);

/// True iff w is a member of L(r).
bool member(const Regexp& r, const Word& w);

/// True iff the two languages agree on every word of length <= max_len.
bool lang_equal_upto(const Regexp& r1, const Regexp& r2, std::size_t max_len);

}  // namespace relang

#endif  // RELANG_ORACLE_HPP
