// examples.hpp -- worked example languages and their validating predicates

#ifndef RELANG_EXAMPLES_HPP
#define RELANG_EXAMPLES_HPP

#include <cstdint>
#include <optional>

#include "relang/regexp.hpp"

namespace relang {

/// {w over {a,b} | w ends with an a}, built as (a U b)*a.
const Regexp& ends_with_a();

/// Binary numerals without leading zeroes: (0 U 1(0 U 1)*).
const Regexp& bin_nums();

/// {w over {f,s,m,x,y} | w contains "fsm" as a substring}.
const Regexp& contains_fsm();

bool is_ends_with_a(const Word& w);

/// Non-empty, all bits, and no leading zero unless the word is exactly "0".
bool is_bin_nums(const Word& w);

/// Random member of bin_nums(); at most `max_reps` star repetitions,
/// 10 when not given.
Word generate_bn(std::uint64_t seed, std::optional<std::size_t> max_reps = std::nullopt);

}  // namespace relang

#endif  // RELANG_EXAMPLES_HPP
