// password.hpp -- password generation from a regular expression
//
// A valid password has length >= 10 and contains at least one lowercase
// letter, one uppercase letter, and one special character from $ & ! *.
// password_regexp() describes exactly the strings made of those three
// classes that contain one of each; generation samples it (with a small
// star bound so passwords stay short) and retries until long enough.

#ifndef RELANG_PASSWORD_HPP
#define RELANG_PASSWORD_HPP

#include <cstdint>
#include <span>
#include <string>
#include <string_view>

#include "relang/regexp.hpp"
#include "relang/wordgen.hpp"

namespace relang {

inline constexpr std::size_t kPasswordMinLength = 10;
inline constexpr std::size_t kPasswordMaxStarReps = 5;
inline constexpr std::size_t kPasswordMaxAttempts = 10000;

std::span<const Symbol> lowercase_symbols();  // a..z
std::span<const Symbol> uppercase_symbols();  // A..Z
std::span<const Symbol> special_symbols();    // $ & ! *

const Regexp& password_regexp();

bool is_passwd(std::string_view p);

/// Draws words from `pattern` until one converts to a string of at least
/// min_len characters; throws std::runtime_error after max_attempts misses
/// (which signals a misconfigured pattern or bound, not bad luck).
std::string generate_matching(const Regexp& pattern, GenConfig& cfg, std::size_t min_len,
                              std::size_t max_attempts);

std::string generate_password(RandomSource& rng);
std::string generate_password(std::uint64_t seed);

}  // namespace relang

#endif  // RELANG_PASSWORD_HPP
