#pragma once

#include <string>
#include <string_view>

namespace polarity {

// Snowball stemming algorithm for Spanish. Input must already be lowercase;
// accented vowels are handled (and stripped by the algorithm's final step).
// Pure and deterministic.
std::string spanish_stem(std::string_view token_utf8);

}  // namespace polarity
