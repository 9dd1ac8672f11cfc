#pragma once

#include <string>
#include <string_view>

namespace emocap {

/// Porter (1980) suffix-stripping stemmer for lowercase ASCII words. Words
/// of length <= 2 and non-alphabetic words are returned unchanged.
std::string PorterStem(std::string_view word);

}  // namespace emocap
