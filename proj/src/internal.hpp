#ifndef CODEDSHIFT_SRC_INTERNAL_HPP
#define CODEDSHIFT_SRC_INTERNAL_HPP

#include <string>

#include "codedshift/core.hpp"
#include "codedshift/errors.hpp"

namespace codedshift::detail {

// Word-search internals pack symbols into byte strings.
inline void require_byte_alphabet(const Alphabet& alphabet) {
    if (alphabet.size() > 256)
        raise("AlphabetTooLarge", "word-search operations support at most 256 symbols");
}

inline std::string to_bytes(const Word& w) {
    std::string s;
    s.reserve(w.size());
    for (Symbol x : w) s.push_back(static_cast<char>(static_cast<unsigned char>(x)));
    return s;
}

inline Word from_bytes(const std::string& s) {
    Word w;
    w.reserve(s.size());
    for (char c : s) w.push_back(static_cast<Symbol>(static_cast<unsigned char>(c)));
    return w;
}

} // namespace codedshift::detail

#endif
