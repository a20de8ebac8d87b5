#ifndef CODEDSHIFT_CODECHECK_HPP
#define CODEDSHIFT_CODECHECK_HPP

#include <optional>
#include <string>
#include <vector>

#include "codedshift/core.hpp"

namespace codedshift {

// A word with two distinct factorizations into code words; checkable.
struct FactorizationWitness {
    Word word;
    std::vector<Word> parsing_a;
    std::vector<Word> parsing_b;

    bool validates() const; // both parsings concatenate to word and differ
};

enum class CodeProperty { unique_decomposition, unique_decipherability };

struct CodeVerdict {
    enum class Kind { holds, fails, holds_up_to_bound, certified };

    CodeProperty property = CodeProperty::unique_decomposition;
    Kind kind = Kind::holds_up_to_bound;
    std::optional<FactorizationWitness> witness; // kind == fails
    long bound = 0;                              // kind == holds_up_to_bound
    std::string reason;                          // kind == certified
};

struct SearchOptions {
    long long budget = 10'000'000;
};

// Shortest word (then lexicographically least) of length <= max_len with two
// distinct factorizations into code words; parsings are the two boundary-
// lexicographically least ones.  Absent means unique decomposition holds for
// all words up to max_len.
std::optional<FactorizationWitness> find_double_factorization(
    const CodeFamily& code, long max_len, const SearchOptions& options = {});

// Complete decision of unique decomposition for a finite code.  Dangling
// suffixes live in the finite universe of code-word suffixes, so iteration
// terminates; on failure a canonical witness is reconstructed.
CodeVerdict sardinas_patterson(const ExplicitCodeSet& code, const SearchOptions& options = {});

// The prefix/suffix disjointness test for unique decipherability: certified
// when no enumerated word is both a proper prefix and a proper suffix of
// code words AND the family carries a pattern proof covering all lengths;
// otherwise a bounded bi-parsing search either fails with a witness or the
// verdict stays bounded.
CodeVerdict check_prefix_suffix_disjoint(const CodeFamily& code, long max_len,
                                         const SearchOptions& options = {});

} // namespace codedshift

#endif
