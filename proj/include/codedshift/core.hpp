#ifndef CODEDSHIFT_CORE_HPP
#define CODEDSHIFT_CORE_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "codedshift/series.hpp"

namespace codedshift {

using Symbol = std::uint32_t;

// A word is a non-empty sequence of alphabet indices.  Length-1 words are
// allowed: several of the builtin families use single-letter code words.
using Word = std::vector<Symbol>;

// Canonical order everywhere: shorter first, then lexicographic.
struct WordLess {
    bool operator()(const Word& a, const Word& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    }
};

using WordSet = std::set<Word, WordLess>;
using WordSink = std::function<void(const Word&)>;

class Alphabet {
public:
    explicit Alphabet(std::vector<std::string> names);

    std::size_t size() const { return names_.size(); }
    const std::string& name(Symbol s) const { return names_.at(s); }
    std::optional<Symbol> find(const std::string& name) const;
    const std::vector<std::string>& names() const { return names_; }

    bool operator==(const Alphabet& other) const { return names_ == other.names_; }

    // {"0", "1", ..., "k-1"}
    static Alphabet numeric(std::size_t k);

private:
    std::vector<std::string> names_;
};

struct ExplicitCodeSet {
    Alphabet alphabet;
    WordSet words;
};

// Validated construction: rejects empty sets, empty words, duplicates and
// out-of-alphabet symbols.
ExplicitCodeSet validate_code_set(const std::vector<Word>& words, const Alphabet& alphabet);

enum class FlagValue { yes, no, unknown };

enum class FlagProvenance {
    literature, // asserted in the published source for this family
    decided,    // complete decision procedure ran at construction
    bounded,    // verified up to a finite bound only
    unknown,
};

struct PropertyFlag {
    FlagValue value = FlagValue::unknown;
    FlagProvenance provenance = FlagProvenance::unknown;

    bool established() const { return value == FlagValue::yes; }
};

struct CodeFlags {
    PropertyFlag unique_decipherability;
    PropertyFlag unique_decomposition;
    PropertyFlag b_disjoint_from_limit; // B_C and the limit shift share no point
};

// A code-word set: explicit finite list or parametric infinite family with
// exact counts, a bounded enumerator and optional certified metadata.
class CodeFamily {
public:
    using EnumerateFn = std::function<void(long max_len, const WordSink&)>;

    CodeFamily(std::string name, Alphabet alphabet, CountSeries counts,
               EnumerateFn enumerate, CodeFlags flags = {},
               std::optional<double> exact_hl = {},
               std::optional<double> closed_form_f_at_hl = {},
               bool prefix_suffix_pattern = false);

    // Explicit finite set; runs the decomposition decision procedure to fill
    // in the unique_decomposition flag.
    static CodeFamily from_explicit(const ExplicitCodeSet& set, std::string name = "code");

    const std::string& name() const { return name_; }
    const Alphabet& alphabet() const { return alphabet_; }
    const CountSeries& counts() const { return counts_; }
    const CodeFlags& flags() const { return flags_; }
    CodeFlags& flags() { return flags_; }
    bool has_enumerator() const { return static_cast<bool>(enumerate_); }

    // Exact h(L_C) when known: -inf for finite families (empty limit shift).
    std::optional<double> exact_hl() const { return exact_hl_; }
    // Closed-form value of f(h(L)) when the literature provides one.
    std::optional<double> closed_form_f_at_hl() const { return closed_form_f_at_hl_; }
    // Family-wide proof that no word is both a proper prefix and a proper
    // suffix of code words (supports the decipherability certificate).
    bool prefix_suffix_pattern() const { return prefix_suffix_pattern_; }

    // Stream all code words with |w| <= max_len, shortest first then lex.
    void enumerate(long max_len, const WordSink& sink) const;

private:
    std::string name_;
    Alphabet alphabet_;
    CountSeries counts_;
    EnumerateFn enumerate_;
    CodeFlags flags_;
    std::optional<double> exact_hl_;
    std::optional<double> closed_form_f_at_hl_;
    bool prefix_suffix_pattern_ = false;
};

// |C_n|, exact.
BigInt counts_of(const CodeFamily& family, long n);

// All code words with length <= max_len as a canonical set.
WordSet enumerate_code_words(const CodeFamily& family, long max_len);

} // namespace codedshift

#endif
