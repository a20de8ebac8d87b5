#include "codedshift/core.hpp"

#include <algorithm>
#include <map>
#include <memory>

#include "codedshift/codecheck.hpp"
#include "codedshift/errors.hpp"

namespace codedshift {

Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
    if (names_.empty()) raise("EmptyAlphabet", "alphabet must have at least one symbol");
    for (std::size_t i = 0; i < names_.size(); ++i) {
        if (names_[i].empty()) raise("BadSymbolName", "symbol names must be non-empty");
        for (std::size_t j = i + 1; j < names_.size(); ++j)
            if (names_[i] == names_[j])
                raise("DuplicateSymbol", "duplicate symbol name '" + names_[i] + "'");
    }
}

std::optional<Symbol> Alphabet::find(const std::string& name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return static_cast<Symbol>(i);
    return std::nullopt;
}

Alphabet Alphabet::numeric(std::size_t k) {
    std::vector<std::string> names;
    names.reserve(k);
    for (std::size_t i = 0; i < k; ++i) names.push_back(std::to_string(i));
    return Alphabet(std::move(names));
}

ExplicitCodeSet validate_code_set(const std::vector<Word>& words, const Alphabet& alphabet) {
    if (words.empty()) raise("EmptyCodeSet", "a code set needs at least one word");
    WordSet set;
    for (const Word& w : words) {
        if (w.empty()) raise("EmptyWord", "code words must be non-empty");
        for (std::size_t pos = 0; pos < w.size(); ++pos)
            if (w[pos] >= alphabet.size())
                raise("BadSymbol", "symbol index out of alphabet at position " + std::to_string(pos));
        if (!set.insert(w).second) raise("DuplicateWord", "duplicate code word");
    }
    return ExplicitCodeSet{alphabet, std::move(set)};
}

CodeFamily::CodeFamily(std::string name, Alphabet alphabet, CountSeries counts,
                       EnumerateFn enumerate, CodeFlags flags,
                       std::optional<double> exact_hl,
                       std::optional<double> closed_form_f_at_hl,
                       bool prefix_suffix_pattern)
    : name_(std::move(name)),
      alphabet_(std::move(alphabet)),
      counts_(std::move(counts)),
      enumerate_(std::move(enumerate)),
      flags_(flags),
      exact_hl_(exact_hl),
      closed_form_f_at_hl_(closed_form_f_at_hl),
      prefix_suffix_pattern_(prefix_suffix_pattern) {}

CodeFamily CodeFamily::from_explicit(const ExplicitCodeSet& set, std::string name) {
    std::map<long, BigInt> counts;
    long total_len = 0;
    for (const Word& w : set.words) {
        counts[static_cast<long>(w.size())] += 1;
        total_len += static_cast<long>(w.size());
    }
    auto words = std::make_shared<const WordSet>(set.words);
    CodeFamily family(
        std::move(name), set.alphabet, CountSeries::from_length_counts(std::move(counts)),
        [words](long max_len, const WordSink& sink) {
            for (const Word& w : *words)
                if (static_cast<long>(w.size()) <= max_len) sink(w);
        },
        CodeFlags{}, -kInf);
    if (total_len <= 4096) {
        CodeVerdict verdict = sardinas_patterson(set);
        family.flags_.unique_decomposition = {
            verdict.kind == CodeVerdict::Kind::holds ? FlagValue::yes : FlagValue::no,
            FlagProvenance::decided};
    }
    // finite code: the limit shift is empty, trivially disjoint from B
    family.flags_.b_disjoint_from_limit = {FlagValue::yes, FlagProvenance::decided};
    return family;
}

void CodeFamily::enumerate(long max_len, const WordSink& sink) const {
    if (!enumerate_) raise("EnumeratorUnavailable", "family '" + name_ + "' has no enumerator");
    if (max_len < 1) raise("BadArgument", "max_len must be >= 1");
    enumerate_(max_len, sink);
}

BigInt counts_of(const CodeFamily& family, long n) {
    if (n < 1) raise("BadArgument", "word lengths start at 1");
    return family.counts().count(n);
}

WordSet enumerate_code_words(const CodeFamily& family, long max_len) {
    WordSet out;
    family.enumerate(max_len, [&](const Word& w) { out.insert(w); });
    return out;
}

} // namespace codedshift
