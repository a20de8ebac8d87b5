#ifndef CODEDSHIFT_LANGUAGE_HPP
#define CODEDSHIFT_LANGUAGE_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "codedshift/core.hpp"
#include "codedshift/interval.hpp"

namespace codedshift {

struct LanguageOptions {
    long long budget = 10'000'000; // partial-word state cap; exceeded -> error
};

// Brute-force finite sample of the language of the coded subshift generated
// by the code words of length <= cap.  L_n is every length-n window of a
// concatenation of capped code words (a monotone under-approximation of the
// true language); W/P/S are the subwords, prefixes and suffixes of single
// capped code words.
struct LanguageSample {
    long n = 0;
    long cap = 0;
    WordSet l;
    WordSet w;
    WordSet p;
    WordSet s;
};

LanguageSample sample_language(const CodeFamily& code, long n, long cap,
                               const LanguageOptions& options = {});

// ln|W_n|/n sequence with the max over the trailing window [n_max/2, n_max]
// as the point estimate; the window widens with the observed spread so that
// slowly converging families stay honestly bracketed.
struct HlEstimate {
    std::vector<std::pair<long, double>> values; // (n, ln|W_n|/n), |W_n| > 0
    double estimate = -kInf;
    Interval window{-kInf, -kInf};
    std::optional<double> exact; // exact h(L) when the family knows it
};

HlEstimate estimate_hl(const CodeFamily& code, long n_max, long cap,
                       const LanguageOptions& options = {});

struct BoundCheckLine {
    long index = 0;  // n or k
    double lhs = 0;  // ln scale where noted
    double rhs = 0;
    bool ok = false;
};

struct BoundReport {
    bool passed = false;
    std::vector<BoundCheckLine> lines;
    std::map<std::string, double> params;
};

// |L_n| >= e^{n h} for each n <= n_max (L_n from the oracle, a subset of the
// true language, so failures at a generous cap indicate h is too large).
BoundReport verify_wordcount(const CodeFamily& code, double h, long n_max, long cap,
                             const LanguageOptions& options = {});

// The language upper bound |L_n| < e^{n a}(M + n M^2 / (1 - f(a))), checked
// with oracle counts and a certified value of f(a) < 1.  m_scale <= 0 picks
// M from the sampled maximum of the prefix/suffix/subword counts plus one.
BoundReport verify_aux1_bound(const CodeFamily& code, double alpha, double m_scale, long n_max,
                              long cap, const LanguageOptions& options = {});

// The concatenation lower bound: with eta = sum_{j<=t} |C_j| e^{-j a} > 1,
// the maximizing-N composition count exceeds e^{N a} eta^k / (t k) for each
// k <= k_max; composition counts are exact dynamic-programming values.
BoundReport verify_aux2_growth(const CodeFamily& code, double alpha, long t, long k_max);

} // namespace codedshift

#endif
