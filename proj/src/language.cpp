#include "codedshift/language.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <set>
#include <unordered_set>

#include "codedshift/errors.hpp"
#include "codedshift/genfun.hpp"
#include "internal.hpp"

namespace codedshift {

using detail::from_bytes;
using detail::to_bytes;

namespace {

struct Budget {
    long long left;
    void charge(long long amount = 1) {
        left -= amount;
        if (left < 0) raise("BudgetExceeded", "language oracle state budget exceeded");
    }
};

WordSet to_word_set(const std::set<std::string>& strings) {
    WordSet out;
    for (const std::string& s : strings) out.insert(from_bytes(s));
    return out;
}

// Single-word data collected in one enumeration pass.
struct WordPassData {
    std::set<std::string> subwords;   // length exactly n
    std::set<std::string> prefixes;   // length exactly n
    std::set<std::string> suffixes;   // length exactly n
    std::set<std::string> seed_suffixes;    // lengths 1..n-1 (window left parts)
    std::set<std::string> short_words;      // full words of length < n
    std::vector<std::set<std::string>> prefixes_by_len; // [1..n], window right parts
};

WordPassData collect_word_data(const CodeFamily& code, long n, long cap, Budget& budget) {
    WordPassData d;
    d.prefixes_by_len.resize(static_cast<std::size_t>(n) + 1);
    code.enumerate(cap, [&](const Word& word) {
        budget.charge();
        const std::string w = to_bytes(word);
        const long len = static_cast<long>(w.size());
        if (len >= n) {
            for (long at = 0; at + n <= len; ++at) {
                if (d.subwords.insert(w.substr(at, n)).second) budget.charge();
            }
            d.prefixes.insert(w.substr(0, n));
            d.suffixes.insert(w.substr(len - n));
        } else {
            d.short_words.insert(w);
        }
        for (long take = 1; take < n && take <= len; ++take) {
            if (d.seed_suffixes.insert(w.substr(len - take)).second) budget.charge();
        }
        for (long take = 1; take <= n && take <= len; ++take) {
            if (d.prefixes_by_len[take].insert(w.substr(0, take)).second) budget.charge();
        }
    });
    return d;
}

} // namespace

LanguageSample sample_language(const CodeFamily& code, long n, long cap,
                               const LanguageOptions& options) {
    if (n < 1) raise("BadArgument", "window length n must be >= 1");
    if (cap < 1) raise("BadArgument", "code-length cap must be >= 1");
    detail::require_byte_alphabet(code.alphabet());

    Budget budget{options.budget};
    WordPassData d = collect_word_data(code, n, cap, budget);

    // windows across word boundaries: a (possibly full) code-word suffix
    // extended by whole code words and finished by a code-word prefix
    std::set<std::string> language = d.subwords;
    std::set<std::string> visited;
    std::deque<std::string> frontier;
    for (const std::string& s : d.seed_suffixes)
        if (visited.insert(s).second) frontier.push_back(s);
    while (!frontier.empty()) {
        const std::string w = std::move(frontier.front());
        frontier.pop_front();
        const long need = n - static_cast<long>(w.size());
        for (const std::string& p : d.prefixes_by_len[need]) {
            if (language.insert(w + p).second) budget.charge();
        }
        for (const std::string& u : d.short_words) {
            if (static_cast<long>(u.size()) >= need) continue;
            std::string next = w + u;
            if (visited.insert(next).second) {
                budget.charge();
                frontier.push_back(std::move(next));
            }
        }
    }

    LanguageSample out;
    out.n = n;
    out.cap = cap;
    out.l = to_word_set(language);
    out.w = to_word_set(d.subwords);
    out.p = to_word_set(d.prefixes);
    out.s = to_word_set(d.suffixes);
    return out;
}

HlEstimate estimate_hl(const CodeFamily& code, long n_max, long cap,
                       const LanguageOptions& options) {
    if (n_max < 1) raise("BadArgument", "n_max must be >= 1");
    if (cap < n_max) raise("BadArgument", "cap must be >= n_max");
    detail::require_byte_alphabet(code.alphabet());

    Budget budget{options.budget};
    // windows of length n_max, plus every window of shorter words directly;
    // all shorter subwords are then windows of these
    std::set<std::string> top;
    std::vector<std::set<std::string>> w_sets(static_cast<std::size_t>(n_max) + 1);
    code.enumerate(cap, [&](const Word& word) {
        budget.charge();
        const std::string w = to_bytes(word);
        const long len = static_cast<long>(w.size());
        if (len >= n_max) {
            for (long at = 0; at + n_max <= len; ++at)
                if (top.insert(w.substr(at, n_max)).second) budget.charge();
        } else {
            for (long k = 1; k <= len; ++k)
                for (long at = 0; at + k <= len; ++at)
                    if (w_sets[k].insert(w.substr(at, k)).second) budget.charge();
        }
    });
    for (const std::string& w : top) {
        w_sets[n_max].insert(w);
        for (long k = 1; k < n_max; ++k)
            for (long at = 0; at + k <= n_max; ++at)
                if (w_sets[k].insert(w.substr(at, k)).second) budget.charge();
    }

    HlEstimate out;
    out.exact = code.exact_hl();
    for (long k = 1; k <= n_max; ++k)
        if (!w_sets[k].empty())
            out.values.emplace_back(k, std::log(double(w_sets[k].size())) / double(k));

    const long window_lo = std::max<long>(1, n_max / 2);
    double vmax = -kInf, vmin = kInf;
    for (const auto& [k, v] : out.values) {
        if (k < window_lo) continue;
        vmax = std::max(vmax, v);
        vmin = std::min(vmin, v);
    }
    out.estimate = vmax;
    if (std::isfinite(vmax)) {
        double half = std::max(vmax - vmin, 2.0 / double(n_max));
        out.window = Interval{vmax - half, vmax + half};
    }
    return out;
}

BoundReport verify_wordcount(const CodeFamily& code, double h, long n_max, long cap,
                             const LanguageOptions& options) {
    if (!std::isfinite(h)) raise("BadArgument", "h must be finite");
    BoundReport report;
    report.params["h"] = h;
    report.passed = true;
    for (long n = 1; n <= n_max; ++n) {
        LanguageSample sample = sample_language(code, n, cap, options);
        BoundCheckLine line;
        line.index = n;
        line.lhs = double(sample.l.size());
        line.rhs = std::exp(double(n) * h);
        line.ok = line.lhs >= line.rhs * (1 - 1e-12);
        report.passed = report.passed && line.ok;
        report.lines.push_back(line);
    }
    return report;
}

BoundReport verify_aux1_bound(const CodeFamily& code, double alpha, double m_scale, long n_max,
                              long cap, const LanguageOptions& options) {
    Interval f = eval_f(code.counts(), alpha, 4096);
    if (!(f.upper < 1.0))
        raise("PreconditionFailed", "f(alpha) is not certified below 1 at alpha=" + std::to_string(alpha));

    std::vector<LanguageSample> samples;
    samples.reserve(static_cast<std::size_t>(n_max));
    for (long n = 1; n <= n_max; ++n) samples.push_back(sample_language(code, n, cap, options));

    double m = m_scale;
    if (!(m > 0)) {
        m = 0;
        for (const LanguageSample& s : samples) {
            double biggest = double(std::max({s.w.size(), s.p.size(), s.s.size()}));
            m = std::max(m, biggest * std::exp(-alpha * double(s.n)));
        }
        m += 1.0;
    }
    for (const LanguageSample& s : samples) {
        double envelope = m * std::exp(alpha * double(s.n));
        if (!(double(s.w.size()) < envelope && double(s.p.size()) < envelope &&
              double(s.s.size()) < envelope))
            raise("PreconditionFailed",
                  "M too small for the prefix/suffix/subword envelope at n=" + std::to_string(s.n));
    }

    BoundReport report;
    report.params["alpha"] = alpha;
    report.params["M"] = m;
    report.params["f_lower"] = f.lower;
    report.params["f_upper"] = f.upper;
    report.passed = true;
    for (const LanguageSample& s : samples) {
        BoundCheckLine line;
        line.index = s.n;
        line.lhs = double(s.l.size());
        // 1/(1 - f.lower) under-states the true right side, so a pass here
        // implies the displayed inequality
        line.rhs = std::exp(alpha * double(s.n)) *
                   (m + double(s.n) * m * m / (1.0 - f.lower));
        line.ok = line.lhs < line.rhs;
        report.passed = report.passed && line.ok;
        report.lines.push_back(line);
    }
    return report;
}

BoundReport verify_aux2_growth(const CodeFamily& code, double alpha, long t, long k_max) {
    if (t < 1 || k_max < 1) raise("BadArgument", "t and k_max must be >= 1");
    const PropertyFlag& ud = code.flags().unique_decomposition;
    if (ud.value != FlagValue::yes)
        raise("UniqueDecompositionUnknown",
              "the concatenation lower bound needs unique decomposition (verified or asserted)");

    std::vector<BigInt> counts(static_cast<std::size_t>(t) + 1);
    long double eta = 0.0L;
    for (long j = 1; j <= t; ++j) {
        counts[j] = code.counts().count(j);
        if (counts[j] > 0)
            eta += expl((long double)ln_big(counts[j]) - (long double)j * (long double)alpha);
    }
    if (!(eta > 1.0L))
        raise("EtaNotAboveOne", "truncated series eta = " + std::to_string((double)eta) +
                                    " does not exceed 1 at alpha=" + std::to_string(alpha));

    BoundReport report;
    report.params["alpha"] = alpha;
    report.params["t"] = double(t);
    report.params["eta"] = double(eta);
    report.passed = true;

    // dp[N] = sum over compositions N = n_1+...+n_k (parts <= t) of the
    // products |C_{n_1}|...|C_{n_k}|, exact
    std::vector<BigInt> dp(static_cast<std::size_t>(t) + 1);
    for (long j = 1; j <= t; ++j) dp[j] = counts[j];
    for (long k = 1; k <= k_max; ++k) {
        if (k > 1) {
            std::vector<BigInt> next(static_cast<std::size_t>(t) * k + 1);
            for (std::size_t n = 0; n < dp.size(); ++n) {
                if (dp[n] == 0) continue;
                for (long j = 1; j <= t; ++j)
                    if (counts[j] > 0) next[n + j] += dp[n] * counts[j];
            }
            dp = std::move(next);
        }
        // the length maximizing the series term e^{-N alpha} * dp[N]
        long best_n = 0;
        double best_term = -kInf;
        for (std::size_t n = 1; n < dp.size(); ++n) {
            if (dp[n] == 0) continue;
            double term = ln_big(dp[n]) - alpha * double(n);
            if (term > best_term) {
                best_term = term;
                best_n = static_cast<long>(n);
            }
        }
        BoundCheckLine line;
        line.index = k;
        line.lhs = ln_big(dp[best_n]); // ln scale
        line.rhs = alpha * double(best_n) + double(k) * std::log(double(eta)) -
                   std::log(double(t) * double(k));
        line.ok = line.lhs >= line.rhs - 1e-9;
        report.passed = report.passed && line.ok;
        report.lines.push_back(line);
    }
    return report;
}

} // namespace codedshift
