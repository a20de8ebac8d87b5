#ifndef CODEDSHIFT_SERIES_HPP
#define CODEDSHIFT_SERIES_HPP

#include <functional>
#include <map>
#include <optional>
#include <utility>

#include <gmpxx.h>

#include "codedshift/interval.hpp"

namespace codedshift {

// Counts are exact: Catalan-scale growth overflows 64 bits near length 70.
using BigInt = mpz_class;

// Natural log of a positive big integer, accurate to ~1 ulp of double.
double ln_big(const BigInt& value);

enum class CertProvenance { builtin_proof, user_asserted };

// Asserts count(j) <= scale * e^{j*rate} * j^{-power} for every j >= 1.
// The polynomial factor is what makes tails finite for families whose
// counts sit exactly on the exponential rate (dyadic-block families).
struct GrowthCertificate {
    double scale = 1.0;
    double rate = 0.0;
    double power = 0.0; // >= 0
    CertProvenance provenance = CertProvenance::builtin_proof;
};

// Asserts that between consecutive nonzero lengths j < j' the counts obey
// count(j') <= ratio * count(j) and j' - j >= min_gap.
struct RatioCertificate {
    double ratio = 1.0;
    long min_gap = 1;
    CertProvenance provenance = CertProvenance::builtin_proof;
};

struct SeriesTerm {
    long length = 0;
    BigInt count; // > 0
};

// One term per nonzero count, in strictly increasing length order.
using SeriesCursor = std::function<std::optional<SeriesTerm>()>;

// The coefficient sequence |C_n| of the generating function.  Immutable;
// cursors returned by open_cursor() are independent single-pass streams.
class CountSeries {
public:
    using CountFn = std::function<BigInt(long)>;
    using OpenCursorFn = std::function<SeriesCursor()>;

    CountSeries(CountFn count, OpenCursorFn open_cursor,
                std::optional<long> max_length = {},
                std::optional<GrowthCertificate> growth = {},
                std::optional<RatioCertificate> ratio = {});

    // Exact |C_n| for n >= 1.
    BigInt count(long n) const;

    SeriesCursor open_cursor() const { return open_cursor_(); }

    std::optional<long> max_length() const { return max_length_; }
    bool finite() const { return max_length_.has_value(); }
    const std::optional<GrowthCertificate>& growth() const { return growth_; }
    const std::optional<RatioCertificate>& ratio() const { return ratio_; }

    // Finite series given by its nonzero length -> count table.
    static CountSeries from_length_counts(std::map<long, BigInt> counts);

private:
    CountFn count_;
    OpenCursorFn open_cursor_;
    std::optional<long> max_length_;
    std::optional<GrowthCertificate> growth_;
    std::optional<RatioCertificate> ratio_;

    void spot_check_certificates() const;
};

} // namespace codedshift

#endif
