#include "codedshift/series.hpp"

#include <cmath>
#include <memory>

#include "codedshift/errors.hpp"

namespace codedshift {

double ln_big(const BigInt& value) {
    long exp2 = 0;
    double mant = mpz_get_d_2exp(&exp2, value.get_mpz_t());
    return std::log(mant) + static_cast<double>(exp2) * M_LN2;
}

CountSeries::CountSeries(CountFn count, OpenCursorFn open_cursor,
                         std::optional<long> max_length,
                         std::optional<GrowthCertificate> growth,
                         std::optional<RatioCertificate> ratio)
    : count_(std::move(count)),
      open_cursor_(std::move(open_cursor)),
      max_length_(max_length),
      growth_(growth),
      ratio_(ratio) {
    if (!count_ || !open_cursor_) raise("BadArgument", "count series needs count and cursor functions");
    if (growth_ && !(growth_->scale > 0 && growth_->power >= 0 && std::isfinite(growth_->rate)))
        raise("BadCertificate", "growth certificate needs scale > 0, power >= 0, finite rate");
    if (ratio_ && !(ratio_->ratio > 0 && ratio_->min_gap >= 1))
        raise("BadCertificate", "ratio certificate needs ratio > 0 and min_gap >= 1");
    spot_check_certificates();
}

BigInt CountSeries::count(long n) const {
    if (n < 1) raise("BadArgument", "count is defined for lengths n >= 1");
    if (max_length_ && n > *max_length_) return 0;
    return count_(n);
}

namespace {
constexpr long kSpotCheckLen = 200;
}

void CountSeries::spot_check_certificates() const {
    if (!growth_ && !ratio_) return;
    auto cur = open_cursor_();
    std::optional<SeriesTerm> prev;
    while (auto term = cur()) {
        if (term->length > kSpotCheckLen) break;
        if (term->count <= 0) raise("BadSeries", "cursor produced a non-positive count");
        if (prev && term->length <= prev->length)
            raise("BadSeries", "cursor lengths must strictly increase");
        double lnc = ln_big(term->count);
        if (growth_) {
            double bound = std::log(growth_->scale) + growth_->rate * double(term->length) -
                           growth_->power * std::log(double(term->length));
            if (lnc > bound + 1e-9)
                raise("CertificateViolation",
                      "growth certificate fails at length " + std::to_string(term->length));
        }
        if (ratio_ && prev) {
            if (term->length - prev->length < ratio_->min_gap)
                raise("CertificateViolation",
                      "ratio certificate gap fails at length " + std::to_string(term->length));
            if (lnc > ln_big(prev->count) + std::log(ratio_->ratio) + 1e-9)
                raise("CertificateViolation",
                      "ratio certificate fails at length " + std::to_string(term->length));
        }
        prev = *term;
    }
}

CountSeries CountSeries::from_length_counts(std::map<long, BigInt> counts) {
    for (auto it = counts.begin(); it != counts.end();) {
        if (it->second == 0) it = counts.erase(it);
        else if (it->second < 0 || it->first < 1) raise("BadSeries", "invalid length/count entry");
        else ++it;
    }
    long max_len = counts.empty() ? 1 : counts.rbegin()->first;
    auto table = std::make_shared<const std::map<long, BigInt>>(std::move(counts));
    return CountSeries(
        [table](long n) -> BigInt {
            auto it = table->find(n);
            return it == table->end() ? BigInt(0) : it->second;
        },
        [table]() -> SeriesCursor {
            auto it = std::make_shared<std::map<long, BigInt>::const_iterator>(table->begin());
            return [table, it]() -> std::optional<SeriesTerm> {
                if (*it == table->end()) return std::nullopt;
                SeriesTerm t{(*it)->first, (*it)->second};
                ++*it;
                return t;
            };
        },
        max_len);
}

} // namespace codedshift
