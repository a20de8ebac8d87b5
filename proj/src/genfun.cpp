#include "codedshift/genfun.hpp"

#include <cmath>

#include "codedshift/errors.hpp"

namespace codedshift {

namespace {

// Relative error budget for a truncated sum: per-term exponentials are
// evaluated in 80-bit precision from exact counts, so the true relative
// error stays near 1e-15 even for counts with tens of thousands of bits.
constexpr long double kSumErrRel = 4e-14L;
constexpr double kSumClamp = 1e300;

long double ln_big_l(const BigInt& value) {
    long exp2 = 0;
    double mant = mpz_get_d_2exp(&exp2, value.get_mpz_t());
    return logl(static_cast<long double>(mant)) +
           static_cast<long double>(exp2) * 0.6931471805599453094172321214581766L;
}

struct TermAccum {
    long double sum = 0.0L;
    long double comp = 0.0L;
    bool exact = true; // stays true only on the integer path (alpha == 0)

    void add(long double term) {
        long double t = sum + term;
        if (fabsl(sum) >= fabsl(term))
            comp += (sum - t) + term;
        else
            comp += (term - t) + sum;
        sum = t;
    }
    long double total() const { return sum + comp; }
};

long double term_value(const SeriesTerm& term, double alpha, int weight, bool& exact) {
    long double tv;
    if (mpz_sizeinbase(term.count.get_mpz_t(), 2) <= 53) {
        auto c = static_cast<long double>(mpz_get_d(term.count.get_mpz_t())); // exact
        if (alpha == 0.0)
            tv = c;
        else {
            exact = false;
            tv = c * expl(-static_cast<long double>(term.length) * static_cast<long double>(alpha));
        }
    } else {
        exact = false;
        tv = expl(ln_big_l(term.count) -
                  static_cast<long double>(term.length) * static_cast<long double>(alpha));
    }
    if (weight) tv *= static_cast<long double>(term.length);
    return tv;
}

// Upper bound on the dropped tail of sum count(j) * j^weight * e^{-j alpha}
// beyond the last consumed term.  +inf when no certificate applies.
long double tail_upper(const CountSeries& s, double alpha, long last_length,
                       long double last_term, int weight) {
    long double best = HUGE_VALL;
    const long double J = static_cast<long double>(last_length);
    if (const auto& g = s.growth()) {
        const long double M = g->scale;
        const long double gamma = g->power;
        if (alpha > g->rate) {
            const long double q = expl(-(static_cast<long double>(alpha) -
                                         static_cast<long double>(g->rate)));
            long double bound;
            if (weight == 0) {
                bound = M * powl(J + 1, -gamma) * powl(q, J + 1) / (1 - q);
            } else if (gamma >= 1) {
                bound = M * powl(J + 1, 1 - gamma) * powl(q, J + 1) / (1 - q);
            } else {
                // j^{1-gamma} <= j for gamma >= 0
                bound = M * powl(q, J + 1) * ((J + 1) - J * q) / ((1 - q) * (1 - q));
            }
            if (bound < best) best = bound;
        } else if (alpha == g->rate) {
            // purely polynomial tail: sum_{j>J} j^{weight-gamma}
            if (weight == 0 && gamma > 1) {
                long double bound = M * powl(J, 1 - gamma) / (gamma - 1);
                if (bound < best) best = bound;
            } else if (weight == 1 && gamma > 2) {
                long double bound = M * powl(J, 2 - gamma) / (gamma - 2);
                if (bound < best) best = bound;
            }
        }
    }
    if (const auto& r = s.ratio()) {
        if (alpha > 0 && last_term > 0) {
            const long double p = static_cast<long double>(r->min_gap);
            const long double rho =
                static_cast<long double>(r->ratio) * expl(-p * static_cast<long double>(alpha));
            if (rho < 1) {
                if (weight == 0) {
                    long double bound = last_term * rho / (1 - rho);
                    if (bound < best) best = bound;
                } else if (static_cast<long double>(alpha) * (J + p) >= 1) {
                    // last_term carries the factor J already
                    long double t0 = last_term / J;
                    long double bound =
                        t0 * (J * rho / (1 - rho) + p * rho / ((1 - rho) * (1 - rho)));
                    if (bound < best) best = bound;
                }
            }
        }
    }
    if (best < HUGE_VALL) best *= 1.0L + 1e-12L;
    return best;
}

} // namespace

SeriesEval eval_series(const CountSeries& series, double alpha, long trunc, int weight) {
    if (trunc < 1) raise("BadArgument", "trunc must be >= 1");
    if (!std::isfinite(alpha)) raise("BadArgument", "alpha must be finite");
    if (weight != 0 && weight != 1) raise("BadArgument", "weight must be 0 or 1");

    auto cursor = series.open_cursor();
    TermAccum acc;
    acc.exact = (alpha == 0.0);
    SeriesEval out;
    long double last_term = 0.0L;
    while (out.terms < trunc) {
        auto term = cursor();
        if (!term) {
            out.complete = true;
            break;
        }
        last_term = term_value(*term, alpha, weight, acc.exact);
        acc.add(last_term);
        out.last_length = term->length;
        ++out.terms;
    }
    if (!out.complete && !cursor()) out.complete = true;

    long double total = acc.total();
    if (!(total < kSumClamp)) {
        // astronomically large partial sum: a certified finite lower bound
        // is all downstream comparisons need
        out.partial = kSumClamp;
        out.value = Interval{kSumClamp, kInf};
        return out;
    }
    if (acc.exact && !(total < 9.007199254740992e15L)) acc.exact = false;

    long double err = acc.exact ? 0.0L : total * kSumErrRel;
    long double tail =
        out.complete ? 0.0L : tail_upper(series, alpha, out.last_length, last_term, weight);

    out.partial = static_cast<double>(total);
    double lo = static_cast<double>(total - err);
    double hi = static_cast<double>(total + err + tail);
    if (!acc.exact) {
        lo = std::nextafter(lo, -kInf);
        hi = std::isfinite(hi) ? std::nextafter(hi, kInf) : kInf;
    }
    out.value = Interval{lo, hi};
    return out;
}

Interval eval_f(const CountSeries& series, double alpha, long trunc) {
    return eval_series(series, alpha, trunc, 0).value;
}

Interval eval_moment(const CountSeries& series, double alpha, long trunc) {
    return eval_series(series, alpha, trunc, 1).value;
}

Interval abscissa(const CountSeries& series, long scan_len) {
    if (series.finite()) return Interval{-kInf, -kInf};
    double lo = -kInf;
    auto cursor = series.open_cursor();
    while (auto term = cursor()) {
        if (term->length > scan_len) break;
        double v = ln_big(term->count) / static_cast<double>(term->length);
        if (v > lo) lo = v;
    }
    double hi = series.growth() ? series.growth()->rate : kInf;
    if (hi < lo) hi = lo; // sampled rate may touch the certificate rate
    return Interval{lo, hi};
}

RootSolve solve_f_equals_one(const CountSeries& series,
                             std::optional<std::pair<double, double>> bracket_hint,
                             const SolveOptions& options) {
    if (!series.finite() && !series.growth() && !series.ratio())
        raise("TailUnbounded",
              "cannot certify upper bounds for an infinite family without a growth certificate");

    long trunc = std::max(options.trunc, 8L);
    double lo, hi;
    if (bracket_hint) {
        lo = bracket_hint->first;
        hi = bracket_hint->second;
        if (!(eval_f(series, lo, trunc).lower > 1.0)) raise("NoBracket", "hint lower end not above 1");
        if (!(eval_f(series, hi, trunc).upper < 1.0)) raise("NoBracket", "hint upper end not below 1");
    } else {
        Interval absc = abscissa(series);
        lo = std::isfinite(absc.lower) ? absc.lower + 1e-6 : 0.0;
        double step = 0.5;
        int iter = 0;
        while (!(eval_f(series, lo, trunc).lower > 1.0)) {
            lo -= step;
            step *= 2;
            if (++iter > 70) raise("NoBracket", "f never certifiably exceeds 1");
        }
        hi = lo + 1.0;
        iter = 0;
        while (true) {
            Interval v = eval_f(series, hi, trunc);
            if (v.upper < 1.0) break;
            hi = lo + (hi - lo) * 2;
            if (++iter > 90) {
                if (std::isfinite(v.upper)) raise("NoBracket", "doubling search found no certified bracket");
                raise("TailUnbounded", "tail bound never became finite during bracketing");
            }
        }
    }

    const double tol = options.tol;
    while (hi - lo > tol * 0.5) {
        double mid = lo + (hi - lo) / 2;
        Interval v = eval_f(series, mid, trunc);
        if (v.upper < 1.0) {
            hi = mid;
        } else if (v.lower > 1.0) {
            lo = mid;
        } else if (trunc < options.trunc_max) {
            trunc *= 2;
        } else {
            break; // enclosure straddles 1 at best available precision
        }
    }

    RootSolve out;
    out.root = lo + (hi - lo) / 2;
    out.residual = eval_f(series, out.root, trunc);
    out.bracket_lo = lo;
    out.bracket_hi = hi;
    out.trunc_used = trunc;
    return out;
}

} // namespace codedshift
