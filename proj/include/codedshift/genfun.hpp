#ifndef CODEDSHIFT_GENFUN_HPP
#define CODEDSHIFT_GENFUN_HPP

#include <optional>
#include <utility>

#include "codedshift/interval.hpp"
#include "codedshift/series.hpp"

namespace codedshift {

// Result of evaluating sum count(j) * j^weight * e^{-j*alpha} over the first
// `trunc` nonzero terms, with a sound enclosure of the full series.
struct SeriesEval {
    Interval value;       // encloses the infinite series (upper may be +inf)
    double partial = 0.0; // the rounded truncated sum itself
    long terms = 0;       // nonzero terms consumed
    long last_length = 0; // length of the last consumed term
    bool complete = false; // the series was exhausted (finite family)
};

// weight = 0 gives f_C(alpha); weight = 1 gives the first-moment series used
// by the recurrence test.  trunc counts nonzero terms of the series.
SeriesEval eval_series(const CountSeries& series, double alpha, long trunc, int weight);

Interval eval_f(const CountSeries& series, double alpha, long trunc);
Interval eval_moment(const CountSeries& series, double alpha, long trunc);

// Enclosure of the exponential growth rate of the counts.  lower is the max
// of ln(count(n))/n over sampled lengths n <= scan_len; upper comes from a
// growth certificate when present.  Finite families: [-inf, -inf].
Interval abscissa(const CountSeries& series, long scan_len = 2000);

struct SolveOptions {
    long trunc = 512;
    long trunc_max = 1L << 17;
    double tol = 1e-10; // absolute root tolerance
};

struct RootSolve {
    double root = 0.0;
    Interval residual;     // f evaluated at root
    double bracket_lo = 0.0; // f certified > 1 here
    double bracket_hi = 0.0; // f certified < 1 here
    long trunc_used = 0;
};

// Solves f_C(x) = 1 by interval-aware bisection on the strictly decreasing
// f.  Throws NoBracket when f never certifiably exceeds 1, TailUnbounded
// when no certificate can push the upper bound below 1.
RootSolve solve_f_equals_one(const CountSeries& series,
                             std::optional<std::pair<double, double>> bracket_hint = {},
                             const SolveOptions& options = {});

} // namespace codedshift

#endif
