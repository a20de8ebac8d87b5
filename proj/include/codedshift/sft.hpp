#ifndef CODEDSHIFT_SFT_HPP
#define CODEDSHIFT_SFT_HPP

#include <vector>

#include "codedshift/core.hpp"
#include "codedshift/genfun.hpp"

namespace codedshift {

// Irreducible nearest-neighbor SFT with a distinguished letter; irreducibility
// (strong connectivity of the transition graph) is validated at construction.
struct SftSpec {
    Alphabet alphabet;
    std::vector<std::vector<bool>> allowed; // allowed[x][y]: xy may occur
    Symbol distinguished = 0;
};

SftSpec make_sft(Alphabet alphabet, std::vector<std::vector<bool>> allowed, Symbol distinguished);

// T_i = number of words of length i+2 that begin and end with the
// distinguished letter and contain it nowhere else.
struct LoopSpectrum {
    std::vector<BigInt> t; // T_0 .. T_{i_max}
    long i_max = 0;
    bool finite = false;              // T vanishes beyond i_max (deleted graph acyclic)
    GrowthCertificate growth;         // T_i <= scale' * e^{i*rate}; unused when finite
};

LoopSpectrum first_return_counts(const SftSpec& sft, long i_max);

// The count series of the derived code: |C_n| = T_{n-1}.
CountSeries loop_series(const LoopSpectrum& spectrum);

struct LoopEntropy {
    double h = 0.0;      // ln of the root x
    double root_x = 0.0; // solves sum T_i / x^{i+1} = 1
    RootSolve solve;
};

// Entropy from a fixed spectrum, via the series solver on |C_n| = T_{n-1}.
LoopEntropy loop_entropy(const LoopSpectrum& spectrum, double tol = 1e-10);

// Convenience: grows the horizon until the certified tail stops moving the
// root, then solves.
LoopEntropy loop_entropy(const SftSpec& sft, double tol = 1e-10);

// ln spectral radius of the full transition matrix; power iteration with a
// deterministic all-ones start and two-sided ratio bounds.
double perron_entropy(const SftSpec& sft);

// ln spectral radius of the matrix with the distinguished letter removed,
// i.e. the entropy of the subshift avoiding that letter; -inf when the
// deleted graph carries no bi-infinite path.
double restricted_entropy(const SftSpec& sft);

// The derived code family (first-return words, trailing distinguished letter
// dropped) for the generic analysis pipeline.
CodeFamily loop_code_family(const SftSpec& sft, long spectrum_horizon = 512);

} // namespace codedshift

#endif
