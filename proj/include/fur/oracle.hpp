#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fur/bases.hpp"
#include "fur/linalg.hpp"
#include "fur/porac.hpp"
#include "fur/rational.hpp"
#include "fur/uncertainty.hpp"

// Independent brute-force certification: Haar-random searches for
// certainty and game maxima, exhaustive classical strategy enumeration,
// and direct evaluation of the Bloch-vector sum identities that feed the
// quantum upper bound. Every routine is a deterministic function of its
// seed and sample budget, regardless of thread count.

namespace fur::oracle {

using bases::Basis;
using linalg::PureState;

// Counter-based generator: output k of a stream is the SplitMix64
// finalizer applied to key + (k+1) * golden gamma, with the key derived
// from (seed, stream). Parallel tasks use disjoint stream ids.
class CounterRng {
public:
    CounterRng(std::uint64_t seed, std::uint64_t stream);
    std::uint64_t next_u64();
    double next_unit();      // [0, 1)
    double next_gaussian();  // standard normal, Box-Muller

private:
    std::uint64_t key_ = 0;
    std::uint64_t counter_ = 0;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

struct SearchConfig {
    long long samples = 10'000;
    std::uint64_t seed = 1;
    bool refine = true;  // local hill-climb from the best sample
    double tol = 1e-3;
    int threads = 1;
};

// Haar-distributed pure state: normalized vector of standard complex
// Gaussian entries.
PureState random_pure_state(int d, CounterRng& rng);

// Haar-ish random basis: Gram-Schmidt on d random states, global phases
// fixed to first-amplitude-real-positive.
Basis random_basis(int d, CounterRng& rng);

struct CertaintySearchResult {
    double value = 0.0;
    PureState state;
};

// Maximum of the weighted certainty sum over pure states, by seeded Haar
// sampling plus an optional coordinate-wise hill-climb with shrinking
// step (x0.5 down to 1e-7).
CertaintySearchResult max_certainty_search(const uncertainty::OutcomeSet& s,
                                           const SearchConfig& cfg);

struct PoracSearchResult {
    double value = 0.0;
    std::string description;
};

// Maximum game success over sampled rank-one projective decodings with
// the per-string optimal pure-state encoding (largest eigenvalue of the
// averaged outcome projectors).
PoracSearchResult max_porac_search(const porac::Game& game, const SearchConfig& cfg);

struct ClassicalBruteforceResult {
    Rational best;
    std::vector<int> encoding;                // message per string index
    std::vector<std::vector<int>> decoding;   // answer per (message, question)
};

// Exact optimum over all deterministic encodings of strings into one dit
// and all deterministic decodings, with NO parity constraint; may exceed
// the noncontextual bound. The decoding is optimized per (message,
// question) cell, which attains the same maximum as enumerating all
// decoding tables.
ClassicalBruteforceResult classical_bruteforce_rac(int n, int d);

// sum over all d^N outcome strings of || sum_i x_i ||^2 for the Bloch
// vectors of the chosen basis eigenvectors. Basis-independent; equals
// ((d-1)/(2d)) N d^N.
double lemma3_sum(const std::vector<Basis>& measurement_bases);
double lemma3_expected(int n, int d);

struct PhiReport {
    double phi = 0.0;            // best Bloch alignment sum over strings
    double phi_bound = 0.0;      // sqrt(N)(d-1) d^N / (2d)
    double implied_success = 0.0;
    double quantum_bound = 0.0;
    bool saturated = false;      // phi reaches phi_bound within tol
    bool pass = false;           // phi and implied success below bounds
};

// Evaluates Phi = sum_x max_b b . (sum_i x_i) with b the per-string best
// admissible Bloch vector, and the success probability it implies.
PhiReport phi_bound_check(const std::vector<Basis>& decodings, double tol = 1e-9);

}  // namespace fur::oracle
