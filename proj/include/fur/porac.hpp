#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fur/bases.hpp"
#include "fur/linalg.hpp"
#include "fur/rational.hpp"

// The N -> 1 d-level parity-oblivious random access code game: reference
// quantum strategies, exhaustive success-probability evaluation, parity
// sets under two conventions, obliviousness audits, and the closed-form
// noncontextual and quantum bounds.

namespace fur::porac {

using bases::Basis;
using linalg::DensityMatrix;
using linalg::PureState;

struct Game {
    int n_dits = 0;  // N >= 2
    int dim = 0;     // alphabet / system dimension d >= 2

    Game(int n, int d);
    // Number of input strings d^N; throws if it exceeds the exhaustive limit.
    long long string_count() const;
};

constexpr long long kMaxStrings = 1'000'000;

// Mixed-radix helpers; digit 0 is the most significant.
std::vector<int> index_to_string(long long index, int n_dits, int dim);
long long string_index(const std::vector<int>& dits, int dim);

// Encoding table over all d^N strings plus one decoding basis per question.
// Measurement outcome p on question y is Bob's answer p.
struct QuantumStrategy {
    Game game;
    std::vector<PureState> encodings;  // indexed by string_index
    std::vector<Basis> decoders;       // size N
    std::string label;

    QuantumStrategy(Game g, std::vector<PureState> enc, std::vector<Basis> dec,
                    std::string name);
};

// Which strings s define a forbidden parity x.s = sum_i x_i s_i (mod d).
enum class ParityConvention {
    kZetaPaper,  // number of zero entries in s at most d - 2
    kHamming2,   // at least two nonzero entries
};

struct ParitySet {
    Game game;
    ParityConvention convention;
    std::vector<std::vector<int>> elements;
};

struct ParityWitness {
    std::vector<int> s;
    int y = -1;  // question; -1 for the state-level check
    int b = -1;  // outcome; -1 for the state-level check
    int class_a = 0;
    int class_b = 0;
};

struct ParityReport {
    double max_violation = 0.0;
    bool pass = false;
    ParityWitness witness;
};

// Encoding of a 2-dit string in dimension d: shift^{x0} clock^{x1} applied
// to the balanced superposition of |0> and the first Fourier vector. This
// is the maximally certain state construction for the computational /
// Fourier measurement pair.
PureState encode_two_dits(int x0, int x1, int d);

enum class DecodeSide { kFirst, kSecond };

// Closed-form outcome distribution of the two measurements on
// encode_two_dits, matching the simulated Born probabilities.
double decode_prob_closed_form(int x0, int x1, int p, DecodeSide which, int d);

// 2 -> 1 strategy: encode_two_dits with computational + Fourier decoding.
QuantumStrategy two_dit_mub_strategy(int d);

// 3 -> 1 qubit strategy: strings encoded along the (+-1,+-1,+-1)/sqrt(3)
// Bloch directions (component i positive iff bit i is 0), decoded by the
// three Pauli eigenbases. Success probability (1 + 1/sqrt(3))/2.
QuantumStrategy qubit_three_bit_strategy();

// Deliberately leaking demo: encodes the product of the dits (mod d) as a
// computational basis state and decodes every question in the
// computational basis.
QuantumStrategy product_dit_strategy(int n, int d);

// Average over uniform strings and uniform questions of the probability
// that Bob's outcome equals the queried dit.
double success_probability(const QuantumStrategy& strategy);

// (N + d - 1) / (d N): ceiling for preparation-noncontextual models.
Rational noncontextual_bound(int n, int d);

// (1/d)(1 + (d-1)/sqrt(N)): ceiling for quantum strategies with rank-one
// projective decodings.
double quantum_upper_bound(int n, int d);

ParitySet parity_set(const Game& game, ParityConvention convention);

// For every parity string s, question y, outcome b: the per-class sums of
// p(b|x,y) must agree across nonempty parity classes within tol.
ParityReport parity_oblivious_measurement_check(const QuantumStrategy& strategy,
                                                const ParitySet& parity, double tol);

// Stronger, measurement-independent audit: the uniform averages of the
// encoded density matrices over each nonempty parity class must be equal
// entrywise within tol.
ParityReport parity_oblivious_state_check(const QuantumStrategy& strategy,
                                          const ParitySet& parity, double tol);

// Constructive noncontextual model achieving (N + d - 1)/(d N): Alice
// sends the first dit, Bob reports it for question 0 and guesses
// uniformly otherwise.
struct ClassicalPoStrategy {
    Rational success;
    std::string description;
};
ClassicalPoStrategy classical_po_strategy(int n, int d);

}  // namespace fur::porac
