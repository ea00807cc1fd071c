#include "fur/porac.hpp"

#include <cmath>
#include <stdexcept>

#include "fur/bloch.hpp"

namespace fur::porac {

using bases::root_of_unity;
using linalg::ComplexMatrix;
using linalg::Cx;

Game::Game(int n, int d) : n_dits(n), dim(d) {
    if (n < 2) throw std::invalid_argument("Game: need at least 2 dits");
    if (d < 2) throw std::invalid_argument("Game: dimension must be >= 2");
    string_count();
}

long long Game::string_count() const {
    long long count = 1;
    for (int i = 0; i < n_dits; ++i) {
        count *= dim;
        if (count > kMaxStrings)
            throw std::invalid_argument("Game: d^N exceeds the 1e6 exhaustive enumeration limit");
    }
    return count;
}

std::vector<int> index_to_string(long long index, int n_dits, int dim) {
    std::vector<int> dits(static_cast<std::size_t>(n_dits));
    for (int i = n_dits - 1; i >= 0; --i) {
        dits[static_cast<std::size_t>(i)] = static_cast<int>(index % dim);
        index /= dim;
    }
    return dits;
}

long long string_index(const std::vector<int>& dits, int dim) {
    long long index = 0;
    for (int x : dits) {
        if (x < 0 || x >= dim) throw std::invalid_argument("string_index: dit out of range");
        index = index * dim + x;
    }
    return index;
}

QuantumStrategy::QuantumStrategy(Game g, std::vector<PureState> enc, std::vector<Basis> dec,
                                 std::string name)
    : game(g), encodings(std::move(enc)), decoders(std::move(dec)), label(std::move(name)) {
    if (static_cast<long long>(encodings.size()) != game.string_count())
        throw std::invalid_argument("QuantumStrategy: need one encoding per string");
    if (static_cast<int>(decoders.size()) != game.n_dits)
        throw std::invalid_argument("QuantumStrategy: need one decoding basis per question");
    for (const PureState& v : encodings)
        if (v.dim != game.dim)
            throw std::invalid_argument("QuantumStrategy: encoding dimension mismatch");
    for (const Basis& b : decoders)
        if (b.dim != game.dim)
            throw std::invalid_argument("QuantumStrategy: decoder dimension mismatch");
}

PureState encode_two_dits(int x0, int x1, int d) {
    if (d < 2) throw std::invalid_argument("encode_two_dits: dimension must be >= 2");
    if (x0 < 0 || x0 >= d || x1 < 0 || x1 >= d)
        throw std::invalid_argument("encode_two_dits: dit out of range");
    const double inv_sqrt_d = 1.0 / std::sqrt(static_cast<double>(d));
    const double norm = std::sqrt(2.0 + 2.0 * inv_sqrt_d);
    std::vector<Cx> amps(static_cast<std::size_t>(d));
    for (int q = 0; q < d; ++q) {
        const double base = ((q == x0) ? 1.0 : 0.0) + inv_sqrt_d;
        amps[static_cast<std::size_t>(q)] =
            root_of_unity(d, static_cast<long long>(x1) * (q - x0)) * (base / norm);
    }
    return PureState::normalized(std::move(amps));
}

double decode_prob_closed_form(int x0, int x1, int p, DecodeSide which, int d) {
    if (d < 2) throw std::invalid_argument("decode_prob_closed_form: dimension must be >= 2");
    if (x0 < 0 || x0 >= d || x1 < 0 || x1 >= d || p < 0 || p >= d)
        throw std::invalid_argument("decode_prob_closed_form: dit out of range");
    const double inv_sqrt_d = 1.0 / std::sqrt(static_cast<double>(d));
    const double norm_sq = 2.0 + 2.0 * inv_sqrt_d;
    Cx amp;
    if (which == DecodeSide::kFirst) {
        amp = Cx{(p == x0) ? 1.0 : 0.0, 0.0} +
              root_of_unity(d, static_cast<long long>(x1) * (p - x0)) * inv_sqrt_d;
    } else {
        amp = root_of_unity(d, -static_cast<long long>(x0) * x1) * ((p == x1) ? 1.0 : 0.0) +
              root_of_unity(d, -static_cast<long long>(p) * x0) * inv_sqrt_d;
    }
    return std::norm(amp) / norm_sq;
}

QuantumStrategy two_dit_mub_strategy(int d) {
    Game game(2, d);
    std::vector<PureState> encodings;
    encodings.reserve(static_cast<std::size_t>(d) * d);
    for (int x0 = 0; x0 < d; ++x0)
        for (int x1 = 0; x1 < d; ++x1) encodings.push_back(encode_two_dits(x0, x1, d));
    std::vector<Basis> decoders{bases::computational_basis(d), bases::fourier_basis(d)};
    return QuantumStrategy(game, std::move(encodings), std::move(decoders), "paper2d");
}

QuantumStrategy qubit_three_bit_strategy() {
    Game game(3, 2);
    const double r = 1.0 / std::sqrt(3.0);
    std::vector<PureState> encodings;
    encodings.reserve(8);
    for (long long index = 0; index < 8; ++index) {
        const std::vector<int> bits = index_to_string(index, 3, 2);
        std::array<double, 3> direction{};
        for (int i = 0; i < 3; ++i) direction[static_cast<std::size_t>(i)] = bits[static_cast<std::size_t>(i)] == 0 ? r : -r;
        encodings.push_back(bloch::qubit_state_from_unit_bloch(direction));
    }
    const double s = 1.0 / std::sqrt(2.0);
    std::vector<Basis> decoders;
    decoders.emplace_back(2, std::vector<PureState>{PureState(2, {Cx{s, 0}, Cx{s, 0}}),
                                                    PureState(2, {Cx{s, 0}, Cx{-s, 0}})},
                          "pauli_x");
    decoders.emplace_back(2, std::vector<PureState>{PureState(2, {Cx{s, 0}, Cx{0, s}}),
                                                    PureState(2, {Cx{s, 0}, Cx{0, -s}})},
                          "pauli_y");
    decoders.push_back(bases::computational_basis(2));
    return QuantumStrategy(game, std::move(encodings), std::move(decoders), "qubit3to1");
}

QuantumStrategy product_dit_strategy(int n, int d) {
    Game game(n, d);
    const long long total = game.string_count();
    std::vector<PureState> encodings;
    encodings.reserve(static_cast<std::size_t>(total));
    for (long long index = 0; index < total; ++index) {
        const std::vector<int> dits = index_to_string(index, n, d);
        long long product = 1;
        for (int x : dits) product = (product * x) % d;
        encodings.push_back(PureState::basis_vector(d, static_cast<int>(product)));
    }
    std::vector<Basis> decoders(static_cast<std::size_t>(n), bases::computational_basis(d));
    return QuantumStrategy(game, std::move(encodings), std::move(decoders), "naive");
}

double success_probability(const QuantumStrategy& strategy) {
    const Game& game = strategy.game;
    const long long total = game.string_count();
    if (total * game.n_dits > 10'000'000)
        throw std::invalid_argument(
            "success_probability: d^N * N exceeds the 1e7 Born-evaluation limit");
    double sum = 0.0;
    for (long long index = 0; index < total; ++index) {
        const std::vector<int> dits = index_to_string(index, game.n_dits, game.dim);
        const PureState& encoded = strategy.encodings[static_cast<std::size_t>(index)];
        for (int y = 0; y < game.n_dits; ++y) {
            const PureState& correct =
                strategy.decoders[static_cast<std::size_t>(y)]
                    .vectors[static_cast<std::size_t>(dits[static_cast<std::size_t>(y)])];
            sum += std::norm(linalg::inner(correct, encoded));
        }
    }
    return sum / (static_cast<double>(total) * game.n_dits);
}

Rational noncontextual_bound(int n, int d) {
    if (n < 1 || d < 2) throw std::invalid_argument("noncontextual_bound: need n >= 1, d >= 2");
    return Rational(n + d - 1, static_cast<long long>(d) * n);
}

double quantum_upper_bound(int n, int d) {
    if (n < 1 || d < 2) throw std::invalid_argument("quantum_upper_bound: need n >= 1, d >= 2");
    return (1.0 + (d - 1.0) / std::sqrt(static_cast<double>(n))) / d;
}

ParitySet parity_set(const Game& game, ParityConvention convention) {
    ParitySet set{game, convention, {}};
    const long long total = game.string_count();
    for (long long index = 0; index < total; ++index) {
        std::vector<int> s = index_to_string(index, game.n_dits, game.dim);
        int zeros = 0;
        for (int e : s)
            if (e == 0) ++zeros;
        const int nonzeros = game.n_dits - zeros;
        const bool keep = convention == ParityConvention::kZetaPaper ? zeros <= game.dim - 2
                                                                     : nonzeros >= 2;
        if (keep) set.elements.push_back(std::move(s));
    }
    return set;
}

namespace {

// Parity class of x under s: sum_i x_i s_i mod d.
int parity_class(const std::vector<int>& x, const std::vector<int>& s, int d) {
    long long acc = 0;
    for (std::size_t i = 0; i < x.size(); ++i) acc += static_cast<long long>(x[i]) * s[i];
    return static_cast<int>(acc % d);
}

}  // namespace

ParityReport parity_oblivious_measurement_check(const QuantumStrategy& strategy,
                                                const ParitySet& parity, double tol) {
    const Game& game = strategy.game;
    const int d = game.dim;
    const int n = game.n_dits;
    const long long total = game.string_count();

    // p(b | x, y) for every outcome, question, string.
    std::vector<double> probs(static_cast<std::size_t>(d) * n * total);
    std::vector<std::vector<int>> strings(static_cast<std::size_t>(total));
    for (long long x = 0; x < total; ++x) {
        strings[static_cast<std::size_t>(x)] = index_to_string(x, n, d);
        for (int y = 0; y < n; ++y)
            for (int b = 0; b < d; ++b)
                probs[(static_cast<std::size_t>(y) * d + b) * total + x] = std::norm(
                    linalg::inner(strategy.decoders[static_cast<std::size_t>(y)]
                                      .vectors[static_cast<std::size_t>(b)],
                                  strategy.encodings[static_cast<std::size_t>(x)]));
    }

    ParityReport report;
    for (const std::vector<int>& s : parity.elements) {
        std::vector<int> klass(static_cast<std::size_t>(total));
        std::vector<long long> size(static_cast<std::size_t>(d), 0);
        for (long long x = 0; x < total; ++x) {
            klass[static_cast<std::size_t>(x)] = parity_class(strings[static_cast<std::size_t>(x)], s, d);
            ++size[static_cast<std::size_t>(klass[static_cast<std::size_t>(x)])];
        }
        for (int y = 0; y < n; ++y) {
            for (int b = 0; b < d; ++b) {
                std::vector<double> sums(static_cast<std::size_t>(d), 0.0);
                const double* row = &probs[(static_cast<std::size_t>(y) * d + b) * total];
                for (long long x = 0; x < total; ++x)
                    sums[static_cast<std::size_t>(klass[static_cast<std::size_t>(x)])] += row[x];
                for (int la = 0; la < d; ++la) {
                    if (size[static_cast<std::size_t>(la)] == 0) continue;
                    for (int lb = la + 1; lb < d; ++lb) {
                        if (size[static_cast<std::size_t>(lb)] == 0) continue;
                        const double v = std::abs(sums[static_cast<std::size_t>(la)] -
                                                  sums[static_cast<std::size_t>(lb)]);
                        if (v > report.max_violation) {
                            report.max_violation = v;
                            report.witness = ParityWitness{s, y, b, la, lb};
                        }
                    }
                }
            }
        }
    }
    report.pass = report.max_violation <= tol;
    return report;
}

ParityReport parity_oblivious_state_check(const QuantumStrategy& strategy,
                                          const ParitySet& parity, double tol) {
    const Game& game = strategy.game;
    const int d = game.dim;
    const long long total = game.string_count();
    if (total * d * d > 10'000'000)
        throw std::invalid_argument("parity_oblivious_state_check: game too large");

    std::vector<ComplexMatrix> projectors;
    projectors.reserve(static_cast<std::size_t>(total));
    for (long long x = 0; x < total; ++x)
        projectors.push_back(
            linalg::projector(strategy.encodings[static_cast<std::size_t>(x)]).matrix);

    ParityReport report;
    for (const std::vector<int>& s : parity.elements) {
        std::vector<ComplexMatrix> class_sum(static_cast<std::size_t>(d), ComplexMatrix(d));
        std::vector<long long> size(static_cast<std::size_t>(d), 0);
        for (long long x = 0; x < total; ++x) {
            const int l =
                parity_class(index_to_string(x, game.n_dits, d), s, d);
            class_sum[static_cast<std::size_t>(l)] =
                linalg::add(class_sum[static_cast<std::size_t>(l)],
                            projectors[static_cast<std::size_t>(x)]);
            ++size[static_cast<std::size_t>(l)];
        }
        for (int la = 0; la < d; ++la) {
            if (size[static_cast<std::size_t>(la)] == 0) continue;
            for (int lb = la + 1; lb < d; ++lb) {
                if (size[static_cast<std::size_t>(lb)] == 0) continue;
                const ComplexMatrix avg_a = linalg::scale(
                    class_sum[static_cast<std::size_t>(la)],
                    Cx{1.0 / static_cast<double>(size[static_cast<std::size_t>(la)]), 0.0});
                const ComplexMatrix avg_b = linalg::scale(
                    class_sum[static_cast<std::size_t>(lb)],
                    Cx{1.0 / static_cast<double>(size[static_cast<std::size_t>(lb)]), 0.0});
                const double v = linalg::max_abs_diff(avg_a, avg_b);
                if (v > report.max_violation) {
                    report.max_violation = v;
                    report.witness = ParityWitness{s, -1, -1, la, lb};
                }
            }
        }
    }
    report.pass = report.max_violation <= tol;
    return report;
}

ClassicalPoStrategy classical_po_strategy(int n, int d) {
    if (n < 1 || d < 2) throw std::invalid_argument("classical_po_strategy: need n >= 1, d >= 2");
    // Success: question 0 answered exactly, the other N-1 guessed uniformly.
    const Rational success(d + n - 1, static_cast<long long>(n) * d);
    ClassicalPoStrategy strategy;
    strategy.success = success;
    strategy.description =
        "send the first dit; answer it for question 0, guess uniformly otherwise";
    return strategy;
}

}  // namespace fur::porac
