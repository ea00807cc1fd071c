#include <cmath>

#include "doctest.h"
#include "fur/bases.hpp"
#include "fur/bloch.hpp"
#include "fur/porac.hpp"
#include "fur/uncertainty.hpp"

using namespace fur::porac;
using fur::Rational;
using fur::linalg::ComplexMatrix;
using fur::linalg::Cx;
using fur::linalg::PureState;

namespace {

// Explicit shift/clock matrix route, used to cross-check the closed-form
// encodings.
PureState encode_via_operators(int x0, int x1, int d) {
    ComplexMatrix op = ComplexMatrix::identity(d);
    const ComplexMatrix x = fur::bases::shift_operator(d);
    const ComplexMatrix z = fur::bases::clock_operator(d);
    for (int i = 0; i < x1; ++i) op = fur::linalg::multiply(z, op);
    for (int i = 0; i < x0; ++i) op = fur::linalg::multiply(x, op);
    const PureState seed = encode_two_dits(0, 0, d);
    std::vector<Cx> amps(static_cast<std::size_t>(d));
    for (int r = 0; r < d; ++r) {
        Cx acc{0.0, 0.0};
        for (int c = 0; c < d; ++c)
            acc += op.at(r, c) * seed.amplitudes[static_cast<std::size_t>(c)];
        amps[static_cast<std::size_t>(r)] = acc;
    }
    return PureState::normalized(std::move(amps));
}

double overlap_sq(const PureState& a, const PureState& b) {
    return std::norm(fur::linalg::inner(a, b));
}

}  // namespace

TEST_CASE("string indexing round trip") {
    const Game game(3, 4);
    CHECK(game.string_count() == 64);
    for (long long i = 0; i < 64; ++i)
        CHECK(string_index(index_to_string(i, 3, 4), 4) == i);
    CHECK_THROWS_AS(Game(2, 2000), std::invalid_argument);
}

TEST_CASE("encode_two_dits reference probabilities") {
    // (0,0) at d = 2: overlap with |0> gives (1 + 1/sqrt 2)/2.
    CHECK(overlap_sq(encode_two_dits(0, 0, 2), PureState::basis_vector(2, 0)) ==
          doctest::Approx(0.5 * (1.0 + 1.0 / std::sqrt(2.0))).epsilon(1e-12));

    // (1,0) at d = 2: shifted; overlap with |1> is the same success value.
    CHECK(overlap_sq(encode_two_dits(1, 0, 2), PureState::basis_vector(2, 1)) ==
          doctest::Approx(0.5 * (1.0 + 1.0 / std::sqrt(2.0))).epsilon(1e-12));

    // (2,1) at d = 3: overlap with the Fourier vector e_1.
    CHECK(overlap_sq(encode_two_dits(2, 1, 3), fur::bases::fourier_basis(3).vectors[1]) ==
          doctest::Approx(0.5 * (1.0 + 1.0 / std::sqrt(3.0))).epsilon(1e-12));

    CHECK_THROWS_AS(encode_two_dits(2, 0, 2), std::invalid_argument);
    CHECK_THROWS_AS(encode_two_dits(0, -1, 3), std::invalid_argument);
}

TEST_CASE("closed-form encoding equals the operator route") {
    for (int d : {2, 3, 5}) {
        for (int x0 = 0; x0 < d; ++x0) {
            for (int x1 = 0; x1 < d; ++x1) {
                const PureState direct = encode_two_dits(x0, x1, d);
                const PureState via_ops = encode_via_operators(x0, x1, d);
                // Same state up to a global phase.
                CHECK(overlap_sq(direct, via_ops) == doctest::Approx(1.0).epsilon(1e-12));
            }
        }
    }
}

TEST_CASE("decode_prob_closed_form matches simulation and sums to one") {
    for (int d : {2, 3, 5}) {
        const fur::bases::Basis comp = fur::bases::computational_basis(d);
        const fur::bases::Basis four = fur::bases::fourier_basis(d);
        for (int x0 = 0; x0 < d; ++x0) {
            for (int x1 = 0; x1 < d; ++x1) {
                const PureState psi = encode_two_dits(x0, x1, d);
                double sum_first = 0.0, sum_second = 0.0;
                for (int p = 0; p < d; ++p) {
                    const double first = decode_prob_closed_form(x0, x1, p, DecodeSide::kFirst, d);
                    const double second =
                        decode_prob_closed_form(x0, x1, p, DecodeSide::kSecond, d);
                    CHECK(first ==
                          doctest::Approx(overlap_sq(comp.vectors[static_cast<std::size_t>(p)], psi))
                              .epsilon(1e-12));
                    CHECK(second ==
                          doctest::Approx(overlap_sq(four.vectors[static_cast<std::size_t>(p)], psi))
                              .epsilon(1e-12));
                    sum_first += first;
                    sum_second += second;
                }
                CHECK(sum_first == doctest::Approx(1.0).epsilon(1e-12));
                CHECK(sum_second == doctest::Approx(1.0).epsilon(1e-12));
            }
        }
    }

    // Correct-guess probability is (1 + 1/sqrt d)/2 on both sides.
    for (int d : {2, 3, 4, 7}) {
        const double expected = 0.5 * (1.0 + 1.0 / std::sqrt(static_cast<double>(d)));
        CHECK(decode_prob_closed_form(1, 0, 1, DecodeSide::kFirst, d) ==
              doctest::Approx(expected).epsilon(1e-12));
        CHECK(decode_prob_closed_form(0, 1, 1, DecodeSide::kSecond, d) ==
              doctest::Approx(expected).epsilon(1e-12));
    }

    // Hand-evaluated miss probability at d = 2, x = (0,1), first dit, p = 1.
    CHECK(decode_prob_closed_form(0, 1, 1, DecodeSide::kFirst, 2) ==
          doctest::Approx(0.5 / (2.0 + std::sqrt(2.0))).epsilon(1e-12));
}

TEST_CASE("two-dit strategy success probabilities") {
    CHECK(success_probability(two_dit_mub_strategy(2)) ==
          doctest::Approx(0.8535533905932738).epsilon(1e-12));
    CHECK(success_probability(two_dit_mub_strategy(3)) ==
          doctest::Approx(0.7886751345948129).epsilon(1e-12));
    CHECK(success_probability(two_dit_mub_strategy(5)) ==
          doctest::Approx(0.5 * (1.0 + 1.0 / std::sqrt(5.0))).epsilon(1e-12));

    for (int d = 2; d <= 7; ++d) {
        const double success = success_probability(two_dit_mub_strategy(d));
        CHECK(success == doctest::Approx(0.5 * (1.0 + 1.0 / std::sqrt(static_cast<double>(d))))
                             .epsilon(1e-12));
        CHECK(success > noncontextual_bound(2, d).value());
        CHECK(success <= quantum_upper_bound(2, d) + 1e-12);
        if (d == 2)
            CHECK(success == doctest::Approx(quantum_upper_bound(2, d)).epsilon(1e-12));
        else
            CHECK(success < quantum_upper_bound(2, d) - 1e-3);
    }
}

TEST_CASE("two-dit success equals the tight pair bound on its decode pair") {
    for (int d = 2; d <= 7; ++d) {
        const double tight =
            fur::uncertainty::pair_certainty_bound(PureState::basis_vector(d, 0),
                                                   fur::bases::fourier_basis(d).vectors[0])
                .bound;
        CHECK(success_probability(two_dit_mub_strategy(d)) ==
              doctest::Approx(tight).epsilon(1e-12));
    }
}

TEST_CASE("qubit three-bit strategy") {
    const QuantumStrategy strategy = qubit_three_bit_strategy();
    CHECK(success_probability(strategy) ==
          doctest::Approx(0.5 * (1.0 + 1.0 / std::sqrt(3.0))).epsilon(1e-12));
    CHECK(success_probability(strategy) > noncontextual_bound(3, 2).value());

    // Encoded Bloch vectors sit at (+-1,+-1,+-1)/(2 sqrt 3) in the
    // Gell-Mann normalization, sign of component i fixed by bit i.
    const double half_r = 0.5 / std::sqrt(3.0);
    for (long long index = 0; index < 8; ++index) {
        const std::vector<int> bits = index_to_string(index, 3, 2);
        const fur::bloch::BlochVector b =
            fur::bloch::to_bloch(strategy.encodings[static_cast<std::size_t>(index)]);
        for (int i = 0; i < 3; ++i) {
            const double expected = bits[static_cast<std::size_t>(i)] == 0 ? half_r : -half_r;
            CHECK(b.components[static_cast<std::size_t>(i)] ==
                  doctest::Approx(expected).epsilon(1e-12));
        }
    }
}

TEST_CASE("constant encoding scores 1/d against any decoding") {
    for (int d : {2, 3, 5}) {
        const Game game(2, d);
        std::vector<PureState> encodings(static_cast<std::size_t>(d) * d,
                                         PureState::basis_vector(d, 0));
        std::vector<fur::bases::Basis> decoders{fur::bases::fourier_basis(d),
                                                fur::bases::fourier_basis(d)};
        const QuantumStrategy guesser(game, std::move(encodings), std::move(decoders),
                                      "constant");
        CHECK(success_probability(guesser) == doctest::Approx(1.0 / d).epsilon(1e-12));
    }
}

TEST_CASE("noncontextual bound rationals") {
    CHECK(noncontextual_bound(2, 2) == Rational(3, 4));
    CHECK(noncontextual_bound(3, 2) == Rational(2, 3));
    CHECK(noncontextual_bound(2, 3) == Rational(2, 3));
    CHECK(noncontextual_bound(4, 2) == Rational(5, 8));
    CHECK(noncontextual_bound(6, 4) == Rational(3, 8));  // 9/24 reduced
    CHECK_THROWS_AS(noncontextual_bound(0, 2), std::invalid_argument);
}

TEST_CASE("quantum upper bound dominates the noncontextual bound") {
    CHECK(quantum_upper_bound(2, 2) == doctest::Approx(0.8535533905932738).epsilon(1e-12));
    CHECK(quantum_upper_bound(3, 2) == doctest::Approx(0.7886751345948129).epsilon(1e-12));
    CHECK(quantum_upper_bound(2, 3) == doctest::Approx((1.0 + std::sqrt(2.0)) / 3.0).epsilon(1e-12));
    for (int n = 2; n <= 10; ++n)
        for (int d = 2; d <= 10; ++d)
            CHECK(quantum_upper_bound(n, d) >= noncontextual_bound(n, d).value() - 1e-12);
}

TEST_CASE("parity sets under both conventions") {
    const Game g22(2, 2);
    const ParitySet paper22 = parity_set(g22, ParityConvention::kZetaPaper);
    REQUIRE(paper22.elements.size() == 1);
    CHECK(paper22.elements[0] == std::vector<int>{1, 1});
    const ParitySet h22 = parity_set(g22, ParityConvention::kHamming2);
    REQUIRE(h22.elements.size() == 1);
    CHECK(h22.elements[0] == std::vector<int>{1, 1});

    const Game g32(3, 2);
    const ParitySet h32 = parity_set(g32, ParityConvention::kHamming2);
    REQUIRE(h32.elements.size() == 4);
    CHECK(h32.elements[0] == std::vector<int>{0, 1, 1});
    CHECK(h32.elements[3] == std::vector<int>{1, 1, 1});
    // The zeta <= d-2 reading keeps only the all-ones string here.
    const ParitySet paper32 = parity_set(g32, ParityConvention::kZetaPaper);
    REQUIRE(paper32.elements.size() == 1);
    CHECK(paper32.elements[0] == std::vector<int>{1, 1, 1});

    // At d >= 3 the zeta reading also admits single-nonzero strings.
    const Game g23(2, 3);
    const ParitySet paper23 = parity_set(g23, ParityConvention::kZetaPaper);
    CHECK(paper23.elements.size() == 8);  // all strings except (0,0)
    const ParitySet h23 = parity_set(g23, ParityConvention::kHamming2);
    CHECK(h23.elements.size() == 4);
}

TEST_CASE("two-dit strategy obliviousness: where it holds and where it leaks") {
    // d = 2: both conventions, both checks pass.
    {
        const QuantumStrategy s = two_dit_mub_strategy(2);
        for (auto convention : {ParityConvention::kZetaPaper, ParityConvention::kHamming2}) {
            const ParitySet par = parity_set(s.game, convention);
            CHECK(parity_oblivious_measurement_check(s, par, 1e-10).pass);
            CHECK(parity_oblivious_state_check(s, par, 1e-10).pass);
        }
    }

    // Prime d, weight->=2 strings: measurement-level obliviousness holds,
    // but the encoded class averages differ in off-diagonal phase, so the
    // stronger state-level audit fails.
    for (int d : {3, 5, 7}) {
        const QuantumStrategy s = two_dit_mub_strategy(d);
        const ParitySet par = parity_set(s.game, ParityConvention::kHamming2);
        CHECK(parity_oblivious_measurement_check(s, par, 1e-10).pass);
        const ParityReport state = parity_oblivious_state_check(s, par, 1e-10);
        CHECK_FALSE(state.pass);
        CHECK(state.max_violation > 0.05);
    }

    // Single-nonzero strings (admitted by the zeta reading at d >= 3)
    // leak outright: the queried dit is the parity.
    {
        const QuantumStrategy s = two_dit_mub_strategy(3);
        const ParitySet par = parity_set(s.game, ParityConvention::kZetaPaper);
        const ParityReport meas = parity_oblivious_measurement_check(s, par, 1e-10);
        CHECK_FALSE(meas.pass);
        CHECK(meas.max_violation > 1.0);
    }

    // Composite d: weight-2 strings with a non-invertible entry leak even
    // at measurement level (e.g. s = (1,2) at d = 4).
    {
        const QuantumStrategy s = two_dit_mub_strategy(4);
        const ParitySet par = parity_set(s.game, ParityConvention::kHamming2);
        const ParityReport meas = parity_oblivious_measurement_check(s, par, 1e-10);
        CHECK_FALSE(meas.pass);
        CHECK(meas.max_violation == doctest::Approx(4.0 / 3.0).epsilon(1e-9));
    }
}

TEST_CASE("qubit three-bit strategy is parity oblivious under hamming2") {
    const QuantumStrategy s = qubit_three_bit_strategy();
    const ParitySet par = parity_set(s.game, ParityConvention::kHamming2);
    CHECK(parity_oblivious_measurement_check(s, par, 1e-10).pass);
    CHECK(parity_oblivious_state_check(s, par, 1e-12).pass);
}

TEST_CASE("product encoding leaks parity with the documented witness") {
    const QuantumStrategy s = product_dit_strategy(2, 2);
    const ParitySet par = parity_set(s.game, ParityConvention::kHamming2);

    const ParityReport meas = parity_oblivious_measurement_check(s, par, 1e-10);
    CHECK_FALSE(meas.pass);
    CHECK(meas.max_violation == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(meas.witness.s == std::vector<int>{1, 1});

    const ParityReport state = parity_oblivious_state_check(s, par, 1e-10);
    CHECK_FALSE(state.pass);
    CHECK(state.max_violation == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("classical parity-oblivious strategy attains the bound exactly") {
    CHECK(classical_po_strategy(2, 2).success == Rational(3, 4));
    CHECK(classical_po_strategy(3, 2).success == Rational(2, 3));
    CHECK(classical_po_strategy(2, 5).success == Rational(3, 5));
    for (int n = 1; n <= 4; ++n)
        for (int d = 2; d <= 5; ++d)
            CHECK(classical_po_strategy(n, d).success == noncontextual_bound(n, d));
}
