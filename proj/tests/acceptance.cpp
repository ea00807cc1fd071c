// Acceptance suite: thirteen end-to-end checks of the analytic bounds,
// reference strategies, obliviousness audits and certification oracles,
// each printed as one pass/fail line. Returns the number of failures.
//
// Usage: fur_acceptance [--criterion K] [--cli PATH]
// The CLI path (for the determinism check) may also come from FURTOOL_BIN.

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "fur/bases.hpp"
#include "fur/bloch.hpp"
#include "fur/linalg.hpp"
#include "fur/oracle.hpp"
#include "fur/porac.hpp"
#include "fur/rational.hpp"
#include "fur/uncertainty.hpp"

namespace {

using fur::Rational;
using fur::linalg::PureState;
using fur::oracle::CounterRng;
using fur::oracle::SearchConfig;
using fur::porac::ParityConvention;
using fur::porac::QuantumStrategy;

struct Outcome {
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
};

class Checker {
public:
    void require(bool condition, const std::string& label) {
        if (!condition) {
            ++failures_;
            if (!first_failure_.empty()) first_failure_ += "; ";
            if (failures_ <= 4) first_failure_ += label;
        }
    }
    bool ok() const { return failures_ == 0; }
    int failures() const { return failures_; }
    std::string message() const {
        if (failures_ == 0) return "";
        std::string m = first_failure_;
        if (failures_ > 4) m += "; ... (" + std::to_string(failures_) + " checks failed)";
        return m;
    }

private:
    int failures_ = 0;
    std::string first_failure_;
};

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

double mub_pair_value(int d) { return 0.5 * (1.0 + 1.0 / std::sqrt(static_cast<double>(d))); }

// --- 1. 2->1 2-PORAC reproduction ----------------------------------------

Outcome criterion_1() {
    Checker check;
    const double success = fur::porac::success_probability(fur::porac::two_dit_mub_strategy(2));
    check.require(std::abs(success - mub_pair_value(2)) <= 1e-12, "success != (1+1/sqrt2)/2");
    check.require(success > 0.75, "success not above 3/4");
    return {check.ok(), check.ok() ? "success " + fmt(success) + " > 3/4" : check.message(), 0};
}

// --- 2. 2->1 3-PORAC reproduction ----------------------------------------

Outcome criterion_2() {
    Checker check;
    const double success = fur::porac::success_probability(fur::porac::two_dit_mub_strategy(3));
    check.require(std::abs(success - mub_pair_value(3)) <= 1e-6, "success != (1+1/sqrt3)/2");
    check.require(success > 2.0 / 3.0, "success not above 2/3");
    return {check.ok(), check.ok() ? "success " + fmt(success) + " > 2/3" : check.message(), 0};
}

// --- 3. dimension sweep ---------------------------------------------------

Outcome criterion_3() {
    Checker check;
    for (int d = 2; d <= 7; ++d) {
        const double success =
            fur::porac::success_probability(fur::porac::two_dit_mub_strategy(d));
        check.require(std::abs(success - mub_pair_value(d)) <= 1e-12,
                      "d=" + std::to_string(d) + " value mismatch");
        check.require(success > (d + 1.0) / (2.0 * d),
                      "d=" + std::to_string(d) + " does not beat the noncontextual bound");
    }
    return {check.ok(), check.ok() ? "d = 2..7 match (1+1/sqrt d)/2 and beat (d+1)/2d"
                                   : check.message(), 0};
}

// --- 4. 3->1 qubit strategy ----------------------------------------------

Outcome criterion_4() {
    Checker check;
    const double success =
        fur::porac::success_probability(fur::porac::qubit_three_bit_strategy());
    check.require(std::abs(success - mub_pair_value(3)) <= 1e-12, "success != (1+1/sqrt3)/2");
    check.require(std::abs(success - fur::uncertainty::mub_certainty_bound(3, 2)) <= 1e-12,
                  "success != mub bound(3,2)");
    check.require(success > 2.0 / 3.0, "success not above 2/3");
    return {check.ok(), check.ok() ? "success " + fmt(success) + " = mub bound(3,2) > 2/3"
                                   : check.message(), 0};
}

// --- 5. parity obliviousness ----------------------------------------------

Outcome criterion_5() {
    Checker check;
    std::vector<std::string> leaks;
    for (int d = 2; d <= 7; ++d) {
        const QuantumStrategy strategy = fur::porac::two_dit_mub_strategy(d);
        for (ParityConvention conv :
             {ParityConvention::kZetaPaper, ParityConvention::kHamming2}) {
            const std::string tag = "paper2d d=" + std::to_string(d) +
                                    (conv == ParityConvention::kZetaPaper ? " zeta" : " h2");
            const auto par = fur::porac::parity_set(strategy.game, conv);
            const auto meas =
                fur::porac::parity_oblivious_measurement_check(strategy, par, 1e-10);
            const auto state = fur::porac::parity_oblivious_state_check(strategy, par, 1e-10);
            if (!meas.pass) leaks.push_back(tag + " meas " + fmt(meas.max_violation));
            if (!state.pass) leaks.push_back(tag + " state " + fmt(state.max_violation));
            check.require(meas.pass, tag + " measurement");
            check.require(state.pass, tag + " state");
        }
    }
    {
        const QuantumStrategy strategy = fur::porac::qubit_three_bit_strategy();
        const auto par = fur::porac::parity_set(strategy.game, ParityConvention::kHamming2);
        check.require(fur::porac::parity_oblivious_measurement_check(strategy, par, 1e-10).pass,
                      "qubit3to1 measurement");
        check.require(fur::porac::parity_oblivious_state_check(strategy, par, 1e-10).pass,
                      "qubit3to1 state");
    }
    {
        const QuantumStrategy naive = fur::porac::product_dit_strategy(2, 2);
        const auto par = fur::porac::parity_set(naive.game, ParityConvention::kHamming2);
        const auto meas = fur::porac::parity_oblivious_measurement_check(naive, par, 1e-10);
        check.require(!meas.pass && meas.max_violation >= 0.5,
                      "adversarial encoding must fail with violation >= 0.5");
    }
    std::string detail;
    if (check.ok()) {
        detail = "all audits pass; adversarial encoding leaks as required";
    } else {
        detail = "leaking combinations: ";
        for (std::size_t i = 0; i < leaks.size() && i < 6; ++i)
            detail += (i ? ", " : "") + leaks[i];
        if (leaks.size() > 6) detail += ", ... (" + std::to_string(leaks.size()) + " total)";
    }
    return {check.ok(), detail, 0};
}

// --- 6. unbiased bases have orthogonal Bloch vectors ----------------------

Outcome criterion_6() {
    Checker check;
    double worst = 0.0;
    for (int d : {2, 3, 5, 7}) {
        const auto family = fur::bases::mub_family(d, d + 1);
        std::vector<std::vector<fur::bloch::BlochVector>> blochs;
        for (const auto& basis : family.bases) {
            std::vector<fur::bloch::BlochVector> row;
            for (const auto& v : basis.vectors) row.push_back(fur::bloch::to_bloch(v));
            blochs.push_back(std::move(row));
        }
        for (std::size_t a = 0; a < blochs.size(); ++a)
            for (std::size_t b = a + 1; b < blochs.size(); ++b)
                for (const auto& u : blochs[a])
                    for (const auto& v : blochs[b]) {
                        worst = std::max(worst, std::abs(u.dot(v)));
                        check.require(std::abs(u.dot(v)) <= 1e-10,
                                      "cross-basis dot above 1e-10 (d=" + std::to_string(d) +
                                          ")");
                    }
    }
    return {check.ok(), "max cross-basis |dot| " + fmt(worst), 0};
}

// --- 7. basis eigenvector Bloch vectors sum to zero -----------------------

Outcome criterion_7() {
    Checker check;
    double worst = 0.0;
    for (int d : {2, 3, 5}) {
        for (int trial = 0; trial < 100; ++trial) {
            CounterRng rng(600 + d, static_cast<std::uint64_t>(trial));
            const auto basis = fur::oracle::random_basis(d, rng);
            std::vector<double> sum(static_cast<std::size_t>(d) * d - 1, 0.0);
            for (const auto& v : basis.vectors) {
                const auto b = fur::bloch::to_bloch(v);
                for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += b.components[i];
            }
            double norm_sq = 0.0;
            for (double c : sum) norm_sq += c * c;
            worst = std::max(worst, std::sqrt(norm_sq));
            check.require(std::sqrt(norm_sq) <= 1e-10,
                          "nonzero Bloch sum (d=" + std::to_string(d) + ")");
        }
    }
    return {check.ok(), "max |sum| " + fmt(worst) + " over 300 random bases", 0};
}

// --- 8. Bloch norm-square identity ----------------------------------------

Outcome criterion_8() {
    Checker check;
    double worst = 0.0;
    for (int d : {2, 3}) {
        for (int n : {1, 2, 3}) {
            std::vector<fur::bases::Basis> mubs;
            if (n == 1)
                mubs = {fur::bases::computational_basis(d)};
            else if (n == 2)
                mubs = {fur::bases::computational_basis(d), fur::bases::fourier_basis(d)};
            else
                mubs = fur::bases::mub_family(d, n).bases;
            std::vector<fur::bases::Basis> randoms;
            for (int i = 0; i < n; ++i) {
                CounterRng rng(800 + 10 * d + n, static_cast<std::uint64_t>(i));
                randoms.push_back(fur::oracle::random_basis(d, rng));
            }
            const double expected = fur::oracle::lemma3_expected(n, d);
            for (const auto* bases : {&mubs, &randoms}) {
                const double value = fur::oracle::lemma3_sum(*bases);
                worst = std::max(worst, std::abs(value - expected));
                check.require(std::abs(value - expected) <= 1e-9,
                              "identity off at n=" + std::to_string(n) +
                                  " d=" + std::to_string(d));
            }
        }
    }
    return {check.ok(), "max |value - ((d-1)/2d) N d^N| " + fmt(worst), 0};
}

// --- 9. tight two-outcome bound is reached and never exceeded -------------

Outcome criterion_9() {
    Checker check;
    double worst_defect = 0.0, worst_excess = 0.0, worst_lp = 0.0;
    for (int d : {2, 3, 4}) {
        for (int trial = 0; trial < 1000; ++trial) {
            CounterRng rng(900 + d, static_cast<std::uint64_t>(trial));
            const PureState x1 = fur::oracle::random_pure_state(d, rng);
            const PureState x2 = fur::oracle::random_pure_state(d, rng);
            const double bound = 0.5 * (1.0 + std::abs(fur::linalg::inner(x1, x2)));

            SearchConfig cfg;
            cfg.samples = 96;
            cfg.seed = 9000 + static_cast<std::uint64_t>(1000 * d + trial);
            cfg.refine = true;
            const auto found = fur::oracle::max_certainty_search(
                fur::uncertainty::OutcomeSet::uniform(d, {x1, x2}), cfg);
            worst_defect = std::max(worst_defect, bound - found.value);
            worst_excess = std::max(worst_excess, found.value - bound);
            check.require(found.value >= bound - 1e-4, "search below bound - 1e-4");
            check.require(found.value <= bound + 1e-9, "search above bound + 1e-9");

            const auto report = fur::uncertainty::pair_certainty_bound(x1, x2);
            const auto lp = fur::uncertainty::landau_pollak_check(
                fur::linalg::projector(*report.maximizer), x1, x2);
            worst_lp = std::max(worst_lp, std::abs(lp.lhs - lp.rhs));
            check.require(std::abs(lp.lhs - lp.rhs) <= 1e-9, "maximizer does not saturate LP");
        }
    }
    return {check.ok(), "3000 pairs: max defect " + fmt(worst_defect) + ", max excess " +
                            fmt(worst_excess) + ", max LP slack " + fmt(worst_lp), 0};
}

// --- 10. collinearity bound: tight at d = 2, dominant at d = 3 -------------

Outcome criterion_10() {
    Checker check;
    double worst_gap2 = 0.0, max_gap3 = 0.0, worst_excess3 = 0.0;
    for (int n : {2, 3}) {
        for (int trial = 0; trial < 200; ++trial) {
            CounterRng rng(1000 + n, static_cast<std::uint64_t>(trial));
            std::vector<PureState> outcomes;
            for (int i = 0; i < n; ++i) outcomes.push_back(fur::oracle::random_pure_state(2, rng));
            const auto set = fur::uncertainty::OutcomeSet::uniform(2, std::move(outcomes));
            const double bound = fur::uncertainty::max_certainty_bound(set).bound;
            SearchConfig cfg;
            cfg.samples = 128;
            cfg.seed = 10000 + static_cast<std::uint64_t>(1000 * n + trial);
            cfg.refine = true;
            const double value = fur::oracle::max_certainty_search(set, cfg).value;
            worst_gap2 = std::max(worst_gap2, std::abs(value - bound));
            check.require(std::abs(value - bound) <= 1e-4,
                          "qubit oracle max differs from the bound");
        }
    }
    for (int n : {2, 3}) {
        for (int trial = 0; trial < 200; ++trial) {
            CounterRng rng(1100 + n, static_cast<std::uint64_t>(trial));
            std::vector<PureState> outcomes;
            for (int i = 0; i < n; ++i) outcomes.push_back(fur::oracle::random_pure_state(3, rng));
            const auto set = fur::uncertainty::OutcomeSet::uniform(3, std::move(outcomes));
            const double bound = fur::uncertainty::max_certainty_bound(set).bound;
            SearchConfig cfg;
            cfg.samples = 128;
            cfg.seed = 11000 + static_cast<std::uint64_t>(1000 * n + trial);
            cfg.refine = true;
            const double value = fur::oracle::max_certainty_search(set, cfg).value;
            worst_excess3 = std::max(worst_excess3, value - bound);
            max_gap3 = std::max(max_gap3, bound - value);
            check.require(value <= bound + 1e-9, "d=3 oracle exceeds the bound");
        }
    }
    return {check.ok(), "d=2 max |oracle-bound| " + fmt(worst_gap2) + "; d=3 max excess " +
                            fmt(worst_excess3) + ", largest logged gap " + fmt(max_gap3), 0};
}

// --- 11. game-value ceiling certification ---------------------------------

Outcome criterion_11() {
    Checker check;
    std::string detail;
    const std::array<std::pair<int, int>, 3> games{{{2, 2}, {3, 2}, {2, 3}}};
    for (const auto& [n, d] : games) {
        SearchConfig cfg;
        cfg.samples = 1500;
        cfg.seed = 1200 + static_cast<std::uint64_t>(10 * n + d);
        cfg.refine = true;
        cfg.threads = 2;
        const auto found = fur::oracle::max_porac_search(fur::porac::Game(n, d), cfg);
        const double bound = fur::porac::quantum_upper_bound(n, d);
        check.require(found.value <= bound + 1e-3,
                      "search exceeds the ceiling at (" + std::to_string(n) + "," +
                          std::to_string(d) + ")");
        detail += "(" + std::to_string(n) + "," + std::to_string(d) + ") max " +
                  fmt(found.value) + " <= " + fmt(bound) + "; ";
    }
    for (const auto& [n, d] : {std::pair{2, 2}, std::pair{3, 2}}) {
        std::vector<fur::bases::Basis> mubs =
            n == 2 ? std::vector<fur::bases::Basis>{fur::bases::computational_basis(d),
                                                    fur::bases::fourier_basis(d)}
                   : fur::bases::mub_family(d, n).bases;
        const auto phi = fur::oracle::phi_bound_check(mubs);
        check.require(phi.saturated, "phi not saturated at (" + std::to_string(n) + "," +
                                         std::to_string(d) + ")");
        check.require(phi.pass, "phi bound violated");
    }
    return {check.ok(), check.ok() ? detail + "phi saturated at (2,2),(3,2)" : check.message(),
            0};
}

// --- 12. classical enumeration --------------------------------------------

Outcome criterion_12() {
    Checker check;
    const auto r22 = fur::oracle::classical_bruteforce_rac(2, 2);
    const auto r32 = fur::oracle::classical_bruteforce_rac(3, 2);
    check.require(r22.best == Rational(3, 4), "(2,2) brute force != 3/4");
    check.require(r32.best == Rational(3, 4), "(3,2) brute force != 3/4");
    check.require(fur::porac::noncontextual_bound(3, 2) < r32.best,
                  "(3,2) unconstrained optimum does not exceed the PO bound");
    for (int n = 1; n <= 4; ++n)
        for (int d = 2; d <= 5; ++d)
            check.require(fur::porac::classical_po_strategy(n, d).success ==
                              Rational(n + d - 1, static_cast<long long>(d) * n),
                          "po strategy value off at (" + std::to_string(n) + "," +
                              std::to_string(d) + ")");
    return {check.ok(),
            "brute force 3/4 at (2,2) and (3,2) > PO bound 2/3; PO grid exact", 0};
}

// --- 13. byte-identical oracle reruns --------------------------------------

std::string capture(const std::string& command) {
    std::string out;
    FILE* pipe = popen((command + " 2>&1").c_str(), "r");
    if (!pipe) return out;
    char buffer[512];
    while (std::fgets(buffer, sizeof(buffer), pipe)) out += buffer;
    pclose(pipe);
    return out;
}

Outcome criterion_13(const std::string& cli) {
    Checker check;
    if (cli.empty()) return {false, "CLI path not provided (--cli or FURTOOL_BIN)", 0};
    const std::vector<std::string> commands = {
        " oracle --task certainty --n 2 --d 2 --seed 21 --samples 600 --json",
        " oracle --task porac --n 2 --d 2 --seed 22 --samples 300 --json",
        " oracle --task lemma3 --n 2 --d 3 --bases random --seed 23 --json",
        " oracle --task classical --n 3 --d 2 --json",
        " oracle --task phi --n 3 --d 2 --json",
    };
    for (const std::string& args : commands) {
        const std::string first = capture(cli + args);
        const std::string second = capture(cli + args);
        check.require(!first.empty() && first == second, "outputs differ for" + args);
    }
    return {check.ok(), check.ok() ? std::to_string(commands.size()) +
                                         " oracle commands byte-identical across reruns"
                                   : check.message(), 0};
}

struct Criterion {
    int id;
    double time_limit;
    std::string title;
    Outcome (*run)();
};

}  // namespace

int main(int argc, char** argv) {
    int only = 0;
    std::string cli;
    if (const char* env = std::getenv("FURTOOL_BIN")) cli = env;
    for (int i = 1; i < argc; ++i) {
        const std::string arg = argv[i];
        if (arg == "--criterion" && i + 1 < argc)
            only = std::atoi(argv[++i]);
        else if (arg == "--cli" && i + 1 < argc)
            cli = argv[++i];
        else {
            std::cerr << "usage: fur_acceptance [--criterion K] [--cli PATH]\n";
            return 2;
        }
    }

    const std::vector<Criterion> criteria = {
        {1, 1.0, "2->1 2-PORAC reproduction", criterion_1},
        {2, 1.0, "2->1 3-PORAC reproduction", criterion_2},
        {3, 5.0, "2->1 d-PORAC sweep d=2..7", criterion_3},
        {4, 1.0, "3->1 2-PORAC qubit strategy", criterion_4},
        {5, 10.0, "parity obliviousness audits", criterion_5},
        {6, 30.0, "unbiased-basis Bloch orthogonality", criterion_6},
        {7, 30.0, "basis Bloch vectors sum to zero", criterion_7},
        {8, 10.0, "Bloch norm-square identity", criterion_8},
        {9, 120.0, "tight pair bound reached, never exceeded", criterion_9},
        {10, 120.0, "collinearity bound: tight at d=2, dominant at d=3", criterion_10},
        {11, 120.0, "game ceiling certification", criterion_11},
        {12, 60.0, "classical enumeration", criterion_12},
    };

    int failures = 0;
    auto report = [&](int id, const std::string& title, Outcome outcome, double limit) {
        const bool timely = outcome.seconds < limit;
        const bool pass = outcome.pass && timely;
        std::printf("[criterion %2d] %s (%.2fs) %s%s\n", id, pass ? "PASS" : "FAIL",
                    outcome.seconds, title.c_str(),
                    outcome.detail.empty() ? "" : (" -- " + outcome.detail).c_str());
        if (!timely)
            std::printf("[criterion %2d]      time limit %.0fs exceeded\n", id, limit);
        if (!pass) ++failures;
    };

    for (const Criterion& c : criteria) {
        if (only != 0 && only != c.id) continue;
        const auto start = std::chrono::steady_clock::now();
        Outcome outcome = c.run();
        outcome.seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        report(c.id, c.title, outcome, c.time_limit);
    }
    if (only == 0 || only == 13) {
        const auto start = std::chrono::steady_clock::now();
        Outcome outcome = criterion_13(cli);
        outcome.seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        report(13, "seeded oracle determinism", outcome, 60.0);
    }
    return failures == 0 ? 0 : 1;
}
