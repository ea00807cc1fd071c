#include "fur/fur.h"

#include <algorithm>
#include <cstring>
#include <exception>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "fur/bases.hpp"
#include "fur/oracle.hpp"
#include "fur/porac.hpp"
#include "fur/uncertainty.hpp"

struct fur_strategy {
    fur::porac::QuantumStrategy impl;
};

namespace {

thread_local std::string g_last_error;

template <typename Fn>
fur_status guarded(Fn&& fn) {
    try {
        fn();
        return FUR_OK;
    } catch (const std::invalid_argument& e) {
        g_last_error = e.what();
        return FUR_ERR_INVALID_ARGUMENT;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return FUR_ERR_INTERNAL;
    } catch (...) {
        g_last_error = "unknown failure";
        return FUR_ERR_INTERNAL;
    }
}

fur_status null_pointer() {
    g_last_error = "null pointer argument";
    return FUR_ERR_NULL_POINTER;
}

// n mutually unbiased bases in dimension d; two exist in every dimension,
// more require prime d.
std::vector<fur::bases::Basis> standard_mub_bases(int n, int d) {
    if (n < 1) throw std::invalid_argument("need at least one basis");
    if (n == 1) return {fur::bases::computational_basis(d)};
    if (n == 2) return {fur::bases::computational_basis(d), fur::bases::fourier_basis(d)};
    return fur::bases::mub_family(d, n).bases;
}

fur::oracle::SearchConfig to_config(const fur_search_config* cfg) {
    fur::oracle::SearchConfig out;
    out.samples = cfg->samples;
    out.seed = cfg->seed;
    out.refine = cfg->refine != 0;
    out.tol = cfg->tol;
    out.threads = cfg->threads > 0
                      ? cfg->threads
                      : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    return out;
}

void fill_parity_report(const fur::porac::ParityReport& in, fur_parity_report* out) {
    std::memset(out, 0, sizeof(*out));
    out->max_violation = in.max_violation;
    out->pass = in.pass ? 1 : 0;
    out->witness_y = in.witness.y;
    out->witness_b = in.witness.b;
    out->witness_class_a = in.witness.class_a;
    out->witness_class_b = in.witness.class_b;
    out->witness_len = static_cast<int>(in.witness.s.size());
    if (out->witness_len > FUR_MAX_DITS) out->witness_len = FUR_MAX_DITS;
    for (int i = 0; i < out->witness_len; ++i)
        out->witness_s[i] = in.witness.s[static_cast<std::size_t>(i)];
}

fur::porac::ParityConvention to_convention(fur_parity_convention convention) {
    return convention == FUR_PARITY_ZETA_PAPER ? fur::porac::ParityConvention::kZetaPaper
                                               : fur::porac::ParityConvention::kHamming2;
}

}  // namespace

extern "C" {

const char* fur_status_string(fur_status status) {
    switch (status) {
        case FUR_OK: return "ok";
        case FUR_ERR_INVALID_ARGUMENT: return "invalid argument";
        case FUR_ERR_NULL_POINTER: return "null pointer";
        case FUR_ERR_INTERNAL: return "internal error";
    }
    return "unknown status";
}

const char* fur_last_error_message(void) { return g_last_error.c_str(); }

const char* fur_version(void) { return "0.1.0"; }

fur_status fur_noncontextual_bound(int n, int d, long long* num, long long* den) {
    if (!num || !den) return null_pointer();
    return guarded([&] {
        const fur::Rational r = fur::porac::noncontextual_bound(n, d);
        *num = r.num;
        *den = r.den;
    });
}

fur_status fur_mub_certainty_bound(int n, int d, double* out) {
    if (!out) return null_pointer();
    return guarded([&] { *out = fur::uncertainty::mub_certainty_bound(n, d); });
}

fur_status fur_quantum_upper_bound(int n, int d, double* out) {
    if (!out) return null_pointer();
    return guarded([&] { *out = fur::porac::quantum_upper_bound(n, d); });
}

fur_status fur_classical_po_value(int n, int d, long long* num, long long* den) {
    if (!num || !den) return null_pointer();
    return guarded([&] {
        const fur::Rational r = fur::porac::classical_po_strategy(n, d).success;
        *num = r.num;
        *den = r.den;
    });
}

fur_status fur_two_dit_achievable(int d, double* out) {
    if (!out) return null_pointer();
    return guarded([&] {
        *out = fur::uncertainty::pair_certainty_bound(
                   fur::linalg::PureState::basis_vector(d, 0),
                   fur::bases::fourier_basis(d).vectors.front())
                   .bound;
    });
}

fur_status fur_strategy_create(const char* name, int n, int d, fur_strategy** out) {
    if (!name || !out) return null_pointer();
    return guarded([&] {
        const std::string kind(name);
        if (kind == "paper2d") {
            if (n != 2) throw std::invalid_argument("paper2d strategy requires n = 2");
            *out = new fur_strategy{fur::porac::two_dit_mub_strategy(d)};
        } else if (kind == "qubit3to1") {
            if (n != 3 || d != 2)
                throw std::invalid_argument("qubit3to1 strategy requires n = 3, d = 2");
            *out = new fur_strategy{fur::porac::qubit_three_bit_strategy()};
        } else if (kind == "naive") {
            *out = new fur_strategy{fur::porac::product_dit_strategy(n, d)};
        } else {
            throw std::invalid_argument("unknown strategy '" + kind + "'");
        }
    });
}

void fur_strategy_destroy(fur_strategy* strategy) { delete strategy; }

fur_status fur_strategy_game(const fur_strategy* strategy, int* n, int* d) {
    if (!strategy || !n || !d) return null_pointer();
    *n = strategy->impl.game.n_dits;
    *d = strategy->impl.game.dim;
    return FUR_OK;
}

fur_status fur_strategy_success_probability(const fur_strategy* strategy, double* out) {
    if (!strategy || !out) return null_pointer();
    return guarded([&] { *out = fur::porac::success_probability(strategy->impl); });
}

fur_status fur_check_parity_measurement(const fur_strategy* strategy,
                                        fur_parity_convention convention, double tol,
                                        fur_parity_report* out) {
    if (!strategy || !out) return null_pointer();
    return guarded([&] {
        const fur::porac::ParitySet set =
            fur::porac::parity_set(strategy->impl.game, to_convention(convention));
        fill_parity_report(
            fur::porac::parity_oblivious_measurement_check(strategy->impl, set, tol), out);
    });
}

fur_status fur_check_parity_state(const fur_strategy* strategy,
                                  fur_parity_convention convention, double tol,
                                  fur_parity_report* out) {
    if (!strategy || !out) return null_pointer();
    return guarded([&] {
        const fur::porac::ParitySet set =
            fur::porac::parity_set(strategy->impl.game, to_convention(convention));
        fill_parity_report(fur::porac::parity_oblivious_state_check(strategy->impl, set, tol),
                           out);
    });
}

fur_status fur_oracle_max_certainty_mub(int n, int d, const fur_search_config* cfg,
                                        double* value, double* bound) {
    if (!cfg || !value || !bound) return null_pointer();
    return guarded([&] {
        const std::vector<fur::bases::Basis> bases = standard_mub_bases(n, d);
        std::vector<fur::linalg::PureState> outcomes;
        outcomes.reserve(bases.size());
        for (const fur::bases::Basis& b : bases) outcomes.push_back(b.vectors.front());
        const fur::uncertainty::OutcomeSet set =
            fur::uncertainty::OutcomeSet::uniform(d, std::move(outcomes));
        *value = fur::oracle::max_certainty_search(set, to_config(cfg)).value;
        *bound = fur::uncertainty::mub_certainty_bound(n, d);
    });
}

fur_status fur_oracle_max_porac(int n, int d, const fur_search_config* cfg, double* value,
                                double* bound) {
    if (!cfg || !value || !bound) return null_pointer();
    return guarded([&] {
        const fur::porac::Game game(n, d);
        *value = fur::oracle::max_porac_search(game, to_config(cfg)).value;
        *bound = fur::porac::quantum_upper_bound(n, d);
    });
}

fur_status fur_oracle_classical_bruteforce(int n, int d, long long* num, long long* den) {
    if (!num || !den) return null_pointer();
    return guarded([&] {
        const fur::Rational best = fur::oracle::classical_bruteforce_rac(n, d).best;
        *num = best.num;
        *den = best.den;
    });
}

fur_status fur_oracle_lemma3(int n, int d, fur_basis_kind kind, uint64_t seed, double* value,
                             double* expected) {
    if (!value || !expected) return null_pointer();
    return guarded([&] {
        std::vector<fur::bases::Basis> bases;
        if (kind == FUR_BASES_MUB) {
            bases = standard_mub_bases(n, d);
        } else {
            for (int i = 0; i < n; ++i) {
                fur::oracle::CounterRng rng(seed, static_cast<std::uint64_t>(i));
                bases.push_back(fur::oracle::random_basis(d, rng));
            }
        }
        *value = fur::oracle::lemma3_sum(bases);
        *expected = fur::oracle::lemma3_expected(n, d);
    });
}

fur_status fur_oracle_phi_check(int n, int d, double* phi, double* phi_bound,
                                double* implied_success, double* quantum_bound, int* saturated) {
    if (!phi || !phi_bound || !implied_success || !quantum_bound || !saturated)
        return null_pointer();
    return guarded([&] {
        const fur::oracle::PhiReport report =
            fur::oracle::phi_bound_check(standard_mub_bases(n, d));
        *phi = report.phi;
        *phi_bound = report.phi_bound;
        *implied_success = report.implied_success;
        *quantum_bound = report.quantum_bound;
        *saturated = report.saturated ? 1 : 0;
    });
}

}  // extern "C"
