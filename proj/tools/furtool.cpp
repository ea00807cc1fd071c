// furtool: closed-form bounds, game simulations, obliviousness audits and
// brute-force certification for N -> 1 d-level parity-oblivious random
// access codes, over the libfur C API.
//
// Exit codes: 0 all asserted comparisons passed, 1 a comparison failed,
// 2 usage or argument error. Default seed comes from FUR_SEED when set.

#include <cmath>
#include <cstdlib>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "fur/fur.h"
#include "report.hpp"

namespace {

using furtool::OutputFormat;
using furtool::RunReport;

struct UsageError {
    std::string message;
};

void require_ok(fur_status status) {
    if (status != FUR_OK) throw UsageError{fur_last_error_message()};
}

std::string rational_text(long long num, long long den) {
    return std::to_string(num) + "/" + std::to_string(den);
}

std::string witness_text(const fur_parity_report& report) {
    std::string s = "s=";
    for (int i = 0; i < report.witness_len; ++i) s += std::to_string(report.witness_s[i]);
    if (report.witness_y >= 0) {
        s += " y=" + std::to_string(report.witness_y);
        s += " b=" + std::to_string(report.witness_b);
    }
    s += " l=" + std::to_string(report.witness_class_a);
    s += " l'=" + std::to_string(report.witness_class_b);
    return s;
}

std::uint64_t default_seed() {
    if (const char* env = std::getenv("FUR_SEED")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0') return v;
        throw UsageError{"FUR_SEED must be an unsigned integer"};
    }
    return 12345;
}

struct StrategyHandle {
    fur_strategy* ptr = nullptr;
    ~StrategyHandle() { fur_strategy_destroy(ptr); }
};

void make_strategy(const std::string& name, int n, int d, StrategyHandle& out) {
    const fur_status status = fur_strategy_create(name.c_str(), n, d, &out.ptr);
    if (status != FUR_OK) throw UsageError{fur_last_error_message()};
}

// ---- subcommand bodies -------------------------------------------------

RunReport run_bounds(int n, int d, double tol) {
    RunReport report;
    report.command = "bounds";
    report.tolerance = tol;
    report.add_param("n", n);
    report.add_param("d", d);

    long long num = 0, den = 0;
    require_ok(fur_noncontextual_bound(n, d, &num, &den));
    const double ncb = static_cast<double>(num) / static_cast<double>(den);
    report.add_number("noncontextual_bound", ncb, "analytic");
    report.add_text("noncontextual_bound_exact", rational_text(num, den), "analytic");

    double mub = 0.0, quantum = 0.0;
    require_ok(fur_mub_certainty_bound(n, d, &mub));
    require_ok(fur_quantum_upper_bound(n, d, &quantum));
    report.add_number("mub_fur_bound", mub, "analytic");
    report.add_number("quantum_upper_bound", quantum, "analytic");

    bool pass = quantum >= ncb - tol;
    if (n == 2) {
        double achieved = 0.0;
        require_ok(fur_two_dit_achievable(d, &achieved));
        report.add_number("achieved_2to1", achieved, "analytic");
        pass = pass && achieved <= quantum + tol && achieved > ncb;
    }
    report.pass = pass;
    return report;
}

RunReport run_simulate(int n, int d, const std::string& strategy, double tol) {
    RunReport report;
    report.command = "simulate";
    report.tolerance = tol;
    report.add_param("n", n);
    report.add_param("d", d);
    report.add_param("strategy", strategy);

    StrategyHandle handle;
    make_strategy(strategy, n, d, handle);

    double success = 0.0;
    require_ok(fur_strategy_success_probability(handle.ptr, &success));

    double expected = 0.0;
    if (strategy == "paper2d")
        require_ok(fur_two_dit_achievable(d, &expected));
    else if (strategy == "qubit3to1")
        require_ok(fur_mub_certainty_bound(3, 2, &expected));
    else
        throw UsageError{"simulate supports --strategy paper2d|qubit3to1"};

    long long num = 0, den = 0;
    require_ok(fur_noncontextual_bound(n, d, &num, &den));
    const double ncb = static_cast<double>(num) / static_cast<double>(den);

    report.add_number("success", success, "simulated");
    report.add_number("analytic_expectation", expected, "analytic");
    report.add_number("noncontextual_bound", ncb, "analytic");
    report.add_text("noncontextual_bound_exact", rational_text(num, den), "analytic");
    report.pass = std::abs(success - expected) <= tol && success > ncb;
    return report;
}

RunReport run_verify_po(int n, int d, const std::string& strategy,
                        const std::string& convention, double tol) {
    RunReport report;
    report.command = "verify-po";
    report.tolerance = tol;
    report.add_param("n", n);
    report.add_param("d", d);
    report.add_param("strategy", strategy);
    report.add_param("convention", convention);

    fur_parity_convention conv;
    if (convention == "paper")
        conv = FUR_PARITY_ZETA_PAPER;
    else if (convention == "hamming2")
        conv = FUR_PARITY_HAMMING2;
    else
        throw UsageError{"--convention must be paper or hamming2"};

    StrategyHandle handle;
    make_strategy(strategy, n, d, handle);

    fur_parity_report meas, state;
    require_ok(fur_check_parity_measurement(handle.ptr, conv, tol, &meas));
    require_ok(fur_check_parity_state(handle.ptr, conv, tol, &state));

    report.add_number("measurement_max_violation", meas.max_violation, "simulated");
    report.add_number("state_max_violation", state.max_violation, "simulated");
    if (!meas.pass) report.add_text("measurement_witness", witness_text(meas), "simulated");
    if (!state.pass) report.add_text("state_witness", witness_text(state), "simulated");
    report.pass = meas.pass == 1 && state.pass == 1;
    return report;
}

RunReport run_oracle(const std::string& task, int n, int d, const fur_search_config& cfg,
                     const std::string& bases_kind, bool tol_given, double tol) {
    RunReport report;
    report.command = "oracle";
    report.add_param("task", task);
    report.add_param("n", n);
    report.add_param("d", d);

    if (task == "certainty" || task == "porac") {
        report.tolerance = tol_given ? tol : 1e-3;
        report.add_param("seed", static_cast<long long>(cfg.seed));
        report.add_param("samples", cfg.samples);
        report.add_param("refine", static_cast<long long>(cfg.refine));
        double value = 0.0, bound = 0.0;
        if (task == "certainty")
            require_ok(fur_oracle_max_certainty_mub(n, d, &cfg, &value, &bound));
        else
            require_ok(fur_oracle_max_porac(n, d, &cfg, &value, &bound));
        report.add_number("oracle_max", value, "oracle");
        report.add_number("analytic_bound", bound, "analytic");
        report.add_number("gap", bound - value, "oracle");
        report.pass = value <= bound + report.tolerance;
    } else if (task == "classical") {
        report.tolerance = tol_given ? tol : 0.0;
        long long num = 0, den = 0;
        require_ok(fur_oracle_classical_bruteforce(n, d, &num, &den));
        const double best = static_cast<double>(num) / static_cast<double>(den);
        long long pnum = 0, pden = 0;
        require_ok(fur_noncontextual_bound(n, d, &pnum, &pden));
        const double ncb = static_cast<double>(pnum) / static_cast<double>(pden);
        report.add_number("classical_unconstrained_best", best, "oracle");
        report.add_text("classical_unconstrained_best_exact", rational_text(num, den),
                        "oracle");
        report.add_number("parity_oblivious_bound", ncb, "analytic");
        report.add_text("parity_oblivious_bound_exact", rational_text(pnum, pden), "analytic");
        report.pass = best >= ncb - report.tolerance;
    } else if (task == "lemma3") {
        report.tolerance = tol_given ? tol : 1e-9;
        report.add_param("bases", bases_kind);
        if (bases_kind == "random")
            report.add_param("seed", static_cast<long long>(cfg.seed));
        fur_basis_kind kind;
        if (bases_kind == "mub")
            kind = FUR_BASES_MUB;
        else if (bases_kind == "random")
            kind = FUR_BASES_RANDOM;
        else
            throw UsageError{"--bases must be mub or random"};
        double value = 0.0, expected = 0.0;
        require_ok(fur_oracle_lemma3(n, d, kind, cfg.seed, &value, &expected));
        report.add_number("bloch_sum", value, "oracle");
        report.add_number("expected", expected, "analytic");
        report.pass = std::abs(value - expected) <= report.tolerance;
    } else if (task == "phi") {
        report.tolerance = tol_given ? tol : 1e-9;
        double phi = 0.0, phi_bound = 0.0, implied = 0.0, quantum = 0.0;
        int saturated = 0;
        require_ok(fur_oracle_phi_check(n, d, &phi, &phi_bound, &implied, &quantum, &saturated));
        report.add_number("phi", phi, "oracle");
        report.add_number("phi_bound", phi_bound, "analytic");
        report.add_number("implied_success", implied, "oracle");
        report.add_number("quantum_upper_bound", quantum, "analytic");
        report.add_text("saturated", saturated ? "yes" : "no", "oracle");
        report.pass = phi <= phi_bound + report.tolerance &&
                      implied <= quantum + report.tolerance;
    } else {
        throw UsageError{"--task must be certainty|porac|classical|lemma3|phi"};
    }
    return report;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"fine-grained uncertainty bounds and parity-oblivious RAC games"};
    app.require_subcommand(1);

    // Shared output options, registered per subcommand.
    struct Common {
        bool json = false;
        bool csv = false;
    };
    auto add_output_flags = [](CLI::App* cmd, Common& common) {
        CLI::Option* j = cmd->add_flag("--json", common.json, "machine-readable JSON output");
        CLI::Option* c = cmd->add_flag("--csv", common.csv, "CSV output");
        j->excludes(c);
        c->excludes(j);
    };
    auto chosen_format = [](const Common& common) {
        if (common.json) return OutputFormat::kJson;
        if (common.csv) return OutputFormat::kCsv;
        return OutputFormat::kTable;
    };

    int n = 2, d = 2;
    double tol = 1e-9;
    bool tol_given = false;

    Common bounds_out;
    CLI::App* bounds = app.add_subcommand("bounds", "closed-form game bounds for (n, d)");
    bounds->add_option("--n", n, "number of dits")->required();
    bounds->add_option("--d", d, "alphabet / system dimension")->required();
    bounds->add_option("--tol", tol, "comparison tolerance");
    add_output_flags(bounds, bounds_out);

    std::string strategy = "paper2d";
    Common sim_out;
    CLI::App* simulate = app.add_subcommand("simulate", "simulate a reference quantum strategy");
    simulate->add_option("--n", n, "number of dits")->required();
    simulate->add_option("--d", d, "alphabet / system dimension")->required();
    simulate->add_option("--strategy", strategy, "paper2d | qubit3to1");
    simulate->add_option("--tol", tol, "simulation/analytic agreement tolerance");
    add_output_flags(simulate, sim_out);

    std::string convention = "paper";
    Common po_out;
    CLI::App* verify = app.add_subcommand("verify-po", "audit parity obliviousness");
    verify->add_option("--n", n, "number of dits")->required();
    verify->add_option("--d", d, "alphabet / system dimension")->required();
    verify->add_option("--strategy", strategy, "paper2d | qubit3to1 | naive");
    verify->add_option("--convention", convention, "paper | hamming2");
    verify->add_option("--tol", tol, "violation tolerance");
    add_output_flags(verify, po_out);

    std::string task = "certainty";
    std::string bases_kind = "mub";
    long long samples = 10000;
    std::uint64_t seed = 0;
    bool seed_given = false;
    bool refine = true;
    int threads = 0;
    Common oracle_out;
    CLI::App* oracle = app.add_subcommand("oracle", "brute-force certification tasks");
    oracle->add_option("--task", task, "certainty | porac | classical | lemma3 | phi")
        ->required();
    oracle->add_option("--n", n, "number of observables / dits")->required();
    oracle->add_option("--d", d, "dimension")->required();
    oracle->add_option("--seed", seed, "RNG seed (default: FUR_SEED or 12345)")
        ->each([&](const std::string&) { seed_given = true; });
    oracle->add_option("--samples", samples, "sample budget for search tasks");
    oracle->add_flag("--refine,!--no-refine", refine, "hill-climb after sampling");
    oracle->add_option("--threads", threads, "worker threads (0 = hardware)");
    oracle->add_option("--bases", bases_kind, "lemma3 bases: mub | random");
    CLI::Option* tol_opt = oracle->add_option("--tol", tol, "bound comparison tolerance");
    add_output_flags(oracle, oracle_out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        RunReport report;
        OutputFormat format = OutputFormat::kTable;
        if (bounds->parsed()) {
            report = run_bounds(n, d, tol);
            format = chosen_format(bounds_out);
        } else if (simulate->parsed()) {
            report = run_simulate(n, d, strategy, tol);
            format = chosen_format(sim_out);
        } else if (verify->parsed()) {
            if (!verify->get_option("--tol")->count()) tol = 1e-9;
            report = run_verify_po(n, d, strategy, convention, tol);
            format = chosen_format(po_out);
        } else if (oracle->parsed()) {
            tol_given = tol_opt->count() > 0;
            fur_search_config cfg{};
            cfg.samples = samples;
            cfg.seed = seed_given ? seed : default_seed();
            cfg.refine = refine ? 1 : 0;
            cfg.tol = tol;
            cfg.threads = threads;
            report = run_oracle(task, n, d, cfg, bases_kind, tol_given, tol);
            format = chosen_format(oracle_out);
        }
        furtool::render(report, format, std::cout);
        return report.pass ? 0 : 1;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.message << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
