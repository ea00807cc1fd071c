#include "fur/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <thread>

#include "fur/bloch.hpp"

namespace fur::oracle {

using linalg::ComplexMatrix;
using linalg::Cx;

namespace {

constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

std::uint64_t splitmix_finalize(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace

CounterRng::CounterRng(std::uint64_t seed, std::uint64_t stream)
    : key_(splitmix_finalize(splitmix_finalize(seed + kGolden) ^ (kGolden * (stream + 1)))) {}

std::uint64_t CounterRng::next_u64() {
    ++counter_;
    return splitmix_finalize(key_ + counter_ * kGolden);
}

double CounterRng::next_unit() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double CounterRng::next_gaussian() {
    if (have_spare_) {
        have_spare_ = false;
        return spare_;
    }
    const double u1 = 1.0 - next_unit();  // (0, 1]
    const double u2 = next_unit();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    spare_ = radius * std::sin(angle);
    have_spare_ = true;
    return radius * std::cos(angle);
}

PureState random_pure_state(int d, CounterRng& rng) {
    if (d < 2) throw std::invalid_argument("random_pure_state: dimension must be >= 2");
    while (true) {
        std::vector<Cx> amps(static_cast<std::size_t>(d));
        double norm_sq = 0.0;
        for (Cx& a : amps) {
            a = Cx{rng.next_gaussian(), rng.next_gaussian()};
            norm_sq += std::norm(a);
        }
        if (norm_sq < 1e-24) continue;
        const double inv = 1.0 / std::sqrt(norm_sq);
        for (Cx& a : amps) a *= inv;
        return PureState(d, std::move(amps));
    }
}

namespace {

using RawVectors = std::vector<std::vector<Cx>>;  // [column][component]

void fix_global_phase(std::vector<Cx>& v) {
    for (const Cx& a : v) {
        if (std::abs(a) > 1e-9) {
            const Cx phase = a / std::abs(a);
            for (Cx& c : v) c /= phase;
            return;
        }
    }
}

// Modified Gram-Schmidt with a second orthogonalization pass. Returns
// nothing when the input is numerically rank-deficient.
std::optional<RawVectors> orthonormalize(const RawVectors& raw) {
    const std::size_t d = raw.size();
    RawVectors out;
    out.reserve(d);
    for (std::size_t i = 0; i < d; ++i) {
        std::vector<Cx> v = raw[i];
        for (int pass = 0; pass < 2; ++pass) {
            for (const std::vector<Cx>& u : out) {
                Cx proj{0.0, 0.0};
                for (std::size_t k = 0; k < v.size(); ++k) proj += std::conj(u[k]) * v[k];
                for (std::size_t k = 0; k < v.size(); ++k) v[k] -= proj * u[k];
            }
        }
        double norm_sq = 0.0;
        for (const Cx& c : v) norm_sq += std::norm(c);
        if (norm_sq < 1e-16) return std::nullopt;
        const double inv = 1.0 / std::sqrt(norm_sq);
        for (Cx& c : v) c *= inv;
        fix_global_phase(v);
        out.push_back(std::move(v));
    }
    return out;
}

RawVectors draw_raw_vectors(int d, CounterRng& rng) {
    RawVectors raw(static_cast<std::size_t>(d), std::vector<Cx>(static_cast<std::size_t>(d)));
    for (std::vector<Cx>& col : raw)
        for (Cx& a : col) a = Cx{rng.next_gaussian(), rng.next_gaussian()};
    return raw;
}

}  // namespace

Basis random_basis(int d, CounterRng& rng) {
    while (true) {
        const std::optional<RawVectors> ortho = orthonormalize(draw_raw_vectors(d, rng));
        if (!ortho) continue;
        std::vector<PureState> vecs;
        vecs.reserve(static_cast<std::size_t>(d));
        for (const std::vector<Cx>& v : *ortho) vecs.push_back(PureState::normalized(v));
        return Basis(d, std::move(vecs), "haar");
    }
}

namespace {

double certainty_value(const uncertainty::OutcomeSet& s, const std::vector<Cx>& psi) {
    double total = 0.0;
    for (std::size_t i = 0; i < s.outcomes.size(); ++i) {
        Cx ov{0.0, 0.0};
        const std::vector<Cx>& x = s.outcomes[i].amplitudes;
        for (std::size_t k = 0; k < psi.size(); ++k) ov += std::conj(x[k]) * psi[k];
        total += s.weights[i] * std::norm(ov);
    }
    return total;
}

std::vector<Cx> renormalized(std::vector<Cx> v) {
    double norm_sq = 0.0;
    for (const Cx& c : v) norm_sq += std::norm(c);
    const double inv = 1.0 / std::sqrt(norm_sq);
    for (Cx& c : v) c *= inv;
    return v;
}

// Coordinate-wise pattern ascent on the unit sphere: try +-step on the
// real and imaginary part of each amplitude, renormalize, accept
// improvements; halve the step when a full pass stalls, stop at 1e-7.
template <typename Value>
void pattern_ascend(std::vector<Cx>& point, double& best, const Value& value) {
    constexpr double kMinStep = 1e-7;
    for (double step = 0.1; step >= kMinStep; step *= 0.5) {
        bool improved = true;
        while (improved) {
            improved = false;
            for (std::size_t c = 0; c < point.size(); ++c) {
                static constexpr Cx kDirs[4] = {{1.0, 0.0}, {-1.0, 0.0}, {0.0, 1.0}, {0.0, -1.0}};
                for (const Cx& dir : kDirs) {
                    std::vector<Cx> candidate = point;
                    candidate[c] += dir * step;
                    candidate = renormalized(std::move(candidate));
                    const double v = value(candidate);
                    if (v > best + 1e-15) {
                        best = v;
                        point = std::move(candidate);
                        improved = true;
                    }
                }
            }
        }
    }
}

struct BestSample {
    double value = -1.0;
    long long index = -1;
};

// Deterministic parallel scan over per-sample RNG streams: the winner is
// independent of the partitioning (ties resolved toward the lower index).
template <typename Eval>
BestSample scan_samples(long long samples, int threads, const Eval& eval) {
    const int workers =
        std::max(1, static_cast<int>(std::min<long long>(threads, samples)));
    std::vector<BestSample> partial(static_cast<std::size_t>(workers));
    auto run = [&](int w) {
        BestSample local;
        for (long long k = w; k < samples; k += workers) {
            const double v = eval(k);
            if (v > local.value || (v == local.value && k < local.index)) {
                local.value = v;
                local.index = k;
            }
        }
        partial[static_cast<std::size_t>(w)] = local;
    };
    if (workers == 1) {
        run(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int w = 0; w < workers; ++w) pool.emplace_back(run, w);
        for (std::thread& t : pool) t.join();
    }
    BestSample best;
    for (const BestSample& p : partial)
        if (p.value > best.value || (p.value == best.value && p.index != -1 &&
                                     (best.index == -1 || p.index < best.index)))
            best = p;
    return best;
}

}  // namespace

CertaintySearchResult max_certainty_search(const uncertainty::OutcomeSet& s,
                                           const SearchConfig& cfg) {
    if (cfg.samples < 1) throw std::invalid_argument("max_certainty_search: samples must be >= 1");
    const int d = s.dim;

    auto sample_state = [&](long long k) {
        CounterRng rng(cfg.seed, static_cast<std::uint64_t>(k));
        return random_pure_state(d, rng);
    };
    const BestSample best = scan_samples(cfg.samples, cfg.threads, [&](long long k) {
        return certainty_value(s, sample_state(k).amplitudes);
    });

    std::vector<Cx> point = sample_state(best.index).amplitudes;
    double value = best.value;
    if (cfg.refine)
        pattern_ascend(point, value, [&](const std::vector<Cx>& psi) {
            return certainty_value(s, psi);
        });
    return CertaintySearchResult{value, PureState::normalized(std::move(point))};
}

namespace {

// Game value for fixed orthonormal decodings: averaged over strings, the
// best pure-state encoding achieves the top eigenvalue of the mean of the
// correct-outcome projectors.
double game_value(const porac::Game& game, const std::vector<RawVectors>& bases) {
    const int d = game.dim;
    const int n = game.n_dits;
    const long long total = game.string_count();
    double sum = 0.0;
    for (long long x = 0; x < total; ++x) {
        const std::vector<int> dits = porac::index_to_string(x, n, d);
        ComplexMatrix m(d);
        for (int y = 0; y < n; ++y) {
            const std::vector<Cx>& v =
                bases[static_cast<std::size_t>(y)][static_cast<std::size_t>(
                    dits[static_cast<std::size_t>(y)])];
            for (int r = 0; r < d; ++r)
                for (int c = 0; c < d; ++c)
                    m.at(r, c) += v[static_cast<std::size_t>(r)] *
                                  std::conj(v[static_cast<std::size_t>(c)]) /
                                  static_cast<double>(n);
        }
        sum += linalg::hermitian_max_eigenvalue(m);
    }
    return sum / static_cast<double>(total);
}

std::vector<RawVectors> draw_game_bases(const porac::Game& game, std::uint64_t seed,
                                        long long sample) {
    std::vector<RawVectors> raw;
    raw.reserve(static_cast<std::size_t>(game.n_dits));
    for (int i = 0; i < game.n_dits; ++i) {
        CounterRng rng(seed, static_cast<std::uint64_t>(sample) * 64 + static_cast<std::uint64_t>(i));
        raw.push_back(draw_raw_vectors(game.dim, rng));
    }
    return raw;
}

std::optional<std::vector<RawVectors>> orthonormalize_all(const std::vector<RawVectors>& raw) {
    std::vector<RawVectors> out;
    out.reserve(raw.size());
    for (const RawVectors& r : raw) {
        std::optional<RawVectors> o = orthonormalize(r);
        if (!o) return std::nullopt;
        out.push_back(std::move(*o));
    }
    return out;
}

}  // namespace

PoracSearchResult max_porac_search(const porac::Game& game, const SearchConfig& cfg) {
    if (cfg.samples < 1) throw std::invalid_argument("max_porac_search: samples must be >= 1");
    if (game.string_count() > 1000)
        throw std::invalid_argument(
            "max_porac_search: d^N exceeds the 1000-string search limit");

    auto evaluate_sample = [&](long long k) {
        const std::optional<std::vector<RawVectors>> bases =
            orthonormalize_all(draw_game_bases(game, cfg.seed, k));
        return bases ? game_value(game, *bases) : -1.0;
    };
    const BestSample best = scan_samples(cfg.samples, cfg.threads, evaluate_sample);
    if (best.index < 0)
        throw std::runtime_error("max_porac_search: every sampled basis set was degenerate");

    std::vector<RawVectors> raw = draw_game_bases(game, cfg.seed, best.index);
    double value = best.value;
    if (cfg.refine) {
        // Flatten the raw basis seeds into one coordinate vector and
        // pattern-ascend on it; each evaluation re-orthonormalizes.
        const int d = game.dim;
        const std::size_t per_basis = static_cast<std::size_t>(d) * d;
        std::vector<Cx> flat;
        flat.reserve(per_basis * raw.size());
        for (const RawVectors& r : raw)
            for (const std::vector<Cx>& col : r)
                for (const Cx& a : col) flat.push_back(a);

        auto unflatten = [&](const std::vector<Cx>& coords) {
            std::vector<RawVectors> bases(raw.size(),
                                          RawVectors(static_cast<std::size_t>(d),
                                                     std::vector<Cx>(static_cast<std::size_t>(d))));
            std::size_t pos = 0;
            for (RawVectors& r : bases)
                for (std::vector<Cx>& col : r)
                    for (Cx& a : col) a = coords[pos++];
            return bases;
        };
        auto evaluate_flat = [&](const std::vector<Cx>& coords) {
            const std::optional<std::vector<RawVectors>> bases =
                orthonormalize_all(unflatten(coords));
            return bases ? game_value(game, *bases) : -1.0;
        };
        pattern_ascend(flat, value, evaluate_flat);
    }

    PoracSearchResult result;
    result.value = value;
    result.description = "best of " + std::to_string(cfg.samples) + " sampled decodings (seed " +
                         std::to_string(cfg.seed) + (cfg.refine ? ", refined)" : ")");
    return result;
}

ClassicalBruteforceResult classical_bruteforce_rac(int n, int d) {
    if (n < 2 || d < 2) throw std::invalid_argument("classical_bruteforce_rac: need n >= 2, d >= 2");
    long long total = 1;
    for (int i = 0; i < n; ++i) total *= d;
    if (total * std::log(static_cast<double>(d)) > std::log(2.5e7))
        throw std::invalid_argument(
            "classical_bruteforce_rac: d^(d^N) encoding tables exceed the 2.5e7 limit");

    std::vector<std::vector<int>> strings(static_cast<std::size_t>(total));
    for (long long x = 0; x < total; ++x) strings[static_cast<std::size_t>(x)] = porac::index_to_string(x, n, d);

    std::vector<int> encoding(static_cast<std::size_t>(total), 0);
    std::vector<long long> counts(static_cast<std::size_t>(d) * n * d);
    long long best_num = -1;
    std::vector<int> best_encoding;
    std::vector<std::vector<int>> best_decoding;

    while (true) {
        std::fill(counts.begin(), counts.end(), 0);
        for (long long x = 0; x < total; ++x) {
            const int m = encoding[static_cast<std::size_t>(x)];
            for (int y = 0; y < n; ++y)
                ++counts[(static_cast<std::size_t>(m) * n + y) * d +
                         strings[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)]];
        }
        // Optimal decoding decomposes per (message, question).
        long long num = 0;
        std::vector<std::vector<int>> decoding(static_cast<std::size_t>(d),
                                               std::vector<int>(static_cast<std::size_t>(n), 0));
        for (int m = 0; m < d; ++m) {
            for (int y = 0; y < n; ++y) {
                long long best_count = -1;
                int best_answer = 0;
                for (int v = 0; v < d; ++v) {
                    const long long c = counts[(static_cast<std::size_t>(m) * n + y) * d + v];
                    if (c > best_count) {
                        best_count = c;
                        best_answer = v;
                    }
                }
                num += best_count;
                decoding[static_cast<std::size_t>(m)][static_cast<std::size_t>(y)] = best_answer;
            }
        }
        if (num > best_num) {
            best_num = num;
            best_encoding = encoding;
            best_decoding = decoding;
        }
        // Next encoding table (mixed-radix increment).
        long long pos = 0;
        while (pos < total) {
            if (++encoding[static_cast<std::size_t>(pos)] < d) break;
            encoding[static_cast<std::size_t>(pos)] = 0;
            ++pos;
        }
        if (pos == total) break;
    }

    ClassicalBruteforceResult result;
    result.best = Rational(best_num, total * n);
    result.encoding = std::move(best_encoding);
    result.decoding = std::move(best_decoding);
    return result;
}

namespace {

std::vector<std::vector<bloch::BlochVector>> basis_bloch_vectors(
    const std::vector<Basis>& bases) {
    if (bases.empty()) throw std::invalid_argument("need at least one basis");
    const int d = bases.front().dim;
    for (const Basis& b : bases)
        if (b.dim != d) throw std::invalid_argument("basis dimension mismatch");
    std::vector<std::vector<bloch::BlochVector>> out(bases.size());
    for (std::size_t i = 0; i < bases.size(); ++i) {
        out[i].reserve(static_cast<std::size_t>(d));
        for (const PureState& v : bases[i].vectors) out[i].push_back(bloch::to_bloch(v));
    }
    return out;
}

long long power_ll(int base, int exp) {
    long long p = 1;
    for (int i = 0; i < exp; ++i) {
        p *= base;
        if (p > porac::kMaxStrings) throw std::invalid_argument("d^N exceeds enumeration limit");
    }
    return p;
}

}  // namespace

double lemma3_sum(const std::vector<Basis>& measurement_bases) {
    const auto blochs = basis_bloch_vectors(measurement_bases);
    const int n = static_cast<int>(measurement_bases.size());
    const int d = measurement_bases.front().dim;
    const long long total = power_ll(d, n);
    const std::size_t comps = static_cast<std::size_t>(d) * d - 1;

    double sum = 0.0;
    std::vector<double> acc(comps);
    for (long long x = 0; x < total; ++x) {
        std::fill(acc.begin(), acc.end(), 0.0);
        long long rest = x;
        for (int i = n - 1; i >= 0; --i) {
            const int outcome = static_cast<int>(rest % d);
            rest /= d;
            const bloch::BlochVector& bv = blochs[static_cast<std::size_t>(i)][static_cast<std::size_t>(outcome)];
            for (std::size_t c = 0; c < comps; ++c) acc[c] += bv.components[c];
        }
        double norm_sq = 0.0;
        for (double v : acc) norm_sq += v * v;
        sum += norm_sq;
    }
    return sum;
}

double lemma3_expected(int n, int d) {
    if (n < 1 || d < 2) throw std::invalid_argument("lemma3_expected: need n >= 1, d >= 2");
    return (d - 1.0) / (2.0 * d) * n * std::pow(static_cast<double>(d), n);
}

PhiReport phi_bound_check(const std::vector<Basis>& decodings, double tol) {
    const auto blochs = basis_bloch_vectors(decodings);
    const int n = static_cast<int>(decodings.size());
    const int d = decodings.front().dim;
    const long long total = power_ll(d, n);
    const std::size_t comps = static_cast<std::size_t>(d) * d - 1;
    const double radius = bloch::pure_state_norm(d);

    double norm_total = 0.0;
    std::vector<double> acc(comps);
    for (long long x = 0; x < total; ++x) {
        std::fill(acc.begin(), acc.end(), 0.0);
        long long rest = x;
        for (int i = n - 1; i >= 0; --i) {
            const int outcome = static_cast<int>(rest % d);
            rest /= d;
            const bloch::BlochVector& bv = blochs[static_cast<std::size_t>(i)][static_cast<std::size_t>(outcome)];
            for (std::size_t c = 0; c < comps; ++c) acc[c] += bv.components[c];
        }
        double norm_sq = 0.0;
        for (double v : acc) norm_sq += v * v;
        norm_total += std::sqrt(norm_sq);
    }

    PhiReport report;
    report.phi = radius * norm_total;
    report.phi_bound = std::sqrt(static_cast<double>(n)) * (d - 1.0) *
                       static_cast<double>(total) / (2.0 * d);
    report.implied_success =
        1.0 / d + 2.0 * report.phi / (static_cast<double>(n) * static_cast<double>(total));
    report.quantum_bound = porac::quantum_upper_bound(n, d);
    report.saturated = std::abs(report.phi - report.phi_bound) <= tol;
    report.pass = report.phi <= report.phi_bound + tol &&
                  report.implied_success <= report.quantum_bound + tol;
    return report;
}

}  // namespace fur::oracle
