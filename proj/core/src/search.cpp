#include "circalt/search.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>
#include <thread>

namespace circalt {

void AnnealConfig::validate() const {
    if (restarts < 1 || steps < 1) throw std::invalid_argument("restarts and steps must be positive");
    if (!(decay > 0.0 && decay < 1.0)) throw std::invalid_argument("decay must lie in (0,1)");
    if (initial_temperature <= 0.0) throw std::invalid_argument("temperature must be positive");
    if (p_adjacent < 0 || p_swap < 0 || p_reinsert < 0 ||
        std::abs(p_adjacent + p_swap + p_reinsert - 1.0) > 1e-9)
        throw std::invalid_argument("move probabilities must be non-negative and sum to 1");
    if (jobs < 1) throw std::invalid_argument("jobs must be positive");
}

namespace {

// Explicit draws keep results identical across standard libraries.
struct Rng {
    std::mt19937_64 engine;
    explicit Rng(std::uint64_t seed) : engine(seed) {}
    std::uint64_t next() { return engine(); }
    std::uint64_t bounded(std::uint64_t m) { return next() % m; }
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
};

// Random permutation of positions 1..n-1; vertex 0 stays at position 0.
std::vector<int> random_canonical(int n, Rng& rng) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    for (int i = n - 1; i >= 2; --i) {
        const int j = 1 + static_cast<int>(rng.bounded(static_cast<std::uint64_t>(i)));
        std::swap(perm[i], perm[j]);
    }
    return perm;
}

struct AnchorState {
    std::vector<int> value;
    std::vector<long> count;

    void resize(int n) {
        value.assign(n, 0);
        count.assign(n, 0);
    }

    // Global objective: max anchor value, multiplicity summed over anchors
    // attaining it; value 0 means no closure anywhere (edgeless), scored 1.
    std::pair<int, long> combine() const {
        int best = 0;
        long mult = 0;
        for (size_t i = 0; i < value.size(); ++i) {
            if (value[i] > best) {
                best = value[i];
                mult = count[i];
            } else if (value[i] == best && best > 0) {
                mult += count[i];
            }
        }
        return {best == 0 ? 1 : best, mult};
    }
};

struct RestartResult {
    int best_value = 0;
    std::vector<int> best_perm;
    std::uint64_t evaluations = 0;
    std::vector<int> trajectory;
};

double energy(int value, long mult, int n) {
    return value + static_cast<double>(mult) / (static_cast<double>(n) * n + 1.0);
}

RestartResult run_restart(const Graph& g, const AnnealConfig& cfg, int restart_index) {
    const int n = g.size();
    Rng rng(cfg.seed ^ static_cast<std::uint64_t>(restart_index));
    CycleScratch scratch;

    std::vector<int> perm = random_canonical(n, rng);

    AnchorState anchors;
    anchors.resize(n);
    const auto eval_anchor = [&](int a) {
        long c = 0;
        anchors.value[a] = anchored_cycle_value(g, perm, a, scratch, &c);
        anchors.count[a] = c;
    };
    const auto eval_all = [&] {
        for (int a = 0; a < n; ++a) eval_anchor(a);
    };

    RestartResult result;
    eval_all();
    ++result.evaluations;
    auto [value, mult] = anchors.combine();
    double current_energy = energy(value, mult, n);
    result.best_value = value;
    result.best_perm = perm;
    result.trajectory.push_back(value);

    double temperature = cfg.initial_temperature;
    for (std::uint64_t step = 0; step < cfg.steps; ++step, temperature *= cfg.decay) {
        ++result.evaluations;
        const double move = rng.uniform();
        bool cheap = false;
        int cheap_a = -1, cheap_b = -1;
        int saved_va = 0, saved_vb = 0;
        long saved_ca = 0, saved_cb = 0;
        std::vector<int> saved_perm;
        AnchorState saved_anchors;

        if (n > 4 && move < cfg.p_adjacent) {
            const int p = 1 + static_cast<int>(rng.bounded(static_cast<std::uint64_t>(n - 2)));
            const int x = perm[p], y = perm[p + 1];
            if (!g.adjacent(x, y)) {
                // Only the two anchors rooted at x and y can change: for every
                // other anchor the pair stays consecutive, shares no edge, and
                // leaves all predecessor sets intact.
                cheap = true;
                cheap_a = p;
                cheap_b = p + 1;
                saved_va = anchors.value[p];
                saved_ca = anchors.count[p];
                saved_vb = anchors.value[p + 1];
                saved_cb = anchors.count[p + 1];
                std::swap(perm[p], perm[p + 1]);
                eval_anchor(p);
                eval_anchor(p + 1);
            } else {
                saved_perm = perm;
                saved_anchors = anchors;
                std::swap(perm[p], perm[p + 1]);
                eval_all();
            }
        } else if (n <= 4 || move < cfg.p_adjacent + cfg.p_swap) {
            const int i = 1 + static_cast<int>(rng.bounded(static_cast<std::uint64_t>(n - 1)));
            int j = 1 + static_cast<int>(rng.bounded(static_cast<std::uint64_t>(n - 1)));
            if (i == j) j = 1 + (j % (n - 1));
            saved_perm = perm;
            saved_anchors = anchors;
            std::swap(perm[i], perm[j]);
            eval_all();
        } else {
            // Segment reinsertion within positions 1..n-1.
            const int max_len = std::min(4, n - 2);
            const int len = 1 + static_cast<int>(rng.bounded(static_cast<std::uint64_t>(max_len)));
            const int from = 1 + static_cast<int>(rng.bounded(static_cast<std::uint64_t>(n - len)));
            std::vector<int> segment(perm.begin() + from, perm.begin() + from + len);
            saved_perm = perm;
            saved_anchors = anchors;
            perm.erase(perm.begin() + from, perm.begin() + from + len);
            const int slots = static_cast<int>(perm.size()); // insert before positions 1..n-len
            const int at = 1 + static_cast<int>(rng.bounded(static_cast<std::uint64_t>(slots)));
            perm.insert(perm.begin() + at, segment.begin(), segment.end());
            eval_all();
        }

        const auto [new_value, new_mult] = anchors.combine();
        const double new_energy = energy(new_value, new_mult, n);
        const double delta = new_energy - current_energy;
        bool accept = delta <= 0.0;
        if (!accept) accept = rng.uniform() < std::exp(-delta / temperature);

        if (accept) {
            current_energy = new_energy;
            if (new_value < result.best_value) {
                // Validate the incremental bookkeeping before trusting a new best.
                CycleScratch check_scratch;
                const int check = longest_monotonic_cycle_value(g, perm, check_scratch);
                if (check != new_value)
                    throw std::logic_error("incremental kernel evaluation diverged");
                result.best_value = new_value;
                result.best_perm = perm;
                result.trajectory.push_back(new_value);
            }
        } else if (cheap) {
            std::swap(perm[cheap_a], perm[cheap_b]);
            anchors.value[cheap_a] = saved_va;
            anchors.count[cheap_a] = saved_ca;
            anchors.value[cheap_b] = saved_vb;
            anchors.count[cheap_b] = saved_cb;
        } else {
            perm = std::move(saved_perm);
            anchors = std::move(saved_anchors);
        }
    }
    return result;
}

} // namespace

SearchReport anneal_min_max_cycle(const Graph& g, const AnnealConfig& cfg) {
    cfg.validate();
    if (g.size() < 3) throw std::invalid_argument("annealing needs at least 3 vertices");

    std::vector<RestartResult> results(cfg.restarts);
    const auto worker = [&](int index) { results[index] = run_restart(g, cfg, index); };
    if (cfg.jobs <= 1) {
        for (int i = 0; i < cfg.restarts; ++i) worker(i);
    } else {
        std::vector<std::thread> pool;
        std::atomic_int next{0};
        const int threads = std::min(cfg.jobs, cfg.restarts);
        for (int t = 0; t < threads; ++t)
            pool.emplace_back([&] {
                for (int i = next.fetch_add(1); i < cfg.restarts; i = next.fetch_add(1)) worker(i);
            });
        for (auto& th : pool) th.join();
    }

    SearchReport report;
    int best_restart = 0;
    for (int i = 0; i < cfg.restarts; ++i) {
        report.evaluations += results[i].evaluations;
        report.trajectories.push_back(results[i].trajectory);
        if (results[i].best_value < results[best_restart].best_value) best_restart = i;
    }
    report.best_ordering.perm = results[best_restart].best_perm;

    // Final re-verification from scratch; the report never trusts the
    // incremental path.
    CycleScratch scratch;
    report.best_value = longest_monotonic_cycle_value(g, report.best_ordering.perm, scratch);
    if (report.best_value != results[best_restart].best_value)
        throw std::logic_error("annealer best value failed re-verification");
    return report;
}

SampleEvidence sampled_lower_evidence(const Graph& g, int k, std::uint64_t samples,
                                      std::uint64_t seed) {
    Rng rng(seed);
    CycleScratch scratch;
    SampleEvidence evidence;
    evidence.all_at_least = true;
    evidence.min_value = g.size() + 1;
    for (std::uint64_t i = 0; i < samples; ++i) {
        const std::vector<int> perm = random_canonical(g.size(), rng);
        const int value = longest_monotonic_cycle_value(g, perm, scratch);
        ++evidence.samples;
        evidence.min_value = std::min(evidence.min_value, value);
        if (value < k) {
            evidence.all_at_least = false;
            evidence.refuting = CircularOrdering{perm};
            break;
        }
    }
    return evidence;
}

} // namespace circalt
