#include "circalt/altitude.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "circalt/circular_colouring.hpp"
#include "circalt/colouring.hpp"
#include "circalt/invariants.hpp"
#include "circalt/powerful.hpp"
#include "circalt/search.hpp"

namespace circalt {

std::string altitude_method_name(AltitudeMethod m) {
    switch (m) {
        case AltitudeMethod::exhaustive: return "exhaustive";
        case AltitudeMethod::complement_disconnected: return "complement-disconnected";
        case AltitudeMethod::bounds_only: return "bounds-only";
    }
    return "?";
}

int AltitudeResult::value() const {
    if (!exact()) throw std::logic_error("altitude result is an interval, not a value");
    return lower;
}

namespace {

int altitude_floor(const Graph& g) {
    if (!g.has_edges()) return 1;
    return std::max(2, clique_number(g));
}

std::optional<std::uint64_t> canonical_ordering_count(int n) {
    if (n <= 2) return std::uint64_t{1};
    std::uint64_t count = 1;
    for (int i = 2; i < n; ++i) {
        if (count > std::uint64_t{1} << 60) return std::nullopt;
        count *= static_cast<std::uint64_t>(i);
    }
    return count / 2;
}

struct ScanOutcome {
    int min_value = 0;
    std::vector<int> witness;
    std::uint64_t examined = 0;
    bool early = false;
};

// Enumerate canonical orderings with perm[1] fixed to `first`, reporting the
// partition minimum and its first witness in lexicographic scan order.
ScanOutcome scan_partition(const Graph& g, int first, int floor_value,
                           const std::atomic<int>& published_min) {
    const int n = g.size();
    std::vector<int> rest;
    for (int v = 1; v < n; ++v)
        if (v != first) rest.push_back(v);

    ScanOutcome outcome;
    outcome.min_value = n + 1;
    CycleScratch scratch;
    std::vector<int> perm(n);
    perm[0] = 0;
    perm[1] = first;
    std::uint64_t since_check = 0;
    do {
        if (rest.back() < first) continue; // reflection representative only
        std::copy(rest.begin(), rest.end(), perm.begin() + 2);
        const int value = longest_monotonic_cycle_value(g, perm, scratch);
        ++outcome.examined;
        if (value < outcome.min_value) {
            outcome.min_value = value;
            outcome.witness = perm;
            if (value <= floor_value) {
                outcome.early = true;
                return outcome;
            }
        }
        if (++since_check % 1024 == 0 && published_min.load(std::memory_order_relaxed) <= floor_value) {
            outcome.early = true;
            return outcome;
        }
    } while (std::next_permutation(rest.begin(), rest.end()));
    return outcome;
}

} // namespace

AltitudeResult circular_altitude_exact(const Graph& g, const ExhaustiveOptions& opts) {
    const int n = g.size();
    if (n == 0) throw std::invalid_argument("empty graph");

    const int floor_value = altitude_floor(g);
    const auto count = canonical_ordering_count(n);
    if (n > opts.max_n || !count || *count > opts.budget) {
        BoundsOptions fallback;
        fallback.use_circular_chromatic = false;
        AltitudeResult bounds = circular_altitude_bounds(g, fallback);
        return bounds;
    }

    AltitudeResult result;
    result.method = AltitudeMethod::exhaustive;
    result.lower_sources = {"exhaustive-scan"};
    result.upper_sources = {"exhaustive-scan"};

    if (n <= 2) {
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        CycleScratch scratch;
        const int value = longest_monotonic_cycle_value(g, perm, scratch);
        result.lower = result.upper = value;
        result.witness_ordering = CircularOrdering{perm};
        result.orderings_examined = 1;
        const MonotonicCycle cycle = longest_monotonic_cycle(g, *result.witness_ordering);
        result.witness_cycle = cycle.cycle;
        return result;
    }

    std::atomic<int> published_min{n + 1};
    std::vector<ScanOutcome> outcomes(n - 1);
    const auto worker = [&](int index) {
        const int first = index + 1;
        outcomes[index] = scan_partition(g, first, floor_value, published_min);
        int seen = published_min.load(std::memory_order_relaxed);
        while (outcomes[index].min_value < seen &&
               !published_min.compare_exchange_weak(seen, outcomes[index].min_value)) {
        }
    };

    if (opts.jobs <= 1) {
        for (int i = 0; i < n - 1; ++i) {
            worker(i);
            if (published_min.load() <= floor_value) break;
        }
    } else {
        std::vector<std::thread> pool;
        std::atomic_int next{0};
        const int threads = std::min(opts.jobs, n - 1);
        for (int t = 0; t < threads; ++t)
            pool.emplace_back([&] {
                for (int i = next.fetch_add(1); i < n - 1; i = next.fetch_add(1)) worker(i);
            });
        for (auto& th : pool) th.join();
    }

    int best = n + 1;
    std::vector<int> witness;
    for (const auto& o : outcomes) {
        result.orderings_examined += o.examined;
        result.early_exit = result.early_exit || o.early;
        if (o.min_value < best || (o.min_value == best && !o.witness.empty() &&
                                   (witness.empty() || o.witness < witness))) {
            best = o.min_value;
            witness = o.witness;
        }
    }
    result.lower = result.upper = best;
    result.witness_ordering = CircularOrdering{witness};
    const MonotonicCycle cycle = longest_monotonic_cycle(g, *result.witness_ordering);
    if (cycle.length != best) throw std::logic_error("witness ordering failed re-evaluation");
    result.witness_cycle = cycle.cycle;
    return result;
}

std::optional<AltitudeResult> altitude_via_complement(const Graph& g) {
    const auto comps = components(complement(g));
    if (comps.size() < 2) return std::nullopt;

    const ChromaticResult chi = chromatic_number(g);

    // Sorting by colour class gives an ordering whose longest monotonic cycle
    // is at most chi; with a disconnected complement it is exactly chi.
    std::vector<int> perm(g.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::stable_sort(perm.begin(), perm.end(),
                     [&](int a, int b) { return chi.colouring[a] < chi.colouring[b]; });

    AltitudeResult result;
    result.method = AltitudeMethod::complement_disconnected;
    result.lower = result.upper = chi.chi;
    result.lower_sources = {"complement-disconnected"};
    result.upper_sources = {"stable-partition-ordering"};
    result.witness_ordering = CircularOrdering{perm};
    const MonotonicCycle cycle = longest_monotonic_cycle(g, *result.witness_ordering);
    if (cycle.length != chi.chi)
        throw TheoremViolation("colour-sorted ordering of a graph with disconnected complement "
                               "scored " + std::to_string(cycle.length) + " instead of chi = " +
                               std::to_string(chi.chi));
    result.witness_cycle = cycle.cycle;
    return result;
}

int linear_altitude(const Graph& g) {
    return chromatic_number(g).chi;
}

AltitudeResult circular_altitude_bounds(const Graph& g, const BoundsOptions& opts) {
    if (g.size() == 0) throw std::invalid_argument("empty graph");

    AltitudeResult result;
    result.method = AltitudeMethod::bounds_only;

    if (!g.has_edges()) {
        result.lower = result.upper = 1;
        result.lower_sources = {"edgeless"};
        result.upper_sources = {"edgeless"};
        return result;
    }

    const int omega = clique_number(g);
    result.lower = std::max(2, omega);
    result.lower_sources.push_back(omega >= 2 ? "clique" : "edge");

    const ChromaticResult chi = chromatic_number(g);
    result.upper = chi.chi;
    result.upper_sources.push_back("chromatic");

    if (opts.pedigree && opts.pedigree->r >= 1 && opts.pedigree->base.has_edges()) {
        const int t = chromatic_number(opts.pedigree->base).chi + opts.pedigree->r;
        const int rainbow = t % 2 == 0 ? t : t - 1;
        if (rainbow > result.lower) {
            result.lower = rainbow;
            result.lower_sources = {"rainbow-biclique-theorem (not recomputed)"};
        }
        try {
            const OddGirthCertificate cert = odd_girth_certificate(opts.pedigree->base,
                                                                   opts.pedigree->r);
            if (cert.value < result.upper) {
                result.upper = cert.value;
                result.upper_sources = {"odd-girth-certificate"};
                result.witness_ordering = cert.closure;
                result.witness_cycle = cert.extremal_cycle;
            }
        } catch (const std::invalid_argument&) {
            // hypotheses not met; no certificate upper bound
        }
    }

    if (opts.anneal_steps > 0) {
        AnnealConfig cfg;
        cfg.seed = opts.seed;
        cfg.steps = opts.anneal_steps;
        cfg.restarts = opts.anneal_restarts;
        cfg.jobs = opts.jobs;
        const SearchReport report = anneal_min_max_cycle(g, cfg);
        if (report.best_value < result.upper) {
            result.upper = report.best_value;
            result.upper_sources = {"anneal"};
            result.witness_ordering = report.best_ordering;
            result.witness_cycle = longest_monotonic_cycle(g, report.best_ordering).cycle;
        }
    }

    if (opts.use_circular_chromatic && g.size() <= 15) {
        const int floor_chi_c = static_cast<int>(circular_chromatic_number(g).value.floor());
        if (floor_chi_c < result.upper) {
            result.upper = floor_chi_c;
            result.upper_sources = {"circular-chromatic-floor"};
            result.witness_ordering.reset();
            result.witness_cycle.clear();
        }
    }

    if (result.lower > result.upper)
        throw TheoremViolation("altitude bounds crossed: lower " + std::to_string(result.lower) +
                               " > upper " + std::to_string(result.upper));
    return result;
}

} // namespace circalt
