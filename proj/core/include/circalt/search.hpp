#ifndef CIRCALT_SEARCH_HPP
#define CIRCALT_SEARCH_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "circalt/graph.hpp"
#include "circalt/orderings.hpp"

namespace circalt {

struct AnnealConfig {
    std::uint64_t seed = 1;
    int restarts = 1;
    std::uint64_t steps = 100000;
    double initial_temperature = 1.0;
    double decay = 0.9995;
    // Move mix; must sum to 1.
    double p_adjacent = 0.5;
    double p_swap = 0.3;
    double p_reinsert = 0.2;
    int jobs = 1;

    void validate() const;
};

struct SearchReport {
    int best_value = 0;
    CircularOrdering best_ordering;
    std::uint64_t evaluations = 0; // proposed-move objective computations
    std::vector<std::vector<int>> trajectories; // per restart, best value after each improvement
    std::string generator = "mt19937_64"; // restart i draws from seed ^ i
};

// Simulated annealing over circular orderings (vertex 0 pinned to position
// 0), minimizing the longest monotonic cycle; ties prefer orderings with
// fewer extremal closures. The reported best value is re-verified with a
// from-scratch kernel evaluation, so the report is an upper-bound
// certificate for the circular altitude.
SearchReport anneal_min_max_cycle(const Graph& g, const AnnealConfig& cfg);

struct SampleEvidence {
    bool all_at_least = false;
    int min_value = 0;
    std::uint64_t samples = 0;
    std::optional<CircularOrdering> refuting; // a sampled ordering below k, when one exists
};

// Uniform random circular orderings; true iff every sample has longest
// monotonic cycle >= k. Evidence, not proof, that the circular altitude
// is at least k.
SampleEvidence sampled_lower_evidence(const Graph& g, int k, std::uint64_t samples,
                                      std::uint64_t seed);

} // namespace circalt

#endif
