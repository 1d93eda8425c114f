#ifndef CIRCALT_ALTITUDE_HPP
#define CIRCALT_ALTITUDE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "circalt/graph.hpp"
#include "circalt/orderings.hpp"

namespace circalt {

enum class AltitudeMethod { exhaustive, complement_disconnected, bounds_only };

std::string altitude_method_name(AltitudeMethod m);

struct AltitudeResult {
    int lower = 0;
    int upper = 0;
    AltitudeMethod method = AltitudeMethod::bounds_only;
    std::optional<CircularOrdering> witness_ordering; // attains `upper` when present
    std::vector<int> witness_cycle;                   // extremal cycle inside the witness
    std::uint64_t orderings_examined = 0;
    bool early_exit = false; // exhaustive scan stopped at the proven floor
    std::vector<std::string> lower_sources;
    std::vector<std::string> upper_sources;

    bool exact() const { return lower == upper; }
    int value() const;
};

struct ExhaustiveOptions {
    std::uint64_t budget = 25'000'000; // canonical orderings to evaluate
    int jobs = 1;
    int max_n = 12;
};

// Minimum of the longest monotonic cycle over all circular orderings,
// canonicalized: vertex 0 anchored at position 0 and reflections halved by
// requiring perm[1] < perm[n-1]. Falls back to a bounds-only result when the
// order or budget is exceeded.
AltitudeResult circular_altitude_exact(const Graph& g, const ExhaustiveOptions& opts = {});

struct MycPedigree {
    Graph base;
    int r = 0;
};

struct BoundsOptions {
    bool use_circular_chromatic = true; // floor(chi_c) upper bound when n <= 15
    std::uint64_t anneal_steps = 0;     // 0 = skip the annealed upper bound
    int anneal_restarts = 1;
    std::uint64_t seed = 1;
    int jobs = 1;
    std::optional<MycPedigree> pedigree; // enables the Mycielskian-only bounds
};

// Interval bracketing: clique/edge floors (plus the rainbow-biclique bound
// for declared Mycielskians, taken from theory rather than recomputed), and
// chromatic, certificate, annealed and floor(chi_c) ceilings.
AltitudeResult circular_altitude_bounds(const Graph& g, const BoundsOptions& opts = {});

// Equals the chromatic number.
int linear_altitude(const Graph& g);

// Exact shortcut when the complement is disconnected: the circular altitude
// equals the chromatic number, witnessed by a colour-sorted ordering.
std::optional<AltitudeResult> altitude_via_complement(const Graph& g);

} // namespace circalt

#endif
