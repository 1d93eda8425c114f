#ifndef CIRCALT_CIRCULAR_COLOURING_HPP
#define CIRCALT_CIRCULAR_COLOURING_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "circalt/fraction.hpp"
#include "circalt/graph.hpp"

namespace circalt {

// Raised when a search that a theorem guarantees to succeed comes up empty,
// or a certified bound fails to hold. Suites treat it as a loud failure.
struct TheoremViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct PQColouring {
    int p = 0;
    int q = 1;
    std::vector<int> colour; // values in 1..p
};

// q <= |c(u) - c(v)| <= p - q on every edge. Colours must lie in 1..p.
bool is_pq_colouring(const Graph& g, const std::vector<int>& colour, int p, int q);

// Complete backtracking search with forward checking; vertices are picked
// smallest-domain-first and the first branched vertex is pinned to colour 1
// (colour rotation symmetry). Returns nullopt exactly when no colouring
// exists.
std::optional<PQColouring> find_pq_colouring(const Graph& g, int p, int q);

// Reduced fractions in (chi-1, chi] with numerator at most max_p, ascending.
// Generated by a Stern-Brocot mediant sweep.
std::vector<Fraction> chi_c_candidates(int chi, int max_p);

struct ChiCResult {
    Fraction value;
    PQColouring witness;
};

// Exact circular chromatic number: first feasible candidate fraction. The
// numerator bound p <= n comes from standard circular-colouring theory and
// makes the search finite; p/q = chi is always feasible, so it terminates.
ChiCResult circular_chromatic_number(const Graph& g);

struct ZigzagWitness {
    std::vector<int> side_a;  // ceil(t/2) vertices, odd colour ranks
    std::vector<int> side_b;  // floor(t/2) vertices, even colour ranks
    std::vector<int> colours; // the t distinct colours in increasing order
};

// Finds a complete bipartite K_{ceil(t/2),floor(t/2)} whose t vertices carry
// t distinct colours that alternate sides in increasing order. Backtracking
// over colour-increasing vertex choices; the returned witness is the least
// in vertex-index sequence order. Throws TheoremViolation on exhaustion.
ZigzagWitness find_zigzag_witness(const Graph& g, const std::vector<int>& colouring, int t);

bool verify_zigzag_witness(const Graph& g, const std::vector<int>& colouring, int t,
                           const ZigzagWitness& witness);

struct SeparatorResult {
    bool holds = false;
    std::vector<int> witness;                          // one side when holds
    std::vector<std::vector<int>> component_list;      // co-colour-class components
    std::vector<std::vector<int>> refuting_colourings; // flat colourings that forced merges
    std::vector<std::vector<std::vector<int>>> colourings; // all enumerated partitions (small cases)
    std::uint64_t enumerated = 0;
};

// Enumerates every proper partition of V into m independent classes (up to
// colour renaming) and checks whether some proper nonempty vertex set is a
// union of colour classes in all of them: take components of the relation
// "u, v share a class in some colouring"; two or more components means such
// a set exists.
SeparatorResult colour_class_separator(const Graph& g, int m,
                                       std::uint64_t node_budget = 10'000'000);

} // namespace circalt

#endif
