#ifndef CIRCALT_ORDERINGS_HPP
#define CIRCALT_ORDERINGS_HPP

#include <vector>

#include "circalt/graph.hpp"

namespace circalt {

struct LinearOrdering {
    std::vector<int> perm; // perm[i] = vertex at position i
};

// A circular ordering read clockwise. Positions are 0-based; the canonical
// form rotates vertex 0 to position 0.
struct CircularOrdering {
    std::vector<int> perm;

    CircularOrdering canonical() const;
    CircularOrdering reversed() const;
    std::vector<int> positions() const; // vertex -> position
};

bool is_permutation(const std::vector<int>& perm, int n);

// The two linear orderings a circular ordering induces at `start`: clockwise
// follows perm, counter-clockwise walks it backwards.
LinearOrdering linearize(const CircularOrdering& o, int start, bool clockwise);

// Colour of v = number of vertices in a longest monotonic path ending at v.
// One pass in ordering position: c(v) = 1 + max over earlier neighbours.
std::vector<int> induced_colouring(const Graph& g, const LinearOrdering& o);

struct MonotonicPath {
    int length = 0;
    std::vector<int> path; // positions strictly increase along it
};

MonotonicPath longest_monotonic_path(const Graph& g, const LinearOrdering& o);

struct MonotonicCycle {
    int length = 0;
    std::vector<int> cycle; // empty when the graph has no edges
};

// Reusable scratch buffer; keep one per thread when evaluating many
// orderings in parallel.
struct CycleScratch {
    std::vector<int> dp;
};

// Largest k >= 2 such that some cycle of g appears in circular order within
// one revolution; an edge counts as a 2-cycle, and an edgeless graph scores 1.
// For each anchor vertex the induced-colouring DP is run on paths starting
// at the anchor, closing on the anchor's neighbours; O(n*m) per ordering.
MonotonicCycle longest_monotonic_cycle(const Graph& g, const CircularOrdering& o);

// Value-only fast path. When `multiplicity` is non-null it receives the
// number of (anchor, closing vertex) pairs attaining the maximum.
int longest_monotonic_cycle_value(const Graph& g, const std::vector<int>& perm, CycleScratch& scratch,
                                  long* multiplicity = nullptr);

// Anchor-local value: the longest monotonic cycle whose first vertex within
// one clockwise revolution is perm[anchor_pos]. `count` receives the number
// of closing vertices attaining it.
int anchored_cycle_value(const Graph& g, const std::vector<int>& perm, int anchor_pos,
                         CycleScratch& scratch, long* count = nullptr);

// True iff the cycle's consecutive vertices (cyclically) are adjacent, all
// distinct, and the clockwise position gaps sum to exactly n.
bool verify_monotonic_cycle(const Graph& g, const CircularOrdering& o, const std::vector<int>& cycle);

} // namespace circalt

#endif
