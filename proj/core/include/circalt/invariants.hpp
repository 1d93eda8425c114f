#ifndef CIRCALT_INVARIANTS_HPP
#define CIRCALT_INVARIANTS_HPP

#include <optional>
#include <vector>

#include "circalt/graph.hpp"

namespace circalt {

Graph complement(const Graph& g);

// Connected components as sorted vertex lists, ordered by smallest member.
std::vector<std::vector<int>> components(const Graph& g);

// A graph is disconnected only when it has two or more components; K1 and
// the zero-vertex graph count as connected.
bool is_connected(const Graph& g);

struct CycleWitness {
    int length = 0;
    std::vector<int> cycle; // vertices in cycle order
};

// Shortest cycle / shortest odd cycle, by vertex count. nullopt when the
// graph is acyclic (respectively bipartite).
std::optional<CycleWitness> girth_witness(const Graph& g);
std::optional<CycleWitness> odd_girth_witness(const Graph& g);

std::optional<int> girth(const Graph& g);
std::optional<int> odd_girth(const Graph& g);

} // namespace circalt

#endif
