#ifndef CIRCALT_COLOURING_HPP
#define CIRCALT_COLOURING_HPP

#include <vector>

#include "circalt/graph.hpp"

namespace circalt {

// True when `colour` assigns different values to the endpoints of every edge.
bool is_proper_colouring(const Graph& g, const std::vector<int>& colour);

// Number of distinct values used by a colouring.
int colour_count(const std::vector<int>& colour);

// Exact maximum clique via branch and bound with a greedy-colouring bound.
// Vertices are explored in descending-degree order, ties by index.
std::vector<int> max_clique(const Graph& g);
int clique_number(const Graph& g);

// DSATUR greedy colouring; colours are 1-based.
std::vector<int> dsatur_greedy(const Graph& g);

struct ChromaticResult {
    int chi = 0;
    std::vector<int> colouring; // proper, 1-based, exactly chi colours
};

// Exact chromatic number: DSATUR-seeded iterative deepening over a
// k-colourability backtracker with forward checking, a precoloured maximum
// clique, and canonical first-use colour ordering.
ChromaticResult chromatic_number(const Graph& g);

// Complete k-colourability test; returns a witness colouring when one exists.
bool k_colourable(const Graph& g, int k, std::vector<int>* witness = nullptr);

} // namespace circalt

#endif
