#ifndef CIRCALT_NAMED_GRAPHS_HPP
#define CIRCALT_NAMED_GRAPHS_HPP

#include <optional>
#include <string>
#include <vector>

#include "circalt/graph.hpp"

namespace circalt {

Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph empty_graph(int n);
Graph complete_bipartite(int m, int n);
// Wheel on k+1 vertices: a k-cycle 0..k-1 joined to hub vertex k.
Graph wheel_graph(int k);
Graph petersen_graph();
Graph grotzsch_graph();

// Resolve a graph given either a graph6 string or a symbolic name:
// K<n>, C<n>, P<n>, W<k>, E<n>, K<m>,<n>, petersen, grotzsch, and
// M<r>K<n> / M<r>C<n> for iterated Mycielskians of complete graphs and
// cycles. Returns nullopt for names that match no pattern.
std::optional<Graph> named_graph(const std::string& name);

// A named or graph6-encoded graph; throws GraphFormatError when neither
// resolves.
Graph resolve_graph(const std::string& text);

struct CorpusEntry {
    std::string name;
    Graph graph;
};

// Small named graphs with at most max_n vertices.
std::vector<CorpusEntry> named_corpus(int max_n);

// Deterministic G(n, p) samples keyed by seed, for corpus sweeps.
std::vector<CorpusEntry> random_corpus(int min_n, int max_n, int per_cell, std::uint64_t seed);

// named_corpus plus random_corpus, the standard sweep corpus.
std::vector<CorpusEntry> sweep_corpus(int max_n, std::uint64_t seed);

} // namespace circalt

#endif
