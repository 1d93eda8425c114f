#ifndef CIRCALT_GRAPH_HPP
#define CIRCALT_GRAPH_HPP

#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace circalt {

// Simple undirected graphs on at most 64 vertices, one adjacency bitset row
// per vertex. Everything in this library is value-semantic and immutable
// after construction, so graphs can be shared freely across threads.
class Graph {
public:
    static constexpr int max_vertices = 64;

    Graph() = default;
    explicit Graph(int n);
    Graph(int n, std::initializer_list<std::pair<int, int>> edges);

    int size() const { return n_; }
    long edge_count() const;

    bool adjacent(int u, int v) const { return (adj_[u] >> v) & 1u; }
    std::uint64_t row(int v) const { return adj_[v]; }
    int degree(int v) const;

    void add_edge(int u, int v);

    // Bitmask with the low n bits set.
    std::uint64_t full_mask() const;

    std::vector<std::pair<int, int>> edges() const;

    bool has_edges() const;

    // Optional per-vertex display names; empty when unset. Names must be
    // unique and cover every vertex when present.
    const std::vector<std::string>& labels() const { return labels_; }
    void set_labels(std::vector<std::string> labels);

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && adj_ == other.adj_;
    }

private:
    int n_ = 0;
    std::vector<std::uint64_t> adj_;
    std::vector<std::string> labels_;

    void check_vertex(int v) const;
};

// Induced subgraph on the vertices listed in `keep` (result vertex i is
// keep[i]). Labels, when present, are carried over.
Graph induced_subgraph(const Graph& g, const std::vector<int>& keep);

// Relabel vertices: result vertex perm[v] is input vertex v.
Graph permuted(const Graph& g, const std::vector<int>& perm);

struct GraphFormatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// graph6, short form only (1 <= n <= 62), no ">>graph6<<" header.
Graph parse_graph6(const std::string& text);
std::string emit_graph6(const Graph& g);

} // namespace circalt

#endif
