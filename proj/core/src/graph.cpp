#include "circalt/graph.hpp"

#include <algorithm>
#include <bit>
#include <set>

namespace circalt {

Graph::Graph(int n) : n_(n), adj_(static_cast<size_t>(std::max(n, 0)), 0) {
    if (n < 0 || n > max_vertices)
        throw std::invalid_argument("graph order out of range: " + std::to_string(n));
}

Graph::Graph(int n, std::initializer_list<std::pair<int, int>> edges) : Graph(n) {
    for (auto [u, v] : edges) add_edge(u, v);
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_)
        throw std::invalid_argument("vertex out of range: " + std::to_string(v));
}

void Graph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("loops are not allowed");
    adj_[u] |= std::uint64_t{1} << v;
    adj_[v] |= std::uint64_t{1} << u;
}

int Graph::degree(int v) const {
    check_vertex(v);
    return std::popcount(adj_[v]);
}

long Graph::edge_count() const {
    long twice = 0;
    for (int v = 0; v < n_; ++v) twice += std::popcount(adj_[v]);
    return twice / 2;
}

std::uint64_t Graph::full_mask() const {
    return n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (adjacent(u, v)) out.emplace_back(u, v);
    return out;
}

bool Graph::has_edges() const {
    for (int v = 0; v < n_; ++v)
        if (adj_[v]) return true;
    return false;
}

void Graph::set_labels(std::vector<std::string> labels) {
    if (!labels.empty()) {
        if (static_cast<int>(labels.size()) != n_)
            throw std::invalid_argument("label count must match vertex count");
        std::set<std::string> seen(labels.begin(), labels.end());
        if (static_cast<int>(seen.size()) != n_)
            throw std::invalid_argument("labels must be unique");
    }
    labels_ = std::move(labels);
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& keep) {
    Graph h(static_cast<int>(keep.size()));
    for (size_t i = 0; i < keep.size(); ++i)
        for (size_t j = i + 1; j < keep.size(); ++j)
            if (g.adjacent(keep[i], keep[j])) h.add_edge(static_cast<int>(i), static_cast<int>(j));
    if (!g.labels().empty()) {
        std::vector<std::string> labels;
        labels.reserve(keep.size());
        for (int v : keep) labels.push_back(g.labels()[v]);
        h.set_labels(std::move(labels));
    }
    return h;
}

Graph permuted(const Graph& g, const std::vector<int>& perm) {
    if (static_cast<int>(perm.size()) != g.size())
        throw std::invalid_argument("permutation size mismatch");
    Graph h(g.size());
    for (auto [u, v] : g.edges()) h.add_edge(perm[u], perm[v]);
    if (!g.labels().empty()) {
        std::vector<std::string> labels(g.size());
        for (int v = 0; v < g.size(); ++v) labels[perm[v]] = g.labels()[v];
        h.set_labels(std::move(labels));
    }
    return h;
}

} // namespace circalt
