#include "circalt/invariants.hpp"

#include <algorithm>
#include <bit>
#include <queue>

namespace circalt {

Graph complement(const Graph& g) {
    Graph h(g.size());
    for (int u = 0; u < g.size(); ++u)
        for (int v = u + 1; v < g.size(); ++v)
            if (!g.adjacent(u, v)) h.add_edge(u, v);
    if (!g.labels().empty()) h.set_labels(g.labels());
    return h;
}

std::vector<std::vector<int>> components(const Graph& g) {
    std::vector<std::vector<int>> comps;
    std::uint64_t unseen = g.full_mask();
    while (unseen) {
        int start = std::countr_zero(unseen);
        std::uint64_t comp = 0;
        std::uint64_t frontier = std::uint64_t{1} << start;
        while (frontier) {
            comp |= frontier;
            std::uint64_t next = 0;
            for (std::uint64_t f = frontier; f;) {
                const int v = std::countr_zero(f);
                f &= f - 1;
                next |= g.row(v);
            }
            frontier = next & ~comp;
        }
        std::vector<int> verts;
        for (std::uint64_t c = comp; c;) {
            verts.push_back(std::countr_zero(c));
            c &= c - 1;
        }
        comps.push_back(std::move(verts));
        unseen &= ~comp;
    }
    return comps;
}

bool is_connected(const Graph& g) {
    return components(g).size() <= 1;
}

namespace {

// BFS distance and parents from src in g, with one edge optionally removed.
void bfs(const Graph& g, int src, int skip_u, int skip_v,
         std::vector<int>& dist, std::vector<int>& parent) {
    dist.assign(g.size(), -1);
    parent.assign(g.size(), -1);
    std::queue<int> q;
    dist[src] = 0;
    q.push(src);
    while (!q.empty()) {
        const int v = q.front();
        q.pop();
        for (std::uint64_t row = g.row(v); row;) {
            const int w = std::countr_zero(row);
            row &= row - 1;
            if ((v == skip_u && w == skip_v) || (v == skip_v && w == skip_u)) continue;
            if (dist[w] < 0) {
                dist[w] = dist[v] + 1;
                parent[w] = v;
                q.push(w);
            }
        }
    }
}

} // namespace

std::optional<CycleWitness> girth_witness(const Graph& g) {
    // Shortest cycle = min over edges uv of (shortest u-v path avoiding uv) + 1.
    std::optional<CycleWitness> best;
    std::vector<int> dist, parent;
    for (auto [u, v] : g.edges()) {
        bfs(g, u, u, v, dist, parent);
        if (dist[v] < 0) continue;
        const int len = dist[v] + 1;
        if (!best || len < best->length) {
            CycleWitness w;
            w.length = len;
            for (int x = v; x != -1; x = parent[x]) w.cycle.push_back(x);
            std::reverse(w.cycle.begin(), w.cycle.end());
            best = std::move(w);
        }
    }
    return best;
}

std::optional<CycleWitness> odd_girth_witness(const Graph& g) {
    // BFS on the bipartite double cover: the distance from (s, even) to
    // (s, odd) is the length of the shortest odd closed walk through s, and
    // the shortest odd closed walk overall is a shortest odd cycle.
    const int n = g.size();
    std::optional<CycleWitness> best;
    std::vector<int> dist(2 * n), parent(2 * n);
    for (int s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        std::fill(parent.begin(), parent.end(), -1);
        std::queue<int> q;
        dist[2 * s] = 0;
        q.push(2 * s);
        while (!q.empty()) {
            const int node = q.front();
            q.pop();
            const int v = node / 2, par = node % 2;
            for (std::uint64_t row = g.row(v); row;) {
                const int w = std::countr_zero(row);
                row &= row - 1;
                const int next = 2 * w + (1 - par);
                if (dist[next] < 0) {
                    dist[next] = dist[node] + 1;
                    parent[next] = node;
                    q.push(next);
                }
            }
        }
        const int goal = 2 * s + 1;
        if (dist[goal] < 0) continue;
        if (!best || dist[goal] < best->length) {
            CycleWitness w;
            w.length = dist[goal];
            for (int node = goal; node != 2 * s; node = parent[node]) w.cycle.push_back(node / 2);
            std::reverse(w.cycle.begin(), w.cycle.end());
            // A minimal odd closed walk is a simple cycle; keep the walk,
            // which starts at s and omits the repeated endpoint.
            w.cycle.insert(w.cycle.begin(), s);
            w.cycle.pop_back();
            best = std::move(w);
        }
    }
    return best;
}

std::optional<int> girth(const Graph& g) {
    auto w = girth_witness(g);
    if (!w) return std::nullopt;
    return w->length;
}

std::optional<int> odd_girth(const Graph& g) {
    auto w = odd_girth_witness(g);
    if (!w) return std::nullopt;
    return w->length;
}

} // namespace circalt
