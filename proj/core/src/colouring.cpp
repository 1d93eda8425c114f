#include "circalt/colouring.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>

namespace circalt {

bool is_proper_colouring(const Graph& g, const std::vector<int>& colour) {
    if (static_cast<int>(colour.size()) != g.size()) return false;
    for (auto [u, v] : g.edges())
        if (colour[u] == colour[v]) return false;
    return true;
}

int colour_count(const std::vector<int>& colour) {
    return static_cast<int>(std::set<int>(colour.begin(), colour.end()).size());
}

namespace {

std::vector<int> degree_order(const Graph& g) {
    std::vector<int> order(g.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
        return a < b;
    });
    return order;
}

struct CliqueSearch {
    const Graph& g;
    const std::vector<int> order; // descending degree
    std::vector<int> best;
    std::vector<int> current;

    explicit CliqueSearch(const Graph& graph) : g(graph), order(degree_order(graph)) {}

    // Greedy-colour the candidate set; a clique meets each colour class at
    // most once, so |current| + colour index bounds every extension. The
    // candidates are expanded from the last colour class down.
    void expand(std::uint64_t cand) {
        std::vector<int> colour_of(g.size(), 0);
        std::vector<int> sequence;
        int classes = 0;
        std::uint64_t rest = cand;
        while (rest) {
            ++classes;
            std::uint64_t cls = 0;
            for (int v : order) {
                const std::uint64_t bit = std::uint64_t{1} << v;
                if (!(rest & bit)) continue;
                if (g.row(v) & cls) continue;
                cls |= bit;
                colour_of[v] = classes;
                sequence.push_back(v);
            }
            rest &= ~cls;
        }

        std::uint64_t remaining = cand;
        for (int i = static_cast<int>(sequence.size()) - 1; i >= 0; --i) {
            const int v = sequence[i];
            remaining &= ~(std::uint64_t{1} << v);
            if (current.size() + static_cast<size_t>(colour_of[v]) <= best.size()) return;
            current.push_back(v);
            const std::uint64_t branch = remaining & g.row(v);
            if (branch) {
                expand(branch);
            } else if (current.size() > best.size()) {
                best = current;
            }
            current.pop_back();
        }
    }
};

} // namespace

std::vector<int> max_clique(const Graph& g) {
    if (g.size() == 0) return {};
    CliqueSearch search(g);
    search.expand(g.full_mask());
    std::sort(search.best.begin(), search.best.end());
    return search.best;
}

int clique_number(const Graph& g) {
    return static_cast<int>(max_clique(g).size());
}

std::vector<int> dsatur_greedy(const Graph& g) {
    const int n = g.size();
    std::vector<int> colour(n, 0);
    std::vector<std::uint64_t> neighbour_colours(n, 0); // bitmask over colours 1..64
    for (int step = 0; step < n; ++step) {
        int pick = -1, pick_sat = -1, pick_deg = -1;
        for (int v = 0; v < n; ++v) {
            if (colour[v]) continue;
            const int sat = std::popcount(neighbour_colours[v]);
            const int deg = g.degree(v);
            if (sat > pick_sat || (sat == pick_sat && deg > pick_deg)) {
                pick = v;
                pick_sat = sat;
                pick_deg = deg;
            }
        }
        const int c = std::countr_zero(~neighbour_colours[pick]) + 1;
        colour[pick] = c;
        for (std::uint64_t row = g.row(pick); row;) {
            const int w = std::countr_zero(row);
            row &= row - 1;
            neighbour_colours[w] |= std::uint64_t{1} << (c - 1);
        }
    }
    return colour;
}

namespace {

// Forward-checking backtracker for k-colourability. Colour domains are
// bitmasks; a maximum clique is precoloured and fresh colours are introduced
// lowest-first, which breaks colour symmetry.
struct KColourSearch {
    const Graph& g;
    std::vector<std::uint64_t> allowed;
    std::vector<int> colour; // 0 = unassigned, else 1..k
    std::uint64_t used = 0;  // colours used so far (bit c-1 for colour c)
    int unassigned;

    KColourSearch(const Graph& graph, int colours)
        : g(graph),
          allowed(graph.size(), colours >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << colours) - 1),
          colour(graph.size(), 0),
          unassigned(graph.size()) {}

    bool assign(int v, int c, std::vector<std::pair<int, std::uint64_t>>& trail) {
        colour[v] = c;
        used |= std::uint64_t{1} << (c - 1);
        --unassigned;
        const std::uint64_t bit = std::uint64_t{1} << (c - 1);
        for (std::uint64_t row = g.row(v); row;) {
            const int w = std::countr_zero(row);
            row &= row - 1;
            if (colour[w]) continue;
            if (allowed[w] & bit) {
                trail.emplace_back(w, allowed[w]);
                allowed[w] &= ~bit;
                if (!allowed[w]) return false;
            }
        }
        return true;
    }

    void undo(int v, std::uint64_t used_before, const std::vector<std::pair<int, std::uint64_t>>& trail) {
        for (auto it = trail.rbegin(); it != trail.rend(); ++it) allowed[it->first] = it->second;
        colour[v] = 0;
        used = used_before;
        ++unassigned;
    }

    int pick_vertex() const {
        int pick = -1, pick_dom = 65, pick_deg = -1;
        for (int v = 0; v < g.size(); ++v) {
            if (colour[v]) continue;
            const int dom = std::popcount(allowed[v]);
            const int deg = g.degree(v);
            if (dom < pick_dom || (dom == pick_dom && deg > pick_deg)) {
                pick = v;
                pick_dom = dom;
                pick_deg = deg;
            }
        }
        return pick;
    }

    bool solve() {
        if (unassigned == 0) return true;
        const int v = pick_vertex();
        // Used colours first, then a single representative fresh colour.
        std::uint64_t candidates = allowed[v] & used;
        const std::uint64_t fresh = allowed[v] & ~used;
        if (fresh) candidates |= fresh & (~fresh + 1);
        while (candidates) {
            const int c = std::countr_zero(candidates) + 1;
            candidates &= candidates - 1;
            std::vector<std::pair<int, std::uint64_t>> trail;
            const std::uint64_t used_before = used;
            if (assign(v, c, trail) && solve()) return true;
            undo(v, used_before, trail);
        }
        return false;
    }
};

} // namespace

bool k_colourable(const Graph& g, int k, std::vector<int>* witness) {
    const int n = g.size();
    if (n == 0) {
        if (witness) witness->clear();
        return true;
    }
    if (k <= 0) return false;

    const std::vector<int> clique = max_clique(g);
    if (static_cast<int>(clique.size()) > k) return false;

    KColourSearch search(g, k);
    std::vector<std::pair<int, std::uint64_t>> trail;
    int next = 1;
    for (int v : clique) {
        if (!search.assign(v, next++, trail)) return false;
    }
    if (!search.solve()) return false;
    if (witness) *witness = search.colour;
    return true;
}

ChromaticResult chromatic_number(const Graph& g) {
    ChromaticResult result;
    if (g.size() == 0) return result;

    const std::vector<int> greedy = dsatur_greedy(g);
    const int ub = *std::max_element(greedy.begin(), greedy.end());
    const int lb = std::max(clique_number(g), 1);
    if (lb == ub) {
        result.chi = ub;
        result.colouring = greedy;
        return result;
    }
    for (int k = lb; k < ub; ++k) {
        std::vector<int> witness;
        if (k_colourable(g, k, &witness)) {
            result.chi = k;
            result.colouring = std::move(witness);
            return result;
        }
    }
    result.chi = ub;
    result.colouring = greedy;
    return result;
}

} // namespace circalt
