#include "circalt/circular_colouring.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>

#include "circalt/colouring.hpp"

namespace circalt {

bool is_pq_colouring(const Graph& g, const std::vector<int>& colour, int p, int q) {
    if (p < 1 || q < 1) throw std::invalid_argument("p and q must be positive");
    if (static_cast<int>(colour.size()) != g.size())
        throw std::invalid_argument("colouring size mismatch");
    for (int c : colour)
        if (c < 1 || c > p) throw std::invalid_argument("colour out of range 1..p");
    for (auto [u, v] : g.edges()) {
        const int d = std::abs(colour[u] - colour[v]);
        if (d < q || d > p - q) return false;
    }
    return true;
}

namespace {

struct PQSearch {
    const Graph& g;
    const int p;
    std::vector<std::uint64_t> allowed; // bit c-1 = colour c possible
    std::vector<int> colour;
    std::vector<std::uint64_t> colour_ok; // per colour, mask of colours at valid distance
    int unassigned;

    PQSearch(const Graph& graph, int pp, int q)
        : g(graph),
          p(pp),
          allowed(graph.size(), pp >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << pp) - 1),
          colour(graph.size(), 0),
          colour_ok(pp + 1, 0),
          unassigned(graph.size()) {
        for (int x = 1; x <= p; ++x) {
            std::uint64_t mask = 0;
            for (int y = 1; y <= p; ++y) {
                const int d = std::abs(x - y);
                if (d >= q && d <= p - q) mask |= std::uint64_t{1} << (y - 1);
            }
            colour_ok[x] = mask;
        }
    }

    int pick() const {
        int pick = -1, dom = 65, deg = -1;
        for (int v = 0; v < g.size(); ++v) {
            if (colour[v]) continue;
            const int d = std::popcount(allowed[v]);
            const int dg = g.degree(v);
            if (d < dom || (d == dom && dg > deg)) {
                pick = v;
                dom = d;
                deg = dg;
            }
        }
        return pick;
    }

    bool assign(int v, int c, std::vector<std::pair<int, std::uint64_t>>& trail) {
        colour[v] = c;
        --unassigned;
        for (std::uint64_t row = g.row(v); row;) {
            const int w = std::countr_zero(row);
            row &= row - 1;
            if (colour[w]) continue;
            const std::uint64_t next = allowed[w] & colour_ok[c];
            if (next != allowed[w]) {
                trail.emplace_back(w, allowed[w]);
                allowed[w] = next;
                if (!next) return false;
            }
        }
        return true;
    }

    void undo(int v, const std::vector<std::pair<int, std::uint64_t>>& trail) {
        for (auto it = trail.rbegin(); it != trail.rend(); ++it) allowed[it->first] = it->second;
        colour[v] = 0;
        ++unassigned;
    }

    bool solve(bool root) {
        if (unassigned == 0) return true;
        const int v = pick();
        std::uint64_t candidates = allowed[v];
        if (root) candidates &= 1; // rotation symmetry: pin the root to colour 1
        while (candidates) {
            const int c = std::countr_zero(candidates) + 1;
            candidates &= candidates - 1;
            std::vector<std::pair<int, std::uint64_t>> trail;
            if (assign(v, c, trail) && solve(false)) return true;
            undo(v, trail);
        }
        return false;
    }
};

} // namespace

std::optional<PQColouring> find_pq_colouring(const Graph& g, int p, int q) {
    if (p < 1 || q < 1) throw std::invalid_argument("p and q must be positive");
    if (p > 64) throw std::invalid_argument("p beyond supported range");
    if (!g.has_edges()) {
        PQColouring out{p, q, std::vector<int>(g.size(), 1)};
        return out;
    }
    if (2 * q > p) return std::nullopt; // no edge can be coloured
    PQSearch search(g, p, q);
    if (!search.solve(true)) return std::nullopt;
    PQColouring out{p, q, search.colour};
    return out;
}

namespace {

void mediant_sweep(long a, long b, long c, long d, int max_p, std::vector<Fraction>& out) {
    const long p = a + c, q = b + d;
    if (p > max_p) return;
    mediant_sweep(a, b, p, q, max_p, out);
    out.emplace_back(p, q);
    mediant_sweep(p, q, c, d, max_p, out);
}

} // namespace

std::vector<Fraction> chi_c_candidates(int chi, int max_p) {
    std::vector<Fraction> out;
    if (chi < 1 || max_p < chi) return out;
    mediant_sweep(chi - 1, 1, chi, 1, max_p, out);
    out.emplace_back(chi, 1);
    return out;
}

ChiCResult circular_chromatic_number(const Graph& g) {
    ChiCResult result;
    if (!g.has_edges()) {
        // Degenerate by convention: chi_c = chi = 1.
        result.value = Fraction(1, 1);
        result.witness = PQColouring{1, 1, std::vector<int>(g.size(), 1)};
        return result;
    }
    const int chi = chromatic_number(g).chi;
    for (const Fraction& f : chi_c_candidates(chi, g.size())) {
        if (auto colouring = find_pq_colouring(g, static_cast<int>(f.p), static_cast<int>(f.q))) {
            result.value = f;
            result.witness = *colouring;
            return result;
        }
    }
    throw TheoremViolation("no feasible circular colouring found at p/q = chi, which always exists");
}

namespace {

struct ZigzagSearch {
    const Graph& g;
    const std::vector<int>& colouring;
    const int t;
    std::vector<int> chosen;
    std::uint64_t common_a, common_b; // vertices adjacent to every member of that side

    ZigzagSearch(const Graph& graph, const std::vector<int>& col, int levels)
        : g(graph), colouring(col), t(levels) {
        common_a = common_b = graph.full_mask();
    }

    bool extend() {
        const int k = static_cast<int>(chosen.size());
        if (k == t) return true;
        const bool to_a = k % 2 == 0; // positions 1,3,... go to side A
        const int last_colour = k == 0 ? 0 : colouring[chosen.back()];
        // The candidate must dominate the opposite side.
        std::uint64_t candidates = to_a ? common_b : common_a;
        while (candidates) {
            const int v = std::countr_zero(candidates);
            candidates &= candidates - 1;
            if (colouring[v] <= last_colour) continue;
            const std::uint64_t saved = to_a ? common_a : common_b;
            chosen.push_back(v);
            if (to_a)
                common_a = saved & g.row(v);
            else
                common_b = saved & g.row(v);
            if (extend()) return true;
            chosen.pop_back();
            if (to_a)
                common_a = saved;
            else
                common_b = saved;
        }
        return false;
    }
};

} // namespace

ZigzagWitness find_zigzag_witness(const Graph& g, const std::vector<int>& colouring, int t) {
    if (!is_proper_colouring(g, colouring))
        throw std::invalid_argument("zigzag witness needs a proper colouring");
    if (t < 1) throw std::invalid_argument("t must be positive");

    ZigzagSearch search(g, colouring, t);
    if (!search.extend())
        throw TheoremViolation("no alternating rainbow biclique found for t = " + std::to_string(t));
    ZigzagWitness w;
    for (int i = 0; i < t; ++i) {
        (i % 2 == 0 ? w.side_a : w.side_b).push_back(search.chosen[i]);
        w.colours.push_back(colouring[search.chosen[i]]);
    }
    return w;
}

bool verify_zigzag_witness(const Graph& g, const std::vector<int>& colouring, int t,
                           const ZigzagWitness& witness) {
    if (static_cast<int>(colouring.size()) != g.size()) return false;
    const int a = static_cast<int>(witness.side_a.size());
    const int b = static_cast<int>(witness.side_b.size());
    if (a != (t + 1) / 2 || b != t / 2) return false;
    if (static_cast<int>(witness.colours.size()) != t) return false;

    // Interleave: positions 1,3,5,... from side A, 2,4,... from side B,
    // colours strictly increasing along the merged sequence.
    std::vector<int> merged;
    for (int i = 0; i < t; ++i)
        merged.push_back(i % 2 == 0 ? witness.side_a[i / 2] : witness.side_b[i / 2]);
    std::uint64_t seen = 0;
    for (int i = 0; i < t; ++i) {
        const int v = merged[i];
        if (v < 0 || v >= g.size()) return false;
        const std::uint64_t bit = std::uint64_t{1} << v;
        if (seen & bit) return false;
        seen |= bit;
        if (colouring[v] != witness.colours[i]) return false;
        if (i > 0 && witness.colours[i] <= witness.colours[i - 1]) return false;
    }
    for (int x : witness.side_a)
        for (int y : witness.side_b)
            if (!g.adjacent(x, y)) return false;
    return true;
}

namespace {

struct SeparatorSearch {
    const Graph& g;
    const int m;
    const std::uint64_t budget;
    std::uint64_t nodes = 0;
    std::uint64_t count = 0;
    std::vector<std::uint64_t> class_members; // vertex mask per class
    std::vector<int> assignment;
    std::vector<int> link_parent; // union-find over vertices
    std::vector<std::vector<int>> stored;
    std::vector<std::vector<int>> refuting;
    static constexpr std::uint64_t store_cap = 100000;

    SeparatorSearch(const Graph& graph, int classes, std::uint64_t node_budget)
        : g(graph), m(classes), budget(node_budget), assignment(graph.size(), -1),
          link_parent(graph.size()) {
        for (int v = 0; v < graph.size(); ++v) link_parent[v] = v;
    }

    int find(int v) { return link_parent[v] == v ? v : link_parent[v] = find(link_parent[v]); }

    void place(int v) {
        if (++nodes > budget) throw BudgetExceeded("colouring enumeration budget exceeded");
        if (v == g.size()) {
            ++count;
            bool merged = false;
            for (const std::uint64_t cls : class_members) {
                int first = -1;
                for (std::uint64_t c = cls; c;) {
                    const int x = std::countr_zero(c);
                    c &= c - 1;
                    if (first < 0) {
                        first = x;
                    } else if (find(first) != find(x)) {
                        link_parent[find(x)] = find(first);
                        merged = true;
                    }
                }
            }
            if (count <= store_cap) stored.push_back(assignment);
            if (merged && refuting.size() < 64) refuting.push_back(assignment);
            return;
        }
        const int used = static_cast<int>(class_members.size());
        for (int c = 0; c < std::min(used + 1, m); ++c) {
            if (c < used && (class_members[c] & g.row(v))) continue;
            if (c == used) class_members.push_back(0);
            class_members[c] |= std::uint64_t{1} << v;
            assignment[v] = c;
            place(v + 1);
            assignment[v] = -1;
            class_members[c] &= ~(std::uint64_t{1} << v);
            if (c == used) class_members.pop_back();
        }
    }
};

} // namespace

SeparatorResult colour_class_separator(const Graph& g, int m, std::uint64_t node_budget) {
    if (m < 1) throw std::invalid_argument("class count must be positive");
    SeparatorSearch search(g, m, node_budget);
    search.place(0);

    SeparatorResult result;
    result.enumerated = search.count;
    result.refuting_colourings = std::move(search.refuting);

    // Components of the co-class relation.
    std::vector<std::vector<int>> comps;
    std::vector<int> root_of(g.size(), -1);
    for (int v = 0; v < g.size(); ++v) {
        const int r = search.find(v);
        if (root_of[r] < 0) {
            root_of[r] = static_cast<int>(comps.size());
            comps.emplace_back();
        }
        comps[root_of[r]].push_back(v);
    }
    result.component_list = comps;
    result.holds = comps.size() >= 2;
    if (result.holds && g.size() > 0) result.witness = comps[root_of[search.find(0)]];

    if (search.count <= SeparatorSearch::store_cap) {
        for (const auto& flat : search.stored) {
            std::vector<std::vector<int>> classes;
            for (int v = 0; v < g.size(); ++v) {
                const int c = flat[v];
                if (c >= static_cast<int>(classes.size())) classes.resize(c + 1);
                classes[c].push_back(v);
            }
            result.colourings.push_back(std::move(classes));
        }
    }
    return result;
}

} // namespace circalt
