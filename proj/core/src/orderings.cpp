#include "circalt/orderings.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace circalt {

bool is_permutation(const std::vector<int>& perm, int n) {
    if (static_cast<int>(perm.size()) != n) return false;
    std::uint64_t seen = 0;
    for (int v : perm) {
        if (v < 0 || v >= n) return false;
        const std::uint64_t bit = std::uint64_t{1} << v;
        if (seen & bit) return false;
        seen |= bit;
    }
    return true;
}

CircularOrdering CircularOrdering::canonical() const {
    const auto it = std::find(perm.begin(), perm.end(), 0);
    if (it == perm.end()) throw std::invalid_argument("ordering does not contain vertex 0");
    CircularOrdering out;
    out.perm.reserve(perm.size());
    out.perm.insert(out.perm.end(), it, perm.end());
    out.perm.insert(out.perm.end(), perm.begin(), it);
    return out;
}

CircularOrdering CircularOrdering::reversed() const {
    CircularOrdering out;
    out.perm.assign(perm.rbegin(), perm.rend());
    return out;
}

std::vector<int> CircularOrdering::positions() const {
    std::vector<int> pos(perm.size());
    for (size_t i = 0; i < perm.size(); ++i) pos[perm[i]] = static_cast<int>(i);
    return pos;
}

LinearOrdering linearize(const CircularOrdering& o, int start, bool clockwise) {
    const int n = static_cast<int>(o.perm.size());
    const auto pos = o.positions();
    if (start < 0 || start >= n) throw std::invalid_argument("start vertex out of range");
    LinearOrdering out;
    out.perm.reserve(n);
    const int s = pos[start];
    for (int i = 0; i < n; ++i) {
        const int idx = clockwise ? (s + i) % n : (s - i % n + n) % n;
        out.perm.push_back(o.perm[idx]);
    }
    return out;
}

std::vector<int> induced_colouring(const Graph& g, const LinearOrdering& o) {
    if (!is_permutation(o.perm, g.size())) throw std::invalid_argument("not a vertex permutation");
    std::vector<int> colour(g.size(), 0);
    std::uint64_t placed = 0;
    for (int v : o.perm) {
        int best = 0;
        for (std::uint64_t cand = g.row(v) & placed; cand;) {
            const int u = std::countr_zero(cand);
            cand &= cand - 1;
            best = std::max(best, colour[u]);
        }
        colour[v] = best + 1;
        placed |= std::uint64_t{1} << v;
    }
    return colour;
}

MonotonicPath longest_monotonic_path(const Graph& g, const LinearOrdering& o) {
    if (!is_permutation(o.perm, g.size())) throw std::invalid_argument("not a vertex permutation");
    MonotonicPath result;
    if (g.size() == 0) return result;

    std::vector<int> dp(g.size(), 0), parent(g.size(), -1);
    std::uint64_t placed = 0;
    for (int v : o.perm) {
        int best = 0, from = -1;
        for (std::uint64_t cand = g.row(v) & placed; cand;) {
            const int u = std::countr_zero(cand);
            cand &= cand - 1;
            if (dp[u] > best) { // strict: ties keep the smallest vertex index
                best = dp[u];
                from = u;
            }
        }
        dp[v] = best + 1;
        parent[v] = from;
        placed |= std::uint64_t{1} << v;
    }
    int end = 0;
    for (int v = 1; v < g.size(); ++v)
        if (dp[v] > dp[end]) end = v;
    result.length = dp[end];
    for (int v = end; v != -1; v = parent[v]) result.path.push_back(v);
    std::reverse(result.path.begin(), result.path.end());
    return result;
}

int anchored_cycle_value(const Graph& g, const std::vector<int>& perm, int anchor_pos,
                         CycleScratch& scratch, long* count) {
    const int n = static_cast<int>(perm.size());
    const int s = perm[anchor_pos];
    auto& dp = scratch.dp;
    dp.assign(n, 0);
    dp[s] = 1;
    std::uint64_t reach = std::uint64_t{1} << s;
    const std::uint64_t anchor_row = g.row(s);
    int best = 0;
    long best_count = 0;
    for (int t = 1; t < n; ++t) {
        const int v = perm[(anchor_pos + t) % n];
        const std::uint64_t cand = g.row(v) & reach;
        if (!cand) continue;
        int value = 0;
        for (std::uint64_t c = cand; c;) {
            const int u = std::countr_zero(c);
            c &= c - 1;
            value = std::max(value, dp[u]);
        }
        dp[v] = value + 1;
        reach |= std::uint64_t{1} << v;
        if (anchor_row >> v & 1) {
            if (dp[v] > best) {
                best = dp[v];
                best_count = 1;
            } else if (dp[v] == best) {
                ++best_count;
            }
        }
    }
    if (count) *count = best_count;
    return best;
}

int longest_monotonic_cycle_value(const Graph& g, const std::vector<int>& perm, CycleScratch& scratch,
                                  long* multiplicity) {
    const int n = static_cast<int>(perm.size());
    int best = 0;
    long mult = 0;
    for (int a = 0; a < n; ++a) {
        long count = 0;
        const int value = anchored_cycle_value(g, perm, a, scratch, &count);
        if (value > best) {
            best = value;
            mult = count;
        } else if (value == best) {
            mult += count;
        }
    }
    if (multiplicity) *multiplicity = mult;
    return best == 0 ? 1 : best; // edgeless graphs score 1
}

MonotonicCycle longest_monotonic_cycle(const Graph& g, const CircularOrdering& o) {
    const int n = g.size();
    if (!is_permutation(o.perm, n)) throw std::invalid_argument("not a vertex permutation");
    MonotonicCycle result;
    if (n == 0) {
        result.length = 1;
        return result;
    }

    std::vector<int> dp(n), parent(n);
    int best = 0;
    int best_anchor = -1, best_close = -1;
    std::vector<int> best_parent;
    for (int a = 0; a < n; ++a) {
        const int s = o.perm[a];
        std::fill(dp.begin(), dp.end(), 0);
        std::fill(parent.begin(), parent.end(), -1);
        dp[s] = 1;
        std::uint64_t reach = std::uint64_t{1} << s;
        const std::uint64_t anchor_row = g.row(s);
        for (int t = 1; t < n; ++t) {
            const int v = o.perm[(a + t) % n];
            const std::uint64_t cand = g.row(v) & reach;
            if (!cand) continue;
            int value = 0, from = -1;
            for (std::uint64_t c = cand; c;) {
                const int u = std::countr_zero(c);
                c &= c - 1;
                if (dp[u] > value) {
                    value = dp[u];
                    from = u;
                }
            }
            dp[v] = value + 1;
            parent[v] = from;
            reach |= std::uint64_t{1} << v;
            if ((anchor_row >> v & 1) && dp[v] > best) {
                best = dp[v];
                best_anchor = s;
                best_close = v;
                best_parent = parent;
            }
        }
    }
    if (best == 0) {
        result.length = 1; // no edges
        return result;
    }
    result.length = best;
    for (int v = best_close; v != -1; v = best_parent[v]) result.cycle.push_back(v);
    std::reverse(result.cycle.begin(), result.cycle.end());
    (void)best_anchor;
    return result;
}

bool verify_monotonic_cycle(const Graph& g, const CircularOrdering& o, const std::vector<int>& cycle) {
    const int n = g.size();
    if (!is_permutation(o.perm, n)) return false;
    const int m = static_cast<int>(cycle.size());
    if (m < 2 || m > n) return false;

    std::uint64_t seen = 0;
    for (int v : cycle) {
        if (v < 0 || v >= n) return false;
        const std::uint64_t bit = std::uint64_t{1} << v;
        if (seen & bit) return false;
        seen |= bit;
    }
    for (int i = 0; i < m; ++i)
        if (!g.adjacent(cycle[i], cycle[(i + 1) % m])) return false;

    const auto pos = o.positions();
    long gap_sum = 0;
    for (int i = 0; i < m; ++i) {
        const int from = pos[cycle[i]];
        const int to = pos[cycle[(i + 1) % m]];
        gap_sum += ((to - from) % n + n) % n;
    }
    return gap_sum == n;
}

} // namespace circalt
