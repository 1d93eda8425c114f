#include "circalt/mycielski.hpp"

#include <algorithm>
#include <stdexcept>

namespace circalt {

std::string MycLabel::key() const {
    return (kind == Kind::w ? "w:" : "b:") + std::to_string(id) + ":" + word;
}

bool word_less(const std::string& a, const std::string& b) {
    const auto rank = [](char c) { return c == 'v' ? 0 : 1; };
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                        [&](char x, char y) { return rank(x) < rank(y); });
}

std::string label_display(const MycLabel& label, const Graph& base) {
    std::string name;
    if (label.kind == MycLabel::Kind::w) {
        name = "w_" + std::to_string(label.id);
    } else if (!base.labels().empty()) {
        name = base.labels()[label.id];
    } else {
        name = std::to_string(label.id);
    }
    if (!label.word.empty()) {
        std::string shown(label.word.rbegin(), label.word.rend());
        name += "^{" + shown + "}";
    }
    return name;
}

int LabelledGraph::index_of(const MycLabel& label) const {
    if (index_cache_.empty()) {
        for (size_t i = 0; i < labels.size(); ++i)
            index_cache_.emplace(labels[i].key(), static_cast<int>(i));
    }
    const auto it = index_cache_.find(label.key());
    if (it == index_cache_.end()) throw std::invalid_argument("unknown vertex label: " + label.key());
    return it->second;
}

std::vector<std::string> LabelledGraph::display_labels() const {
    std::vector<std::string> out;
    out.reserve(labels.size());
    for (const auto& l : labels) out.push_back(label_display(l, base));
    return out;
}

namespace {

bool label_canonical_less(const MycLabel& a, const MycLabel& b) {
    if (a.kind != b.kind) return a.kind == MycLabel::Kind::w;
    if (a.kind == MycLabel::Kind::w) {
        if (a.id != b.id) return a.id < b.id;
        return word_less(a.word, b.word);
    }
    if (a.word != b.word) return word_less(a.word, b.word);
    return a.id < b.id;
}

} // namespace

LabelledGraph mycielskian(const LabelledGraph& g) {
    const int n = g.graph.size();
    if (2 * n + 1 > Graph::max_vertices)
        throw std::invalid_argument("Mycielskian would exceed the supported vertex count");

    LabelledGraph out;
    out.base = g.base;
    out.depth = g.depth + 1;

    out.labels.reserve(2 * n + 1);
    for (const auto& l : g.labels) {
        MycLabel u = l, v = l;
        u.word.insert(u.word.begin(), 'u');
        v.word.insert(v.word.begin(), 'v');
        out.labels.push_back(std::move(u));
        out.labels.push_back(std::move(v));
    }
    MycLabel apex;
    apex.kind = MycLabel::Kind::w;
    apex.id = out.depth;
    out.labels.push_back(apex);
    std::sort(out.labels.begin(), out.labels.end(), label_canonical_less);

    out.graph = Graph(2 * n + 1);
    const auto copy_of = [&](int old_index, char letter) {
        MycLabel l = g.labels[old_index];
        l.word.insert(l.word.begin(), letter);
        return out.index_of(l);
    };
    const int w_index = out.index_of(apex);
    for (int i = 0; i < n; ++i) out.graph.add_edge(w_index, copy_of(i, 'u'));
    for (auto [a, b] : g.graph.edges()) {
        out.graph.add_edge(copy_of(a, 'v'), copy_of(b, 'v'));
        out.graph.add_edge(copy_of(a, 'u'), copy_of(b, 'v'));
        out.graph.add_edge(copy_of(a, 'v'), copy_of(b, 'u'));
    }
    return out;
}

LabelledGraph iterated_mycielskian(const Graph& g, int r) {
    if (r < 0) throw std::invalid_argument("iteration depth must be non-negative");
    LabelledGraph current;
    current.graph = g;
    current.base = g;
    current.depth = 0;
    current.labels.resize(g.size());
    for (int v = 0; v < g.size(); ++v) current.labels[v] = MycLabel{MycLabel::Kind::base, v, ""};
    for (int i = 0; i < r; ++i) current = mycielskian(current);
    return current;
}

namespace {

struct Stage {
    Graph graph;
    std::vector<MycLabel> labels;
};

// Peel one Mycielskian level: identify the apex, the u-copies and the
// v-copies, check rules R1-R3, and return the v-copy stage with the
// outermost letter stripped.
bool peel_level(const Stage& s, int level, Stage& next) {
    const int n = s.graph.size();
    int apex = -1;
    std::vector<int> u_copies, v_copies;
    for (int i = 0; i < n; ++i) {
        const MycLabel& l = s.labels[i];
        if (l.word.empty()) {
            if (l.kind != MycLabel::Kind::w || l.id != level || apex != -1) return false;
            apex = i;
        } else if (l.word.front() == 'u') {
            u_copies.push_back(i);
        } else {
            v_copies.push_back(i);
        }
    }
    if (apex < 0 || u_copies.size() != v_copies.size()) return false;

    const auto stripped = [&](int i) {
        MycLabel l = s.labels[i];
        l.word.erase(l.word.begin());
        return l;
    };
    std::unordered_map<std::string, int> v_by_core, u_by_core;
    for (int i : v_copies) v_by_core.emplace(stripped(i).key(), i);
    for (int i : u_copies) u_by_core.emplace(stripped(i).key(), i);
    if (v_by_core.size() != v_copies.size() || u_by_core.size() != u_copies.size()) return false;

    // R1: the apex sees exactly the u-copies.
    for (int i : u_copies)
        if (!s.graph.adjacent(apex, i)) return false;
    for (int i : v_copies)
        if (s.graph.adjacent(apex, i)) return false;

    // R2: u-copies are pairwise non-adjacent.
    for (size_t a = 0; a < u_copies.size(); ++a)
        for (size_t b = a + 1; b < u_copies.size(); ++b)
            if (s.graph.adjacent(u_copies[a], u_copies[b])) return false;

    // R3: x^v ~ y^u iff x != y and x^v ~ y^v.
    for (int xv : v_copies) {
        for (int yu : u_copies) {
            const auto it = v_by_core.find(stripped(yu).key());
            if (it == v_by_core.end()) return false;
            const int yv = it->second;
            const bool expected = (yv != xv) && s.graph.adjacent(xv, yv);
            if (s.graph.adjacent(xv, yu) != expected) return false;
        }
    }

    next.graph = induced_subgraph(s.graph, v_copies);
    next.labels.clear();
    next.labels.reserve(v_copies.size());
    for (int i : v_copies) next.labels.push_back(stripped(i));
    return true;
}

} // namespace

bool check_adjacency_rules(const LabelledGraph& g) {
    Stage stage{g.graph, g.labels};
    for (int level = g.depth; level >= 1; --level) {
        Stage next;
        if (!peel_level(stage, level, next)) return false;
        stage = std::move(next);
    }
    // What remains must be the base graph under the identity on ids.
    if (stage.graph.size() != g.base.size()) return false;
    std::vector<int> perm(stage.graph.size(), -1);
    std::vector<bool> seen(stage.graph.size(), false);
    for (int i = 0; i < stage.graph.size(); ++i) {
        const MycLabel& l = stage.labels[i];
        if (l.kind != MycLabel::Kind::base || !l.word.empty()) return false;
        if (l.id < 0 || l.id >= stage.graph.size() || seen[l.id]) return false;
        seen[l.id] = true;
        perm[i] = l.id;
    }
    return permuted(stage.graph, perm) == g.base;
}

bool check_projection_properties(const LabelledGraph& g) {
    const int r = g.depth;
    const int n = g.graph.size();

    // (ii) shared 'u' at the same position forbids adjacency;
    // (iii) same-level apex copies are non-adjacent.
    for (int p = 0; p < n; ++p) {
        for (int q = p + 1; q < n; ++q) {
            const MycLabel& lp = g.labels[p];
            const MycLabel& lq = g.labels[q];
            const size_t depth_shared = std::min(lp.word.size(), lq.word.size());
            for (size_t s = 0; s < depth_shared; ++s) {
                if (lp.word[s] == 'u' && lq.word[s] == 'u' && g.graph.adjacent(p, q)) return false;
            }
            if (lp.kind == MycLabel::Kind::w && lq.kind == MycLabel::Kind::w && lp.id == lq.id &&
                g.graph.adjacent(p, q))
                return false;
        }
    }

    // (i) adjacency projects to core adjacency at every level, apex cores
    // excepted.
    std::vector<LabelledGraph> tower;
    tower.reserve(r);
    for (int d = 0; d < r; ++d) tower.push_back(iterated_mycielskian(g.base, d));
    for (auto [p, q] : g.graph.edges()) {
        const MycLabel& lp = g.labels[p];
        const MycLabel& lq = g.labels[q];
        for (int level = 0; level < r; ++level) {
            const size_t strip = static_cast<size_t>(r - level);
            if (lp.word.size() < strip || lq.word.size() < strip) continue;
            if (lp.word.compare(0, strip, lq.word, 0, strip) == 0) continue; // lemma wants distinct words
            MycLabel cp = lp, cq = lq;
            cp.word.erase(0, strip);
            cq.word.erase(0, strip);
            if (cp.kind == MycLabel::Kind::w || cq.kind == MycLabel::Kind::w) continue;
            const LabelledGraph& m = tower[level];
            if (!m.graph.adjacent(m.index_of(cp), m.index_of(cq))) return false;
        }
    }
    return true;
}

} // namespace circalt
