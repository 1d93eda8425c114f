#ifndef CIRCALT_MYCIELSKI_HPP
#define CIRCALT_MYCIELSKI_HPP

#include <string>
#include <unordered_map>
#include <vector>

#include "circalt/graph.hpp"

namespace circalt {

// Structured name of a vertex of an iterated Mycielskian. Words are over
// {u, v}; storage index s-1 holds the letter at position s, positions being
// read right to left in display order. Each Mycielskian application prepends
// its letter at storage index 0, so the outermost letters form a storage
// prefix. Base vertices of M^r carry words of length r, apex vertices
// created at level i carry words of length r - i.
struct MycLabel {
    enum class Kind { base, w };
    Kind kind = Kind::base;
    int id = 0; // base vertex id, or apex level when kind == w
    std::string word;

    bool operator==(const MycLabel& other) const {
        return kind == other.kind && id == other.id && word == other.word;
    }

    std::string key() const;
};

// Word comparison reading position 1 first, with v < u.
bool word_less(const std::string& a, const std::string& b);

// Display form, e.g. "b^{uv}" or "w_1^{v}"; base names come from the base
// graph's labels when present, otherwise the vertex index.
std::string label_display(const MycLabel& label, const Graph& base);

struct LabelledGraph {
    Graph graph;
    std::vector<MycLabel> labels; // vertex index -> label
    Graph base;                   // the original M^0 graph
    int depth = 0;                // r

    int index_of(const MycLabel& label) const;
    std::vector<std::string> display_labels() const;

private:
    mutable std::unordered_map<std::string, int> index_cache_;
};

// One Mycielskian application. Vertex indices of the result follow the
// canonical order: apex vertices by ascending level then word, base vertices
// by word then base index.
LabelledGraph mycielskian(const LabelledGraph& g);

// M^r(G); r = 0 wraps g unchanged.
LabelledGraph iterated_mycielskian(const Graph& g, int r);

// Checks the level-by-level adjacency rules of the construction: the apex is
// adjacent to exactly the u-copies, u-copies are pairwise non-adjacent, and
// v/u cross edges mirror the previous level.
bool check_adjacency_rules(const LabelledGraph& g);

// Exhaustive scan of the word-structure consequences of the rules:
//   (i)  adjacency between vertices with distinct same-length word prefixes
//        projects to adjacency between their cores at every level;
//   (ii) two vertices whose words share a 'u' at the same position are
//        never adjacent;
//   (iii) same-level apex copies are pairwise non-adjacent.
bool check_projection_properties(const LabelledGraph& g);

} // namespace circalt

#endif
