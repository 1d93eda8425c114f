#include "circalt/named_graphs.hpp"

#include <cctype>
#include <stdexcept>

#include "circalt/mycielski.hpp"

namespace circalt {

namespace {

void letter_labels(Graph& g) {
    if (g.size() > 26) return;
    std::vector<std::string> labels;
    for (int v = 0; v < g.size(); ++v) labels.push_back(std::string(1, static_cast<char>('a' + v)));
    g.set_labels(std::move(labels));
}

} // namespace

Graph complete_graph(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    letter_labels(g);
    return g;
}

Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycles need at least 3 vertices");
    Graph g(n);
    for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
    letter_labels(g);
    return g;
}

Graph path_graph(int n) {
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    letter_labels(g);
    return g;
}

Graph empty_graph(int n) {
    Graph g(n);
    letter_labels(g);
    return g;
}

Graph complete_bipartite(int m, int n) {
    Graph g(m + n);
    for (int u = 0; u < m; ++u)
        for (int v = 0; v < n; ++v) g.add_edge(u, m + v);
    letter_labels(g);
    return g;
}

Graph wheel_graph(int k) {
    if (k < 3) throw std::invalid_argument("wheels need a cycle of at least 3 vertices");
    Graph g(k + 1);
    for (int v = 0; v < k; ++v) {
        g.add_edge(v, (v + 1) % k);
        g.add_edge(v, k);
    }
    letter_labels(g);
    return g;
}

Graph petersen_graph() {
    Graph g(10);
    for (int v = 0; v < 5; ++v) {
        g.add_edge(v, (v + 1) % 5);       // outer cycle
        g.add_edge(v, v + 5);             // spokes
        g.add_edge(v + 5, (v + 2) % 5 + 5); // inner pentagram
    }
    letter_labels(g);
    return g;
}

Graph grotzsch_graph() {
    Graph g = iterated_mycielskian(cycle_graph(5), 1).graph;
    letter_labels(g);
    return g;
}

namespace {

std::optional<int> parse_int(const std::string& s, size_t from, size_t to) {
    if (from >= to) return std::nullopt;
    int value = 0;
    for (size_t i = from; i < to; ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return std::nullopt;
        value = value * 10 + (s[i] - '0');
        if (value > Graph::max_vertices) return std::nullopt;
    }
    return value;
}

} // namespace

std::optional<Graph> named_graph(const std::string& name) {
    if (name == "petersen" || name == "Petersen") return petersen_graph();
    if (name == "grotzsch" || name == "Grotzsch") return grotzsch_graph();
    if (name.size() < 2) return std::nullopt;

    const char head = name[0];
    const auto comma = name.find(',');
    if ((head == 'K' || head == 'k') && comma != std::string::npos) {
        const auto m = parse_int(name, 1, comma);
        const auto n = parse_int(name, comma + 1, name.size());
        if (m && n && *m >= 1 && *n >= 1 && *m + *n <= Graph::max_vertices)
            return complete_bipartite(*m, *n);
        return std::nullopt;
    }
    if (head == 'M' || head == 'm') {
        // M<r>K<n> or M<r>C<n>
        size_t i = 1;
        while (i < name.size() && std::isdigit(static_cast<unsigned char>(name[i]))) ++i;
        if (i == 1 || i >= name.size()) return std::nullopt;
        const auto r = parse_int(name, 1, i);
        const char kind = name[i];
        const auto n = parse_int(name, i + 1, name.size());
        if (!r || !n) return std::nullopt;
        try {
            if (kind == 'K' || kind == 'k') return iterated_mycielskian(complete_graph(*n), *r).graph;
            if (kind == 'C' || kind == 'c') return iterated_mycielskian(cycle_graph(*n), *r).graph;
        } catch (const std::invalid_argument&) {
            return std::nullopt;
        }
        return std::nullopt;
    }

    const auto n = parse_int(name, 1, name.size());
    if (!n) return std::nullopt;
    try {
        switch (head) {
            case 'K': case 'k': return complete_graph(*n);
            case 'C': case 'c': return cycle_graph(*n);
            case 'P': case 'p': return path_graph(*n);
            case 'W': case 'w': return wheel_graph(*n);
            case 'E': case 'e': return empty_graph(*n);
            default: return std::nullopt;
        }
    } catch (const std::invalid_argument&) {
        return std::nullopt;
    }
}

Graph resolve_graph(const std::string& text) {
    if (auto g = named_graph(text)) return *g;
    return parse_graph6(text);
}

std::vector<CorpusEntry> named_corpus(int max_n) {
    std::vector<CorpusEntry> out;
    const auto add = [&](const std::string& name, const Graph& g) {
        if (g.size() <= max_n) out.push_back({name, g});
    };
    for (int n = 1; n <= 7; ++n) add("K" + std::to_string(n), complete_graph(n));
    for (int n = 3; n <= 7; ++n) add("C" + std::to_string(n), cycle_graph(n));
    for (int n = 2; n <= 7; ++n) add("P" + std::to_string(n), path_graph(n));
    for (int n = 1; n <= 3; ++n) add("E" + std::to_string(n), empty_graph(n));
    add("W5", wheel_graph(5));
    add("W6", wheel_graph(6));
    for (int m = 1; m <= 3; ++m)
        for (int n = m; m + n <= 7; ++n)
            add("K" + std::to_string(m) + "," + std::to_string(n), complete_bipartite(m, n));
    add("petersen", petersen_graph());
    add("grotzsch", grotzsch_graph());
    return out;
}

std::vector<CorpusEntry> random_corpus(int min_n, int max_n, int per_cell, std::uint64_t seed) {
    // splitmix64 keeps the corpus independent of any library distribution.
    std::uint64_t state = seed;
    const auto next = [&state]() {
        state += 0x9e3779b97f4a7c15ull;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    };
    const double percentages[] = {0.3, 0.5, 0.7};
    std::vector<CorpusEntry> out;
    for (int n = min_n; n <= max_n; ++n) {
        for (double p : percentages) {
            for (int i = 0; i < per_cell; ++i) {
                Graph g(n);
                for (int u = 0; u < n; ++u)
                    for (int v = u + 1; v < n; ++v)
                        if (static_cast<double>(next() >> 11) * 0x1.0p-53 < p) g.add_edge(u, v);
                out.push_back({"G(" + std::to_string(n) + "," + std::to_string(p) + ")#" +
                                   std::to_string(i),
                               std::move(g)});
            }
        }
    }
    return out;
}

std::vector<CorpusEntry> sweep_corpus(int max_n, std::uint64_t seed) {
    std::vector<CorpusEntry> corpus = named_corpus(max_n);
    auto randoms = random_corpus(4, max_n, 16, seed);
    corpus.insert(corpus.end(), std::make_move_iterator(randoms.begin()),
                  std::make_move_iterator(randoms.end()));
    return corpus;
}

} // namespace circalt

