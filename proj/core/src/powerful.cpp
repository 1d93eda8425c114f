#include "circalt/powerful.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "circalt/circular_colouring.hpp"
#include "circalt/colouring.hpp"
#include "circalt/invariants.hpp"

namespace circalt {

PowerfulOrdering build_powerful_ordering(const LabelledGraph& mr,
                                         const std::vector<int>& base_colouring) {
    if (!is_proper_colouring(mr.base, base_colouring))
        throw std::invalid_argument("base colouring is not proper");
    if (colour_count(base_colouring) != chromatic_number(mr.base).chi)
        throw std::invalid_argument("base colouring is not optimal");

    PowerfulOrdering po;
    po.base_colouring = base_colouring;
    po.r = mr.depth;
    po.ordering.perm.resize(mr.graph.size());
    std::iota(po.ordering.perm.begin(), po.ordering.perm.end(), 0);
    std::sort(po.ordering.perm.begin(), po.ordering.perm.end(), [&](int x, int y) {
        const MycLabel& a = mr.labels[x];
        const MycLabel& b = mr.labels[y];
        const bool aw = a.kind == MycLabel::Kind::w;
        const bool bw = b.kind == MycLabel::Kind::w;
        if (aw != bw) return aw;
        if (aw) {
            if (a.id != b.id) return a.id < b.id;
            return word_less(a.word, b.word);
        }
        if (a.word != b.word) return word_less(a.word, b.word);
        if (base_colouring[a.id] != base_colouring[b.id])
            return base_colouring[a.id] < base_colouring[b.id];
        return a.id < b.id;
    });
    return po;
}

std::pair<LabelledGraph, LinearOrdering> inherited_ordering(const LabelledGraph& mr,
                                                            const LinearOrdering& o) {
    if (mr.depth < 1) throw std::invalid_argument("inheritance needs depth at least 1");
    if (!is_permutation(o.perm, mr.graph.size()))
        throw std::invalid_argument("not an ordering of the given graph");

    LabelledGraph prev = iterated_mycielskian(mr.base, mr.depth - 1);
    LinearOrdering restricted;
    for (int v : o.perm) {
        const MycLabel& l = mr.labels[v];
        if (l.word.empty() || l.word.front() != 'v') continue;
        MycLabel core = l;
        core.word.erase(core.word.begin());
        restricted.perm.push_back(prev.index_of(core));
    }
    return {std::move(prev), std::move(restricted)};
}

PowerfulReport verify_powerful(const LabelledGraph& mr, const PowerfulOrdering& po) {
    PowerfulReport report;
    const int n = mr.graph.size();
    if (!is_permutation(po.ordering.perm, n)) return report;

    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[po.ordering.perm[i]] = i;

    // Apexes before bases, apex levels ascending.
    report.apexes_before_bases = true;
    report.apex_levels_ascending = true;
    int max_apex_pos = -1, min_base_pos = n;
    for (int v = 0; v < n; ++v) {
        if (mr.labels[v].kind == MycLabel::Kind::w)
            max_apex_pos = std::max(max_apex_pos, pos[v]);
        else
            min_base_pos = std::min(min_base_pos, pos[v]);
    }
    if (max_apex_pos > min_base_pos) report.apexes_before_bases = false;
    for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
            const MycLabel& a = mr.labels[x];
            const MycLabel& b = mr.labels[y];
            if (a.kind != MycLabel::Kind::w || b.kind != MycLabel::Kind::w) continue;
            if (a.id < b.id && pos[x] > pos[y]) report.apex_levels_ascending = false;
        }
    }

    // Word blocks in lex order, colour-monotone within a block.
    report.word_blocks_in_lex_order = true;
    report.colour_monotone_within_words = true;
    for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
            const MycLabel& a = mr.labels[x];
            const MycLabel& b = mr.labels[y];
            if (a.kind != MycLabel::Kind::base || b.kind != MycLabel::Kind::base) continue;
            if (word_less(a.word, b.word) && pos[x] > pos[y])
                report.word_blocks_in_lex_order = false;
            if (a.word == b.word && pos[x] < pos[y] &&
                po.base_colouring[a.id] > po.base_colouring[b.id])
                report.colour_monotone_within_words = false;
        }
    }

    // The r-fold inherited ordering induces a chi(G)-colouring of G.
    LabelledGraph level = mr;
    LinearOrdering ordering = po.ordering;
    for (int d = mr.depth; d >= 1; --d) {
        auto [prev, restricted] = inherited_ordering(level, ordering);
        level = std::move(prev);
        ordering = std::move(restricted);
    }
    const std::vector<int> induced = induced_colouring(level.graph, ordering);
    const int max_colour = *std::max_element(induced.begin(), induced.end());
    report.induced_base_colouring_optimal =
        is_proper_colouring(level.graph, induced) && max_colour == chromatic_number(mr.base).chi;
    return report;
}

OddGirthCertificate odd_girth_certificate(const Graph& g, int r) {
    if (r < 0) throw std::invalid_argument("iteration depth must be non-negative");
    if (!g.has_edges())
        throw std::invalid_argument("hypothesis failed: the base graph has no edge");

    const ChromaticResult base_chi = chromatic_number(g);
    const int t = base_chi.chi + r;
    if (t % 2 == 0)
        throw std::invalid_argument("hypothesis failed: t = chi + r = " + std::to_string(t) +
                                    " is even");
    const auto og = odd_girth(g);
    if (og && *og <= t)
        throw std::invalid_argument("hypothesis failed: odd girth " + std::to_string(*og) +
                                    " is not greater than t = " + std::to_string(t));

    const LabelledGraph mr = iterated_mycielskian(g, r);
    const PowerfulOrdering po = build_powerful_ordering(mr, base_chi.colouring);

    OddGirthCertificate cert;
    cert.base = g;
    cert.r = r;
    cert.t = t;
    cert.base_colouring = base_chi.colouring;
    cert.closure.perm = po.ordering.perm; // read the linear ordering clockwise
    const MonotonicCycle extremal = longest_monotonic_cycle(mr.graph, cert.closure);
    cert.value = extremal.length;
    cert.extremal_cycle = extremal.cycle;
    if (cert.value >= t)
        throw TheoremViolation("powerful-ordering closure reached a monotonic cycle of length " +
                               std::to_string(cert.value) + " with t = " + std::to_string(t));
    return cert;
}

} // namespace circalt
