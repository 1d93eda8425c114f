#ifndef CIRCALT_POWERFUL_HPP
#define CIRCALT_POWERFUL_HPP

#include <utility>
#include <vector>

#include "circalt/mycielski.hpp"
#include "circalt/orderings.hpp"

namespace circalt {

// A linear ordering of M^r(G) built from an optimal colouring of G: apex
// vertices first by ascending level (words in lex order inside a level),
// then base vertices grouped by word in lex order, sorted by colour inside
// each word, ties by base index.
struct PowerfulOrdering {
    LinearOrdering ordering;
    std::vector<int> base_colouring; // proper chi(G)-colouring of the base
    int r = 0;
};

PowerfulOrdering build_powerful_ordering(const LabelledGraph& mr,
                                         const std::vector<int>& base_colouring);

struct PowerfulReport {
    bool induced_base_colouring_optimal = false; // r-fold inherited ordering induces a chi(G)-colouring
    bool colour_monotone_within_words = false;   // earlier base vertex in a word block has <= colour
    bool word_blocks_in_lex_order = false;       // word blocks respect the lex order on words
    bool apexes_before_bases = false;            // every apex copy precedes every base vertex
    bool apex_levels_ascending = false;          // lower-level apex copies come first

    bool all() const {
        return induced_base_colouring_optimal && colour_monotone_within_words &&
               word_blocks_in_lex_order && apexes_before_bases && apex_levels_ascending;
    }
};

PowerfulReport verify_powerful(const LabelledGraph& mr, const PowerfulOrdering& po);

// Restriction of an ordering of M^r(G) to the embedded M^{r-1}(G): the
// vertices whose rightmost word letter is v, with that letter stripped.
std::pair<LabelledGraph, LinearOrdering> inherited_ordering(const LabelledGraph& mr,
                                                            const LinearOrdering& o);

// Machine-checkable upper-bound certificate for the circular altitude of
// M^r(g): when t = chi(g) + r is odd and the odd girth of g exceeds t, the
// circular closure of a powerful ordering has no monotonic cycle of length
// t, so alpha-circ(M^r(g)) <= t - 1.
struct OddGirthCertificate {
    Graph base;
    int r = 0;
    int t = 0;
    std::vector<int> base_colouring;
    CircularOrdering closure;
    int value = 0;                  // longest monotonic cycle of the closure
    std::vector<int> extremal_cycle;
};

// Throws std::invalid_argument naming the failed hypothesis, and
// TheoremViolation if the bound itself fails.
OddGirthCertificate odd_girth_certificate(const Graph& g, int r);

} // namespace circalt

#endif
