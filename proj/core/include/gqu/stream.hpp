#ifndef GQU_STREAM_HPP
#define GQU_STREAM_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "gqu/rational.hpp"

namespace gqu {

// A point of a countable catalog space: a tuple of exact rational values.
// Scalar spaces use width-1 tuples.
using StreamPoint = std::vector<Rat>;

// Countable space with a level-indexed descending entourage base
// U_1 ⊇ U_2 ⊇ ... and decidable membership. Levels are 1-based.
struct StreamedSpace {
    std::string id;
    std::size_t arity = 1;
    std::function<bool(const StreamPoint&)> valid;
    std::function<bool(int, const StreamPoint&, const StreamPoint&)> in_level;
    std::function<std::string(int)> level_name;
    // For a certified observable on the given coordinate and a candidate
    // point: a level plus threshold r such that every point of the
    // candidate's level-neighborhood has observable value < r or = r.
    // nullopt when no level constrains that coordinate.
    std::function<std::optional<std::pair<int, Rat>>(std::size_t, const StreamPoint&)>
        refutation_level;
};

// Monotone unbounded observable along the sequence: for every rational r,
// observable(term n) > r whenever n >= bound(r). Makes cluster refutation
// sound for every candidate point at once.
struct EscapeCertificate {
    std::size_t coordinate = 0;
    long monotone_from = 0;
    std::function<long(const Rat&)> bound;
};

struct StreamedSeq {
    std::string id;
    std::size_t arity = 1;
    std::function<StreamPoint(long)> term;
    std::optional<EscapeCertificate> certificate;
};

enum class StatusKind { WitnessedAtDepth, NoWitnessWithinHorizon, RefutedByCertificate };

struct PseudoCauchyWitness {
    int level;
    long p;
    long m;
    long n; // (term m, term n) in the level, p < m < n
};

struct GCauchyWitness {
    int level;
    long k; // all consecutive pairs in [k, horizon) lie in the level
};

struct RefutationTrace {
    std::size_t coordinate;
    int level;
    Rat threshold;   // observable bound over the candidate's neighborhood
    long from_index; // no term at or beyond this index re-enters it
    Rat sample_observable; // observable at from_index, spot-checked > threshold
};

struct DepthStatus {
    StatusKind kind;
    std::vector<PseudoCauchyWitness> pc_witnesses;
    std::vector<GCauchyWitness> gc_witnesses;
    std::optional<RefutationTrace> refutation;
    std::string detail;
};

// ---- catalog ----

// Integers under the discrete metric: every level is the diagonal.
StreamedSpace make_discrete_int_space();

// Integers with a single all-pairs level (every pair is entouraged).
StreamedSpace make_full_int_space();

// Rationals with levels U_k = {(x,y) : |x-y| < 1/k}.
StreamedSpace make_rational_metric_space();

// X_i = naturals together with the special point 1/i (values identified
// when they coincide, as for i = 1); usual-metric levels.
StreamedSpace make_example_factor(int i);

// K-fold product of the example factors; levels are single-coordinate
// cylinders enumerated diagonally over (i,k): i+k increasing, then i.
StreamedSpace make_example_product(int K);

// (level of the product space) -> (factor i, factor level k), both 1-based
std::pair<int, int> product_level_coords(int K, int level);
int product_level_index(int K, int i, int k);

// 1,1,2,2,3,3,...
StreamedSeq note_sequence();

// The alternating unbounded-first-coordinate sequence over the K-fold
// example product (K >= 2).
StreamedSeq example_sequence(int K);

// Partial sums of the harmonic series, starting at 0.
StreamedSeq harmonic_walk();

StreamedSeq constant_sequence(StreamPoint value);

// Reindexed finite view of s; term t = s.term(indices[t]).
StreamedSeq subsequence(const StreamedSeq& s, std::vector<long> indices);

// ---- depth-bounded checks ----

// For every level <= depth and every p <= depth, search for distinct
// m,n in (p, horizon] with (term m, term n) in the level.
DepthStatus witness_pseudo_cauchy(const StreamedSpace& space, const StreamedSeq& s,
                                  int depth, long horizon);

// For every level <= depth, search for k with all consecutive pairs in
// [k, horizon) inside the level.
DepthStatus witness_g_cauchy(const StreamedSpace& space, const StreamedSeq& s,
                             int depth, long horizon);

// Sound refutation only through the sequence's escape certificate; plain
// horizon search is inconclusive by construction.
DepthStatus refute_cluster(const StreamedSpace& space, const StreamedSeq& s,
                           const StreamPoint& candidate, long horizon);

// Triangular-schedule extraction of a pseudo-Cauchy subsequence from a
// G-Cauchy sequence with no constant subsequence: at stage i, for each
// j <= i, pick a fresh consecutive pair inside level j with both values
// distinct from everything selected so far. Returns the selected indices.
// Throws CapExceeded when no admissible index appears within cap probes.
std::vector<long> extract_pseudo_cauchy_subsequence(const StreamedSpace& space,
                                                    const StreamedSeq& s,
                                                    int stages, long cap);

} // namespace gqu

#endif
