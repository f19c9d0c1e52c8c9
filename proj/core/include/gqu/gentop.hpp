#ifndef GQU_GENTOP_HPP
#define GQU_GENTOP_HPP

#include <optional>
#include <vector>

#include "gqu/epseq.hpp"
#include "gqu/relation.hpp"

namespace gqu {

// Generalized topology: family of opens containing ∅ and closed under
// union (finite universe, so binary closure suffices). Strong when the
// whole universe is open.
struct GenTopology {
    Universe universe;
    std::vector<PointSet> opens; // canonically sorted, duplicate-free
    bool strong = false;

    bool contains(const PointSet& s) const;
    friend bool operator==(const GenTopology& a, const GenTopology& b) {
        return a.universe.size == b.universe.size && a.opens == b.opens;
    }
};

// Checks ∅-membership (auto-inserted when absent) and union closure.
// Throws NotUnionClosed with a witness pair, or NotStrong when
// require_strong is set and the whole universe is missing.
GenTopology validate_family(const Universe& u, std::vector<PointSet> family,
                            bool require_strong = false);

// Smallest union-closed family containing the base and ∅.
GenTopology generate_from_base(const Universe& u, const std::vector<PointSet>& base);

// Preimage of every open of mu2 is open in mu.
bool is_generalized_continuous(const MapPair& f, const GenTopology& mu,
                               const GenTopology& mu2);

// Single-cylinder base {π_i⁻¹(V_i) : V_i open in factor i} over the
// mixed-radix product universe (factor 0 most significant). The caller
// generates the topology with generate_from_base.
std::vector<PointSet> product_topology_base(const std::vector<GenTopology>& factors);

// (limit points, cluster points) of an eventually-periodic sequence.
// limits = {c : every open containing c contains all cycle values};
// clusters = {c : every open containing c meets the cycle values}.
std::pair<PointSet, PointSet> limit_and_cluster_points_ep(const GenTopology& mu,
                                                          const EPSeq& s);

} // namespace gqu

#endif
