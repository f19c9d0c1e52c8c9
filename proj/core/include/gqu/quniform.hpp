#ifndef GQU_QUNIFORM_HPP
#define GQU_QUNIFORM_HPP

#include <string>
#include <vector>

#include "gqu/epseq.hpp"
#include "gqu/gentop.hpp"
#include "gqu/relation.hpp"

namespace gqu {

// Base of a g-quasi uniformity: every element contains the diagonal and
// some element squares into it. The generated uniformity is the set of
// relations containing a base element.
struct UniformBase {
    Universe universe;
    std::vector<Relation> elements; // nonempty
};

struct EPClassification {
    bool cauchy = false;
    bool g_cauchy = false;
    bool pseudo_cauchy = true;  // any EP sequence repeats a value
    bool distinct_terms = false; // a cycle value recurs
};

// Per-property certificates for the finite-universe space decision.
struct RecurrentSetCertificate {
    PointSet visit_set; // strongly connected in the core entourage
    PointSet limit_set; // nonempty; limits of any G-Cauchy walk over visit_set
};

struct SpaceReport {
    bool sequentially_complete = true;
    bool g_complete = true;
    bool weak_g_complete = true;
    bool strongly_lebesgue = true;
    bool sequentially_lebesgue = true; // vacuous: no injective sequence exists
    bool compact = true;
    std::vector<RecurrentSetCertificate> certificates;
    std::string derivation;
};

// Throws MissingDiagonal / NoSquareRefinement with witnesses.
UniformBase validate_base(const Universe& u, std::vector<Relation> rels);

// r belongs to the generated uniformity.
bool contains_entourage(const UniformBase& b, const Relation& r);

// μ(𝒰): G open iff for every x in G some base element's image at x stays
// inside G. Always strong.
GenTopology induced_supratopology(const UniformBase& b);

// {(G×G) ∪ ((X∖G)×X) : G open}; requires mu strong.
UniformBase pervin_base(const GenTopology& mu);

// For every codomain element B' some domain element is contained in
// pullback(f, B').
bool is_gqu_continuous(const MapPair& f, const UniformBase& bdom,
                       const UniformBase& bcod);

// Intersection of all base elements; equals the intersection of the whole
// uniformity and governs EP tail behavior.
Relation core_entourage(const UniformBase& b);

EPClassification classify_ep_sequence(const UniformBase& b, const EPSeq& s);

// Limit set shared by every G-Cauchy sequence whose infinite-visit set is w.
// Pre: w nonempty and strongly connected within the core entourage.
PointSet limit_points_of_recurrent_set(const UniformBase& b, const PointSet& w);

// True whether the restriction of r to w is strongly connected (w nonempty).
bool strongly_connected_on(const Relation& r, const PointSet& w);

// Finite-universe collapse: all six sequence-level properties hold; the
// report carries machine-checked certificates instead of bare booleans.
SpaceReport decide_space_properties(const UniformBase& b);

} // namespace gqu

#endif
