#ifndef GQU_EPSEQ_HPP
#define GQU_EPSEQ_HPP

#include <vector>

#include "gqu/relation.hpp"

namespace gqu {

// Eventually-periodic sequence over a finite universe: a finite preamble
// followed by a repeating cycle.
struct EPSeq {
    Universe universe;
    std::vector<int> preamble;
    std::vector<int> cycle; // nonempty

    EPSeq(const Universe& u, std::vector<int> pre, std::vector<int> cyc);

    friend bool operator==(const EPSeq& a, const EPSeq& b) {
        return a.universe.size == b.universe.size && a.preamble == b.preamble &&
               a.cycle == b.cycle;
    }
};

int ep_term(const EPSeq& s, long n);

// Canonical form: minimal cycle period, maximal absorption of the preamble
// tail into the cycle (the cycle rotates to compensate, so the term function
// is unchanged at every index).
EPSeq ep_normalize(const EPSeq& s);

// (preamble values, cycle values)
std::pair<PointSet, PointSet> ep_values(const EPSeq& s);

} // namespace gqu

#endif
