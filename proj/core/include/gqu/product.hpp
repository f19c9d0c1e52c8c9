#ifndef GQU_PRODUCT_HPP
#define GQU_PRODUCT_HPP

#include <vector>

#include "gqu/epseq.hpp"
#include "gqu/quniform.hpp"
#include "gqu/relation.hpp"

namespace gqu {

// Tuple-coded finite product. Mixed-radix coding, factor 0 most significant.
struct ProductUniverse {
    std::vector<Universe> factors;
    Universe universe; // size = product of factor sizes

    long encode(const std::vector<int>& tuple) const;
    std::vector<int> decode(long code) const;
    std::size_t arity() const { return factors.size(); }
};

ProductUniverse product_universe(const std::vector<Universe>& factors);

// {pullback(π_i, B) : B in base i}. Deliberately not intersection-closed.
UniformBase product_base(const ProductUniverse& p,
                         const std::vector<UniformBase>& bases);

// Coordinate map product → factor i.
MapPair projection(const ProductUniverse& p, std::size_t i);

// Embeds a factor sequence into the product: coordinate i follows s, every
// other coordinate k is pinned to fixed[k] (fixed[i] is ignored).
EPSeq section_sequence(const ProductUniverse& p, const EPSeq& s, std::size_t i,
                       const std::vector<int>& fixed);

// Coordinatewise image; preamble/cycle lengths preserved (not minimized).
EPSeq project_ep(const ProductUniverse& p, const EPSeq& s, std::size_t i);

} // namespace gqu

#endif
