#include "gqu/product.hpp"

#include <algorithm>

namespace gqu {

long ProductUniverse::encode(const std::vector<int>& tuple) const {
    if (tuple.size() != factors.size()) throw InvalidArgument("tuple arity mismatch");
    long code = 0;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (tuple[i] < 0 || tuple[i] >= factors[i].size)
            throw InvalidArgument("tuple coordinate out of range");
        code = code * factors[i].size + tuple[i];
    }
    return code;
}

std::vector<int> ProductUniverse::decode(long code) const {
    if (code < 0 || code >= universe.size) throw InvalidArgument("code out of range");
    std::vector<int> tuple(factors.size());
    for (std::size_t i = factors.size(); i-- > 0;) {
        tuple[i] = static_cast<int>(code % factors[i].size);
        code /= factors[i].size;
    }
    return tuple;
}

ProductUniverse product_universe(const std::vector<Universe>& factors) {
    if (factors.empty()) throw InvalidArgument("empty factor list");
    long size = 1;
    for (const auto& f : factors) size *= f.size;
    return ProductUniverse{factors, Universe(static_cast<int>(size))};
}

MapPair projection(const ProductUniverse& p, std::size_t i) {
    if (i >= p.factors.size()) throw InvalidArgument("factor index out of range");
    std::vector<int> vals(p.universe.size);
    for (int code = 0; code < p.universe.size; ++code)
        vals[code] = p.decode(code)[i];
    return MapPair(p.universe, p.factors[i], std::move(vals));
}

UniformBase product_base(const ProductUniverse& p,
                         const std::vector<UniformBase>& bases) {
    if (bases.size() != p.factors.size())
        throw InvalidArgument("one base per factor required");
    for (std::size_t i = 0; i < bases.size(); ++i)
        if (bases[i].universe.size != p.factors[i].size) throw UniverseMismatch();
    std::vector<Relation> rels;
    for (std::size_t i = 0; i < bases.size(); ++i) {
        const MapPair pi = projection(p, i);
        for (const auto& b : bases[i].elements) rels.push_back(pullback(pi, b));
    }
    std::sort(rels.begin(), rels.end());
    rels.erase(std::unique(rels.begin(), rels.end()), rels.end());
    return validate_base(p.universe, std::move(rels));
}

EPSeq section_sequence(const ProductUniverse& p, const EPSeq& s, std::size_t i,
                       const std::vector<int>& fixed) {
    if (i >= p.factors.size()) throw InvalidArgument("factor index out of range");
    if (s.universe.size != p.factors[i].size) throw UniverseMismatch();
    if (fixed.size() != p.factors.size())
        throw InvalidArgument("fixed tuple arity mismatch");
    auto embed = [&](int v) {
        std::vector<int> tuple = fixed;
        tuple[i] = v;
        return static_cast<int>(p.encode(tuple));
    };
    std::vector<int> pre, cyc;
    for (int v : s.preamble) pre.push_back(embed(v));
    for (int v : s.cycle) cyc.push_back(embed(v));
    return EPSeq(p.universe, std::move(pre), std::move(cyc));
}

EPSeq project_ep(const ProductUniverse& p, const EPSeq& s, std::size_t i) {
    if (i >= p.factors.size()) throw InvalidArgument("factor index out of range");
    if (s.universe.size != p.universe.size) throw UniverseMismatch();
    std::vector<int> pre, cyc;
    for (int v : s.preamble) pre.push_back(p.decode(v)[i]);
    for (int v : s.cycle) cyc.push_back(p.decode(v)[i]);
    return EPSeq(p.factors[i], std::move(pre), std::move(cyc));
}

} // namespace gqu
