#include "gqu/gentop.hpp"

#include <algorithm>
#include <set>

namespace gqu {

namespace {

std::vector<PointSet> canonicalize(std::vector<PointSet> fam) {
    std::sort(fam.begin(), fam.end());
    fam.erase(std::unique(fam.begin(), fam.end()), fam.end());
    return fam;
}

} // namespace

bool GenTopology::contains(const PointSet& s) const {
    return std::binary_search(opens.begin(), opens.end(), s);
}

GenTopology validate_family(const Universe& u, std::vector<PointSet> family,
                            bool require_strong) {
    for (const auto& s : family)
        if (s.universe_size() != u.size) throw UniverseMismatch();
    family.push_back(PointSet::empty_set(u)); // ∅ demanded by the definition
    family = canonicalize(std::move(family));

    for (std::size_t i = 0; i < family.size(); ++i)
        for (std::size_t j = i + 1; j < family.size(); ++j) {
            PointSet un = family[i].united(family[j]);
            if (!std::binary_search(family.begin(), family.end(), un))
                throw NotUnionClosed(static_cast<int>(i), static_cast<int>(j));
        }

    const bool strong =
        std::binary_search(family.begin(), family.end(), PointSet::full_set(u));
    if (require_strong && !strong) throw NotStrong();
    return GenTopology{u, std::move(family), strong};
}

GenTopology generate_from_base(const Universe& u,
                               const std::vector<PointSet>& base) {
    for (const auto& s : base)
        if (s.universe_size() != u.size) throw UniverseMismatch();
    std::set<PointSet> closed(base.begin(), base.end());
    closed.insert(PointSet::empty_set(u));
    // binary-union worklist; finite universe so this reaches the full closure
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<PointSet> cur(closed.begin(), closed.end());
        for (std::size_t i = 0; i < cur.size(); ++i)
            for (std::size_t j = i + 1; j < cur.size(); ++j)
                if (closed.insert(cur[i].united(cur[j])).second) changed = true;
    }
    std::vector<PointSet> opens(closed.begin(), closed.end());
    const bool strong = closed.count(PointSet::full_set(u)) > 0;
    return GenTopology{u, std::move(opens), strong};
}

bool is_generalized_continuous(const MapPair& f, const GenTopology& mu,
                               const GenTopology& mu2) {
    if (f.domain_size != mu.universe.size || f.codomain_size != mu2.universe.size)
        throw UniverseMismatch();
    for (const auto& g : mu2.opens)
        if (!mu.contains(f.preimage(g))) return false;
    return true;
}

std::vector<PointSet> product_topology_base(const std::vector<GenTopology>& factors) {
    if (factors.empty()) throw InvalidArgument("empty factor list");
    long size = 1;
    for (const auto& f : factors) size *= f.universe.size;
    Universe prod(static_cast<int>(size));

    // weight of factor i under factor-0-most-significant mixed radix
    std::vector<long> weight(factors.size(), 1);
    for (std::size_t i = factors.size(); i-- > 1;)
        weight[i - 1] = weight[i] * factors[i].universe.size;

    std::vector<PointSet> base;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        for (const auto& v : factors[i].opens) {
            PointSet cyl(prod);
            for (int code = 0; code < prod.size; ++code) {
                int coord = static_cast<int>((code / weight[i]) %
                                             factors[i].universe.size);
                if (v.contains(coord)) cyl.insert(code);
            }
            base.push_back(cyl);
        }
    }
    return canonicalize(std::move(base));
}

std::pair<PointSet, PointSet> limit_and_cluster_points_ep(const GenTopology& mu,
                                                          const EPSeq& s) {
    if (s.universe.size != mu.universe.size) throw UniverseMismatch();
    PointSet cyc = ep_values(s).second;
    PointSet limits = PointSet::full_set(mu.universe);
    PointSet clusters = PointSet::full_set(mu.universe);
    for (const auto& g : mu.opens) {
        for (int c : g.members()) {
            if (!cyc.subset_of(g)) limits.erase(c);
            if (!cyc.intersects(g)) clusters.erase(c);
        }
    }
    return {limits, clusters};
}

} // namespace gqu
