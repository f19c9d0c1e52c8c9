#include "gqu/quniform.hpp"

#include <algorithm>

namespace gqu {

UniformBase validate_base(const Universe& u, std::vector<Relation> rels) {
    if (rels.empty()) throw InvalidArgument("base must be nonempty");
    for (const auto& r : rels)
        if (r.universe_size() != u.size) throw UniverseMismatch();
    for (std::size_t i = 0; i < rels.size(); ++i)
        for (int x = 0; x < u.size; ++x)
            if (!rels[i].contains(x, x))
                throw MissingDiagonal(static_cast<int>(i), x);
    for (std::size_t i = 0; i < rels.size(); ++i) {
        bool refined = false;
        for (const auto& v : rels) {
            if (compose(v, v).subset_of(rels[i])) {
                refined = true;
                break;
            }
        }
        if (!refined) throw NoSquareRefinement(static_cast<int>(i));
    }
    return UniformBase{u, std::move(rels)};
}

bool contains_entourage(const UniformBase& b, const Relation& r) {
    if (r.universe_size() != b.universe.size) throw UniverseMismatch();
    for (const auto& e : b.elements)
        if (e.subset_of(r)) return true;
    return false;
}

GenTopology induced_supratopology(const UniformBase& b) {
    const int n = b.universe.size;
    if (n > 20) throw InvalidArgument("induced topology enumeration limited to n <= 20");
    // per-point neighborhood images of every base element
    std::vector<std::vector<PointSet>> img(b.elements.size(),
                                           std::vector<PointSet>());
    for (std::size_t i = 0; i < b.elements.size(); ++i)
        for (int x = 0; x < n; ++x) img[i].push_back(image(b.elements[i], x));

    std::vector<PointSet> opens;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        PointSet g(b.universe);
        for (int x = 0; x < n; ++x)
            if (mask & (1u << x)) g.insert(x);
        bool open = true;
        for (int x = 0; x < n && open; ++x) {
            if (!g.contains(x)) continue;
            bool ok = false;
            for (std::size_t i = 0; i < b.elements.size() && !ok; ++i)
                ok = img[i][x].subset_of(g);
            open = ok;
        }
        if (open) opens.push_back(g);
    }
    std::sort(opens.begin(), opens.end());
    return GenTopology{b.universe, std::move(opens), true};
}

UniformBase pervin_base(const GenTopology& mu) {
    if (!mu.strong) throw NotStrong();
    std::vector<Relation> rels;
    for (const auto& g : mu.opens) {
        Relation r(mu.universe);
        const PointSet comp = g.complement();
        for (int x : g.members())
            for (int y : g.members()) r.insert(x, y);
        for (int x : comp.members())
            for (int y = 0; y < mu.universe.size; ++y) r.insert(x, y);
        rels.push_back(r);
    }
    std::sort(rels.begin(), rels.end());
    rels.erase(std::unique(rels.begin(), rels.end()), rels.end());
    return validate_base(mu.universe, std::move(rels));
}

bool is_gqu_continuous(const MapPair& f, const UniformBase& bdom,
                       const UniformBase& bcod) {
    if (f.domain_size != bdom.universe.size ||
        f.codomain_size != bcod.universe.size)
        throw UniverseMismatch();
    for (const auto& bprime : bcod.elements) {
        const Relation pb = pullback(f, bprime);
        bool covered = false;
        for (const auto& e : bdom.elements)
            if (e.subset_of(pb)) {
                covered = true;
                break;
            }
        if (!covered) return false;
    }
    return true;
}

Relation core_entourage(const UniformBase& b) {
    Relation core = b.elements.front();
    for (std::size_t i = 1; i < b.elements.size(); ++i)
        core = core.intersected(b.elements[i]);
    return core;
}

EPClassification classify_ep_sequence(const UniformBase& b, const EPSeq& s) {
    if (s.universe.size != b.universe.size) throw UniverseMismatch();
    const Relation core = core_entourage(b);
    const PointSet cyc = ep_values(s).second;

    EPClassification out;
    out.cauchy = true;
    for (int x : cyc.members())
        for (int y : cyc.members())
            if (!core.contains(x, y)) out.cauchy = false;

    out.g_cauchy = true;
    const std::size_t len = s.cycle.size();
    for (std::size_t j = 0; j < len; ++j)
        if (!core.contains(s.cycle[j], s.cycle[(j + 1) % len]))
            out.g_cauchy = false;
    return out;
}

bool strongly_connected_on(const Relation& r, const PointSet& w) {
    const auto pts = w.members();
    if (pts.empty()) return false;
    // reachability within w, both directions from pts[0]
    auto reach = [&](bool forward) {
        PointSet seen(Universe(r.universe_size()));
        std::vector<int> stack{pts[0]};
        seen.insert(pts[0]);
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (int y : pts) {
                bool edge = forward ? r.contains(x, y) : r.contains(y, x);
                if (edge && !seen.contains(y)) {
                    seen.insert(y);
                    stack.push_back(y);
                }
            }
        }
        return seen;
    };
    const PointSet fwd = reach(true), bwd = reach(false);
    return w.subset_of(fwd) && w.subset_of(bwd);
}

PointSet limit_points_of_recurrent_set(const UniformBase& b, const PointSet& w) {
    if (w.universe_size() != b.universe.size) throw UniverseMismatch();
    if (w.empty()) throw InvalidArgument("recurrent set must be nonempty");
    if (!strongly_connected_on(core_entourage(b), w))
        throw InvalidArgument("recurrent set not strongly connected in the core entourage");
    const GenTopology mu = induced_supratopology(b);
    PointSet limits = PointSet::full_set(b.universe);
    for (const auto& g : mu.opens)
        if (!w.subset_of(g))
            for (int c : g.members()) limits.erase(c);
    return limits;
}

SpaceReport decide_space_properties(const UniformBase& b) {
    SpaceReport rep;
    rep.derivation =
        "finite universe: every sequence revisits a value (cluster point); "
        "every G-Cauchy tail walks a strongly connected set of the core "
        "entourage and converges to each of its limit points; no sequence "
        "beyond |X| terms has distinct terms (sequential Lebesgue is vacuous); "
        "the induced supratopology on a finite carrier is compact";
    const Relation core = core_entourage(b);
    const int n = b.universe.size;
    // every strongly connected subset of the core is a possible
    // infinite-visit set of a G-Cauchy walk
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        PointSet w(b.universe);
        for (int x = 0; x < n; ++x)
            if (mask & (1u << x)) w.insert(x);
        if (!strongly_connected_on(core, w)) continue;
        PointSet limits = limit_points_of_recurrent_set(b, w);
        rep.certificates.push_back({w, limits});
    }
    return rep;
}

} // namespace gqu
