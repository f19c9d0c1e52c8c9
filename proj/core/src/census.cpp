#include "gqu/census.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <set>
#include <sstream>

namespace gqu {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

std::string describe_relation(const Relation& r) {
    std::ostringstream os;
    os << "[";
    bool first = true;
    for (auto [x, y] : r.pairs()) {
        if (!first) os << ",";
        os << "(" << x << "," << y << ")";
        first = false;
    }
    os << "]";
    return os.str();
}

std::string describe_base(const UniformBase& b) {
    std::ostringstream os;
    os << "base{n=" << b.universe.size;
    for (const auto& e : b.elements) os << " " << describe_relation(e);
    os << "}";
    return os.str();
}

std::string describe_topology(const GenTopology& t) {
    std::ostringstream os;
    os << "topology{n=" << t.universe.size;
    for (const auto& g : t.opens) {
        os << " {";
        bool first = true;
        for (int p : g.members()) {
            if (!first) os << ",";
            os << p;
            first = false;
        }
        os << "}";
    }
    os << "}";
    return os.str();
}

std::string describe_seq(const EPSeq& s) {
    std::ostringstream os;
    os << "ep{pre=[";
    for (std::size_t i = 0; i < s.preamble.size(); ++i)
        os << (i ? "," : "") << s.preamble[i];
    os << "] cyc=[";
    for (std::size_t i = 0; i < s.cycle.size(); ++i)
        os << (i ? "," : "") << s.cycle[i];
    os << "]}";
    return os.str();
}

// reflexive relation from an off-diagonal bit pattern
Relation reflexive_from_mask(const Universe& u, std::uint64_t mask) {
    Relation r = diagonal(u);
    int bit = 0;
    for (int x = 0; x < u.size; ++x)
        for (int y = 0; y < u.size; ++y) {
            if (x == y) continue;
            if (mask & (std::uint64_t{1} << bit)) r.insert(x, y);
            ++bit;
        }
    return r;
}

bool is_antichain(const std::vector<Relation>& rels) {
    for (std::size_t i = 0; i < rels.size(); ++i)
        for (std::size_t j = 0; j < rels.size(); ++j)
            if (i != j && rels[i].subset_of(rels[j]) && rels[i] != rels[j])
                return false;
    return true;
}

std::vector<Relation> drop_redundant(std::vector<Relation> rels) {
    std::sort(rels.begin(), rels.end());
    rels.erase(std::unique(rels.begin(), rels.end()), rels.end());
    std::vector<Relation> keep;
    for (const auto& r : rels) {
        bool redundant = false;
        for (const auto& o : rels)
            if (o != r && o.subset_of(r)) {
                redundant = true;
                break;
            }
        if (!redundant) keep.push_back(r);
    }
    return keep;
}

std::optional<UniformBase> try_base(const Universe& u, std::vector<Relation> rels) {
    try {
        return validate_base(u, std::move(rels));
    } catch (const Error&) {
        return std::nullopt;
    }
}

std::vector<MapPair> all_maps(const Universe& dom, const Universe& cod) {
    std::vector<MapPair> maps;
    std::vector<int> vals(dom.size, 0);
    while (true) {
        maps.push_back(MapPair(dom, cod, vals));
        int i = 0;
        while (i < dom.size && ++vals[i] == cod.size) vals[i++] = 0;
        if (i == dom.size) break;
    }
    return maps;
}

std::uint64_t relation_mask(const Relation& r) {
    std::uint64_t m = 0;
    const int n = r.universe_size();
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (r.contains(x, y)) m |= std::uint64_t{1} << (x * n + y);
    return m;
}

std::uint32_t pointset_mask(const PointSet& s) {
    std::uint32_t m = 0;
    for (int p : s.members()) m |= 1u << p;
    return m;
}

// Brute-force oracle data for one EP sequence: direct quantifier scans over
// the window [0, P+2L], tabulated per candidate open subset.
struct SeqOracle {
    long window_end; // P + 2L
    std::uint32_t cycle_values = 0;
    std::uint64_t consecutive_pairs = 0; // (s_n, s_{n+1}), n in [P+L, P+2L)
    std::uint64_t tail_pairs = 0;        // (s_p, s_q),   p,q in [P+L, P+2L)
    bool value_repeats = false;          // some value at two distinct indices
    std::vector<char> converges_in;      // indexed by subset mask
    std::vector<char> clusters_in;       // indexed by subset mask

    SeqOracle(const EPSeq& s, int n) {
        const long P = static_cast<long>(s.preamble.size());
        const long L = static_cast<long>(s.cycle.size());
        window_end = P + 2 * L;
        std::vector<int> t;
        for (long i = 0; i <= window_end; ++i) t.push_back(ep_term(s, i));
        for (long i = P + L; i < P + 2 * L; ++i) {
            cycle_values |= 1u << t[i];
            consecutive_pairs |= std::uint64_t{1} << (t[i] * n + t[i + 1]);
            for (long q = P + L; q < P + 2 * L; ++q)
                tail_pairs |= std::uint64_t{1} << (t[i] * n + t[q]);
        }
        for (long i = 0; i <= window_end && !value_repeats; ++i)
            for (long q = i + 1; q <= window_end; ++q)
                if (t[i] == t[q]) {
                    value_repeats = true;
                    break;
                }
        converges_in.assign(1u << n, 0);
        clusters_in.assign(1u << n, 0);
        for (std::uint32_t g = 0; g < (1u << n); ++g) {
            long last_violation = -1, last_hit = -1;
            for (long i = 0; i <= window_end; ++i) {
                if (g & (1u << t[i])) last_hit = i; else last_violation = i;
            }
            // some m <= P+L has every later term inside g
            converges_in[g] = last_violation < P + L;
            // beyond every index <= P+L some term lies inside g
            clusters_in[g] = last_hit >= P + L;
        }
    }
};

} // namespace

std::vector<GenTopology> enumerate_gentopologies(int n, bool strong_only) {
    if (n < 1 || n > 4) throw InvalidArgument("enumeration ceiling is n <= 4");
    const Universe u(n);
    const int nsub = 1 << n; // subsets as masks; 0 is ∅
    std::vector<GenTopology> out;
    const std::uint32_t families = 1u << (nsub - 1); // choices over nonempty subsets
    for (std::uint32_t fam = 0; fam < families; ++fam) {
        auto member = [&](int sub) {
            return sub == 0 || (fam & (1u << (sub - 1))) != 0;
        };
        bool closed = true;
        for (int a = 1; a < nsub && closed; ++a) {
            if (!member(a)) continue;
            for (int b = a + 1; b < nsub && closed; ++b)
                if (member(b) && !member(a | b)) closed = false;
        }
        if (!closed) continue;
        if (strong_only && !member(nsub - 1)) continue;
        std::vector<PointSet> opens;
        for (int sub = 0; sub < nsub; ++sub) {
            if (!member(sub)) continue;
            PointSet s(u);
            for (int p = 0; p < n; ++p)
                if (sub & (1 << p)) s.insert(p);
            opens.push_back(s);
        }
        std::sort(opens.begin(), opens.end());
        out.push_back(GenTopology{u, std::move(opens), member(nsub - 1)});
    }
    return out;
}

std::vector<UniformBase> enumerate_bases(const CensusConfig& cfg) {
    const Universe u(cfg.n);
    const int offdiag = cfg.n * cfg.n - cfg.n;
    std::vector<Relation> rels;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << offdiag); ++m)
        rels.push_back(reflexive_from_mask(u, m));

    std::vector<UniformBase> out;
    std::set<std::string> seen;
    auto emit = [&](std::vector<Relation> elems) {
        std::sort(elems.begin(), elems.end());
        if (!is_antichain(elems)) return;
        auto b = try_base(u, elems);
        if (!b) return;
        if (seen.insert(describe_base(*b)).second) out.push_back(std::move(*b));
    };

    switch (cfg.mode) {
        case BaseEnumMode::Exhaustive: {
            if (cfg.n > 2)
                throw InvalidArgument("exhaustive base enumeration limited to n = 2");
            for (std::uint32_t mask = 1; mask < (1u << rels.size()); ++mask) {
                std::vector<Relation> elems;
                for (std::size_t i = 0; i < rels.size(); ++i)
                    if (mask & (1u << i)) elems.push_back(rels[i]);
                emit(std::move(elems));
            }
            break;
        }
        case BaseEnumMode::BoundedSize: {
            for (std::size_t i = 0; i < rels.size(); ++i) emit({rels[i]});
            if (cfg.max_base_size >= 2)
                for (std::size_t i = 0; i < rels.size(); ++i)
                    for (std::size_t j = i + 1; j < rels.size(); ++j)
                        emit({rels[i], rels[j]});
            break;
        }
        case BaseEnumMode::Random: {
            std::mt19937_64 rng(cfg.seed);
            for (int d = 0; d < cfg.random_draws; ++d) {
                const int sz = 1 + static_cast<int>(rng() % 3);
                std::vector<Relation> elems;
                for (int k = 0; k < sz; ++k)
                    elems.push_back(reflexive_from_mask(
                        u, rng() & ((std::uint64_t{1} << offdiag) - 1)));
                emit(drop_redundant(std::move(elems)));
            }
            break;
        }
    }
    return out;
}

std::vector<GenTopology> random_strong_topologies(int n, int count,
                                                  std::uint64_t seed) {
    const Universe u(n);
    std::mt19937_64 rng(seed);
    std::vector<GenTopology> out;
    while (static_cast<int>(out.size()) < count) {
        const int k = 1 + static_cast<int>(rng() % 4);
        std::vector<PointSet> base{PointSet::full_set(u)};
        for (int i = 0; i < k; ++i) {
            PointSet s(u);
            for (int p = 0; p < n; ++p)
                if (rng() & 1) s.insert(p);
            base.push_back(s);
        }
        out.push_back(generate_from_base(u, base));
    }
    return out;
}

std::vector<EPSeq> enumerate_ep_sequences(const Universe& u, int max_preamble,
                                          int max_cycle) {
    std::vector<EPSeq> out;
    auto words = [&](int len) {
        std::vector<std::vector<int>> ws;
        std::vector<int> w(len, 0);
        while (true) {
            ws.push_back(w);
            int i = 0;
            while (i < len && ++w[i] == u.size) w[i++] = 0;
            if (i == len) break;
        }
        return ws;
    };
    for (int pl = 0; pl <= max_preamble; ++pl)
        for (const auto& pre : words(pl))
            for (int cl = 1; cl <= max_cycle; ++cl)
                for (const auto& cyc : words(cl)) out.push_back(EPSeq(u, pre, cyc));
    return out;
}

VerificationReport verify_pervin_roundtrip(int n) {
    const auto t0 = Clock::now();
    VerificationReport rep;
    rep.name = "pervin-roundtrip";
    for (const auto& mu : enumerate_gentopologies(n, true)) {
        ++rep.checked;
        const GenTopology back = induced_supratopology(pervin_base(mu));
        if (!(back == mu)) {
            ++rep.violations;
            rep.failures.push_back(describe_topology(mu) + " -> " +
                                   describe_topology(back));
        }
    }
    rep.millis = elapsed_ms(t0);
    return rep;
}

VerificationReport verify_continuity_lift(int n, int trials, std::uint64_t seed) {
    if (n > 3) throw InvalidArgument("continuity lift ceiling is n <= 3");
    const auto t0 = Clock::now();
    VerificationReport rep;
    rep.name = "continuity-lift";
    const Universe u(n);
    const auto maps = all_maps(u, u);
    const auto topos = enumerate_gentopologies(n, true);

    std::vector<std::pair<std::size_t, std::size_t>> topo_pairs;
    if (n <= 2) {
        for (std::size_t i = 0; i < topos.size(); ++i)
            for (std::size_t j = 0; j < topos.size(); ++j)
                topo_pairs.emplace_back(i, j);
    } else {
        std::mt19937_64 rng(seed);
        for (int t = 0; t < trials; ++t)
            topo_pairs.emplace_back(rng() % topos.size(), rng() % topos.size());
    }

    // (a) generalized continuity lifts to Pervin uniform continuity
    for (auto [i, j] : topo_pairs) {
        const UniformBase bi = pervin_base(topos[i]);
        const UniformBase bj = pervin_base(topos[j]);
        for (const auto& f : maps) {
            if (!is_generalized_continuous(f, topos[i], topos[j])) continue;
            ++rep.checked;
            if (!is_gqu_continuous(f, bi, bj)) {
                ++rep.violations;
                rep.failures.push_back("(a) " + describe_topology(topos[i]) +
                                       " -> " + describe_topology(topos[j]));
            }
        }
    }

    // (b) uniform continuity descends to the induced topologies
    CensusConfig bcfg;
    bcfg.n = n;
    bcfg.mode = n <= 2 ? BaseEnumMode::Exhaustive : BaseEnumMode::BoundedSize;
    const auto bases = enumerate_bases(bcfg);
    std::vector<std::pair<std::size_t, std::size_t>> base_pairs;
    if (n <= 2) {
        for (std::size_t i = 0; i < bases.size(); ++i)
            for (std::size_t j = 0; j < bases.size(); ++j)
                base_pairs.emplace_back(i, j);
    } else {
        std::mt19937_64 rng(seed + 1);
        for (int t = 0; t < trials; ++t)
            base_pairs.emplace_back(rng() % bases.size(), rng() % bases.size());
    }
    for (auto [i, j] : base_pairs) {
        const GenTopology mi = induced_supratopology(bases[i]);
        const GenTopology mj = induced_supratopology(bases[j]);
        for (const auto& f : maps) {
            if (!is_gqu_continuous(f, bases[i], bases[j])) continue;
            ++rep.checked;
            if (!is_generalized_continuous(f, mi, mj)) {
                ++rep.violations;
                rep.failures.push_back("(b) " + describe_base(bases[i]) + " -> " +
                                       describe_base(bases[j]));
            }
        }
    }
    rep.millis = elapsed_ms(t0);
    return rep;
}

namespace {

// one projection-lemma instance: product base vs coordinatewise classification
bool check_projection_equivalences(const ProductUniverse& pu,
                                   const std::vector<UniformBase>& factor_bases,
                                   const UniformBase& pbase, const EPSeq& s,
                                   std::string* why) {
    const EPClassification whole = classify_ep_sequence(pbase, s);
    bool all_cauchy = true, all_g = true;
    for (std::size_t i = 0; i < pu.arity(); ++i) {
        const EPClassification part =
            classify_ep_sequence(factor_bases[i], project_ep(pu, s, i));
        all_cauchy = all_cauchy && part.cauchy;
        all_g = all_g && part.g_cauchy;
        if (!part.pseudo_cauchy) {
            *why = "factor classification lost pseudo-Cauchy";
            return false;
        }
    }
    if (whole.cauchy != all_cauchy) {
        *why = "Cauchy equivalence failed for " + describe_seq(s);
        return false;
    }
    if (whole.g_cauchy != all_g) {
        *why = "G-Cauchy equivalence failed for " + describe_seq(s);
        return false;
    }
    if (!whole.pseudo_cauchy) {
        *why = "product classification lost pseudo-Cauchy";
        return false;
    }
    return true;
}

UniformBase random_base(const Universe& u, std::mt19937_64& rng) {
    const int offdiag = u.size * u.size - u.size;
    const std::uint64_t all = offdiag == 0
                                  ? 0
                                  : (std::uint64_t{1} << offdiag) - 1;
    for (int attempt = 0; attempt < 64; ++attempt) {
        const int sz = 1 + static_cast<int>(rng() % 2);
        std::vector<Relation> elems;
        for (int k = 0; k < sz; ++k)
            elems.push_back(reflexive_from_mask(u, rng() & all));
        auto b = try_base(u, drop_redundant(std::move(elems)));
        if (b) return *b;
    }
    return UniformBase{u, {diagonal(u)}};
}

EPSeq random_ep(const Universe& u, int max_preamble, int max_cycle,
                std::mt19937_64& rng) {
    const int pl = static_cast<int>(rng() % (max_preamble + 1));
    const int cl = 1 + static_cast<int>(rng() % max_cycle);
    std::vector<int> pre(pl), cyc(cl);
    for (int& v : pre) v = static_cast<int>(rng() % u.size);
    for (int& v : cyc) v = static_cast<int>(rng() % u.size);
    return EPSeq(u, pre, cyc);
}

} // namespace

VerificationReport verify_product_lemmas(const CensusConfig& cfg) {
    const auto t0 = Clock::now();
    VerificationReport rep;
    rep.name = "product-lemmas";

    // exhaustive: 2 factors of size 2
    CensusConfig e2;
    e2.n = 2;
    e2.mode = BaseEnumMode::Exhaustive;
    const auto bases2 = enumerate_bases(e2);
    const Universe u2(2);
    const ProductUniverse pu22 = product_universe({u2, u2});
    const auto seqs =
        enumerate_ep_sequences(pu22.universe, cfg.max_preamble, cfg.max_cycle);
    for (const auto& b0 : bases2)
        for (const auto& b1 : bases2) {
            const std::vector<UniformBase> fb{b0, b1};
            const UniformBase pb = product_base(pu22, fb);
            for (std::size_t i = 0; i < 2; ++i) {
                ++rep.checked;
                if (!is_gqu_continuous(projection(pu22, i), pb, fb[i])) {
                    ++rep.violations;
                    rep.failures.push_back(
                        "projection not uniformly continuous: " + describe_base(pb));
                }
            }
            for (const auto& s : seqs) {
                ++rep.checked;
                std::string why;
                if (!check_projection_equivalences(pu22, fb, pb, s, &why)) {
                    ++rep.violations;
                    rep.failures.push_back(why + " over " + describe_base(pb));
                }
            }
        }

    // random 3-factor instances, sizes <= 3
    std::mt19937_64 rng(cfg.seed);
    for (int t = 0; t < cfg.trials; ++t) {
        std::vector<Universe> factors;
        for (int i = 0; i < 3; ++i)
            factors.push_back(Universe(1 + static_cast<int>(rng() % 3)));
        const ProductUniverse pu = product_universe(factors);
        std::vector<UniformBase> fb;
        for (const auto& f : factors) fb.push_back(random_base(f, rng));
        const UniformBase pb = product_base(pu, fb);
        for (std::size_t i = 0; i < 3; ++i) {
            ++rep.checked;
            if (!is_gqu_continuous(projection(pu, i), pb, fb[i])) {
                ++rep.violations;
                rep.failures.push_back("projection not uniformly continuous: " +
                                       describe_base(pb));
            }
        }
        const EPSeq s = random_ep(pu.universe, cfg.max_preamble, cfg.max_cycle, rng);
        ++rep.checked;
        std::string why;
        if (!check_projection_equivalences(pu, fb, pb, s, &why)) {
            ++rep.violations;
            rep.failures.push_back(why + " over " + describe_base(pb));
        }
    }
    rep.millis = elapsed_ms(t0);
    return rep;
}

VerificationReport verify_finite_collapse(int n, const CensusConfig& cfg) {
    if (n > 3) throw InvalidArgument("finite collapse ceiling is n <= 3");
    const auto t0 = Clock::now();
    VerificationReport rep;
    rep.name = "finite-collapse";

    CensusConfig bcfg = cfg;
    bcfg.n = n;
    bcfg.mode = n <= 2 ? BaseEnumMode::Exhaustive : BaseEnumMode::BoundedSize;
    auto bases = enumerate_bases(bcfg);
    if (cfg.collapse_max_bases > 0 &&
        static_cast<int>(bases.size()) > cfg.collapse_max_bases)
        bases.resize(static_cast<std::size_t>(cfg.collapse_max_bases));

    const Universe u(n);
    const auto seqs = enumerate_ep_sequences(u, 4, 4);
    std::vector<SeqOracle> oracles;
    oracles.reserve(seqs.size());
    for (const auto& s : seqs) oracles.emplace_back(s, n);

    for (const auto& b : bases) {
        const SpaceReport sr = decide_space_properties(b);
        ++rep.checked;
        if (!(sr.sequentially_complete && sr.g_complete && sr.weak_g_complete &&
              sr.strongly_lebesgue && sr.sequentially_lebesgue && sr.compact)) {
            ++rep.violations;
            rep.failures.push_back("flags inconsistent for " + describe_base(b));
            continue;
        }
        const Relation core = core_entourage(b);
        for (const auto& cert : sr.certificates) {
            ++rep.checked;
            if (cert.limit_set.empty() ||
                !strongly_connected_on(core, cert.visit_set) ||
                !(cert.limit_set ==
                  limit_points_of_recurrent_set(b, cert.visit_set))) {
                ++rep.violations;
                rep.failures.push_back("bad certificate for " + describe_base(b));
            }
        }

        const GenTopology mu = induced_supratopology(b);
        std::vector<std::uint32_t> open_masks;
        for (const auto& g : mu.opens) open_masks.push_back(pointset_mask(g));
        std::vector<std::uint64_t> elem_masks;
        for (const auto& e : b.elements) elem_masks.push_back(relation_mask(e));

        for (std::size_t si = 0; si < seqs.size(); ++si) {
            const EPSeq& s = seqs[si];
            const SeqOracle& oc = oracles[si];
            ++rep.checked;

            const EPClassification cls = classify_ep_sequence(b, s);
            const auto [limits, clusters] = limit_and_cluster_points_ep(mu, s);

            bool og = true, ocauchy = true;
            for (std::uint64_t em : elem_masks) {
                if (oc.consecutive_pairs & ~em) og = false;
                if (oc.tail_pairs & ~em) ocauchy = false;
            }
            std::uint32_t olimits = 0, oclusters = 0;
            for (int c = 0; c < n; ++c) {
                bool lim = true, clu = true;
                for (std::uint32_t gm : open_masks) {
                    if (!(gm & (1u << c))) continue;
                    if (!oc.converges_in[gm]) lim = false;
                    if (!oc.clusters_in[gm]) clu = false;
                }
                if (lim) olimits |= 1u << c;
                if (clu) oclusters |= 1u << c;
            }

            std::string fail;
            if (pointset_mask(limits) != olimits ||
                pointset_mask(clusters) != oclusters)
                fail = "closed-form limit/cluster sets disagree with direct scan";
            else if (cls.g_cauchy != og)
                fail = "G-Cauchy closed form disagrees with direct scan";
            else if (cls.cauchy != ocauchy)
                fail = "Cauchy closed form disagrees with direct scan";
            else if (og && olimits == 0)
                fail = "G-Cauchy sequence fails to converge";
            else if (ocauchy && olimits == 0)
                fail = "Cauchy sequence fails to converge";
            else if (oclusters == 0)
                fail = "sequence without a cluster point";
            else if (cls.distinct_terms || !oc.value_repeats)
                fail = "EP sequence reported distinct terms";
            if (!fail.empty()) {
                ++rep.violations;
                rep.failures.push_back(fail + ": " + describe_seq(s) + " over " +
                                       describe_base(b));
            }
        }
    }
    rep.millis = elapsed_ms(t0);
    return rep;
}

} // namespace gqu
