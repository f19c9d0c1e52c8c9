#include "gqu/stream.hpp"

#include <algorithm>
#include <memory>

namespace gqu {

namespace {

bool metric_ball(const Rat& x, const Rat& y, int k) {
    Rat d = x - y;
    if (d < 0) d = -d;
    return d * k < 1; // |x-y| < 1/k, exact
}

bool nonneg_integer(const Rat& v) { return is_integer(v) && v >= 0; }

std::vector<StreamPoint> memoize_terms(const StreamedSeq& s, long horizon) {
    std::vector<StreamPoint> t;
    t.reserve(static_cast<std::size_t>(horizon) + 1);
    for (long n = 0; n <= horizon; ++n) t.push_back(s.term(n));
    return t;
}

} // namespace

std::pair<int, int> product_level_coords(int K, int level) {
    if (level < 1) throw InvalidArgument("levels are 1-based");
    int remaining = level;
    for (int s = 2;; ++s) {
        const int cnt = std::min(K, s - 1);
        if (remaining <= cnt) return {remaining, s - remaining};
        remaining -= cnt;
    }
}

int product_level_index(int K, int i, int k) {
    if (i < 1 || i > K || k < 1) throw InvalidArgument("bad cylinder coordinates");
    int idx = 0;
    for (int s = 2; s < i + k; ++s) idx += std::min(K, s - 1);
    return idx + i;
}

StreamedSpace make_discrete_int_space() {
    StreamedSpace sp;
    sp.id = "discrete-int";
    sp.arity = 1;
    sp.valid = [](const StreamPoint& p) { return p.size() == 1 && is_integer(p[0]); };
    sp.in_level = [](int, const StreamPoint& x, const StreamPoint& y) {
        return x[0] == y[0]; // balls of radius < 1 under the discrete metric
    };
    sp.level_name = [](int k) { return "U_" + std::to_string(k) + "=diag"; };
    sp.refutation_level = [](std::size_t coord, const StreamPoint& cand)
        -> std::optional<std::pair<int, Rat>> {
        if (coord != 0) return std::nullopt;
        return std::make_pair(1, cand[0]);
    };
    return sp;
}

StreamedSpace make_full_int_space() {
    StreamedSpace sp;
    sp.id = "full-int";
    sp.arity = 1;
    sp.valid = [](const StreamPoint& p) { return p.size() == 1 && is_integer(p[0]); };
    sp.in_level = [](int, const StreamPoint&, const StreamPoint&) { return true; };
    sp.level_name = [](int k) { return "U_" + std::to_string(k) + "=all"; };
    sp.refutation_level = [](std::size_t, const StreamPoint&)
        -> std::optional<std::pair<int, Rat>> { return std::nullopt; };
    return sp;
}

StreamedSpace make_rational_metric_space() {
    StreamedSpace sp;
    sp.id = "rational-metric";
    sp.arity = 1;
    sp.valid = [](const StreamPoint& p) { return p.size() == 1; };
    sp.in_level = [](int k, const StreamPoint& x, const StreamPoint& y) {
        return metric_ball(x[0], y[0], k);
    };
    sp.level_name = [](int k) { return "U_" + std::to_string(k); };
    sp.refutation_level = [](std::size_t coord, const StreamPoint& cand)
        -> std::optional<std::pair<int, Rat>> {
        if (coord != 0) return std::nullopt;
        return std::make_pair(1, Rat(cand[0] + 1));
    };
    return sp;
}

StreamedSpace make_example_factor(int i) {
    if (i < 1) throw InvalidArgument("factor index must be >= 1");
    StreamedSpace sp;
    sp.id = "example-factor:" + std::to_string(i);
    sp.arity = 1;
    const Rat special(1, i);
    sp.valid = [special](const StreamPoint& p) {
        return p.size() == 1 && (nonneg_integer(p[0]) || p[0] == special);
    };
    sp.in_level = [](int k, const StreamPoint& x, const StreamPoint& y) {
        return metric_ball(x[0], y[0], k);
    };
    sp.level_name = [](int k) { return "U_" + std::to_string(k); };
    sp.refutation_level = [](std::size_t coord, const StreamPoint& cand)
        -> std::optional<std::pair<int, Rat>> {
        if (coord != 0) return std::nullopt;
        return std::make_pair(1, Rat(cand[0] + 1));
    };
    return sp;
}

StreamedSpace make_example_product(int K) {
    if (K < 1) throw InvalidArgument("K must be >= 1");
    StreamedSpace sp;
    sp.id = "example-product:K=" + std::to_string(K);
    sp.arity = static_cast<std::size_t>(K);
    sp.valid = [K](const StreamPoint& p) {
        if (static_cast<int>(p.size()) != K) return false;
        for (int i = 1; i <= K; ++i)
            if (!nonneg_integer(p[i - 1]) && p[i - 1] != Rat(1, i)) return false;
        return true;
    };
    sp.in_level = [K](int level, const StreamPoint& x, const StreamPoint& y) {
        auto [i, k] = product_level_coords(K, level);
        return metric_ball(x[i - 1], y[i - 1], k);
    };
    sp.level_name = [K](int level) {
        auto [i, k] = product_level_coords(K, level);
        return "cyl(i=" + std::to_string(i) + ",k=" + std::to_string(k) + ")";
    };
    sp.refutation_level = [K](std::size_t coord, const StreamPoint& cand)
        -> std::optional<std::pair<int, Rat>> {
        if (coord >= static_cast<std::size_t>(K)) return std::nullopt;
        const int level = product_level_index(K, static_cast<int>(coord) + 1, 1);
        return std::make_pair(level, Rat(cand[coord] + 1));
    };
    return sp;
}

StreamedSeq note_sequence() {
    StreamedSeq s;
    s.id = "note-seq";
    s.arity = 1;
    s.term = [](long n) { return StreamPoint{Rat(n / 2 + 1)}; };
    EscapeCertificate cert;
    cert.coordinate = 0;
    cert.monotone_from = 0;
    cert.bound = [](const Rat& r) { return std::max(0L, 2 * ceil_to_long(r) + 2); };
    s.certificate = cert;
    return s;
}

StreamedSeq example_sequence(int K) {
    if (K < 2) throw InvalidArgument("K must be >= 2");
    StreamedSeq s;
    s.id = "example-seq:K=" + std::to_string(K);
    s.arity = static_cast<std::size_t>(K);
    s.term = [K](long n) {
        StreamPoint p(static_cast<std::size_t>(K), Rat(0));
        const long t = n + 1; // the paper's list is 1-based
        if (t == 1) return p;
        const long m = (t % 2 == 0) ? t / 2 : (t + 1) / 2;
        p[0] = Rat(m);
        if (t % 2 == 0 && m >= 2 && m <= K) p[static_cast<std::size_t>(m - 1)] = Rat(1, m);
        return p;
    };
    EscapeCertificate cert;
    cert.coordinate = 0;
    cert.monotone_from = 0;
    cert.bound = [](const Rat& r) { return std::max(0L, 2 * ceil_to_long(r) + 2); };
    s.certificate = cert;
    return s;
}

StreamedSeq harmonic_walk() {
    StreamedSeq s;
    s.id = "harmonic-walk";
    s.arity = 1;
    auto cache = std::make_shared<std::vector<Rat>>(1, Rat(0));
    s.term = [cache](long n) {
        while (static_cast<long>(cache->size()) <= n)
            cache->push_back(cache->back() + Rat(1, static_cast<long>(cache->size())));
        return StreamPoint{(*cache)[static_cast<std::size_t>(n)]};
    };
    EscapeCertificate cert;
    cert.coordinate = 0;
    cert.monotone_from = 0;
    // H_{2^m} >= 1 + m/2, so 2^(2*ceil(r)+2) steps push the walk past r
    cert.bound = [](const Rat& r) {
        const long e = std::min(62L, std::max(0L, 2 * ceil_to_long(r) + 2));
        return 1L << e;
    };
    s.certificate = cert;
    return s;
}

StreamedSeq constant_sequence(StreamPoint value) {
    StreamedSeq s;
    s.id = "constant";
    s.arity = value.size();
    s.term = [value](long) { return value; };
    return s;
}

StreamedSeq subsequence(const StreamedSeq& s, std::vector<long> indices) {
    StreamedSeq out;
    out.id = s.id + ":subseq";
    out.arity = s.arity;
    auto base = s.term;
    out.term = [base, indices](long t) {
        if (t < 0 || t >= static_cast<long>(indices.size()))
            throw InvalidArgument("subsequence index out of range");
        return base(indices[static_cast<std::size_t>(t)]);
    };
    return out;
}

DepthStatus witness_pseudo_cauchy(const StreamedSpace& space, const StreamedSeq& s,
                                  int depth, long horizon) {
    if (depth < 1 || horizon < depth) throw InvalidArgument("invalid depth/horizon");
    const auto terms = memoize_terms(s, horizon);
    DepthStatus st;
    st.kind = StatusKind::WitnessedAtDepth;
    for (int level = 1; level <= depth; ++level) {
        for (long p = 1; p <= depth; ++p) {
            bool found = false;
            // near-adjacent witnesses dominate in practice: sweep by gap
            for (long gap = 1; gap <= horizon - p - 1 && !found; ++gap) {
                for (long m = p + 1; m + gap <= horizon; ++m) {
                    if (space.in_level(level, terms[m], terms[m + gap])) {
                        st.pc_witnesses.push_back({level, p, m, m + gap});
                        found = true;
                        break;
                    }
                }
            }
            if (!found) {
                st.kind = StatusKind::NoWitnessWithinHorizon;
                st.detail = "no pair for level " + space.level_name(level) +
                            ", p=" + std::to_string(p);
                return st;
            }
        }
    }
    return st;
}

DepthStatus witness_g_cauchy(const StreamedSpace& space, const StreamedSeq& s,
                             int depth, long horizon) {
    if (depth < 1 || horizon < depth) throw InvalidArgument("invalid depth/horizon");
    const auto terms = memoize_terms(s, horizon);
    DepthStatus st;
    st.kind = StatusKind::WitnessedAtDepth;
    for (int level = 1; level <= depth; ++level) {
        long last_violation = -1;
        for (long n = 0; n + 1 <= horizon; ++n)
            if (!space.in_level(level, terms[n], terms[n + 1])) last_violation = n;
        if (last_violation + 1 > horizon - 1) {
            st.kind = StatusKind::NoWitnessWithinHorizon;
            st.detail = "consecutive pairs keep leaving level " +
                        space.level_name(level) + " up to the horizon";
            return st;
        }
        st.gc_witnesses.push_back({level, last_violation + 1});
    }
    return st;
}

DepthStatus refute_cluster(const StreamedSpace& space, const StreamedSeq& s,
                           const StreamPoint& candidate, long horizon) {
    if (!space.valid(candidate)) throw InvalidArgument("candidate not a point of the space");
    DepthStatus st;
    if (!s.certificate) {
        st.kind = StatusKind::NoWitnessWithinHorizon;
        st.detail = "no escape certificate; horizon search cannot refute";
        return st;
    }
    const auto& cert = *s.certificate;
    const auto rl = space.refutation_level(cert.coordinate, candidate);
    if (!rl)
        throw InvalidArgument("certificate observable incompatible with all levels");
    const auto& [level, threshold] = *rl;
    const long from = std::max({cert.bound(threshold), cert.monotone_from, 0L});

    // spot-check the certificate claim and the neighborhood exclusion
    const long probes[] = {from, from + 1, from + 7, from + 63,
                           std::max(from, horizon)};
    Rat sample;
    for (long idx : probes) {
        const StreamPoint pt = s.term(idx);
        if (!(pt[cert.coordinate] > threshold)) {
            st.kind = StatusKind::NoWitnessWithinHorizon;
            st.detail = "certificate spot-check failed at index " + std::to_string(idx);
            return st;
        }
        if (space.in_level(level, candidate, pt)) {
            st.kind = StatusKind::NoWitnessWithinHorizon;
            st.detail = "term re-entered the candidate neighborhood at index " +
                        std::to_string(idx);
            return st;
        }
        if (idx == from) sample = pt[cert.coordinate];
    }
    st.kind = StatusKind::RefutedByCertificate;
    st.refutation = RefutationTrace{cert.coordinate, level, threshold, from, sample};
    st.detail = "observable on coordinate " + std::to_string(cert.coordinate + 1) +
                " exceeds " + rat_to_string(threshold) + " from index " +
                std::to_string(from) + " on; the " + space.level_name(level) +
                "-neighborhood of the candidate is never re-entered";
    return st;
}

std::vector<long> extract_pseudo_cauchy_subsequence(const StreamedSpace& space,
                                                    const StreamedSeq& s,
                                                    int stages, long cap) {
    if (stages < 1 || cap < 1) throw InvalidArgument("invalid stages/cap");
    std::vector<long> selected;
    std::vector<StreamPoint> values;
    long next = 0;
    auto fresh = [&](const StreamPoint& v) {
        return std::find(values.begin(), values.end(), v) == values.end();
    };
    for (int i = 1; i <= stages; ++i) {
        for (int j = 1; j <= i; ++j) {
            bool found = false;
            StreamPoint a = s.term(next);
            for (long r = next, probes = 0; probes < cap; ++r, ++probes) {
                StreamPoint b = s.term(r + 1);
                const bool ok = a != b && space.in_level(j, a, b) && fresh(a) && fresh(b);
                if (ok) {
                    selected.push_back(r);
                    selected.push_back(r + 1);
                    values.push_back(a);
                    values.push_back(b);
                    next = r + 2;
                    found = true;
                    break;
                }
                a = std::move(b);
            }
            if (!found) throw CapExceeded(i, j);
        }
    }
    return selected;
}

} // namespace gqu
