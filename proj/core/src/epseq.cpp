#include "gqu/epseq.hpp"

namespace gqu {

EPSeq::EPSeq(const Universe& u, std::vector<int> pre, std::vector<int> cyc)
    : universe(u), preamble(std::move(pre)), cycle(std::move(cyc)) {
    if (cycle.empty()) throw InvalidArgument("cycle must be nonempty");
    for (int p : preamble)
        if (p < 0 || p >= u.size) throw InvalidArgument("preamble point out of range");
    for (int p : cycle)
        if (p < 0 || p >= u.size) throw InvalidArgument("cycle point out of range");
}

int ep_term(const EPSeq& s, long n) {
    if (n < 0) throw InvalidArgument("negative index");
    const long pre = static_cast<long>(s.preamble.size());
    if (n < pre) return s.preamble[static_cast<std::size_t>(n)];
    return s.cycle[static_cast<std::size_t>((n - pre) % s.cycle.size())];
}

EPSeq ep_normalize(const EPSeq& s) {
    // minimal period of the cycle
    std::vector<int> cyc = s.cycle;
    const std::size_t len = cyc.size();
    for (std::size_t d = 1; d <= len; ++d) {
        if (len % d != 0) continue;
        bool periodic = true;
        for (std::size_t j = d; j < len && periodic; ++j)
            periodic = (cyc[j] == cyc[j % d]);
        if (periodic) {
            cyc.resize(d);
            break;
        }
    }
    // absorb the preamble tail: dropping preamble's last element p and
    // rotating the cycle right by one keeps every term value when p equals
    // the cycle's last element
    std::vector<int> pre = s.preamble;
    while (!pre.empty() && pre.back() == cyc.back()) {
        pre.pop_back();
        cyc.insert(cyc.begin(), cyc.back());
        cyc.pop_back();
    }
    return EPSeq(s.universe, std::move(pre), std::move(cyc));
}

std::pair<PointSet, PointSet> ep_values(const EPSeq& s) {
    PointSet pre(s.universe), cyc(s.universe);
    for (int p : s.preamble) pre.insert(p);
    for (int p : s.cycle) cyc.insert(p);
    return {pre, cyc};
}

} // namespace gqu
