#include "gqu/relation.hpp"

namespace gqu {

Relation diagonal(const Universe& u) {
    Relation d(u);
    for (int x = 0; x < u.size; ++x) d.insert(x, x);
    return d;
}

Relation full_relation(const Universe& u) {
    Relation f(u);
    for (int x = 0; x < u.size; ++x)
        for (int y = 0; y < u.size; ++y) f.insert(x, y);
    return f;
}

Relation compose(const Relation& r, const Relation& s) {
    if (r.universe_size() != s.universe_size()) throw UniverseMismatch();
    const int n = r.universe_size();
    Relation out{Universe(n)};
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            if (!r.contains(x, y)) continue;
            for (int z = 0; z < n; ++z)
                if (s.contains(y, z)) out.insert(x, z);
        }
    return out;
}

PointSet image(const Relation& r, int x) {
    const int n = r.universe_size();
    if (x < 0 || x >= n)
        throw InvalidArgument("point " + std::to_string(x) + " out of range");
    PointSet out{Universe(n)};
    for (int y = 0; y < n; ++y)
        if (r.contains(x, y)) out.insert(y);
    return out;
}

Relation pullback(const MapPair& f, const Relation& r) {
    if (f.codomain_size != r.universe_size()) throw UniverseMismatch();
    Relation out{Universe(f.domain_size)};
    for (int x = 0; x < f.domain_size; ++x)
        for (int y = 0; y < f.domain_size; ++y)
            if (r.contains(f(x), f(y))) out.insert(x, y);
    return out;
}

} // namespace gqu
