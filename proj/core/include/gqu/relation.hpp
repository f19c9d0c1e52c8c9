#ifndef GQU_RELATION_HPP
#define GQU_RELATION_HPP

#include <string>
#include <utility>
#include <vector>

#include "gqu/bitset.hpp"
#include "gqu/errors.hpp"

namespace gqu {

// Finite carrier set. Points are dense codes 0..size-1; labels are
// presentation-only and never affect semantics.
struct Universe {
    int size = 1;
    std::vector<std::string> labels;

    explicit Universe(int n = 1, std::vector<std::string> lab = {})
        : size(n), labels(std::move(lab)) {
        if (n < 1) throw InvalidArgument("universe size must be >= 1");
    }

    friend bool operator==(const Universe& a, const Universe& b) {
        return a.size == b.size;
    }
};

// Subset of a universe, dense-bitset backed.
class PointSet {
public:
    explicit PointSet(const Universe& u) : n_(u.size), bits_(u.size) {}
    PointSet(const Universe& u, const std::vector<int>& members) : PointSet(u) {
        for (int p : members) insert(p);
    }

    int universe_size() const { return n_; }
    bool contains(int p) const { return p >= 0 && p < n_ && bits_.test(p); }
    void insert(int p) {
        check_point(p);
        bits_.set(p);
    }
    void erase(int p) {
        check_point(p);
        bits_.reset(p);
    }
    std::size_t size() const { return bits_.count(); }
    bool empty() const { return bits_.none(); }

    bool subset_of(const PointSet& o) const {
        check_same(o);
        return bits_.subset_of(o.bits_);
    }
    bool intersects(const PointSet& o) const {
        check_same(o);
        DynBitset t = bits_;
        t &= o.bits_;
        return t.any();
    }
    PointSet united(const PointSet& o) const {
        check_same(o);
        PointSet r = *this;
        r.bits_ |= o.bits_;
        return r;
    }
    PointSet intersected(const PointSet& o) const {
        check_same(o);
        PointSet r = *this;
        r.bits_ &= o.bits_;
        return r;
    }
    PointSet complement() const {
        PointSet r = *this;
        for (int p = 0; p < n_; ++p)
            if (bits_.test(p)) r.bits_.reset(p); else r.bits_.set(p);
        return r;
    }

    std::vector<int> members() const {
        std::vector<int> out;
        for (std::size_t i = bits_.find_next(0); i < bits_.capacity();
             i = bits_.find_next(i + 1))
            out.push_back(static_cast<int>(i));
        return out;
    }

    static PointSet empty_set(const Universe& u) { return PointSet(u); }
    static PointSet full_set(const Universe& u) {
        PointSet r(u);
        for (int p = 0; p < u.size; ++p) r.insert(p);
        return r;
    }

    friend bool operator==(const PointSet&, const PointSet&) = default;
    friend bool operator<(const PointSet& a, const PointSet& b) {
        return a.bits_ < b.bits_;
    }
    std::size_t hash() const { return bits_.hash(); }

private:
    void check_point(int p) const {
        if (p < 0 || p >= n_)
            throw InvalidArgument("point " + std::to_string(p) + " out of range");
    }
    void check_same(const PointSet& o) const {
        if (n_ != o.n_) throw UniverseMismatch();
    }

    int n_;
    DynBitset bits_;
};

// Total map between two universes.
struct MapPair {
    int domain_size;
    int codomain_size;
    std::vector<int> values; // values[x] = f(x)

    MapPair(const Universe& dom, const Universe& cod, std::vector<int> vals)
        : domain_size(dom.size), codomain_size(cod.size), values(std::move(vals)) {
        if (static_cast<int>(values.size()) != domain_size)
            throw InvalidArgument("map must assign every domain point");
        for (int v : values)
            if (v < 0 || v >= codomain_size)
                throw InvalidArgument("map value out of codomain range");
    }

    static MapPair identity(const Universe& u) {
        std::vector<int> v(u.size);
        for (int i = 0; i < u.size; ++i) v[i] = i;
        return MapPair(u, u, std::move(v));
    }

    int operator()(int x) const { return values.at(x); }

    // {x : f(x) ∈ s}
    PointSet preimage(const PointSet& s) const {
        if (s.universe_size() != codomain_size) throw UniverseMismatch();
        PointSet r{Universe(domain_size)};
        for (int x = 0; x < domain_size; ++x)
            if (s.contains(values[x])) r.insert(x);
        return r;
    }

    static MapPair composed(const MapPair& outer, const MapPair& inner) {
        if (inner.codomain_size != outer.domain_size) throw UniverseMismatch();
        std::vector<int> v(inner.domain_size);
        for (int x = 0; x < inner.domain_size; ++x) v[x] = outer(inner(x));
        return MapPair(Universe(inner.domain_size), Universe(outer.codomain_size),
                       std::move(v));
    }
};

// Finite binary relation over a universe; houses entourages.
// Pair (x,y) is stored at bit x*n + y.
class Relation {
public:
    explicit Relation(const Universe& u)
        : n_(u.size), bits_(static_cast<std::size_t>(u.size) * u.size) {}
    Relation(const Universe& u, const std::vector<std::pair<int, int>>& pairs)
        : Relation(u) {
        for (auto [x, y] : pairs) insert(x, y);
    }

    int universe_size() const { return n_; }
    bool contains(int x, int y) const {
        return x >= 0 && x < n_ && y >= 0 && y < n_ &&
               bits_.test(static_cast<std::size_t>(x) * n_ + y);
    }
    void insert(int x, int y) {
        check_point(x);
        check_point(y);
        bits_.set(static_cast<std::size_t>(x) * n_ + y);
    }
    std::size_t pair_count() const { return bits_.count(); }

    bool subset_of(const Relation& o) const {
        check_same(o);
        return bits_.subset_of(o.bits_);
    }
    Relation united(const Relation& o) const {
        check_same(o);
        Relation r = *this;
        r.bits_ |= o.bits_;
        return r;
    }
    Relation intersected(const Relation& o) const {
        check_same(o);
        Relation r = *this;
        r.bits_ &= o.bits_;
        return r;
    }

    std::vector<std::pair<int, int>> pairs() const {
        std::vector<std::pair<int, int>> out;
        for (std::size_t i = bits_.find_next(0); i < bits_.capacity();
             i = bits_.find_next(i + 1))
            out.emplace_back(static_cast<int>(i) / n_, static_cast<int>(i) % n_);
        return out;
    }

    friend bool operator==(const Relation&, const Relation&) = default;
    friend bool operator<(const Relation& a, const Relation& b) {
        return a.bits_ < b.bits_;
    }
    std::size_t hash() const { return bits_.hash(); }

private:
    void check_point(int p) const {
        if (p < 0 || p >= n_)
            throw InvalidArgument("point " + std::to_string(p) + " out of range");
    }
    void check_same(const Relation& o) const {
        if (n_ != o.n_) throw UniverseMismatch();
    }

    int n_;
    DynBitset bits_;
};

// {(x,x) : x in u}
Relation diagonal(const Universe& u);

// u × u
Relation full_relation(const Universe& u);

// Convention: (x,z) ∈ compose(r,s) iff ∃y with (x,y) ∈ r and (y,z) ∈ s.
Relation compose(const Relation& r, const Relation& s);

// {y : (x,y) ∈ r}
PointSet image(const Relation& r, int x);

// {(x,y) over f's domain : (f(x),f(y)) ∈ r}
Relation pullback(const MapPair& f, const Relation& r);

} // namespace gqu

#endif
