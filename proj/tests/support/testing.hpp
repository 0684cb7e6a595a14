#pragma once

#include <difflat/catalog.hpp>
#include <difflat/lattice.hpp>

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <string>
#include <vector>

namespace difflat::support {

/// Every catalogued lattice of orders lo..hi, generated once per process.
inline auto catalog_range(std::size_t lo, std::size_t hi) -> std::vector<FinLattice>
{
    static std::map<std::size_t, std::vector<FinLattice>> cache;
    std::vector<FinLattice> out;
    for (auto n = lo; n <= hi; ++n) {
        auto it = cache.find(n);
        if (it == cache.end()) {
            std::vector<FinLattice> ls;
            for (auto & e : enumerate_lattices(n).entries)
                ls.push_back(e.lattice);
            it = cache.emplace(n, std::move(ls)).first;
        }
        out.insert(out.end(), it->second.begin(), it->second.end());
    }
    return out;
}

/// A random permutation of 0..n-1.
inline auto random_permutation(std::size_t n, std::mt19937 & rng) -> Permutation
{
    std::vector<Elem> image(n);
    std::iota(image.begin(), image.end(), Elem{0});
    std::shuffle(image.begin(), image.end(), rng);
    return Permutation{image};
}

/// Greatest lower bound straight from the order relation.
inline auto order_meet(const FinLattice & l, Elem x, Elem y) -> Elem
{
    std::vector<Elem> lb;
    for (Elem z = 0; z < l.size(); ++z)
        if (l.leq(z, x) && l.leq(z, y))
            lb.push_back(z);
    for (auto z : lb)
        if (std::all_of(lb.begin(), lb.end(), [&](Elem w) { return l.leq(w, z); }))
            return z;
    return ~Elem{0};
}

inline auto order_join(const FinLattice & l, Elem x, Elem y) -> Elem
{
    std::vector<Elem> ub;
    for (Elem z = 0; z < l.size(); ++z)
        if (l.leq(x, z) && l.leq(y, z))
            ub.push_back(z);
    for (auto z : ub)
        if (std::all_of(ub.begin(), ub.end(), [&](Elem w) { return l.leq(z, w); }))
            return z;
    return ~Elem{0};
}

/// Leibniz identity written out directly, without the library's checker.
inline auto leibniz(const FinLattice & l, const std::vector<Elem> & d) -> bool
{
    for (Elem x = 0; x < l.size(); ++x)
        for (Elem y = 0; y < l.size(); ++y)
            if (d[l.meet(x, y)] != l.join(l.meet(d[x], y), l.meet(x, d[y])))
                return false;
    return true;
}

inline auto image_vec(std::span<const Elem> s) -> std::vector<Elem>
{
    return {s.begin(), s.end()};
}

} // namespace difflat::support
