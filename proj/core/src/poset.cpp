#include <difflat/error.hpp>
#include <difflat/poset.hpp>

#include "order_search.hpp"

#include <algorithm>
#include <cstdio>

namespace difflat {

using std::optional;
using std::size_t;
using std::string;
using std::vector;

FinPoset::FinPoset(size_t size, vector<char> relation, vector<size_t> labels) :
    _size(size),
    _leq(std::move(relation)),
    _labels(std::move(labels))
{
    if (_leq.size() != _size * _size)
        throw Error(ErrorKind::BadInput, "relation has the wrong size");
    if (_labels.empty()) {
        _labels.resize(_size);
        for (size_t i = 0; i < _size; ++i)
            _labels[i] = i;
    }
    if (_labels.size() != _size)
        throw Error(ErrorKind::BadInput, "label count does not match poset size");
    for (size_t x = 0; x < _size; ++x) {
        if (! leq(x, x))
            throw Error(ErrorKind::BadInput, "relation is not reflexive");
        for (size_t y = 0; y < _size; ++y) {
            if (x != y && leq(x, y) && leq(y, x))
                throw Error(ErrorKind::BadInput, "relation is not antisymmetric");
            if (leq(x, y))
                for (size_t z = 0; z < _size; ++z)
                    if (leq(y, z) && ! leq(x, z))
                        throw Error(ErrorKind::BadInput, "relation is not transitive");
        }
    }
}

auto FinPoset::covers() const -> vector<std::pair<size_t, size_t>>
{
    auto g = detail::order_graph(_size, _leq);
    vector<std::pair<size_t, size_t>> out;
    for (size_t x = 0; x < _size; ++x)
        for (auto y : g.upper[x])
            out.emplace_back(x, y);
    std::sort(out.begin(), out.end());
    return out;
}

auto FinPoset::bottom() const -> optional<size_t>
{
    for (size_t x = 0; x < _size; ++x) {
        bool ok = true;
        for (size_t y = 0; y < _size && ok; ++y)
            ok = leq(x, y);
        if (ok)
            return x;
    }
    return std::nullopt;
}

auto FinPoset::top() const -> optional<size_t>
{
    for (size_t x = 0; x < _size; ++x) {
        bool ok = true;
        for (size_t y = 0; y < _size && ok; ++y)
            ok = leq(y, x);
        if (ok)
            return x;
    }
    return std::nullopt;
}

auto FinPoset::is_chain() const -> bool
{
    for (size_t x = 0; x < _size; ++x)
        for (size_t y = x + 1; y < _size; ++y)
            if (! comparable(x, y))
                return false;
    return true;
}

auto FinPoset::minimal_upper_bounds(size_t x, size_t y) const -> vector<size_t>
{
    vector<size_t> ub;
    for (size_t z = 0; z < _size; ++z)
        if (leq(x, z) && leq(y, z))
            ub.push_back(z);
    vector<size_t> out;
    for (auto z : ub)
        if (std::none_of(ub.begin(), ub.end(), [&](size_t w) { return less(w, z); }))
            out.push_back(z);
    return out;
}

auto FinPoset::maximal_lower_bounds(size_t x, size_t y) const -> vector<size_t>
{
    vector<size_t> lb;
    for (size_t z = 0; z < _size; ++z)
        if (leq(z, x) && leq(z, y))
            lb.push_back(z);
    vector<size_t> out;
    for (auto z : lb)
        if (std::none_of(lb.begin(), lb.end(), [&](size_t w) { return less(z, w); }))
            out.push_back(z);
    return out;
}

auto poset_is_lattice(const FinPoset & p) -> LatticeCheck
{
    for (size_t x = 0; x < p.size(); ++x)
        for (size_t y = x + 1; y < p.size(); ++y) {
            if (p.comparable(x, y))
                continue;
            auto ub = p.minimal_upper_bounds(x, y);
            if (ub.size() != 1)
                return {false, LatticeCertificate{LatticeCertificate::Kind::MissingJoin, x, y, std::move(ub)}};
            auto lb = p.maximal_lower_bounds(x, y);
            if (lb.size() != 1)
                return {false, LatticeCertificate{LatticeCertificate::Kind::MissingMeet, x, y, std::move(lb)}};
        }
    return {p.size() > 0, std::nullopt};
}

auto poset_lattice_tables(const FinPoset & p) -> PosetLatticeTables
{
    auto n = p.size();
    PosetLatticeTables t;
    t.n = n;
    t.meet.assign(n * n, 0);
    t.join.assign(n * n, 0);
    for (size_t x = 0; x < n; ++x)
        for (size_t y = x; y < n; ++y) {
            auto ub = p.minimal_upper_bounds(x, y);
            auto lb = p.maximal_lower_bounds(x, y);
            if (ub.size() != 1 || lb.size() != 1)
                throw Error(ErrorKind::PosetNotLattice,
                    "elements " + std::to_string(x) + " and " + std::to_string(y) + " lack a unique bound");
            t.join[x * n + y] = t.join[y * n + x] = ub.front();
            t.meet[x * n + y] = t.meet[y * n + x] = lb.front();
        }
    return t;
}

auto poset_as_lattice(const FinPoset & p) -> FinLattice
{
    if (! poset_is_lattice(p).is_lattice)
        throw Error(ErrorKind::PosetNotLattice, "poset is not a lattice");
    vector<Cover> covers;
    for (auto [lo, hi] : p.covers())
        covers.emplace_back(static_cast<Elem>(lo), static_cast<Elem>(hi));
    return lattice_from_covers(p.size(), covers);
}

auto poset_invariant_key(const FinPoset & p) -> string
{
    auto g = detail::order_graph(p.size(), p.relation());
    std::uint64_t trace = detail::fnv_offset;
    auto sig = detail::level_signature(g);
    auto sorted = sig;
    std::sort(sorted.begin(), sorted.end());
    for (auto & s : sorted)
        for (auto v : s)
            trace = detail::fnv1a(trace, v);
    auto colours = detail::refine(g, detail::rank_signatures(sig), &trace);
    char hex[17];
    std::snprintf(hex, sizeof hex, "%016llx", static_cast<unsigned long long>(trace));
    return std::to_string(p.size()) + ":" + std::to_string(g.n ? detail::colour_count(colours) : 0) + ":" + hex;
}

auto find_poset_isomorphism(const FinPoset & a, const FinPoset & b) -> optional<vector<size_t>>
{
    if (a.size() != b.size())
        return std::nullopt;
    auto ga = detail::order_graph(a.size(), a.relation());
    auto gb = detail::order_graph(b.size(), b.relation());
    auto sa = detail::level_signature(ga), sb = detail::level_signature(gb);
    auto both = sa;
    both.insert(both.end(), sb.begin(), sb.end());
    auto ranks = detail::rank_signatures(both);
    vector<std::uint32_t> ca(ranks.begin(), ranks.begin() + static_cast<std::ptrdiff_t>(sa.size()));
    vector<std::uint32_t> cb(ranks.begin() + static_cast<std::ptrdiff_t>(sa.size()), ranks.end());

    optional<vector<size_t>> witness;
    detail::for_each_order_iso(ga, ca, gb, cb, [&](const vector<Elem> & map) {
        witness.emplace(map.begin(), map.end());
        return false;
    });
    return witness;
}

auto poset_from_covers(size_t n, const vector<std::pair<size_t, size_t>> & covers) -> FinPoset
{
    vector<char> leq(n * n, 0);
    for (size_t x = 0; x < n; ++x)
        leq[x * n + x] = 1;
    for (auto [lo, hi] : covers) {
        if (lo >= n || hi >= n)
            throw Error(ErrorKind::BadInput, "cover out of range");
        leq[lo * n + hi] = 1;
    }
    // Warshall
    for (size_t k = 0; k < n; ++k)
        for (size_t i = 0; i < n; ++i)
            if (leq[i * n + k])
                for (size_t j = 0; j < n; ++j)
                    if (leq[k * n + j])
                        leq[i * n + j] = 1;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            if (leq[i * n + j] && leq[j * n + i])
                throw Error(ErrorKind::BadInput, "cover pairs contain a cycle");
    return {n, std::move(leq)};
}

} // namespace difflat
