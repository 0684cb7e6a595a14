#include <difflat/classification.hpp>
#include <difflat/error.hpp>

#include <algorithm>

namespace difflat {

using std::optional;
using std::size_t;
using std::vector;

auto conjugate(const Derivation & d, const Permutation & f) -> OperatorMap
{
    auto n = d.lattice().size();
    vector<Elem> image(n);
    // (f d f⁻¹)(f(x)) = f(d(x))
    for (Elem x = 0; x < n; ++x)
        image[f(x)] = f(d(x));
    return {d.lattice(), std::move(image)};
}

auto are_isomorphic_derivations(const Derivation & d, const Derivation & other) -> optional<Permutation>
{
    if (! (d.lattice() == other.lattice()))
        throw Error(ErrorKind::DifferentLattices, "derivations live on different lattices");
    for (auto & f : automorphisms(d.lattice()))
        if (conjugate(d, f) == other.map())
            return f;
    return std::nullopt;
}

IsoClassification::IsoClassification(vector<DerivationClass> classes, vector<size_t> class_of) :
    _classes(std::move(classes)),
    _class_of(std::move(class_of)),
    _slot(_class_of.size(), 0)
{
    for (auto & c : _classes)
        for (size_t i = 0; i < c.members.size(); ++i)
            _slot[c.members[i]] = i;
}

auto IsoClassification::witness(size_t i, size_t j) const -> optional<Permutation>
{
    if (_class_of[i] != _class_of[j])
        return std::nullopt;
    const auto & c = _classes[_class_of[i]];
    // rep -> j composed with (rep -> i)⁻¹
    return compose(c.witnesses[_slot[j]], c.witnesses[_slot[i]].inverse());
}

auto classify(const DerivationSet & set) -> IsoClassification
{
    auto group = automorphisms(set.lattice());
    auto m = set.size();
    constexpr auto none = ~size_t{0};
    vector<size_t> orbit_of(m, none);
    vector<DerivationClass> classes;

    // Items are sorted, so the first unvisited index is the least member of its orbit.
    for (size_t seed = 0; seed < m; ++seed) {
        if (orbit_of[seed] != none)
            continue;
        DerivationClass c;
        c.representative = seed;
        c.invariant = {set[seed].fix_points().size(), set[seed].top_value() == set.lattice().bottom()};
        vector<std::pair<size_t, Permutation>> found;
        for (const auto & f : group) {
            auto image = conjugate(set[seed], f);
            if (! is_derivation(image))
                throw Error(ErrorKind::Internal, "conjugate of a derivation is not a derivation");
            auto idx = set.index_of(image.image());
            if (! idx)
                throw Error(ErrorKind::Internal, "conjugate missing from the derivation set");
            if (orbit_of[*idx] == none) {
                orbit_of[*idx] = classes.size();
                found.emplace_back(*idx, f);
            }
        }
        std::sort(found.begin(), found.end(), [](auto & a, auto & b) { return a.first < b.first; });
        for (auto & [idx, f] : found) {
            c.members.push_back(idx);
            c.witnesses.push_back(std::move(f));
        }
        classes.push_back(std::move(c));
    }

    vector<size_t> order(classes.size());
    for (size_t i = 0; i < order.size(); ++i)
        order[i] = i;
    std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
        const auto & ca = classes[a];
        const auto & cb = classes[b];
        if (ca.invariant != cb.invariant)
            return ca.invariant < cb.invariant;
        return ca.representative < cb.representative;
    });
    vector<DerivationClass> sorted;
    vector<size_t> class_of(m, 0);
    for (auto i : order) {
        for (auto member : classes[i].members)
            class_of[member] = sorted.size();
        sorted.push_back(std::move(classes[i]));
    }
    return {std::move(sorted), std::move(class_of)};
}

auto mn_class_predicate(const Derivation & d, const Derivation & other) -> bool
{
    if (! is_mn_shape(d.lattice()) || ! is_mn_shape(other.lattice()))
        throw Error(ErrorKind::WrongShape, "predicate applies to M_n lattices only");
    auto bot = d.lattice().bottom();
    return d.fix_points().size() == other.fix_points().size()
        && (d.top_value() == bot) == (other.top_value() == other.lattice().bottom());
}

auto class_lower_bound(const FinLattice & lattice) -> size_t
{
    switch (lattice.size()) {
    case 1: return 1;
    case 2: return 2;
    case 3: return 4;
    default: return 5;
    }
}

auto chain_class_count(size_t n) -> std::uint64_t
{
    return chain_derivation_count(n);
}

auto mn_class_count(size_t n) -> std::uint64_t
{
    if (n < 3)
        throw Error(ErrorKind::BadSize, "M_n needs n >= 3");
    return 2 * (n - 1);
}

} // namespace difflat
