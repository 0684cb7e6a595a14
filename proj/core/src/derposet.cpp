#include <difflat/derposet.hpp>
#include <difflat/error.hpp>

#include <algorithm>
#include <random>

namespace difflat {

using std::optional;
using std::size_t;
using std::string;
using std::vector;

auto build_do_poset(const DerivationSet & set) -> FinPoset
{
    auto m = set.size();
    vector<char> leq(m * m, 0);
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j)
            leq[i * m + j] = set[i].map().precedes(set[j].map()) ? 1 : 0;
    return {m, std::move(leq)};
}

namespace {
    auto same_lattice(const OperatorMap & d, const OperatorMap & e) -> void
    {
        if (! (d.lattice() == e.lattice()))
            throw Error(ErrorKind::DifferentLattices, "operators live on different lattices");
    }

    template <typename F>
    auto combine(const OperatorMap & d, const OperatorMap & e, F f) -> OperatorMap
    {
        same_lattice(d, e);
        vector<Elem> image(d.size());
        for (Elem x = 0; x < d.size(); ++x)
            image[x] = f(x);
        return {d.lattice(), std::move(image)};
    }
} // namespace

auto pointwise_join(const OperatorMap & d, const OperatorMap & e) -> OperatorMap
{
    const auto & l = d.lattice();
    return combine(d, e, [&](Elem x) { return l.join(d(x), e(x)); });
}

auto pointwise_meet(const OperatorMap & d, const OperatorMap & e) -> OperatorMap
{
    const auto & l = d.lattice();
    return combine(d, e, [&](Elem x) { return l.meet(d(x), e(x)); });
}

auto cup(const OperatorMap & d, const OperatorMap & e) -> OperatorMap
{
    const auto & l = d.lattice();
    auto u = l.join(d(l.top()), e(l.top()));
    return combine(d, e, [&](Elem x) { return l.meet(x, u); });
}

auto compose(const OperatorMap & d, const OperatorMap & e) -> OperatorMap
{
    return combine(d, e, [&](Elem x) { return d(e(x)); });
}

auto op_algebra(const OperatorMap & d, const OperatorMap & e) -> OpAlgebraResult
{
    OpAlgebraResult r{pointwise_join(d, e), pointwise_meet(d, e), cup(d, e), compose(d, e)};
    r.join_is_derivation = is_derivation(r.pointwise_join);
    r.meet_is_derivation = is_derivation(r.pointwise_meet);
    r.cup_is_derivation = is_derivation(r.cup);
    r.compose_is_derivation = is_derivation(r.compose);
    return r;
}

namespace {
    template <typename F>
    auto check_closed(const DerivationSet & set, F combine_fn) -> ClosureCheck
    {
        for (size_t i = 0; i < set.size(); ++i)
            for (size_t j = i + 1; j < set.size(); ++j)
                if (! is_derivation(combine_fn(set[i].map(), set[j].map())))
                    return {false, std::pair{i, j}};
        return {};
    }
} // namespace

auto check_join_closed(const DerivationSet & set) -> ClosureCheck
{
    return check_closed(set, [](const OperatorMap & a, const OperatorMap & b) { return pointwise_join(a, b); });
}

auto check_meet_closed(const DerivationSet & set) -> ClosureCheck
{
    return check_closed(set, [](const OperatorMap & a, const OperatorMap & b) { return pointwise_meet(a, b); });
}

auto to_string(CheckMode mode) -> string
{
    switch (mode) {
    case CheckMode::Exhaustive: return "exhaustive";
    case CheckMode::Sampled: return "sampled";
    case CheckMode::NotApplicable: return "not-applicable";
    }
    return "unknown";
}

namespace {
    struct SubsetJoin {
        const DerivationSet & set;
        const FinLattice & lattice;
        FamilyJoinReport & report;
        vector<size_t> chosen;

        auto test(const vector<Elem> & image) -> bool
        {
            ++report.subsets_checked;
            if (is_derivation(OperatorMap(lattice, image)))
                return true;
            report.closed = false;
            report.violation = chosen;
            return false;
        }

        // Every subset of {i, ..., m-1} added to the current one.
        auto all_from(size_t i, const vector<Elem> & acc) -> bool
        {
            if (i == set.size())
                return test(acc);
            if (! all_from(i + 1, acc))
                return false;
            auto next = acc;
            for (Elem x = 0; x < next.size(); ++x)
                next[x] = lattice.join(next[x], set[i](x));
            chosen.push_back(i);
            auto ok = all_from(i + 1, next);
            chosen.pop_back();
            return ok;
        }

        auto join_of(const vector<size_t> & members) -> vector<Elem>
        {
            vector<Elem> acc(lattice.size(), lattice.bottom());
            for (auto i : members)
                for (Elem x = 0; x < acc.size(); ++x)
                    acc[x] = lattice.join(acc[x], set[i](x));
            return acc;
        }

        auto sample(const vector<size_t> & members) -> bool
        {
            chosen = members;
            return test(join_of(members));
        }
    };
} // namespace

auto family_join_closed(const DerivationSet & set, std::uint64_t seed) -> FamilyJoinReport
{
    const auto & l = set.lattice();
    FamilyJoinReport report;
    if (! l.is_distributive())
        return report;
    report.closed = true;
    SubsetJoin s{set, l, report, {}};
    auto m = set.size();
    if (m <= 20) {
        report.mode = CheckMode::Exhaustive;
        s.all_from(0, vector<Elem>(l.size(), l.bottom()));
        return report;
    }

    report.mode = CheckMode::Sampled;
    if (! s.sample({}))
        return report;
    for (size_t i = 0; i < m; ++i)
        for (size_t j = i + 1; j < m; ++j)
            if (! s.sample({i, j}))
                return report;
    if (m <= 120)
        for (size_t i = 0; i < m; ++i)
            for (size_t j = i + 1; j < m; ++j)
                for (size_t k = j + 1; k < m; ++k)
                    if (! s.sample({i, j, k}))
                        return report;
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(0.5);
    for (int round = 0; round < 20000; ++round) {
        vector<size_t> members;
        for (size_t i = 0; i < m; ++i)
            if (coin(rng))
                members.push_back(i);
        if (! s.sample(members))
            return report;
    }
    return report;
}

auto ido_lattice_iso(const DerivationSet & set) -> IdoWitness
{
    const auto & l = set.lattice();
    auto n = l.size();
    IdoWitness w;
    vector<optional<size_t>> by_top(n);
    for (size_t i = 0; i < set.size(); ++i) {
        if (! set[i].isotone())
            continue;
        auto t = set[i].top_value();
        if (by_top[t])
            throw Error(ErrorKind::IsoFailure, "two isotone derivations share d(1) = " + l.label(t));
        by_top[t] = i;
    }
    for (Elem u = 0; u < n; ++u) {
        if (! by_top[u])
            throw Error(ErrorKind::IsoFailure, "no isotone derivation with d(1) = " + l.label(u));
        w.derivations.push_back(*by_top[u]);
        w.top_values.push_back(u);
    }
    for (Elem u = 0; u < n; ++u)
        for (Elem v = 0; v < n; ++v) {
            const auto & du = set[*by_top[u]];
            const auto & dv = set[*by_top[v]];
            auto c = cup(du.map(), dv.map());
            auto mt = pointwise_meet(du.map(), dv.map());
            auto ci = set.index_of(c.image());
            auto mi = set.index_of(mt.image());
            if (! ci || *ci != *by_top[l.join(u, v)] || ! mi || *mi != *by_top[l.meet(u, v)])
                throw Error(ErrorKind::IsoFailure,
                    "d(1) does not carry the operations at " + l.label(u) + ", " + l.label(v));
        }
    return w;
}

auto ChiReport::ok() const -> bool
{
    return all_derivations && bijective && join_law && meet_law && compose_law && upward_closed && filter.value_or(true);
}

auto chi_sublattice_check(const DerivationSet & set) -> ChiReport
{
    const auto & l = set.lattice();
    auto n = l.size();
    ChiReport r;
    vector<OperatorMap> maps;
    for (Elem u = 0; u < n; ++u) {
        vector<Elem> image(n);
        for (Elem x = 0; x < n; ++x)
            image[x] = x == l.top() ? u : x;
        maps.emplace_back(l, std::move(image));
    }

    r.all_derivations = true;
    for (auto & m : maps) {
        auto idx = set.index_of(m.image());
        if (! is_derivation(m) || ! idx) {
            r.all_derivations = false;
            r.members.clear();
            break;
        }
        r.members.push_back(*idx);
    }

    r.bijective = true;
    for (Elem u = 0; u < n; ++u)
        for (Elem v = u + 1; v < n; ++v)
            if (maps[u] == maps[v])
                r.bijective = false;

    r.join_law = r.meet_law = r.compose_law = true;
    for (Elem u = 0; u < n; ++u)
        for (Elem v = 0; v < n; ++v) {
            if (! (pointwise_join(maps[u], maps[v]) == maps[l.join(u, v)]))
                r.join_law = false;
            if (! (pointwise_meet(maps[u], maps[v]) == maps[l.meet(u, v)]))
                r.meet_law = false;
            if (v != l.top() && ! (compose(maps[u], maps[v]) == maps[v]))
                r.compose_law = false;
        }

    if (! r.all_derivations)
        return r;

    vector<char> member(set.size(), 0);
    for (auto i : r.members)
        member[i] = 1;
    r.upward_closed = true;
    for (size_t j = 0; j < set.size() && r.upward_closed; ++j) {
        if (member[j])
            continue;
        for (auto i : r.members)
            if (set[i].map().precedes(set[j].map())) {
                r.upward_closed = false;
                break;
            }
    }

    auto poset = build_do_poset(set);
    if (poset_is_lattice(poset).is_lattice) {
        auto t = poset_lattice_tables(poset);
        bool meet_closed = true;
        for (auto i : r.members)
            for (auto j : r.members)
                if (! member[t.m(i, j)])
                    meet_closed = false;
        r.filter = r.upward_closed && meet_closed;
    }
    return r;
}

auto distributivity_transfer(const DerivationSet & set) -> TransferReport
{
    auto poset = build_do_poset(set);
    auto t = poset_lattice_tables(poset);
    TransferReport r;
    r.lattice_distributive = set.lattice().is_distributive();
    r.do_distributive = true;
    auto m = set.size();
    for (size_t x = 0; x < m && r.do_distributive; ++x)
        for (size_t y = 0; y < m && r.do_distributive; ++y)
            for (size_t z = 0; z < m; ++z)
                if (t.m(x, t.j(y, z)) != t.j(t.m(x, y), t.m(x, z))) {
                    r.do_distributive = false;
                    r.violating_triple = std::array{x, y, z};
                    break;
                }
    r.implication_holds = ! r.do_distributive || r.lattice_distributive;
    return r;
}

auto do_chain_criterion(const DerivationSet & set) -> DoChainReport
{
    const auto & l = set.lattice();
    return {build_do_poset(set).is_chain(), l.is_chain() && l.size() <= 3};
}

auto conjecture_probe(const DerivationSet & set, string canonical_key) -> ConjectureReport
{
    ConjectureReport r;
    r.order = set.lattice().size();
    r.canonical_key = std::move(canonical_key);
    r.do_size = set.size();
    auto poset = build_do_poset(set);
    auto check = poset_is_lattice(poset);
    r.do_is_lattice = check.is_lattice;
    if (check.certificate) {
        auto & c = *check.certificate;
        auto img = [&](size_t i) { return vector<Elem>(set[i].image().begin(), set[i].image().end()); };
        r.certificate_images.push_back(img(c.x));
        r.certificate_images.push_back(img(c.y));
        for (auto b : c.bounds)
            r.certificate_images.push_back(img(b));
        r.certificate = std::move(c);
    }
    r.do_poset_key = poset_invariant_key(poset);
    return r;
}

auto conjecture_probe(const FinLattice & lattice) -> ConjectureReport
{
    return conjecture_probe(enumerate_derivations(lattice), canonical_key(lattice));
}

} // namespace difflat
