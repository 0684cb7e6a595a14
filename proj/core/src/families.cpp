#include <difflat/derivation.hpp>
#include <difflat/error.hpp>

namespace difflat {

using std::optional;
using std::vector;

namespace {
    auto check_elem(const FinLattice & lattice, Elem u) -> void
    {
        if (u >= lattice.size())
            throw Error(ErrorKind::BadInput, "element " + std::to_string(u) + " out of range");
    }

    template <typename F>
    auto build_map(const FinLattice & lattice, F f) -> OperatorMap
    {
        vector<Elem> image(lattice.size());
        for (Elem x = 0; x < lattice.size(); ++x)
            image[x] = f(x);
        return {lattice, std::move(image)};
    }

    // Family members are checked like any other map; a failure here is a bug.
    auto must_validate(OperatorMap op, const char * what) -> Derivation
    {
        auto d = Derivation::validate(std::move(op));
        if (! d)
            throw Error(ErrorKind::Internal, std::string(what) + " produced a non-derivation");
        return *d;
    }
} // namespace

auto inner(const FinLattice & lattice, Elem u) -> Derivation
{
    check_elem(lattice, u);
    return must_validate(build_map(lattice, [&](Elem x) { return lattice.meet(x, u); }), "inner");
}

auto chi(const FinLattice & lattice, Elem u) -> Derivation
{
    check_elem(lattice, u);
    return must_validate(build_map(lattice, [&](Elem x) { return x == lattice.top() ? u : x; }), "chi");
}

auto eta(const FinLattice & lattice, Elem u) -> Derivation
{
    check_elem(lattice, u);
    return must_validate(build_map(lattice, [&](Elem x) { return lattice.leq(u, x) ? u : x; }), "eta");
}

auto lambda_cut_map(const FinLattice & lattice, Elem u) -> OperatorMap
{
    check_elem(lattice, u);
    return build_map(lattice, [&](Elem x) { return lattice.leq(x, u) ? x : lattice.bottom(); });
}

auto lambda_cut_condition(const FinLattice & lattice, Elem u) -> bool
{
    check_elem(lattice, u);
    for (Elem x = 0; x < lattice.size(); ++x)
        for (Elem y = 0; y < lattice.size(); ++y) {
            if (lattice.leq(x, u) || lattice.leq(y, u))
                continue;
            auto m = lattice.meet(x, y);
            if (lattice.leq(m, u) && m != lattice.bottom())
                return false;
        }
    return true;
}

auto lambda_cut(const FinLattice & lattice, Elem u) -> optional<Derivation>
{
    auto d = Derivation::validate(lambda_cut_map(lattice, u));
    if (d.has_value() != lambda_cut_condition(lattice, u))
        throw Error(ErrorKind::Internal, "cut map membership disagrees with its pair condition");
    return d;
}

auto lambda_band_map(const FinLattice & lattice, Elem v, Elem u) -> OperatorMap
{
    check_elem(lattice, v);
    check_elem(lattice, u);
    return build_map(lattice, [&](Elem x) { return lattice.leq(x, u) ? x : v; });
}

auto lambda_band(const FinLattice & lattice, Elem v, Elem u) -> Derivation
{
    check_elem(lattice, v);
    check_elem(lattice, u);
    if (! lattice.is_chain())
        throw Error(ErrorKind::NotAChain, "the band map is defined on chains only");
    if (! lattice.leq(v, u))
        throw Error(ErrorKind::BadPair, "band map needs v <= u");
    return must_validate(lambda_band_map(lattice, v, u), "lambda_band");
}

auto lower_top(const Derivation & d, Elem u) -> Derivation
{
    const auto & l = d.lattice();
    check_elem(l, u);
    if (! l.leq(u, d.top_value()))
        throw Error(ErrorKind::BadBound, "new top value must lie below d(1)");
    vector<Elem> image(d.image().begin(), d.image().end());
    image[l.top()] = u;
    return must_validate(OperatorMap(l, std::move(image)), "lower_top");
}

} // namespace difflat
