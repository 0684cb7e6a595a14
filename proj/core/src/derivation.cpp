#include <difflat/derivation.hpp>
#include <difflat/error.hpp>

#include <algorithm>

namespace difflat {

using std::optional;
using std::size_t;
using std::string;
using std::vector;

OperatorMap::OperatorMap(FinLattice lattice, vector<Elem> image) :
    _lattice(std::move(lattice)),
    _image(std::move(image))
{
    if (_image.size() != _lattice.size())
        throw Error(ErrorKind::BadInput,
            "map has " + std::to_string(_image.size()) + " values for a lattice of " + std::to_string(_lattice.size()));
    for (auto v : _image)
        if (v >= _lattice.size())
            throw Error(ErrorKind::BadInput, "map value " + std::to_string(v) + " out of range");
}

auto OperatorMap::zero(const FinLattice & lattice) -> OperatorMap
{
    return {lattice, vector<Elem>(lattice.size(), lattice.bottom())};
}

auto OperatorMap::identity(const FinLattice & lattice) -> OperatorMap
{
    return {lattice, Permutation::identity(lattice.size()).image};
}

auto OperatorMap::one(const FinLattice & lattice) -> OperatorMap
{
    return {lattice, vector<Elem>(lattice.size(), lattice.top())};
}

auto OperatorMap::precedes(const OperatorMap & other) const -> bool
{
    for (Elem x = 0; x < _image.size(); ++x)
        if (! _lattice.leq(_image[x], other._image[x]))
            return false;
    return true;
}

auto is_derivation(const OperatorMap & op) -> bool
{
    const auto & l = op.lattice();
    auto n = l.size();
    for (Elem x = 0; x < n; ++x)
        for (Elem y = 0; y < n; ++y)
            if (op(l.meet(x, y)) != l.join(l.meet(op(x), y), l.meet(x, op(y))))
                return false;
    return true;
}

auto find_violation(const OperatorMap & op) -> optional<Violation>
{
    const auto & l = op.lattice();
    auto n = l.size();
    using A = Violation::Axiom;
    if (op(l.bottom()) != l.bottom())
        return Violation{A::ZeroFixed, l.bottom(), l.bottom(), op(l.bottom()), l.bottom()};
    for (Elem x = 0; x < n; ++x)
        if (! l.leq(op(x), x))
            return Violation{A::Contraction, x, x, op(x), x};
    for (Elem x = 0; x < n; ++x)
        for (Elem y = 0; y < n; ++y) {
            auto lhs = op(l.meet(x, y));
            auto rhs = l.join(l.meet(op(x), y), l.meet(x, op(y)));
            if (lhs != rhs)
                return Violation{A::Leibniz, x, y, lhs, rhs};
        }
    return std::nullopt;
}

auto describe(const Violation & v, const FinLattice & lattice) -> string
{
    auto name = [&](Elem e) { return lattice.label(e); };
    switch (v.axiom) {
    case Violation::Axiom::ZeroFixed:
        return "d(0) = 0 fails: d(" + name(v.x) + ") = " + name(v.lhs);
    case Violation::Axiom::Contraction:
        return "d(x) <= x fails at x = " + name(v.x) + ": d(x) = " + name(v.lhs);
    case Violation::Axiom::Leibniz:
        break;
    }
    return "Leibniz identity fails at x = " + name(v.x) + ", y = " + name(v.y) + ": d(x∧y) = " + name(v.lhs)
        + " but (d(x)∧y) ∨ (x∧d(y)) = " + name(v.rhs);
}

Derivation::Derivation(OperatorMap op) :
    _map(std::move(op))
{
    const auto & l = _map.lattice();
    _fix.assign(_map.image().begin(), _map.image().end());
    std::sort(_fix.begin(), _fix.end());
    _fix.erase(std::unique(_fix.begin(), _fix.end()), _fix.end());
    _top_value = _map(l.top());
    _isotone = true;
    for (Elem x = 0; x < l.size() && _isotone; ++x)
        _isotone = _map(x) == l.meet(x, _top_value);
}

auto Derivation::validate(OperatorMap op) -> optional<Derivation>
{
    if (! is_derivation(op))
        return std::nullopt;
    return Derivation(std::move(op));
}

auto Derivation::from(OperatorMap op) -> Derivation
{
    if (auto v = find_violation(op))
        throw Error(ErrorKind::NotADerivation, describe(*v, op.lattice()));
    return Derivation(std::move(op));
}

auto Derivation::from_image(const FinLattice & lattice, vector<Elem> image) -> Derivation
{
    return from(OperatorMap(lattice, std::move(image)));
}

auto DerivationHash::operator()(const Derivation & d) const noexcept -> size_t
{
    size_t h = 1469598103934665603ULL;
    for (auto v : d.image())
        h = (h ^ v) * 1099511628211ULL;
    return h;
}

auto is_meet_translation(const OperatorMap & op) -> bool
{
    const auto & l = op.lattice();
    for (Elem x = 0; x < l.size(); ++x)
        for (Elem y = 0; y < l.size(); ++y)
            if (op(l.meet(x, y)) != l.meet(x, op(y)))
                return false;
    return true;
}

auto is_join_preserving(const OperatorMap & op) -> bool
{
    const auto & l = op.lattice();
    for (Elem x = 0; x < l.size(); ++x)
        for (Elem y = 0; y < l.size(); ++y)
            if (op(l.join(x, y)) != l.join(op(x), op(y)))
                return false;
    return true;
}

auto is_meet_preserving(const OperatorMap & op) -> bool
{
    const auto & l = op.lattice();
    for (Elem x = 0; x < l.size(); ++x)
        for (Elem y = 0; y < l.size(); ++y)
            if (op(l.meet(x, y)) != l.meet(op(x), op(y)))
                return false;
    return true;
}

auto is_inner(const Derivation & d) -> bool
{
    const auto & l = d.lattice();
    for (Elem x = 0; x < l.size(); ++x)
        if (d(x) != l.meet(x, d.top_value()))
            return false;
    return true;
}

auto is_isotone(const Derivation & d) -> bool
{
    const auto & l = d.lattice();
    bool monotone = true;
    for (Elem x = 0; x < l.size() && monotone; ++x)
        for (Elem y = 0; y < l.size() && monotone; ++y)
            if (l.leq(x, y) && ! l.leq(d(x), d(y)))
                monotone = false;
    if (monotone != is_inner(d))
        throw Error(ErrorKind::Internal, "monotonicity and the inner-derivation test disagree");
    return monotone;
}

} // namespace difflat
