#include <difflat/error.hpp>
#include <difflat/lattice.hpp>

namespace difflat {

using std::size_t;
using std::string;
using std::vector;

namespace {
    auto chain_labels(size_t n) -> vector<string>
    {
        if (n == 1)
            return {"0"};
        if (n == 3)
            return {"0", "u", "1"};
        if (n == 4)
            return {"0", "u", "v", "1"};
        vector<string> labels{"0"};
        for (size_t i = 1; i + 1 < n; ++i)
            labels.push_back("a" + std::to_string(i));
        labels.emplace_back("1");
        return labels;
    }

    auto boolean_label(size_t k, size_t mask) -> string
    {
        if (mask == 0)
            return "0";
        if (mask + 1 == (size_t{1} << k))
            return "1";
        if (k == 3) {
            // atoms a, b, c; coatoms u = a|b, v = a|c, w = b|c
            static const char * names[] = {"0", "a", "b", "u", "c", "v", "w", "1"};
            return names[mask];
        }
        string s = "{";
        bool first = true;
        for (size_t i = 0; i < k; ++i)
            if (mask & (size_t{1} << i)) {
                if (! first)
                    s += ",";
                s += std::to_string(i + 1);
                first = false;
            }
        return s + "}";
    }
} // namespace

auto make_chain(size_t n) -> FinLattice
{
    if (n < 1)
        throw Error(ErrorKind::BadSize, "chain needs n >= 1");
    vector<Cover> covers;
    for (Elem i = 0; i + 1 < n; ++i)
        covers.emplace_back(i, i + 1);
    return lattice_from_covers(n, covers, "C_" + std::to_string(n), chain_labels(n));
}

auto make_mn(size_t n) -> FinLattice
{
    if (n < 3)
        throw Error(ErrorKind::BadSize, "M_n needs n >= 3");
    vector<Cover> covers;
    vector<string> labels{"0"};
    auto top = static_cast<Elem>(n - 1);
    for (Elem b = 1; b < top; ++b) {
        covers.emplace_back(0, b);
        covers.emplace_back(b, top);
        labels.push_back("b" + std::to_string(b));
    }
    labels.emplace_back("1");
    return lattice_from_covers(n, covers, "M_" + std::to_string(n), std::move(labels));
}

auto make_boolean(size_t k) -> FinLattice
{
    if (k > 6)
        throw Error(ErrorKind::BadSize, "Boolean lattice limited to k <= 6");
    size_t n = size_t{1} << k;
    vector<Cover> covers;
    vector<string> labels;
    for (size_t mask = 0; mask < n; ++mask) {
        labels.push_back(boolean_label(k, mask));
        for (size_t i = 0; i < k; ++i)
            if (! (mask & (size_t{1} << i)))
                covers.emplace_back(static_cast<Elem>(mask), static_cast<Elem>(mask | (size_t{1} << i)));
    }
    return lattice_from_covers(n, covers, "B_" + std::to_string(n), std::move(labels));
}

auto make_n5() -> FinLattice
{
    const vector<Cover> covers{{0, 1}, {1, 2}, {2, 4}, {0, 3}, {3, 4}};
    return lattice_from_covers(5, covers, "N_5", {"0", "v", "u", "w", "1"});
}

auto dual(const FinLattice & lattice) -> FinLattice
{
    vector<Cover> covers;
    for (auto [lo, hi] : lattice.covers())
        covers.emplace_back(hi, lo);
    auto labels = vector<string>(lattice.labels().begin(), lattice.labels().end());
    auto name = lattice.name().empty() ? string{} : lattice.name() + "^op";
    return lattice_from_covers(lattice.size(), covers, std::move(name), lattice.has_custom_labels() ? std::move(labels) : vector<string>{});
}

auto product(const FinLattice & left, const FinLattice & right) -> FinLattice
{
    auto n1 = left.size(), n2 = right.size();
    auto id = [&](size_t a, size_t b) { return static_cast<Elem>(a * n2 + b); };
    vector<Cover> covers;
    for (auto [lo, hi] : left.covers())
        for (size_t b = 0; b < n2; ++b)
            covers.emplace_back(id(lo, b), id(hi, b));
    for (auto [lo, hi] : right.covers())
        for (size_t a = 0; a < n1; ++a)
            covers.emplace_back(id(a, lo), id(a, hi));
    vector<string> labels;
    for (size_t a = 0; a < n1; ++a)
        for (size_t b = 0; b < n2; ++b)
            labels.push_back("(" + left.label(static_cast<Elem>(a)) + "," + right.label(static_cast<Elem>(b)) + ")");
    string name;
    if (! left.name().empty() && ! right.name().empty())
        name = left.name() + "x" + right.name();
    return lattice_from_covers(n1 * n2, covers, std::move(name), std::move(labels));
}

auto relabel(const FinLattice & lattice, const Permutation & f) -> FinLattice
{
    if (f.size() != lattice.size() || ! f.is_bijection())
        throw Error(ErrorKind::BadInput, "relabel needs a bijection on the lattice's ids");
    vector<Cover> covers;
    for (auto [lo, hi] : lattice.covers())
        covers.emplace_back(f(lo), f(hi));
    vector<string> labels;
    if (lattice.has_custom_labels()) {
        labels.resize(lattice.size());
        for (Elem x = 0; x < lattice.size(); ++x)
            labels[f(x)] = lattice.label(x);
    }
    return lattice_from_covers(lattice.size(), covers, lattice.name(), std::move(labels));
}

} // namespace difflat
