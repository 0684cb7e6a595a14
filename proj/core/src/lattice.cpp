#include <difflat/error.hpp>
#include <difflat/lattice.hpp>

#include <algorithm>
#include <numeric>

namespace difflat {

using std::optional;
using std::size_t;
using std::span;
using std::string;
using std::vector;

auto Permutation::identity(size_t n) -> Permutation
{
    Permutation p;
    p.image.resize(n);
    std::iota(p.image.begin(), p.image.end(), Elem{0});
    return p;
}

auto Permutation::inverse() const -> Permutation
{
    Permutation p;
    p.image.resize(image.size());
    for (size_t x = 0; x < image.size(); ++x)
        p.image[image[x]] = static_cast<Elem>(x);
    return p;
}

auto Permutation::is_identity() const -> bool
{
    for (size_t x = 0; x < image.size(); ++x)
        if (image[x] != x)
            return false;
    return true;
}

auto Permutation::is_bijection() const -> bool
{
    vector<bool> seen(image.size(), false);
    for (auto y : image) {
        if (y >= image.size() || seen[y])
            return false;
        seen[y] = true;
    }
    return true;
}

auto compose(const Permutation & f, const Permutation & g) -> Permutation
{
    Permutation h;
    h.image.resize(g.size());
    for (size_t x = 0; x < g.size(); ++x)
        h.image[x] = f(g(static_cast<Elem>(x)));
    return h;
}

struct detail::LatticeData {
    size_t n = 0;
    vector<Elem> meet, join;
    vector<char> leq;
    Elem bottom = 0, top = 0;
    vector<Cover> covers;
    vector<vector<Elem>> lower, upper;
    vector<size_t> height, depth, down_size, up_size;
    vector<Elem> linear_extension;
    bool distributive = false, modular = false, chain = false;
    string name;
    vector<string> labels;
    bool custom_labels = false;
};

namespace {
    enum class BuildStatus { Ok, BadSize, BadInput, Cyclic, NotBounded, NotALattice };

    struct BuildResult {
        BuildStatus status = BuildStatus::Ok;
        string detail;
    };

    auto fill_predicates(detail::LatticeData &) -> void;

    // Computes everything but names/labels. Never throws on bad input.
    template <typename DataT>
    auto build(DataT & d, size_t n, span<const Cover> covers) -> BuildResult
    {
        if (n == 0)
            return {BuildStatus::BadSize, "a lattice needs at least one element"};
        for (auto [lo, hi] : covers) {
            if (lo >= n || hi >= n)
                return {BuildStatus::BadInput, "cover (" + std::to_string(lo) + "," + std::to_string(hi) + ") out of range"};
            if (lo == hi)
                return {BuildStatus::Cyclic, "self-cover on " + std::to_string(lo)};
        }

        d.n = n;
        vector<vector<Elem>> succ(n);
        vector<size_t> indegree(n, 0);
        for (auto [lo, hi] : covers) {
            succ[lo].push_back(hi);
            ++indegree[hi];
        }

        // Kahn; a leftover vertex means a cycle.
        vector<Elem> topo;
        topo.reserve(n);
        for (Elem x = 0; x < n; ++x)
            if (indegree[x] == 0)
                topo.push_back(x);
        for (size_t i = 0; i < topo.size(); ++i)
            for (auto s : succ[topo[i]])
                if (--indegree[s] == 0)
                    topo.push_back(s);
        if (topo.size() != n)
            return {BuildStatus::Cyclic, "cover relation contains a cycle"};

        d.leq.assign(n * n, 0);
        for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
            auto x = *it;
            d.leq[x * n + x] = 1;
            for (auto s : succ[x])
                for (size_t y = 0; y < n; ++y)
                    if (d.leq[s * n + y])
                        d.leq[x * n + y] = 1;
        }
        auto leq = [&](size_t a, size_t b) { return d.leq[a * n + b] != 0; };

        optional<Elem> bottom, top;
        for (Elem x = 0; x < n; ++x) {
            bool below_all = true, above_all = true;
            for (Elem y = 0; y < n; ++y) {
                below_all = below_all && leq(x, y);
                above_all = above_all && leq(y, x);
            }
            if (below_all)
                bottom = x;
            if (above_all)
                top = x;
        }
        if (! bottom)
            return {BuildStatus::NotBounded, "no least element"};
        if (! top)
            return {BuildStatus::NotBounded, "no greatest element"};
        d.bottom = *bottom;
        d.top = *top;

        d.meet.assign(n * n, 0);
        d.join.assign(n * n, 0);
        for (Elem x = 0; x < n; ++x)
            for (Elem y = x; y < n; ++y) {
                optional<Elem> glb, lub;
                for (Elem z = 0; z < n; ++z) {
                    if (leq(z, x) && leq(z, y)) {
                        bool greatest = true;
                        for (Elem w = 0; w < n && greatest; ++w)
                            if (leq(w, x) && leq(w, y) && ! leq(w, z))
                                greatest = false;
                        if (greatest)
                            glb = z;
                    }
                    if (leq(x, z) && leq(y, z)) {
                        bool least = true;
                        for (Elem w = 0; w < n && least; ++w)
                            if (leq(x, w) && leq(y, w) && ! leq(z, w))
                                least = false;
                        if (least)
                            lub = z;
                    }
                }
                if (! glb || ! lub)
                    return {BuildStatus::NotALattice,
                        "elements " + std::to_string(x) + " and " + std::to_string(y) + " have no " + (glb ? "least upper" : "greatest lower") + " bound"};
                d.meet[x * n + y] = d.meet[y * n + x] = *glb;
                d.join[x * n + y] = d.join[y * n + x] = *lub;
            }

        d.covers.clear();
        d.lower.assign(n, {});
        d.upper.assign(n, {});
        for (Elem x = 0; x < n; ++x)
            for (Elem y = 0; y < n; ++y) {
                if (x == y || ! leq(x, y))
                    continue;
                bool cover = true;
                for (Elem z = 0; z < n && cover; ++z)
                    if (z != x && z != y && leq(x, z) && leq(z, y))
                        cover = false;
                if (cover) {
                    d.covers.emplace_back(x, y);
                    d.lower[y].push_back(x);
                    d.upper[x].push_back(y);
                }
            }

        d.height.assign(n, 0);
        d.depth.assign(n, 0);
        for (auto x : topo)
            for (auto y : d.upper[x])
                d.height[y] = std::max(d.height[y], d.height[x] + 1);
        for (auto it = topo.rbegin(); it != topo.rend(); ++it)
            for (auto y : d.lower[*it])
                d.depth[y] = std::max(d.depth[y], d.depth[*it] + 1);

        d.down_size.assign(n, 0);
        d.up_size.assign(n, 0);
        for (Elem x = 0; x < n; ++x)
            for (Elem y = 0; y < n; ++y)
                if (leq(x, y)) {
                    ++d.up_size[x];
                    ++d.down_size[y];
                }

        d.linear_extension.resize(n);
        std::iota(d.linear_extension.begin(), d.linear_extension.end(), Elem{0});
        std::stable_sort(d.linear_extension.begin(), d.linear_extension.end(),
            [&](Elem a, Elem b) { return d.height[a] < d.height[b]; });

        fill_predicates(d);
        return {};
    }

    auto fill_predicates(detail::LatticeData & d) -> void
    {
        auto n = d.n;
        auto m = [&](size_t a, size_t b) { return d.meet[a * n + b]; };
        auto j = [&](size_t a, size_t b) { return d.join[a * n + b]; };
        auto leq = [&](size_t a, size_t b) { return d.leq[a * n + b] != 0; };

        d.chain = true;
        for (size_t x = 0; x < n && d.chain; ++x)
            for (size_t y = 0; y < n && d.chain; ++y)
                if (! leq(x, y) && ! leq(y, x))
                    d.chain = false;

        d.distributive = true;
        d.modular = true;
        for (size_t x = 0; x < n; ++x)
            for (size_t y = 0; y < n; ++y)
                for (size_t z = 0; z < n; ++z) {
                    if (m(x, j(y, z)) != j(m(x, y), m(x, z)))
                        d.distributive = false;
                    if (leq(x, z) && j(x, m(y, z)) != m(j(x, y), z))
                        d.modular = false;
                }
    }

    auto throw_for(const BuildResult & r) -> void
    {
        switch (r.status) {
        case BuildStatus::Ok: return;
        case BuildStatus::BadSize: throw Error(ErrorKind::BadSize, r.detail);
        case BuildStatus::BadInput: throw Error(ErrorKind::BadInput, r.detail);
        case BuildStatus::Cyclic: throw Error(ErrorKind::CyclicCovers, r.detail);
        case BuildStatus::NotBounded: throw Error(ErrorKind::NotBounded, r.detail);
        case BuildStatus::NotALattice: throw Error(ErrorKind::NotALattice, r.detail);
        }
    }

    auto default_labels(size_t n) -> vector<string>
    {
        vector<string> labels;
        labels.reserve(n);
        for (size_t x = 0; x < n; ++x)
            labels.push_back(std::to_string(x));
        return labels;
    }
} // namespace

FinLattice::FinLattice(std::shared_ptr<const detail::LatticeData> data) :
    _data(std::move(data))
{
}

auto lattice_from_covers(size_t n, span<const Cover> covers, string name, vector<string> labels) -> FinLattice
{
    auto d = std::make_shared<detail::LatticeData>();
    throw_for(build(*d, n, covers));
    if (! labels.empty() && labels.size() != n)
        throw Error(ErrorKind::BadInput, "expected " + std::to_string(n) + " labels, got " + std::to_string(labels.size()));
    d->custom_labels = ! labels.empty();
    d->labels = labels.empty() ? default_labels(n) : std::move(labels);
    d->name = std::move(name);
    return FinLattice(std::move(d));
}

auto try_lattice_from_covers(size_t n, span<const Cover> covers) -> optional<FinLattice>
{
    auto d = std::make_shared<detail::LatticeData>();
    if (build(*d, n, covers).status != BuildStatus::Ok)
        return std::nullopt;
    d->labels = default_labels(n);
    return FinLattice(std::move(d));
}

auto FinLattice::size() const noexcept -> size_t { return _data->n; }
auto FinLattice::meet(Elem x, Elem y) const -> Elem { return _data->meet[x * _data->n + y]; }
auto FinLattice::join(Elem x, Elem y) const -> Elem { return _data->join[x * _data->n + y]; }
auto FinLattice::leq(Elem x, Elem y) const -> bool { return _data->leq[x * _data->n + y] != 0; }
auto FinLattice::bottom() const noexcept -> Elem { return _data->bottom; }
auto FinLattice::top() const noexcept -> Elem { return _data->top; }
auto FinLattice::covers() const -> span<const Cover> { return _data->covers; }

auto FinLattice::is_cover(Elem lower, Elem upper) const -> bool
{
    const auto & up = _data->upper[lower];
    return std::find(up.begin(), up.end(), upper) != up.end();
}

auto FinLattice::lower_covers(Elem x) const -> span<const Elem> { return _data->lower[x]; }
auto FinLattice::upper_covers(Elem x) const -> span<const Elem> { return _data->upper[x]; }
auto FinLattice::height(Elem x) const -> size_t { return _data->height[x]; }
auto FinLattice::depth(Elem x) const -> size_t { return _data->depth[x]; }
auto FinLattice::down_size(Elem x) const -> size_t { return _data->down_size[x]; }
auto FinLattice::up_size(Elem x) const -> size_t { return _data->up_size[x]; }
auto FinLattice::linear_extension() const -> span<const Elem> { return _data->linear_extension; }
auto FinLattice::is_distributive() const noexcept -> bool { return _data->distributive; }
auto FinLattice::is_modular() const noexcept -> bool { return _data->modular; }
auto FinLattice::is_chain() const noexcept -> bool { return _data->chain; }
auto FinLattice::name() const -> const string & { return _data->name; }
auto FinLattice::label(Elem x) const -> const string & { return _data->labels[x]; }
auto FinLattice::labels() const -> span<const string> { return _data->labels; }
auto FinLattice::has_custom_labels() const noexcept -> bool { return _data->custom_labels; }

auto FinLattice::with_name(string name) const -> FinLattice
{
    auto d = std::make_shared<detail::LatticeData>(*_data);
    d->name = std::move(name);
    return FinLattice(std::move(d));
}

auto FinLattice::operator==(const FinLattice & other) const -> bool
{
    return _data == other._data || (_data->n == other._data->n && _data->meet == other._data->meet);
}

auto is_distributive(const FinLattice & lattice) -> bool { return lattice.is_distributive(); }
auto is_modular(const FinLattice & lattice) -> bool { return lattice.is_modular(); }
auto is_chain(const FinLattice & lattice) -> bool { return lattice.is_chain(); }

auto is_automorphism(const FinLattice & lattice, const Permutation & f) -> bool
{
    auto n = lattice.size();
    if (f.size() != n || ! f.is_bijection())
        return false;
    for (Elem x = 0; x < n; ++x)
        for (Elem y = 0; y < n; ++y)
            if (f(lattice.meet(x, y)) != lattice.meet(f(x), f(y)) || f(lattice.join(x, y)) != lattice.join(f(x), f(y)))
                return false;
    return true;
}

} // namespace difflat
