#include <difflat/enumerate.hpp>
#include <difflat/error.hpp>

#include <algorithm>
#include <atomic>
#include <limits>
#include <mutex>
#include <thread>

namespace difflat {

using std::optional;
using std::size_t;
using std::span;
using std::uint64_t;
using std::vector;

DerivationSet::DerivationSet(FinLattice lattice, vector<Derivation> derivations) :
    _lattice(std::move(lattice)),
    _items(std::move(derivations))
{
    std::sort(_items.begin(), _items.end());
    _items.erase(std::unique(_items.begin(), _items.end()), _items.end());
}

auto DerivationSet::index_of(span<const Elem> image) const -> optional<size_t>
{
    auto it = std::lower_bound(_items.begin(), _items.end(), image, [](const Derivation & d, span<const Elem> img) {
        return std::lexicographical_compare(d.image().begin(), d.image().end(), img.begin(), img.end());
    });
    if (it == _items.end() || ! std::equal(it->image().begin(), it->image().end(), image.begin(), image.end()))
        return std::nullopt;
    return static_cast<size_t>(it - _items.begin());
}

auto DerivationSet::isotone_count() const -> size_t
{
    return static_cast<size_t>(std::count_if(_items.begin(), _items.end(), [](const Derivation & d) { return d.isotone(); }));
}

namespace {
    constexpr Elem unset = std::numeric_limits<Elem>::max();

    struct Search {
        const FinLattice & lattice;
        vector<Elem> order;   // linear extension

        // Leibniz on every pair (x, z) with z placed before x (and z = x).
        auto consistent(const vector<Elem> & d, size_t depth) const -> bool
        {
            auto x = order[depth];
            for (size_t i = 0; i <= depth; ++i) {
                auto z = order[i];
                auto m = lattice.meet(x, z);
                if (d[m] != lattice.join(lattice.meet(d[x], z), lattice.meet(x, d[z])))
                    return false;
            }
            return true;
        }

        auto candidates(const vector<Elem> & d, size_t depth) const -> vector<Elem>
        {
            auto x = order[depth];
            vector<Elem> out;
            for (size_t i = 0; i < depth; ++i) {
                auto y = order[i];
                if (d[y] == y && lattice.leq(y, x))
                    out.push_back(y);
            }
            out.push_back(x);
            return out;
        }

        // Children of a partial assignment at the given depth.
        auto expand(vector<Elem> & d, size_t depth, vector<vector<Elem>> & out) const -> void
        {
            auto x = order[depth];
            for (auto y : candidates(d, depth)) {
                d[x] = y;
                if (consistent(d, depth))
                    out.push_back(d);
            }
            d[x] = unset;
        }

        auto dfs(vector<Elem> & d, size_t depth, vector<vector<Elem>> & out) const -> void
        {
            if (depth == order.size()) {
                out.push_back(d);
                return;
            }
            auto x = order[depth];
            for (auto y : candidates(d, depth)) {
                d[x] = y;
                if (consistent(d, depth))
                    dfs(d, depth + 1, out);
            }
            d[x] = unset;
        }
    };

    auto finish(const FinLattice & lattice, vector<vector<Elem>> images, unsigned jobs = 1) -> DerivationSet
    {
        vector<std::optional<Derivation>> checked(images.size());
        auto check = [&](size_t lo, size_t hi) {
            for (auto i = lo; i < hi; ++i)
                checked[i] = Derivation::validate(OperatorMap(lattice, std::move(images[i])));
        };
        size_t threads = std::min<size_t>(std::max(1U, jobs), images.size() / 256 + 1);
        if (threads <= 1) {
            check(0, images.size());
        } else {
            vector<std::thread> pool;
            auto chunk = (images.size() + threads - 1) / threads;
            for (size_t t = 0; t < threads; ++t)
                pool.emplace_back(check, std::min(images.size(), t * chunk), std::min(images.size(), (t + 1) * chunk));
            for (auto & t : pool)
                t.join();
        }
        vector<Derivation> ds;
        ds.reserve(checked.size());
        for (auto & d : checked) {
            if (! d)
                throw Error(ErrorKind::Internal, "enumeration emitted a map that fails the Leibniz identity");
            ds.push_back(std::move(*d));
        }
        return {lattice, std::move(ds)};
    }
} // namespace

auto enumerate_derivations(const FinLattice & lattice, EnumerateOptions options) -> DerivationSet
{
    auto n = lattice.size();
    auto ext = lattice.linear_extension();
    Search s{lattice, vector<Elem>(ext.begin(), ext.end())};

    // Seed the frontier breadth-first until there is enough work to share.
    struct Node {
        vector<Elem> d;
        size_t depth;
    };
    vector<Node> frontier{{vector<Elem>(n, unset), 0}};
    size_t want = options.jobs > 1 ? size_t{4} * options.jobs : 1;
    while (frontier.size() < want) {
        vector<Node> next;
        bool grew = false;
        for (auto & node : frontier) {
            if (node.depth == n) {
                next.push_back(std::move(node));
                continue;
            }
            vector<vector<Elem>> kids;
            s.expand(node.d, node.depth, kids);
            for (auto & k : kids)
                next.push_back({std::move(k), node.depth + 1});
            grew = true;
        }
        frontier = std::move(next);
        if (! grew)
            break;
    }

    vector<vector<Elem>> results;
    std::mutex sink;
    std::atomic<size_t> cursor{0};
    auto worker = [&] {
        vector<vector<Elem>> local;
        for (size_t i = cursor++; i < frontier.size(); i = cursor++) {
            auto d = frontier[i].d;
            s.dfs(d, frontier[i].depth, local);
        }
        std::lock_guard lock(sink);
        for (auto & img : local)
            results.push_back(std::move(img));
    };
    auto threads = std::min<size_t>(std::max(1U, options.jobs), frontier.size());
    if (threads <= 1) {
        worker();
    } else {
        vector<std::thread> pool;
        for (size_t t = 0; t < threads; ++t)
            pool.emplace_back(worker);
        for (auto & t : pool)
            t.join();
    }
    return finish(lattice, std::move(results), options.jobs);
}

auto enumerate_chain_fast(const FinLattice & lattice) -> DerivationSet
{
    if (! lattice.is_chain())
        throw Error(ErrorKind::WrongShape, "not a chain");
    auto n = lattice.size();
    auto ext = lattice.linear_extension();
    vector<Elem> a(ext.begin(), ext.end()); // a[0] < a[1] < ...

    vector<vector<Elem>> images;
    for (size_t i = 0; i < n; ++i) {
        // a[0..i] fixed; positions i+1..n-1 take non-increasing indices in [0, i].
        auto tail = n - 1 - i;
        vector<size_t> idx(tail, i);
        for (;;) {
            vector<Elem> img(n);
            for (size_t j = 0; j <= i; ++j)
                img[a[j]] = a[j];
            for (size_t t = 0; t < tail; ++t)
                img[a[i + 1 + t]] = a[idx[t]];
            images.push_back(std::move(img));
            // Next non-increasing sequence in reverse lexicographic order.
            size_t p = tail;
            while (p > 0 && idx[p - 1] == 0)
                --p;
            if (p == 0)
                break;
            --idx[p - 1];
            for (size_t q = p; q < tail; ++q)
                idx[q] = idx[p - 1];
        }
    }
    return finish(lattice, std::move(images));
}

auto is_mn_shape(const FinLattice & lattice) -> bool
{
    if (lattice.size() < 3)
        return false;
    for (Elem x = 0; x < lattice.size(); ++x) {
        if (x == lattice.bottom() || x == lattice.top())
            continue;
        if (! lattice.is_cover(lattice.bottom(), x) || ! lattice.is_cover(x, lattice.top()))
            return false;
    }
    return true;
}

auto enumerate_mn_fast(const FinLattice & lattice) -> DerivationSet
{
    if (! is_mn_shape(lattice))
        throw Error(ErrorKind::WrongShape, "not of the form M_n");
    auto n = lattice.size();
    if (n == 3)
        return enumerate_chain_fast(lattice);
    auto bot = lattice.bottom(), top = lattice.top();
    vector<Elem> atoms;
    for (Elem x = 0; x < n; ++x)
        if (x != bot && x != top)
            atoms.push_back(x);
    auto k = atoms.size();
    if (k >= 32)
        throw Error(ErrorKind::TooLarge, "too many atoms");

    vector<vector<Elem>> images;
    images.push_back(Permutation::identity(n).image);
    for (uint64_t mask = 0; mask < (uint64_t{1} << k); ++mask) {
        vector<Elem> img(n, bot);
        vector<Elem> tops{bot};
        for (size_t i = 0; i < k; ++i)
            if (mask & (uint64_t{1} << i)) {
                img[atoms[i]] = atoms[i];
                tops.push_back(atoms[i]);
            }
        for (auto t : tops) {
            img[top] = t;
            images.push_back(img);
        }
    }
    return finish(lattice, std::move(images));
}

auto enumerate_mn_fast(size_t n) -> DerivationSet
{
    return enumerate_mn_fast(make_mn(n));
}

auto isotone_count_formula(uint64_t k, uint64_t l) -> uint64_t
{
    if (k < 1 || l < 1)
        throw Error(ErrorKind::BadSize, "isotone count needs k, l >= 1");
    // C(m, r) with r the smaller side, built up through increasing binomials.
    auto m = k + l - 1;
    auto r = std::min(k, l - 1);
    __extension__ using wide = unsigned __int128;
    wide c = 1;
    for (uint64_t i = 0; i < r; ++i) {
        c = c * (m - i) / (i + 1);
        if (c > std::numeric_limits<uint64_t>::max())
            throw Error(ErrorKind::Overflow, "binomial exceeds 64 bits");
    }
    return static_cast<uint64_t>(c);
}

auto chain_derivation_count(size_t n) -> uint64_t
{
    if (n < 1)
        throw Error(ErrorKind::BadSize, "chain needs n >= 1");
    if (n > 64)
        throw Error(ErrorKind::Overflow, "count exceeds 64 bits");
    return uint64_t{1} << (n - 1);
}

auto mn_derivation_count(size_t n) -> uint64_t
{
    if (n < 3)
        throw Error(ErrorKind::BadSize, "M_n needs n >= 3");
    uint64_t total = 2;
    for (uint64_t k = 1; k + 2 <= n; ++k)
        total += (k + 1) * isotone_count_formula(k, n - 2 - k + 1);
    return total;
}

} // namespace difflat
