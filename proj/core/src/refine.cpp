#include "order_search.hpp"

#include <algorithm>

namespace difflat::detail {

using std::size_t;
using std::uint32_t;
using std::uint64_t;
using std::vector;

auto fnv1a(uint64_t h, uint64_t v) -> uint64_t
{
    for (int i = 0; i < 8; ++i) {
        h ^= (v >> (8 * i)) & 0xffU;
        h *= 1099511628211ULL;
    }
    return h;
}

auto order_graph(const FinLattice & lattice) -> OrderGraph
{
    OrderGraph g;
    g.n = lattice.size();
    g.leq.assign(g.n * g.n, 0);
    g.lower.resize(g.n);
    g.upper.resize(g.n);
    for (Elem x = 0; x < g.n; ++x) {
        for (Elem y = 0; y < g.n; ++y)
            g.leq[x * g.n + y] = lattice.leq(x, y) ? 1 : 0;
        auto lo = lattice.lower_covers(x);
        auto up = lattice.upper_covers(x);
        g.lower[x].assign(lo.begin(), lo.end());
        g.upper[x].assign(up.begin(), up.end());
    }
    return g;
}

auto order_graph(size_t n, vector<char> leq) -> OrderGraph
{
    OrderGraph g;
    g.n = n;
    g.leq = std::move(leq);
    g.lower.resize(n);
    g.upper.resize(n);
    // x < y is a cover when the strict up-set of x and strict down-set of y are disjoint.
    auto words = (n + 63) / 64;
    vector<uint64_t> up(n * words, 0), down(n * words, 0);
    for (size_t x = 0; x < n; ++x)
        for (size_t y = 0; y < n; ++y)
            if (x != y && g.le(static_cast<Elem>(x), static_cast<Elem>(y))) {
                up[x * words + y / 64] |= uint64_t{1} << (y % 64);
                down[y * words + x / 64] |= uint64_t{1} << (x % 64);
            }
    for (Elem x = 0; x < n; ++x)
        for (Elem y = 0; y < n; ++y) {
            if (x == y || ! g.le(x, y))
                continue;
            bool cover = true;
            for (size_t w = 0; w < words && cover; ++w)
                if (up[x * words + w] & down[y * words + w])
                    cover = false;
            if (cover) {
                g.upper[x].push_back(y);
                g.lower[y].push_back(x);
            }
        }
    return g;
}

auto level_signature(const OrderGraph & g) -> vector<vector<uint64_t>>
{
    auto n = g.n;
    // Longest chains via a down-set-size order, which is a linear extension.
    vector<Elem> order(n);
    vector<uint64_t> down(n, 0), up(n, 0);
    for (Elem x = 0; x < n; ++x) {
        order[x] = x;
        for (Elem y = 0; y < n; ++y)
            if (g.le(x, y)) {
                ++up[x];
                ++down[y];
            }
    }
    std::stable_sort(order.begin(), order.end(), [&](Elem a, Elem b) { return down[a] < down[b]; });
    vector<uint64_t> height(n, 0), depth(n, 0);
    for (auto x : order)
        for (auto y : g.upper[x])
            height[y] = std::max(height[y], height[x] + 1);
    for (auto it = order.rbegin(); it != order.rend(); ++it)
        for (auto y : g.lower[*it])
            depth[y] = std::max(depth[y], depth[*it] + 1);

    vector<vector<uint64_t>> sig(n);
    for (Elem x = 0; x < n; ++x)
        sig[x] = {height[x], depth[x], down[x], up[x], g.lower[x].size(), g.upper[x].size()};
    return sig;
}

auto rank_signatures(const vector<vector<uint64_t>> & sigs) -> vector<uint32_t>
{
    auto sorted = sigs;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    vector<uint32_t> rank(sigs.size());
    for (size_t i = 0; i < sigs.size(); ++i)
        rank[i] = static_cast<uint32_t>(std::lower_bound(sorted.begin(), sorted.end(), sigs[i]) - sorted.begin());
    return rank;
}

auto colour_count(const vector<uint32_t> & colour) -> size_t
{
    if (colour.empty())
        return 0;
    return *std::max_element(colour.begin(), colour.end()) + size_t{1};
}

auto refine(const OrderGraph & g, vector<uint32_t> colour, uint64_t * trace) -> vector<uint32_t>
{
    auto n = g.n;
    auto cells = colour_count(colour);
    constexpr uint64_t sep = ~uint64_t{0};
    for (;;) {
        vector<vector<uint64_t>> sig(n);
        for (Elem x = 0; x < n; ++x) {
            auto & s = sig[x];
            s.push_back(colour[x]);
            vector<uint64_t> lo, up;
            for (auto y : g.lower[x])
                lo.push_back(colour[y]);
            for (auto y : g.upper[x])
                up.push_back(colour[y]);
            std::sort(lo.begin(), lo.end());
            std::sort(up.begin(), up.end());
            s.insert(s.end(), lo.begin(), lo.end());
            s.push_back(sep);
            s.insert(s.end(), up.begin(), up.end());
        }
        auto next = rank_signatures(sig);
        if (trace) {
            auto sorted = sig;
            std::sort(sorted.begin(), sorted.end());
            for (const auto & s : sorted) {
                for (auto v : s)
                    *trace = fnv1a(*trace, v);
                *trace = fnv1a(*trace, sep - 1);
            }
        }
        auto next_cells = colour_count(next);
        colour = std::move(next);
        if (next_cells == cells)
            return colour;
        cells = next_cells;
    }
}

namespace {
    struct IsoSearch {
        const OrderGraph & a;
        const OrderGraph & b;
        const vector<uint32_t> & ca;
        const vector<uint32_t> & cb;
        const std::function<bool(const vector<Elem> &)> & visit;
        vector<Elem> order;
        vector<Elem> map;
        vector<char> used;
        bool stopped = false;

        auto consistent(size_t depth, Elem x, Elem y) const -> bool
        {
            for (size_t i = 0; i < depth; ++i) {
                auto z = order[i];
                auto w = map[z];
                if (a.le(z, x) != b.le(w, y) || a.le(x, z) != b.le(y, w))
                    return false;
            }
            return true;
        }

        auto run(size_t depth) -> void
        {
            if (stopped)
                return;
            if (depth == order.size()) {
                if (! visit(map))
                    stopped = true;
                return;
            }
            auto x = order[depth];
            for (Elem y = 0; y < b.n && ! stopped; ++y) {
                if (used[y] || cb[y] != ca[x] || ! consistent(depth, x, y))
                    continue;
                used[y] = 1;
                map[x] = y;
                run(depth + 1);
                used[y] = 0;
            }
        }
    };
} // namespace

auto for_each_order_iso(const OrderGraph & a, const vector<uint32_t> & ca, const OrderGraph & b,
    const vector<uint32_t> & cb, const std::function<bool(const vector<Elem> &)> & visit) -> void
{
    if (a.n != b.n)
        return;
    auto sa = ca, sb = cb;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb)
        return;

    auto n = a.n;
    vector<size_t> cell_size(colour_count(ca), 0);
    for (auto c : ca)
        ++cell_size[c];

    // Small cells first, then grow along neighbours of what is already placed.
    IsoSearch s{a, b, ca, cb, visit, {}, vector<Elem>(n, 0), vector<char>(n, 0)};
    vector<char> placed(n, 0);
    while (s.order.size() < n) {
        Elem best = 0;
        bool found = false;
        size_t best_links = 0;
        for (Elem x = 0; x < n; ++x) {
            if (placed[x])
                continue;
            size_t links = 0;
            for (auto y : a.lower[x])
                links += placed[y];
            for (auto y : a.upper[x])
                links += placed[y];
            auto better = ! found || (links > 0) > (best_links > 0)
                || ((links > 0) == (best_links > 0) && cell_size[ca[x]] < cell_size[ca[best]]);
            if (better) {
                best = x;
                best_links = links;
                found = true;
            }
        }
        placed[best] = 1;
        s.order.push_back(best);
    }
    s.run(0);
}

} // namespace difflat::detail
