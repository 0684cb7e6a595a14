#include <difflat/reference.hpp>

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace difflat::reference {

using std::size_t;
using std::uint64_t;
using std::vector;

namespace {
    using Matrix = vector<char>; // row-major leq

    // Unique glb and lub for every pair, from the order matrix alone.
    auto is_lattice_order(const Matrix & leq, size_t n) -> bool
    {
        auto le = [&](size_t a, size_t b) { return leq[a * n + b] != 0; };
        for (size_t x = 0; x < n; ++x)
            for (size_t y = 0; y < n; ++y) {
                size_t glbs = 0, lubs = 0;
                for (size_t z = 0; z < n; ++z) {
                    if (le(z, x) && le(z, y)) {
                        bool greatest = true;
                        for (size_t w = 0; w < n; ++w)
                            if (le(w, x) && le(w, y) && ! le(w, z))
                                greatest = false;
                        glbs += greatest;
                    }
                    if (le(x, z) && le(y, z)) {
                        bool least = true;
                        for (size_t w = 0; w < n; ++w)
                            if (le(x, w) && le(y, w) && ! le(z, w))
                                least = false;
                        lubs += least;
                    }
                }
                if (glbs != 1 || lubs != 1)
                    return false;
            }
        return true;
    }

    auto min_relabeling(const Matrix & leq, size_t n) -> Matrix
    {
        vector<size_t> perm(n);
        std::iota(perm.begin(), perm.end(), size_t{0});
        Matrix best;
        Matrix cur(n * n);
        do {
            for (size_t i = 0; i < n; ++i)
                for (size_t j = 0; j < n; ++j)
                    cur[perm[i] * n + perm[j]] = leq[i * n + j];
            if (best.empty() || cur < best)
                best = cur;
        } while (std::next_permutation(perm.begin(), perm.end()));
        return best;
    }
} // namespace

auto lattice_count(size_t n) -> uint64_t
{
    if (n == 0)
        return 0;
    if (n <= 2)
        return 1;
    if (n > 7)
        throw std::invalid_argument("reference lattice count is limited to n <= 7");

    auto k = n - 2;
    // Strict pairs (i, j), i != j, among inner elements.
    vector<std::pair<size_t, size_t>> pairs;
    for (size_t i = 0; i < k; ++i)
        for (size_t j = 0; j < k; ++j)
            if (i != j)
                pairs.emplace_back(i, j);

    std::set<Matrix> classes;
    for (uint64_t mask = 0; mask < (uint64_t{1} << pairs.size()); ++mask) {
        Matrix inner(k * k, 0);
        for (size_t i = 0; i < k; ++i)
            inner[i * k + i] = 1;
        for (size_t p = 0; p < pairs.size(); ++p)
            if (mask & (uint64_t{1} << p))
                inner[pairs[p].first * k + pairs[p].second] = 1;

        bool partial_order = true;
        for (size_t a = 0; a < k && partial_order; ++a)
            for (size_t b = 0; b < k && partial_order; ++b) {
                if (a != b && inner[a * k + b] && inner[b * k + a])
                    partial_order = false;
                for (size_t c = 0; c < k && partial_order; ++c)
                    if (inner[a * k + b] && inner[b * k + c] && ! inner[a * k + c])
                        partial_order = false;
            }
        if (! partial_order)
            continue;

        // Element 0 is the new bottom, n-1 the new top, inner i becomes i+1.
        Matrix full(n * n, 0);
        for (size_t x = 0; x < n; ++x) {
            full[0 * n + x] = 1;
            full[x * n + (n - 1)] = 1;
        }
        for (size_t a = 0; a < k; ++a)
            for (size_t b = 0; b < k; ++b)
                full[(a + 1) * n + (b + 1)] = inner[a * k + b];
        if (! is_lattice_order(full, n))
            continue;
        classes.insert(min_relabeling(inner, k));
    }
    return classes.size();
}

auto monotone_map_count(size_t k, size_t l) -> uint64_t
{
    if (k == 0 || l == 0)
        return 0;
    vector<size_t> f(k, 0);
    uint64_t count = 0;
    for (;;) {
        bool monotone = true;
        for (size_t i = 0; i + 1 < k; ++i)
            if (f[i] > f[i + 1])
                monotone = false;
        count += monotone;
        size_t i = 0;
        while (i < k && ++f[i] == l)
            f[i++] = 0;
        if (i == k)
            break;
    }
    return count;
}

auto automorphisms(const FinLattice & lattice) -> vector<vector<Elem>>
{
    auto n = lattice.size();
    vector<Elem> p(n);
    std::iota(p.begin(), p.end(), Elem{0});
    vector<vector<Elem>> out;
    do {
        bool ok = true;
        for (Elem x = 0; x < n && ok; ++x)
            for (Elem y = 0; y < n && ok; ++y)
                ok = p[lattice.meet(x, y)] == lattice.meet(p[x], p[y]) && p[lattice.join(x, y)] == lattice.join(p[x], p[y]);
        if (ok)
            out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

auto derivations(const FinLattice & lattice) -> vector<vector<Elem>>
{
    auto n = lattice.size();
    vector<Elem> d(n, 0);
    vector<vector<Elem>> out;
    for (;;) {
        bool ok = true;
        for (Elem x = 0; x < n && ok; ++x)
            for (Elem y = 0; y < n && ok; ++y)
                ok = d[lattice.meet(x, y)] == lattice.join(lattice.meet(d[x], y), lattice.meet(x, d[y]));
        if (ok)
            out.push_back(d);
        // Odometer with the last position fastest keeps lexicographic order.
        size_t i = n;
        while (i > 0 && ++d[i - 1] == n)
            d[--i] = 0;
        if (i == 0)
            break;
    }
    return out;
}

auto derivation_class_count(const FinLattice & lattice) -> size_t
{
    auto ds = derivations(lattice);
    auto auts = reference::automorphisms(lattice);
    auto n = lattice.size();
    std::set<vector<Elem>> seen;
    size_t classes = 0;
    for (const auto & d : ds) {
        if (seen.count(d))
            continue;
        ++classes;
        for (const auto & f : auts) {
            vector<Elem> c(n);
            for (Elem x = 0; x < n; ++x)
                c[f[x]] = f[d[x]];
            seen.insert(c);
        }
    }
    return classes;
}

} // namespace difflat::reference
