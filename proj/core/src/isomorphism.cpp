#include <difflat/error.hpp>
#include <difflat/lattice.hpp>

#include "order_search.hpp"

#include <algorithm>

namespace difflat {

using std::optional;
using std::size_t;
using std::string;
using std::uint32_t;
using std::vector;

namespace {
    auto lattice_colours(const detail::OrderGraph & g) -> vector<uint32_t>
    {
        return detail::refine(g, detail::rank_signatures(detail::level_signature(g)));
    }

    // Lower triangle of the relabelled meet table, rows in canonical order.
    auto encode_key(size_t n, const vector<Elem> & triangle) -> string
    {
        string key = std::to_string(n) + ":";
        for (size_t i = 0; i < triangle.size(); ++i) {
            auto v = triangle[i];
            if (n <= 36) {
                key += static_cast<char>(v < 10 ? '0' + v : 'a' + (v - 10));
            } else {
                if (i)
                    key += ',';
                key += std::to_string(v);
            }
        }
        return key;
    }

    struct CanonicalSearch {
        const FinLattice & lattice;
        vector<vector<Elem>> cells;
        vector<size_t> cell_of_position;
        vector<Elem> elem_at;
        vector<Elem> pos;
        vector<char> used;
        vector<Elem> current, best;
        vector<Elem> best_pos;
        bool have_best = false;

        size_t version = 0;

        static constexpr Elem unset = ~Elem{0};

        // -1, 0, 1: current[0, len) against best[0, len).
        auto compare_prefix(size_t len) const -> int
        {
            if (! have_best)
                return -1;
            for (size_t i = 0; i < len; ++i)
                if (current[i] != best[i])
                    return current[i] < best[i] ? -1 : 1;
            return 0;
        }

        auto run(size_t k) -> void
        {
            auto n = lattice.size();
            if (k == n) {
                if (compare_prefix(current.size()) < 0) {
                    best = current;
                    best_pos = pos;
                    have_best = true;
                    ++version;
                }
                return;
            }
            auto row = k * (k + 1) / 2;
            auto seen = version;
            auto prefix = compare_prefix(row);
            for (auto x : cells[cell_of_position[k]]) {
                if (used[x])
                    continue;
                if (version != seen) {
                    seen = version;
                    prefix = compare_prefix(row);
                }
                if (prefix > 0)
                    return;
                used[x] = 1;
                pos[x] = static_cast<Elem>(k);
                elem_at[k] = x;
                // Row k only involves positions 0..k: a meet lies in an earlier cell or is x itself.
                int cmp = prefix;
                for (size_t j = 0; j <= k; ++j) {
                    auto v = pos[lattice.meet(x, elem_at[j])];
                    current[row + j] = v;
                    if (cmp == 0 && v != best[row + j])
                        cmp = v < best[row + j] ? -1 : 1;
                }
                if (cmp <= 0)
                    run(k + 1);
                pos[x] = unset;
                used[x] = 0;
            }
        }
    };
} // namespace

auto automorphisms(const FinLattice & lattice) -> vector<Permutation>
{
    auto g = detail::order_graph(lattice);
    auto colours = lattice_colours(g);
    vector<Permutation> result;
    detail::for_each_order_iso(g, colours, g, colours, [&](const vector<Elem> & map) {
        Permutation p{map};
        if (! is_automorphism(lattice, p))
            throw Error(ErrorKind::Internal, "order automorphism failed to preserve meet/join");
        result.push_back(std::move(p));
        return true;
    });
    std::sort(result.begin(), result.end());
    return result;
}

auto are_isomorphic(const FinLattice & left, const FinLattice & right) -> optional<Permutation>
{
    if (left.size() != right.size())
        return std::nullopt;
    auto ga = detail::order_graph(left);
    auto gb = detail::order_graph(right);
    // Colours must be comparable across the two lattices, so rank the union.
    auto sa = detail::level_signature(ga), sb = detail::level_signature(gb);
    auto both = sa;
    both.insert(both.end(), sb.begin(), sb.end());
    auto ranks = detail::rank_signatures(both);
    vector<uint32_t> ca(ranks.begin(), ranks.begin() + static_cast<std::ptrdiff_t>(sa.size()));
    vector<uint32_t> cb(ranks.begin() + static_cast<std::ptrdiff_t>(sa.size()), ranks.end());

    optional<Permutation> witness;
    detail::for_each_order_iso(ga, ca, gb, cb, [&](const vector<Elem> & map) {
        witness = Permutation{map};
        return false;
    });
    return witness;
}

auto canonical_form(const FinLattice & lattice) -> CanonicalForm
{
    auto n = lattice.size();
    auto g = detail::order_graph(lattice);
    auto colours = lattice_colours(g);

    CanonicalSearch s{lattice, {}, {}, vector<Elem>(n, 0), vector<Elem>(n, CanonicalSearch::unset), vector<char>(n, 0),
        vector<Elem>(n * (n + 1) / 2, 0), {}, {}, false, 0};
    s.cells.resize(detail::colour_count(colours));
    for (Elem x = 0; x < n; ++x)
        s.cells[colours[x]].push_back(x);
    for (size_t c = 0; c < s.cells.size(); ++c)
        for (size_t i = 0; i < s.cells[c].size(); ++i)
            s.cell_of_position.push_back(c);
    s.run(0);
    return {encode_key(n, s.best), Permutation{s.best_pos}};
}

auto canonical_key(const FinLattice & lattice) -> string
{
    return canonical_form(lattice).key;
}

auto brute_force_canonical_key(const FinLattice & lattice) -> string
{
    auto n = lattice.size();
    if (n > 10)
        throw Error(ErrorKind::TooLarge, "brute-force canonical key is limited to 10 elements");
    vector<Elem> inner;
    for (Elem x = 0; x < n; ++x)
        if (x != lattice.bottom() && x != lattice.top())
            inner.push_back(x);

    vector<Elem> best, current(n * (n + 1) / 2), pos(n);
    do {
        pos[lattice.bottom()] = 0;
        pos[lattice.top()] = static_cast<Elem>(n - 1);
        for (size_t i = 0; i < inner.size(); ++i)
            pos[inner[i]] = static_cast<Elem>(i + 1);
        auto inv = Permutation{pos}.inverse();
        size_t at = 0;
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j <= i; ++j)
                current[at++] = pos[lattice.meet(inv(static_cast<Elem>(i)), inv(static_cast<Elem>(j)))];
        if (best.empty() || current < best)
            best = current;
    } while (std::next_permutation(inner.begin(), inner.end()));
    return encode_key(n, best);
}

} // namespace difflat
