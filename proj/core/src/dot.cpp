#include <difflat/dot.hpp>

#include <algorithm>
#include <map>
#include <sstream>

namespace difflat {

using std::size_t;
using std::string;
using std::vector;

namespace {
    auto quote(const string & s) -> string
    {
        string out = "\"";
        for (char c : s) {
            if (c == '"' || c == '\\')
                out += '\\';
            out += c;
        }
        return out + "\"";
    }

    auto render(const string & name, size_t n, const vector<std::pair<size_t, size_t>> & covers,
        const std::function<string(size_t)> & label) -> string
    {
        // Longest-path height from the covers.
        vector<size_t> height(n, 0);
        for (bool changed = true; changed;) {
            changed = false;
            for (auto [lo, hi] : covers)
                if (height[hi] < height[lo] + 1) {
                    height[hi] = height[lo] + 1;
                    changed = true;
                }
        }
        std::map<size_t, vector<size_t>> levels;
        for (size_t x = 0; x < n; ++x)
            levels[height[x]].push_back(x);

        std::ostringstream out;
        out << "digraph " << quote(name) << " {\n";
        out << "  rankdir=BT;\n";
        out << "  node [shape=circle];\n";
        for (size_t x = 0; x < n; ++x)
            out << "  n" << x << " [label=" << quote(label(x)) << "];\n";
        for (auto & [h, xs] : levels) {
            out << "  { rank=same;";
            for (auto x : xs)
                out << " n" << x << ";";
            out << " }\n";
        }
        for (auto [lo, hi] : covers)
            out << "  n" << lo << " -> n" << hi << ";\n";
        out << "}\n";
        return out.str();
    }
} // namespace

auto lattice_to_dot(const FinLattice & lattice) -> string
{
    vector<std::pair<size_t, size_t>> covers;
    for (auto [lo, hi] : lattice.covers())
        covers.emplace_back(lo, hi);
    auto name = lattice.name().empty() ? string("lattice") : lattice.name();
    return render(name, lattice.size(), covers, [&](size_t x) { return lattice.label(static_cast<Elem>(x)); });
}

auto poset_to_dot(const FinPoset & poset, const std::function<string(size_t)> & node_label, const string & graph_name) -> string
{
    return render(graph_name, poset.size(), poset.covers(), node_label);
}

} // namespace difflat
