#include <difflat/catalog.hpp>
#include <difflat/error.hpp>
#include <difflat/serialize.hpp>

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <map>
#include <mutex>
#include <thread>

namespace difflat {

using std::size_t;
using std::string;
using std::vector;
using nlohmann::json;

namespace {
    constexpr size_t max_order = 9;

    auto key_of(const FinLattice & lattice, KeyAlgorithm algo) -> std::pair<string, FinLattice>
    {
        if (algo == KeyAlgorithm::BruteForce)
            return {brute_force_canonical_key(lattice), lattice};
        auto cf = canonical_form(lattice);
        return {cf.key, relabel(lattice, cf.labeling)};
    }

    // Nonempty antichains of the lattice minus its top.
    auto antichains(const FinLattice & l) -> vector<vector<Elem>>
    {
        vector<vector<Elem>> out;
        vector<Elem> current;
        auto n = static_cast<Elem>(l.size());
        auto rec = [&](auto & self, Elem from) -> void {
            for (Elem x = from; x < n; ++x) {
                if (x == l.top())
                    continue;
                bool free = std::none_of(current.begin(), current.end(),
                    [&](Elem y) { return l.leq(x, y) || l.leq(y, x); });
                if (! free)
                    continue;
                current.push_back(x);
                out.push_back(current);
                self(self, x + 1);
                current.pop_back();
            }
        };
        rec(rec, 0);
        return out;
    }

    auto cache_file(const CatalogOptions & options, size_t n) -> std::optional<std::filesystem::path>
    {
        if (! options.cache_dir || options.keys != KeyAlgorithm::Refined)
            return std::nullopt;
        return *options.cache_dir / ("lattices-" + std::to_string(n) + ".jsonl");
    }

    auto load_cached(const CatalogOptions & options, size_t n) -> std::optional<LatticeCatalog>
    {
        auto path = cache_file(options, n);
        if (! path || ! std::filesystem::exists(*path))
            return std::nullopt;
        std::ifstream in(*path);
        try {
            auto cat = read_catalog_jsonl(in);
            if (cat.order != n)
                return std::nullopt;
            cat.provenance.from_cache = true;
            return cat;
        } catch (const Error &) {
            // A truncated or stale file is regenerated.
            return std::nullopt;
        }
    }

    auto store_cached(const CatalogOptions & options, const LatticeCatalog & cat) -> void
    {
        auto path = cache_file(options, cat.order);
        if (! path)
            return;
        std::error_code ec;
        std::filesystem::create_directories(path->parent_path(), ec);
        auto tmp = *path;
        tmp += ".tmp";
        {
            std::ofstream out(tmp);
            if (! out)
                return;
            write_catalog_jsonl(cat, out);
        }
        std::filesystem::rename(tmp, *path, ec);
    }

    auto base_catalog(size_t n, KeyAlgorithm algo) -> LatticeCatalog
    {
        LatticeCatalog cat;
        cat.order = n;
        auto l = make_chain(n);
        auto [key, lattice] = key_of(lattice_from_covers(n, l.covers()), algo);
        cat.entries.push_back({key, lattice});
        cat.provenance.generator = "base";
        cat.provenance.candidates = 1;
        cat.provenance.unfiltered_count = 1;
        return cat;
    }

    auto extend(const LatticeCatalog & parents, const CatalogOptions & options) -> LatticeCatalog
    {
        auto n = parents.order + 1;
        std::map<string, FinLattice> found;
        std::mutex sink;
        std::atomic<size_t> cursor{0}, candidates{0};

        auto worker = [&] {
            std::map<string, FinLattice> local;
            size_t tried = 0;
            for (size_t i = cursor++; i < parents.entries.size(); i = cursor++) {
                const auto & p = parents.entries[i].lattice;
                auto c = static_cast<Elem>(n - 1);
                for (const auto & a : antichains(p)) {
                    vector<Cover> covers(p.covers().begin(), p.covers().end());
                    for (auto x : a)
                        covers.emplace_back(x, c);
                    covers.emplace_back(c, p.top());
                    ++tried;
                    auto l = try_lattice_from_covers(n, covers);
                    if (! l)
                        continue;
                    auto [key, canon] = key_of(*l, options.keys);
                    local.try_emplace(std::move(key), std::move(canon));
                }
            }
            std::lock_guard lock(sink);
            candidates += tried;
            for (auto & [k, l] : local)
                found.try_emplace(k, l);
        };

        // The brute-force keys keep the first lattice seen, so stay sequential there.
        auto threads = options.keys == KeyAlgorithm::BruteForce ? size_t{1}
                                                                : std::min<size_t>(std::max(1U, options.jobs), parents.size());
        if (threads <= 1) {
            worker();
        } else {
            vector<std::thread> pool;
            for (size_t t = 0; t < threads; ++t)
                pool.emplace_back(worker);
            for (auto & t : pool)
                t.join();
        }

        LatticeCatalog cat;
        cat.order = n;
        for (auto & [k, l] : found)
            cat.entries.push_back({k, l});
        cat.provenance.generator = "coatom-extension";
        cat.provenance.candidates = candidates;
        cat.provenance.unfiltered_count = cat.entries.size();
        return cat;
    }
} // namespace

auto enumerate_lattices(size_t n, const CatalogOptions & options) -> LatticeCatalog
{
    if (n == 0)
        throw Error(ErrorKind::BadSize, "catalog order must be at least 1");
    if (n > max_order)
        throw Error(ErrorKind::TooLarge, "catalog order is limited to " + std::to_string(max_order));
    if (auto cached = load_cached(options, n))
        return *cached;
    LatticeCatalog cat;
    if (n <= 2)
        cat = base_catalog(n, options.keys);
    else
        cat = extend(enumerate_lattices(n - 1, options), options);
    store_cached(options, cat);
    return cat;
}

auto catalog_options_from_env(unsigned jobs) -> CatalogOptions
{
    CatalogOptions options;
    options.jobs = jobs;
    if (const char * dir = std::getenv("DIFFLAT_CACHE_DIR"); dir && *dir)
        options.cache_dir = std::filesystem::path(dir);
    return options;
}

auto parse_catalog_filter(const string & name) -> CatalogFilter
{
    if (name == "distributive")
        return CatalogFilter::Distributive;
    if (name == "modular")
        return CatalogFilter::Modular;
    if (name == "chain")
        return CatalogFilter::Chain;
    throw Error(ErrorKind::BadInput, "unknown filter '" + name + "' (expected distributive, modular or chain)");
}

auto to_string(CatalogFilter filter) -> string
{
    switch (filter) {
    case CatalogFilter::Distributive: return "distributive";
    case CatalogFilter::Modular: return "modular";
    case CatalogFilter::Chain: return "chain";
    }
    return "unknown";
}

auto catalog_filter(const LatticeCatalog & catalog, CatalogFilter filter) -> LatticeCatalog
{
    LatticeCatalog out;
    out.order = catalog.order;
    out.provenance = catalog.provenance;
    out.provenance.filter = out.provenance.filter.empty() ? to_string(filter) : out.provenance.filter + "," + to_string(filter);
    for (const auto & e : catalog.entries) {
        bool keep = false;
        switch (filter) {
        case CatalogFilter::Distributive: keep = is_distributive(e.lattice); break;
        case CatalogFilter::Modular: keep = is_modular(e.lattice); break;
        case CatalogFilter::Chain: keep = is_chain(e.lattice); break;
        }
        if (keep)
            out.entries.push_back(e);
    }
    return out;
}

auto write_catalog_jsonl(const LatticeCatalog & catalog, std::ostream & out) -> void
{
    for (const auto & e : catalog.entries) {
        auto j = lattice_to_json(e.lattice);
        j["canonical_key"] = e.key;
        out << j.dump() << '\n';
    }
    json summary = {
        {"summary", true},
        {"order", catalog.order},
        {"count", catalog.entries.size()},
        {"generator", catalog.provenance.generator},
        {"candidates", catalog.provenance.candidates},
        {"unfiltered_count", catalog.provenance.unfiltered_count},
    };
    if (! catalog.provenance.filter.empty())
        summary["filter"] = catalog.provenance.filter;
    out << summary.dump() << '\n';
}

auto read_catalog_jsonl(std::istream & in) -> LatticeCatalog
{
    LatticeCatalog cat;
    string line;
    bool closed = false;
    size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty())
            continue;
        if (closed)
            throw Error(ErrorKind::Parse, "catalog line " + std::to_string(line_no) + ": data after summary record");
        auto j = parse_json_text(line, "catalog line " + std::to_string(line_no));
        if (j.value("summary", false)) {
            if (! j.contains("order") || ! j.contains("count"))
                throw Error(ErrorKind::Parse, "catalog summary lacks order or count");
            cat.order = j.at("order").get<size_t>();
            cat.provenance.generator = j.value("generator", "");
            cat.provenance.candidates = j.value("candidates", size_t{0});
            cat.provenance.unfiltered_count = j.value("unfiltered_count", size_t{0});
            cat.provenance.filter = j.value("filter", "");
            if (j.at("count").get<size_t>() != cat.entries.size())
                throw Error(ErrorKind::Parse, "catalog summary count does not match its entries");
            closed = true;
            continue;
        }
        if (! j.contains("canonical_key") || ! j["canonical_key"].is_string())
            throw Error(ErrorKind::Parse, "catalog line " + std::to_string(line_no) + ": missing canonical_key");
        auto lattice = lattice_from_json(j);
        cat.entries.push_back({j["canonical_key"].get<string>(), lattice});
    }
    if (! closed)
        throw Error(ErrorKind::Parse, "catalog has no summary record");
    for (const auto & e : cat.entries)
        if (e.lattice.size() != cat.order)
            throw Error(ErrorKind::Parse, "catalog entry of the wrong order");
    return cat;
}

} // namespace difflat
