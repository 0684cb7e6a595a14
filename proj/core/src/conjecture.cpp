#include <difflat/conjecture.hpp>
#include <difflat/error.hpp>

#include <algorithm>
#include <atomic>
#include <map>
#include <thread>

namespace difflat {

using nlohmann::json;
using std::size_t;
using std::string;
using std::vector;

auto ConjectureRun::counterexamples() const -> size_t
{
    return static_cast<size_t>(std::count_if(lattices.begin(), lattices.end(), [](auto & r) { return ! r.do_is_lattice; }));
}

auto ConjectureRun::verified_up_to() const -> size_t
{
    size_t verified = min_order > 0 ? min_order - 1 : 0;
    for (auto order = min_order; order <= max_order; ++order) {
        auto bad = std::any_of(lattices.begin(), lattices.end(),
            [&](auto & r) { return r.order == order && ! r.do_is_lattice; });
        if (bad)
            break;
        verified = order;
    }
    return verified;
}

auto ConjectureRun::determination_failures() const -> size_t
{
    return static_cast<size_t>(std::count_if(collisions.begin(), collisions.end(),
        [](auto & c) { return c.posets_isomorphic && ! c.lattices_isomorphic; }));
}

auto run_conjecture(const ConjectureOptions & options) -> ConjectureRun
{
    if (options.min_order < 1 || options.min_order > options.max_order)
        throw Error(ErrorKind::BadInput, "conjecture order range is empty");
    ConjectureRun run;
    run.min_order = options.min_order;
    run.max_order = options.max_order;

    struct Item {
        FinLattice lattice;
        FinPoset poset;
    };
    vector<Item> items;

    for (auto order = options.min_order; order <= options.max_order; ++order) {
        auto catalog = enumerate_lattices(order, options.catalog);
        auto m = catalog.size();
        vector<std::optional<ConjectureReport>> reports(m);
        vector<std::optional<FinPoset>> posets(m);
        std::atomic<size_t> cursor{0};
        auto worker = [&] {
            for (size_t i = cursor++; i < m; i = cursor++) {
                const auto & e = catalog.entries[i];
                auto set = enumerate_derivations(e.lattice);
                posets[i] = build_do_poset(set);
                reports[i] = conjecture_probe(set, e.key);
            }
        };
        auto threads = std::min<size_t>(std::max(1U, options.jobs), m);
        if (threads <= 1) {
            worker();
        } else {
            vector<std::thread> pool;
            for (size_t t = 0; t < threads; ++t)
                pool.emplace_back(worker);
            for (auto & t : pool)
                t.join();
        }
        for (size_t i = 0; i < m; ++i) {
            run.lattices.push_back(std::move(*reports[i]));
            items.push_back({catalog.entries[i].lattice, std::move(*posets[i])});
        }
        if (options.progress)
            options.progress(order, m);
    }

    std::map<string, vector<size_t>> groups;
    for (size_t i = 0; i < run.lattices.size(); ++i)
        groups[run.lattices[i].do_poset_key].push_back(i);
    for (auto & [key, members] : groups)
        for (size_t a = 0; a < members.size(); ++a)
            for (size_t b = a + 1; b < members.size(); ++b) {
                PosetCollision c;
                c.first = members[a];
                c.second = members[b];
                c.do_poset_key = key;
                c.posets_isomorphic = find_poset_isomorphism(items[c.first].poset, items[c.second].poset).has_value();
                c.lattices_isomorphic = are_isomorphic(items[c.first].lattice, items[c.second].lattice).has_value();
                run.collisions.push_back(std::move(c));
            }
    std::sort(run.collisions.begin(), run.collisions.end(),
        [](auto & x, auto & y) { return std::pair{x.first, x.second} < std::pair{y.first, y.second}; });
    return run;
}

auto to_json(const ConjectureReport & report) -> json
{
    json j = {
        {"order", report.order},
        {"canonical_key", report.canonical_key},
        {"do_size", report.do_size},
        {"do_is_lattice", report.do_is_lattice},
        {"do_poset_canonical_key", report.do_poset_key},
    };
    if (report.certificate) {
        const auto & c = *report.certificate;
        const auto & imgs = report.certificate_images;
        json bounds = json::array();
        for (size_t i = 2; i < imgs.size(); ++i)
            bounds.push_back(imgs[i]);
        j["certificate"] = {
            {"missing", c.kind == LatticeCertificate::Kind::MissingJoin ? "join" : "meet"},
            {"x", imgs.at(0)},
            {"y", imgs.at(1)},
            {"bounds", bounds},
        };
    }
    return j;
}

auto to_json(const ConjectureRun & run) -> json
{
    json lattices = json::array();
    for (auto & r : run.lattices)
        lattices.push_back(to_json(r));
    json collisions = json::array();
    for (auto & c : run.collisions)
        collisions.push_back({
            {"first", run.lattices[c.first].canonical_key},
            {"second", run.lattices[c.second].canonical_key},
            {"do_poset_canonical_key", c.do_poset_key},
            {"posets_isomorphic", c.posets_isomorphic},
            {"lattices_isomorphic", c.lattices_isomorphic},
        });
    return {
        {"min_order", run.min_order},
        {"max_order", run.max_order},
        {"lattice_count", run.lattices.size()},
        {"counterexamples", run.counterexamples()},
        {"verified_up_to", run.verified_up_to()},
        {"determination_failures", run.determination_failures()},
        {"lattices", lattices},
        {"collisions", collisions},
    };
}

} // namespace difflat
