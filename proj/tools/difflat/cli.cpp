#include "cli.hpp"
#include "claims.hpp"

#include <difflat/catalog.hpp>
#include <difflat/classification.hpp>
#include <difflat/conjecture.hpp>
#include <difflat/derposet.hpp>
#include <difflat/dot.hpp>
#include <difflat/error.hpp>
#include <difflat/serialize.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <ostream>
#include <thread>

namespace difflat::cli {

using nlohmann::json;
using std::size_t;
using std::string;
using std::vector;

namespace {
    auto write_text(const string & path, const string & text) -> void
    {
        std::ofstream f(path, std::ios::binary);
        if (! f)
            throw Error(ErrorKind::BadInput, "cannot write " + path);
        f << text;
        if (! f)
            throw Error(ErrorKind::BadInput, "write failed for " + path);
    }

    auto images_json(const DerivationSet & set) -> json
    {
        auto out = json::array();
        for (const auto & d : set)
            out.push_back(vector<Elem>(d.image().begin(), d.image().end()));
        return out;
    }

    auto resolve_jobs(unsigned jobs) -> unsigned
    {
        if (jobs == 0)
            return std::max(1U, std::thread::hardware_concurrency());
        return jobs;
    }

    // ---- gen ----------------------------------------------------------------

    struct GenArgs {
        string family;
        size_t n = 0;
        string out;
    };

    auto cmd_gen(const GenArgs & a, std::ostream & out) -> int
    {
        FinLattice l = [&] {
            if (a.family == "chain")
                return make_chain(a.n);
            if (a.family == "mn")
                return make_mn(a.n);
            if (a.family == "boolean")
                return make_boolean(a.n);
            if (a.family == "n5")
                return make_n5();
            throw Error(ErrorKind::BadInput, "unknown family '" + a.family + "' (chain, mn, boolean, n5)");
        }();
        auto text = lattice_to_json(l).dump(2) + "\n";
        if (a.out.empty())
            out << text;
        else
            write_text(a.out, text);
        return exit_ok;
    }

    // ---- derivations ------------------------------------------------------

    struct DerivationsArgs {
        string lattice;
        bool count = false;
        bool isotone_only = false;
        string format = "json";
        unsigned jobs = 1;
    };

    auto cmd_derivations(const DerivationsArgs & a, std::ostream & out) -> int
    {
        auto l = read_lattice_file(a.lattice);
        auto set = enumerate_derivations(l, {resolve_jobs(a.jobs)});
        vector<const Derivation *> chosen;
        for (const auto & d : set)
            if (! a.isotone_only || d.isotone())
                chosen.push_back(&d);

        if (a.format == "table") {
            if (a.count) {
                out << chosen.size() << "\n";
                return exit_ok;
            }
            for (size_t i = 0; i < chosen.size(); ++i)
                out << (i ? "\n" : "") << two_row_table(chosen[i]->map());
            return exit_ok;
        }
        json j = {{"n", l.size()}, {"count", chosen.size()}, {"isotone_only", a.isotone_only}};
        if (! a.count) {
            auto list = json::array();
            for (const auto * d : chosen) {
                auto item = derivation_to_json(d->map());
                item["isotone"] = d->isotone();
                list.push_back(std::move(item));
            }
            j["derivations"] = std::move(list);
        }
        out << j.dump(2) << "\n";
        return exit_ok;
    }

    // ---- classify -----------------------------------------------------------

    struct ClassifyArgs {
        string lattice;
        bool witnesses = false;
        unsigned jobs = 1;
    };

    auto cmd_classify(const ClassifyArgs & a, std::ostream & out) -> int
    {
        auto l = read_lattice_file(a.lattice);
        auto set = enumerate_derivations(l, {resolve_jobs(a.jobs)});
        auto cls = classify(set);
        auto classes = json::array();
        for (const auto & c : cls.classes()) {
            json item = {
                {"invariant", {{"fix_size", c.invariant.fix_size}, {"top_is_zero", c.invariant.top_is_zero}}},
                {"size", c.members.size()},
                {"representative", derivation_to_json(set[c.representative].map())["image"]},
            };
            auto members = json::array();
            for (auto m : c.members)
                members.push_back(derivation_to_json(set[m].map())["image"]);
            item["members"] = std::move(members);
            if (a.witnesses) {
                auto w = json::array();
                for (const auto & p : c.witnesses)
                    w.push_back(p.image);
                item["witnesses"] = std::move(w);
            }
            classes.push_back(std::move(item));
        }
        out << json{{"n", l.size()}, {"derivations", set.size()}, {"class_count", cls.size()}, {"classes", classes}}.dump(2)
            << "\n";
        return exit_ok;
    }

    // ---- doposet ------------------------------------------------------------

    struct DoposetArgs {
        string lattice;
        bool check_lattice = false;
        string dot;
        unsigned jobs = 1;
    };

    auto cmd_doposet(const DoposetArgs & a, std::ostream & out) -> int
    {
        auto l = read_lattice_file(a.lattice);
        auto set = enumerate_derivations(l, {resolve_jobs(a.jobs)});
        auto poset = build_do_poset(set);
        json j = {{"n", l.size()}, {"size", set.size()}, {"elements", images_json(set)}};
        auto covers = json::array();
        for (auto [lo, hi] : poset.covers())
            covers.push_back({lo, hi});
        j["covers"] = std::move(covers);
        if (a.check_lattice) {
            auto report = to_json(conjecture_probe(set, canonical_key(l)));
            j["is_lattice"] = report["do_is_lattice"];
            if (report.contains("certificate"))
                j["certificate"] = report["certificate"];
            j["do_poset_canonical_key"] = report["do_poset_canonical_key"];
        }
        if (! a.dot.empty()) {
            auto text = poset_to_dot(
                poset,
                [&](size_t i) {
                    string s;
                    for (auto v : set[i].image())
                        s += l.label(v) + " ";
                    if (! s.empty())
                        s.pop_back();
                    return s;
                },
                "do_poset");
            write_text(a.dot, text);
        }
        out << j.dump(2) << "\n";
        return exit_ok;
    }

    // ---- catalog ------------------------------------------------------------

    struct CatalogArgs {
        size_t order = 0;
        string out;
        string filter;
        unsigned jobs = 1;
    };

    auto cmd_catalog(const CatalogArgs & a, std::ostream & out) -> int
    {
        auto catalog = enumerate_lattices(a.order, catalog_options_from_env(resolve_jobs(a.jobs)));
        if (! a.filter.empty())
            catalog = catalog_filter(catalog, parse_catalog_filter(a.filter));
        if (a.out.empty()) {
            write_catalog_jsonl(catalog, out);
        } else {
            std::ofstream f(a.out, std::ios::binary);
            if (! f)
                throw Error(ErrorKind::BadInput, "cannot write " + a.out);
            write_catalog_jsonl(catalog, f);
            out << json{{"order", catalog.order}, {"count", catalog.size()}, {"out", a.out}}.dump() << "\n";
        }
        return exit_ok;
    }

    // ---- conjecture ---------------------------------------------------------

    struct ConjectureArgs {
        size_t min_order = 1;
        size_t max_order = 6;
        unsigned jobs = 1;
        string report;
    };

    auto cmd_conjecture(const ConjectureArgs & a, std::ostream & out, std::ostream & err) -> int
    {
        ConjectureOptions options;
        options.min_order = a.min_order;
        options.max_order = a.max_order;
        options.jobs = resolve_jobs(a.jobs);
        options.catalog = catalog_options_from_env(options.jobs);
        options.progress = [&](size_t order, size_t count) {
            err << "order " << order << ": " << count << " lattices\n";
        };
        auto run = run_conjecture(options);
        auto full = to_json(run);
        if (! a.report.empty())
            write_text(a.report, full.dump(2) + "\n");
        json summary = {
            {"min_order", run.min_order},
            {"max_order", run.max_order},
            {"lattices", run.lattices.size()},
            {"counterexamples", run.counterexamples()},
            {"verified_up_to", run.verified_up_to()},
            {"collisions", run.collisions.size()},
            {"determination_failures", run.determination_failures()},
        };
        auto found = json::array();
        for (const auto & r : run.lattices)
            if (! r.do_is_lattice)
                found.push_back(to_json(r));
        summary["counterexample_reports"] = std::move(found);
        out << summary.dump(2) << "\n";
        return exit_ok;
    }

    // ---- verify -------------------------------------------------------------

    struct VerifyArgs {
        string suite = "quick";
        size_t max_n = 0;
        string report;
        string format = "json";
        unsigned jobs = 1;
    };

    auto cmd_verify(const VerifyArgs & a, std::ostream & out, std::ostream & err) -> int
    {
        if (! is_known_suite(a.suite)) {
            err << "error: unknown suite '" << a.suite << "' (expected quick or paper)\n";
            return exit_usage;
        }
        VerifyContext ctx{a.max_n ? a.max_n : suite_default_max_n(a.suite), resolve_jobs(a.jobs)};
        auto report = run_claims(a.suite, ctx);
        auto j = report.to_json();
        if (! a.report.empty())
            write_text(a.report, j.dump(2) + "\n");
        if (a.format == "table") {
            for (const auto & r : report.results) {
                bool ok = r.outcome.pass && r.error.empty();
                out << (ok ? "PASS " : "FAIL ") << std::left << std::setw(26) << r.id << std::right << std::setw(10)
                    << std::fixed << std::setprecision(1) << r.runtime_ms << " ms  " << r.outcome.scope;
                if (! r.error.empty())
                    out << "  error: " << r.error;
                out << "\n";
            }
        } else {
            out << j.dump(2) << "\n";
        }
        return report.passed() ? exit_ok : exit_claim_failed;
    }

    // ---- show ---------------------------------------------------------------

    struct ShowArgs {
        string lattice;
        string derivation;
        string dot;
    };

    auto cmd_show(const ShowArgs & a, std::ostream & out) -> int
    {
        auto l = read_lattice_file(a.lattice);
        if (! a.derivation.empty()) {
            auto d = Derivation::from(OperatorMap(l, parse_image_spec(l, a.derivation)));
            out << two_row_table(d.map());
        }
        if (! a.dot.empty()) {
            auto text = lattice_to_dot(l);
            if (a.dot == "-")
                out << text;
            else
                write_text(a.dot, text);
        }
        if (a.derivation.empty() && a.dot.empty())
            out << lattice_to_json(l).dump(2) << "\n";
        return exit_ok;
    }
} // namespace

auto run_cli(int argc, const char * const * argv, std::ostream & out, std::ostream & err) -> int
{
    CLI::App app{"Derivations on finite lattices"};
    app.name("difflat");
    app.require_subcommand(1);

    GenArgs gen;
    auto * gen_cmd = app.add_subcommand("gen", "Emit a standard lattice as JSON");
    gen_cmd->add_option("family", gen.family, "chain, mn, boolean or n5")->required();
    gen_cmd->add_option("n", gen.n, "Order (chain, mn) or number of atoms (boolean)");
    gen_cmd->add_option("--out", gen.out, "Write to a file instead of stdout");

    DerivationsArgs der;
    auto * der_cmd = app.add_subcommand("derivations", "List every derivation of a lattice");
    der_cmd->add_option("lattice", der.lattice, "Lattice JSON file")->required();
    der_cmd->add_flag("--count", der.count, "Only report the count");
    der_cmd->add_flag("--isotone-only", der.isotone_only, "Keep isotone derivations only");
    der_cmd->add_option("--format", der.format)->check(CLI::IsMember({"json", "table"}));
    der_cmd->add_option("--jobs", der.jobs, "Worker threads (0 = all cores)");

    ClassifyArgs cls;
    auto * cls_cmd = app.add_subcommand("classify", "Group derivations into isomorphism classes");
    cls_cmd->add_option("lattice", cls.lattice, "Lattice JSON file")->required();
    cls_cmd->add_flag("--witnesses", cls.witnesses, "Include conjugating automorphisms");
    cls_cmd->add_option("--jobs", cls.jobs, "Worker threads (0 = all cores)");

    DoposetArgs dop;
    auto * dop_cmd = app.add_subcommand("doposet", "The pointwise order on derivations");
    dop_cmd->add_option("lattice", dop.lattice, "Lattice JSON file")->required();
    dop_cmd->add_flag("--check-lattice", dop.check_lattice, "Test whether the poset is a lattice");
    dop_cmd->add_option("--dot", dop.dot, "Write the Hasse diagram as DOT");
    dop_cmd->add_option("--jobs", dop.jobs, "Worker threads (0 = all cores)");

    CatalogArgs cat;
    auto * cat_cmd = app.add_subcommand("catalog", "All lattices of one order up to isomorphism");
    cat_cmd->add_option("--order", cat.order, "Number of elements (1..9)")->required();
    cat_cmd->add_option("--out", cat.out, "JSON-lines output file");
    cat_cmd->add_option("--filter", cat.filter)->check(CLI::IsMember({"distributive", "modular", "chain"}));
    cat_cmd->add_option("--jobs", cat.jobs, "Worker threads (0 = all cores)");

    ConjectureArgs con;
    auto * con_cmd = app.add_subcommand("conjecture", "Check whether DO(L) is a lattice across the catalog");
    con_cmd->add_option("--max-order", con.max_order)->required();
    con_cmd->add_option("--min-order", con.min_order);
    con_cmd->add_option("--jobs", con.jobs, "Worker threads (0 = all cores)");
    con_cmd->add_option("--report", con.report, "Write the per-lattice report as JSON");

    VerifyArgs ver;
    auto * ver_cmd = app.add_subcommand("verify", "Run the registered claims");
    ver_cmd->add_option("--suite", ver.suite, "quick or paper");
    ver_cmd->add_option("--max-n", ver.max_n, "Largest order to check (default depends on suite)");
    ver_cmd->add_option("--report", ver.report, "Write the report as JSON");
    ver_cmd->add_option("--format", ver.format)->check(CLI::IsMember({"json", "table"}));
    ver_cmd->add_option("--jobs", ver.jobs, "Worker threads (0 = all cores)");

    ShowArgs show;
    auto * show_cmd = app.add_subcommand("show", "Render a derivation or a lattice");
    show_cmd->add_option("lattice", show.lattice, "Lattice JSON file")->required();
    show_cmd->add_option("--derivation", show.derivation, "Comma-separated images, by label or id");
    show_cmd->add_option("--dot", show.dot, "Write the lattice as DOT ('-' for stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError & e) {
        auto code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (*gen_cmd) {
            if (gen.family != "n5" && gen.n == 0)
                throw Error(ErrorKind::BadInput, "gen " + gen.family + " needs a size");
            return cmd_gen(gen, out);
        }
        if (*der_cmd)
            return cmd_derivations(der, out);
        if (*cls_cmd)
            return cmd_classify(cls, out);
        if (*dop_cmd)
            return cmd_doposet(dop, out);
        if (*cat_cmd)
            return cmd_catalog(cat, out);
        if (*con_cmd)
            return cmd_conjecture(con, out, err);
        if (*ver_cmd)
            return cmd_verify(ver, out, err);
        if (*show_cmd)
            return cmd_show(show, out);
    } catch (const Error & e) {
        err << "error: " << e.what() << "\n";
        if (e.kind() == ErrorKind::Internal || e.kind() == ErrorKind::IsoFailure)
            return exit_claim_failed;
        return exit_usage;
    } catch (const std::exception & e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    }
    return exit_usage;
}

} // namespace difflat::cli
