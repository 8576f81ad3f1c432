// Command-line front end. Subcommands mirror the library modules:
//   construct, rainbow, convert, sample-reduced, tiling, lp, closed,
//   bound, probe, experiment
// Graphs travel in the ecg/dg text formats (JSON mirrors via --format json).

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <iostream>

#include "rt/closedness.hpp"
#include "rt/constructions.hpp"
#include "rt/convert.hpp"
#include "rt/harness.hpp"
#include "rt/io.hpp"
#include "rt/lp.hpp"
#include "rt/matching.hpp"
#include "rt/rainbow_search.hpp"
#include "rt/random.hpp"
#include "rt/thresholds.hpp"
#include "rt/tiling.hpp"

using nlohmann::json;

namespace {

struct GlobalOpts {
    std::uint64_t seed = 1;
    long budget = 0;
    std::string format = "text";
    std::string out_dir;
};

void emit_graph(const rt::EdgeColouredGraph& g, const GlobalOpts& opt) {
    std::cout << (opt.format == "json" ? rt::write_ecg_json(g) + "\n" : rt::write_ecg(g));
}

void emit_digraph(const rt::Digraph& d, const GlobalOpts& opt) {
    std::cout << (opt.format == "json" ? rt::write_digraph_json(d) + "\n" : rt::write_digraph(d));
}

rt::PackingOptions packing_options(const GlobalOpts& opt) {
    rt::PackingOptions p;
    if (opt.budget > 0) p.node_budget = opt.budget;
    return p;
}

json witness_json(const rt::TilingWitness& w) {
    json parts = json::array();
    for (const auto& p : w.parts) parts.push_back(p);
    return parts;
}

std::string rat(const rt::Rational& q) { return q.get_str(); }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"rainbow tiling toolkit"};
    app.require_subcommand(1);
    GlobalOpts g;
    app.add_option("--seed", g.seed, "random seed")->capture_default_str();
    app.add_option("--budget", g.budget, "branch-and-bound node budget");
    app.add_option("--format", g.format, "text|json")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--out", g.out_dir, "artifact output directory");

    // ---------------- construct ----------------
    auto* construct = app.add_subcommand("construct", "extremal and random instances");
    construct->require_subcommand(1);
    {
        auto* c = construct->add_subcommand("prop15", "three-part rainbow-K_3 extremal graph");
        auto n = std::make_shared<int>(13);
        auto k = std::make_shared<int>(3);
        c->add_option("--n", *n)->required();
        c->add_option("--k", *k)->required();
        c->callback([&g, n, k] { emit_graph(rt::build_prop15(*n, *k), g); });
    }
    {
        auto* c = construct->add_subcommand("prop16", "three-part rainbow-K_r extremal graph");
        auto r = std::make_shared<int>(3);
        auto m = std::make_shared<int>(3);
        c->add_option("--r", *r)->required();
        c->add_option("--m", *m)->required();
        c->callback([&g, r, m] { emit_graph(rt::build_prop16(*r, *m), g); });
    }
    {
        auto* c = construct->add_subcommand("bipartite", "properly coloured K_{n/2,n/2}");
        auto n = std::make_shared<int>(8);
        c->add_option("--n", *n)->required();
        c->callback([&g, n] { emit_graph(rt::build_proper_bipartite(*n), g); });
    }
    {
        auto* c = construct->add_subcommand("rainbow", "rainbow K_n");
        auto n = std::make_shared<int>(6);
        c->add_option("--n", *n)->required();
        c->callback([&g, n] { emit_graph(rt::build_rainbow_complete(*n), g); });
    }
    {
        auto* c = construct->add_subcommand("random", "seeded G(n,p) with q colours");
        auto n = std::make_shared<int>(10);
        auto p = std::make_shared<double>(0.5);
        auto q = std::make_shared<long>(5);
        auto inj = std::make_shared<bool>(false);
        c->add_option("--n", *n)->required();
        c->add_option("--p", *p)->required();
        c->add_option("--q", *q)->required();
        c->add_flag("--injective", *inj, "pairwise distinct colours");
        c->callback([&g, n, p, q, inj] {
            emit_graph(rt::random_coloured(*n, *p, *q, g.seed, *inj), g);
        });
    }

    // ---------------- rainbow ----------------
    auto* rainbow = app.add_subcommand("rainbow", "rainbow clique searches");
    rainbow->require_subcommand(1);
    {
        auto* c = rainbow->add_subcommand("find", "lexicographically least rainbow K_r");
        auto r = std::make_shared<int>(3);
        auto file = std::make_shared<std::string>();
        c->add_option("--r", *r);
        c->add_option("graphfile", *file)->required();
        c->callback([r, file] {
            auto gr = rt::load_ecg(*file);
            auto s = rt::find_rainbow_clique(gr, *r);
            json j;
            j["found"] = s.has_value();
            if (s) j["clique"] = *s;
            std::cout << j.dump() << "\n";
        });
    }
    {
        auto* c = rainbow->add_subcommand("thm13", "verdict for the rainbow triangle theorem");
        auto file = std::make_shared<std::string>();
        c->add_option("graphfile", *file)->required();
        c->callback([file] {
            auto gr = rt::load_ecg(*file);
            auto v = rt::theorem13_verdict(gr);
            json j;
            j["verdict"] = rt::to_string(v.kind);
            if (v.kind == rt::Thm13Kind::rainbow_triangle) j["triangle"] = v.triangle;
            j["min_colour_degree"] = gr.min_colour_degree();
            std::cout << j.dump() << "\n";
        });
    }
    {
        auto* c = rainbow->add_subcommand("transversal",
                                          "rainbow K_r across the parts of a proper complete "
                                          "multipartite graph");
        auto file = std::make_shared<std::string>();
        c->add_option("graphfile", *file)->required();
        c->callback([file] {
            auto res = rt::rainbow_transversal(rt::load_ecg(*file));
            json j;
            j["precondition_ok"] = res.precondition_ok;
            if (!res.precondition_ok) j["error"] = res.precondition_error;
            j["found"] = res.found;
            if (res.found) j["clique"] = res.clique;
            std::cout << j.dump() << "\n";
        });
    }
    {
        auto* c = rainbow->add_subcommand("directed", "triangle with min out-degree 1");
        auto file = std::make_shared<std::string>();
        c->add_option("digraphfile", *file)->required();
        c->callback([file] {
            auto t = rt::find_directed_triangle(rt::load_digraph(*file));
            json j;
            j["found"] = t.has_value();
            if (t) j["triple"] = *t;
            std::cout << j.dump() << "\n";
        });
    }

    // ---------------- convert ----------------
    {
        auto* c = app.add_subcommand("convert", "edge-coloured graph to digraph");
        auto file = std::make_shared<std::string>();
        auto verify = std::make_shared<bool>(false);
        c->add_option("graphfile", *file)->required();
        c->add_flag("--verify", *verify, "re-check the conversion guarantees");
        c->callback([&g, file, verify] {
            auto gr = rt::load_ecg(*file);
            auto res = rt::convert(gr);
            json j;
            j["digraph"] = json::parse(rt::write_digraph_json(res.h));
            const auto& gu = res.guarantees;
            j["guarantees"] = {{"min_out_degree", gu.min_out_degree},
                               {"min_colour_degree", gu.min_colour_degree},
                               {"ceil_sqrt_n", gu.ceil_sqrt_n},
                               {"base_subgraph", gu.base_subgraph},
                               {"out_degree_bound", gu.out_degree_bound},
                               {"out_neighbourhoods_rainbow", gu.out_neighbourhoods_rainbow},
                               {"same_colour_in_bound", gu.same_colour_in_bound},
                               {"colour_path_pair_bound", gu.colour_path_pair_bound}};
            if (*verify) {
                auto again = rt::verify_conversion(gr, res.h);
                j["verified"] = again.all();
                j["bad_triples"] = rt::count_bad_triples(gr, res.h);
            }
            std::cout << j.dump() << "\n";
        });
    }

    // ---------------- sample-reduced ----------------
    {
        auto* c = app.add_subcommand("sample-reduced", "random reduced digraph from densities");
        auto file = std::make_shared<std::string>();
        auto strict = std::make_shared<bool>(false);
        c->add_option("--matrix", *file)->required();
        c->add_flag("--strict", *strict, "fail on the reinterpreted single-arc branch");
        c->callback([&g, file, strict] {
            emit_digraph(rt::sample_reduced_digraph(rt::load_pdm(*file), g.seed, *strict), g);
        });
    }

    // ---------------- tiling ----------------
    auto* tiling = app.add_subcommand("tiling", "exact tiling solvers");
    tiling->require_subcommand(1);
    {
        auto* c = tiling->add_subcommand("max", "maximum rainbow-K_r-tiling");
        auto r = std::make_shared<int>(3);
        auto file = std::make_shared<std::string>();
        c->add_option("--r", *r);
        c->add_option("graphfile", *file)->required();
        c->callback([&g, r, file] {
            auto res = rt::max_rainbow_tiling(rt::load_ecg(*file), *r, packing_options(g));
            json j;
            j["size"] = res.size;
            j["optimal"] = res.optimal;
            j["parts"] = witness_json(res.witness);
            j["nodes"] = res.nodes;
            std::cout << j.dump() << "\n";
        });
    }
    {
        auto* c = tiling->add_subcommand("perfect", "perfect rainbow-K_r-tiling");
        auto r = std::make_shared<int>(3);
        auto file = std::make_shared<std::string>();
        c->add_option("--r", *r);
        c->add_option("graphfile", *file)->required();
        c->callback([&g, r, file] {
            auto res = rt::has_perfect_rainbow_tiling(rt::load_ecg(*file), *r, packing_options(g));
            json j;
            j["outcome"] = rt::to_string(res.outcome);
            if (res.outcome == rt::PerfectOutcome::yes) j["parts"] = witness_json(res.witness);
            std::cout << j.dump() << "\n";
        });
    }
    {
        auto* c = tiling->add_subcommand("family", "perfect digraph family tiling");
        auto r = std::make_shared<int>(3);
        auto s = std::make_shared<int>(1);
        auto star = std::make_shared<bool>(false);
        auto file = std::make_shared<std::string>();
        c->add_option("--r", *r);
        c->add_option("--s", *s);
        c->add_flag("--star", *star, "drop the complete-base requirement");
        c->add_option("digraphfile", *file)->required();
        c->callback([&g, r, s, star, file] {
            auto res =
                rt::perfect_family_tiling(rt::load_digraph(*file), *r, *s, *star, packing_options(g));
            json j;
            j["outcome"] = rt::to_string(res.outcome);
            if (res.outcome == rt::PerfectOutcome::yes) j["parts"] = witness_json(res.witness);
            std::cout << j.dump() << "\n";
        });
    }

    // ---------------- lp ----------------
    auto* lp = app.add_subcommand("lp", "fractional tilings and Farkas certificates");
    lp->require_subcommand(1);
    {
        auto* c = lp->add_subcommand("solve", "maximum fractional (r,r-2)-tiling");
        auto r = std::make_shared<int>(3);
        auto file = std::make_shared<std::string>();
        c->add_option("--r", *r);
        c->add_option("digraphfile", *file)->required();
        c->callback([r, file] {
            auto f = rt::build_copy_hypergraph(rt::load_digraph(*file), *r);
            auto fm = rt::solve_fractional_matching(f);
            json j;
            j["copies"] = f.edges.size();
            j["value"] = rat(fm.value);
            j["perfect"] = fm.perfect;
            json w = json::array();
            for (std::size_t e = 0; e < f.edges.size(); ++e)
                if (fm.weight[e] != 0) w.push_back({{"edge", f.edges[e]}, {"weight", rat(fm.weight[e])}});
            j["weights"] = w;
            std::cout << j.dump() << "\n";
        });
    }
    {
        auto* c = lp->add_subcommand("certificate", "Farkas certificate of infeasibility");
        auto r = std::make_shared<int>(3);
        auto file = std::make_shared<std::string>();
        c->add_option("--r", *r);
        c->add_option("digraphfile", *file)->required();
        c->callback([r, file] {
            auto f = rt::build_copy_hypergraph(rt::load_digraph(*file), *r);
            auto fm = rt::solve_fractional_matching(f);
            if (fm.perfect) {
                std::cerr << "instance has a perfect fractional tiling; no certificate\n";
                std::exit(1);
            }
            auto cert = rt::farkas_certificate(f);
            std::map<int, rt::Rational> w;
            for (int v = 0; v < f.n; ++v) w[v] = cert.omega[v];
            std::cout << rt::write_weighting(w);
        });
    }
    {
        auto* c = lp->add_subcommand("probe", "threshold desk check on random digraphs");
        auto r = std::make_shared<int>(3);
        auto n = std::make_shared<int>(12);
        auto trials = std::make_shared<int>(100);
        auto margin = std::make_shared<std::string>("0");
        c->add_option("--r", *r);
        c->add_option("--n", *n)->required();
        c->add_option("--trials", *trials);
        c->add_option("--margin", *margin, "rational offset to the threshold");
        c->callback([&g, r, n, trials, margin] {
            auto stats =
                rt::desk_check_thresholds(*r, *n, *trials, rt::parse_rational(*margin), g.seed);
            json j;
            j["r"] = stats.r;
            j["n"] = stats.n;
            j["trials"] = stats.trials;
            j["min_out_degree"] = stats.min_out_degree;
            j["feasible"] = stats.feasible;
            j["infeasible"] = stats.infeasible.size();
            if (!g.out_dir.empty()) {
                std::filesystem::create_directories(g.out_dir);
                json files = json::array();
                for (std::size_t i = 0; i < stats.infeasible.size(); ++i) {
                    const auto& inst = stats.infeasible[i];
                    std::string base = g.out_dir + "/infeasible_" + std::to_string(i);
                    rt::save_text(base + ".dg", rt::write_digraph(inst.digraph));
                    std::map<int, rt::Rational> w;
                    for (int v = 0; v < inst.digraph.n(); ++v) w[v] = inst.certificate[v];
                    rt::save_text(base + ".cert", rt::write_weighting(w));
                    files.push_back(base);
                }
                j["artifacts"] = files;
            }
            std::cout << j.dump() << "\n";
        });
    }

    // ---------------- closed ----------------
    auto* closed = app.add_subcommand("closed", "connector counts and weak closure");
    closed->require_subcommand(1);
    {
        auto* c = closed->add_subcommand("connectors", "minimum connector count over pairs");
        auto r = std::make_shared<int>(3);
        auto s = std::make_shared<int>(1);
        auto file = std::make_shared<std::string>();
        c->add_option("--r", *r);
        c->add_option("--s", *s);
        c->add_option("graphfile", *file)->required();
        c->callback([r, s, file] {
            auto rep = rt::closedness_report(rt::load_ecg(*file), *r, *s);
            json j;
            j["r"] = rep.r;
            j["s"] = rep.s;
            j["min_count"] = rep.min_count;
            j["worst_pair"] = {rep.worst_pair.first, rep.worst_pair.second};
            j["eta"] = rat(rep.eta);
            std::cout << j.dump() << "\n";
        });
    }
    {
        auto* c = closed->add_subcommand("weak", "weak s-connectivity closure");
        auto smax = std::make_shared<int>(8);
        auto file = std::make_shared<std::string>();
        c->add_option("--smax", *smax);
        c->add_option("digraphfile", *file)->required();
        c->callback([smax, file] {
            auto wc = rt::weak_closure(rt::load_digraph(*file), *smax);
            json pairs = json::array();
            for (int x = 0; x < wc.n; ++x)
                for (int y = x + 1; y < wc.n; ++y)
                    if (wc.pair_certified(x, y)) pairs.push_back({x, y, wc.at(x, y)});
            json j;
            j["n"] = wc.n;
            j["s_max"] = wc.s_max;
            j["pairs"] = pairs;
            j["classes"] = wc.classes();
            std::cout << j.dump() << "\n";
        });
    }

    // ---------------- bound ----------------
    auto* bound = app.add_subcommand("bound", "closed-form bounds");
    bound->require_subcommand(1);
    {
        auto* c = bound->add_subcommand("eg", "guaranteed matching size from the edge count");
        auto n = std::make_shared<long>(10);
        auto e = std::make_shared<long>(21);
        c->add_option("--n", *n)->required();
        c->add_option("--e", *e)->required();
        c->callback([n, e] {
            json j;
            j["n"] = *n;
            j["e"] = *e;
            j["matching"] = rt::eg_bound(*n, *e);
            std::cout << j.dump() << "\n";
        });
    }
    {
        auto* c = bound->add_subcommand("abhp", "edge count forcing alpha*n disjoint triangles");
        auto n = std::make_shared<long>(12);
        auto alpha = std::make_shared<std::string>("1/3");
        auto gamma = std::make_shared<std::string>("0");
        c->add_option("--n", *n)->required();
        c->add_option("--alpha", *alpha)->required();
        c->add_option("--gamma", *gamma);
        c->callback([n, alpha, gamma] {
            json j;
            j["n"] = *n;
            j["edges"] = rat(rt::abhp_bound(*n, rt::parse_rational(*alpha),
                                            rt::parse_rational(*gamma)));
            std::cout << j.dump() << "\n";
        });
    }
    {
        auto* c = bound->add_subcommand("threshold", "out-degree / colour-degree coefficients");
        auto r = std::make_shared<int>(3);
        c->add_option("--r", *r)->required();
        c->callback([r] {
            auto f = rt::threshold_formula(*r);
            json j;
            j["r"] = f.r;
            if (f.surd) {
                j["threshold"] = {{"form", "(a+sqrt(s))/d"},
                                  {"a", f.surd_add},
                                  {"s", rat(f.surd_radicand)},
                                  {"d", f.surd_den}};
            } else {
                j["threshold"] = rat(f.value);
            }
            j["threshold_approx"] = f.approx();
            j["conjecture"] = rat(f.conjecture);
            std::cout << j.dump() << "\n";
        });
    }

    // ---------------- probe ----------------
    {
        auto* c = app.add_subcommand("probe", "conjectured colour-degree bound probe");
        auto r = std::make_shared<int>(3);
        auto n = std::make_shared<int>(12);
        auto trials = std::make_shared<int>(50);
        c->add_option("--r", *r);
        c->add_option("--n", *n)->required();
        c->add_option("--trials", *trials);
        c->callback([&g, r, n, trials] {
            auto rep = rt::probe_conjecture(*r, *n, *trials, g.seed, g.budget);
            json j;
            j["r"] = rep.r;
            j["n"] = rep.n;
            j["bound"] = rep.bound;
            int tiled = 0, untiled = 0, unknown = 0, skipped = 0;
            for (const auto& inst : rep.instances) {
                if (inst.outcome == "tiled") ++tiled;
                else if (inst.outcome == "untiled") ++untiled;
                else if (inst.outcome == "unknown") ++unknown;
                else ++skipped;
            }
            j["tiled"] = tiled;
            j["untiled"] = untiled;
            j["unknown"] = unknown;
            j["skipped"] = skipped;
            j["potential_counterexamples"] = rep.potential_counterexamples.size();
            json checks = json::array();
            for (const auto& [name, ok] : rep.construction_checks)
                checks.push_back({{"construction", name}, {"confirmed", ok}});
            j["construction_checks"] = checks;
            std::cout << j.dump() << "\n";
        });
    }

    // ---------------- experiment ----------------
    {
        auto* c = app.add_subcommand("experiment", "config-driven experiment runner");
        auto file = std::make_shared<std::string>();
        c->add_option("config", *file)->required();
        c->callback([&g, file] {
            if (!g.out_dir.empty()) std::filesystem::create_directories(g.out_dir);
            auto res = rt::run_experiment_file(*file, g.out_dir);
            if (g.out_dir.empty()) {
                std::cout << res.csv;
            } else {
                std::string path = g.out_dir + "/experiment.csv";
                rt::save_text(path, res.csv);
                std::cout << path << "\n";
            }
        });
    }

    try {
        CLI11_PARSE(app, argc, argv);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
