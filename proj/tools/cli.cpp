#include "geoclique/cli.hpp"

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "geoclique/bipartite.hpp"
#include "geoclique/cliquefront.hpp"
#include "geoclique/dimacs.hpp"
#include "geoclique/eptas.hpp"
#include "geoclique/errors.hpp"
#include "geoclique/generators.hpp"
#include "geoclique/instance_io.hpp"
#include "geoclique/oracle.hpp"

namespace geoclique {

namespace {

struct ParamFlags {
    double epsilon = 0.2;
    double beta = 1.0;
    int d = 4;
    int iocp = 1;
    std::string mode = "practical";
    std::uint64_t seed = 0;
    std::int64_t s_cap = 0;
    std::int64_t t_cap = 1000;
    bool strict = false;

    void attach(CLI::App* app) {
        app->add_option("--epsilon", epsilon, "approximation parameter in (0, 1]");
        app->add_option("--beta", beta, "lower bound on alpha / n");
        app->add_option("--d", d, "neighborhood VC-dimension bound");
        app->add_option("--iocp", iocp, "induced odd cycle packing bound");
        app->add_option("--mode", mode, "faithful or practical")->check(CLI::IsMember({"faithful", "practical"}));
        app->add_option("--seed", seed, "random seed (default: $GEOCLIQUE_SEED or 0)");
        app->add_option("--s-cap", s_cap, "practical sample size cap (0: max(1, n/4))");
        app->add_option("--t-cap", t_cap, "practical iteration cap");
        app->add_flag("--strict", strict, "fail instead of falling back when a promised bipartite part is not");
    }

    EptasParams params() const {
        EptasParams p;
        p.epsilon = epsilon;
        p.beta = beta;
        p.d = d;
        p.iocp = iocp;
        p.mode = mode == "faithful" ? EptasMode::faithful : EptasMode::practical;
        p.seed = seed;
        if (s_cap > 0) p.s_cap = s_cap;
        p.t_cap = t_cap;
        p.robust = !strict;
        return p;
    }
};

std::uint64_t default_seed() {
    if (const char* env = std::getenv("GEOCLIQUE_SEED")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw MalformedInput(std::string("GEOCLIQUE_SEED is not an unsigned integer: ") + env);
        }
    }
    return 0;
}

Json optional_count(double t) {
    if (std::isfinite(t) && t < 9.2e18) return static_cast<std::int64_t>(t);
    return nullptr;
}

Json constants_json(const DerivedConstants& dc) {
    Json j;
    j["c"] = dc.c;
    j["delta"] = dc.delta;
    j["s"] = dc.s;
    j["t"] = optional_count(dc.t);
    j["log10_t"] = dc.log10_t;
    j["z"] = dc.z;
    j["blocks"] = dc.blocks;
    j["layer_window"] = dc.layer_window;
    j["s_eff"] = dc.s_eff;
    j["t_eff"] = dc.t_eff;
    return j;
}

Json params_json(const EptasParams& p) {
    Json j;
    j["epsilon"] = p.epsilon;
    j["beta"] = p.beta;
    j["d"] = p.d;
    j["iocp"] = p.iocp;
    j["mode"] = p.mode == EptasMode::faithful ? "faithful" : "practical";
    j["seed"] = p.seed;
    j["s_cap"] = p.s_cap ? Json(*p.s_cap) : Json(nullptr);
    j["t_cap"] = p.t_cap;
    j["strict"] = !p.robust;
    return j;
}

Json diagnostics_json(const EptasDiagnostics& d) {
    Json j;
    j["branch"] = to_string(d.best_branch);
    j["iteration"] = d.best_iteration;
    j["g"] = d.best_g;
    j["lambda"] = d.best_lambda;
    j["cut_layer"] = d.best_cut_layer;
    j["gamma"] = d.best_block;
    Json c;
    c["iterations"] = d.iterations;
    c["rejected_samples"] = d.rejected_samples;
    c["duplicate_samples"] = d.duplicate_samples;
    c["exact_runs"] = d.exact_runs;
    c["bipartite_branches"] = d.bipartite_branches;
    c["short_cycle_branches"] = d.short_cycle_branches;
    c["long_cycle_branches"] = d.long_cycle_branches;
    c["coloring_checks"] = d.coloring_checks;
    c["coloring_violations"] = d.coloring_violations;
    c["block_shortfalls"] = d.block_shortfalls;
    c["assumption_violations"] = d.assumption_violations;
    c["fallbacks"] = d.fallbacks;
    c["recursive_calls"] = d.recursive_calls;
    j["counters"] = std::move(c);
    j["violations"] = d.violations;
    return j;
}

std::optional<Edge> first_offending_pair(const Graph& g, const VertexSet& s, bool want_adjacent) {
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (g.adjacent(s[i], s[j]) != want_adjacent) return Edge{s[i], s[j]};
    return std::nullopt;
}

struct Check {
    bool pass = false;
    std::string message;
    std::optional<Edge> pair;
};

// Independent re-verification of a claimed solution against the instance.
Check check_solution(const InstanceDocument& doc, const Graph& g, const std::string& problem, const VertexSet& s) {
    Check c;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] < 0 || s[i] >= g.n()) {
            c.message = "vertex " + std::to_string(s[i]) + " out of range";
            return c;
        }
        if (i > 0 && s[i] <= s[i - 1]) {
            c.message = "vertex list is not strictly increasing";
            return c;
        }
    }
    if (problem == "mis") {
        c.pair = first_offending_pair(g, s, false);
        if (c.pair) c.message = "vertices " + std::to_string(c.pair->first) + " and " + std::to_string(c.pair->second) + " are adjacent";
    } else if (problem == "clique" || problem == "diameter-one") {
        c.pair = first_offending_pair(g, s, true);
        if (c.pair) c.message = "vertices " + std::to_string(c.pair->first) + " and " + std::to_string(c.pair->second) + " are not adjacent";
        if (!c.pair && problem == "diameter-one") {
            if (!doc.geometry) {
                c.message = "diameter claim needs a point instance";
                return c;
            }
            std::vector<Point> pts;
            for (Vertex v : s) pts.push_back(doc.geometry->center(v));
            if (!pts.empty() && diameter(pts, Exec::serial) > 1.0) {
                c.message = "diameter exceeds 1";
                return c;
            }
        }
    } else {
        c.message = "unknown problem '" + problem + "'";
        return c;
    }
    c.pass = !c.pair;
    if (c.pass) c.message = "ok";
    return c;
}

// Radius when every object has the same one (points: half the threshold).
std::optional<double> common_radius(const GeometricInstance& inst) {
    if (inst.kind == InstanceKind::points) return inst.threshold / 2.0;
    if (inst.balls.empty()) return 1.0;
    if (!inst.equal_radii()) return std::nullopt;
    return inst.balls.front().radius;
}

GeometricInstance as_disks(const GeometricInstance& inst) {
    if (inst.kind == InstanceKind::balls) return inst;
    std::vector<Ball> balls;
    for (const auto& p : inst.points) balls.push_back({p, inst.threshold / 2.0});
    auto out = GeometricInstance::from_balls(inst.dim, std::move(balls));
    out.weights = inst.weights;
    return out;
}

struct SolveFlags {
    std::string input;
    std::string problem;
    std::string method = "eptas";
    std::string out;
    bool force = false;
    ParamFlags params;
};

Json solve_document(const SolveFlags& f, Exec exec) {
    const auto start = std::chrono::steady_clock::now();
    const InstanceDocument doc = read_instance_file(f.input);
    const Graph g = doc.resolve_graph();
    std::string problem = f.problem.empty() ? (doc.geometry ? "clique" : "mis") : f.problem;
    EptasParams p = f.params.params();
    p.exec = exec;

    VertexSet vertices;
    std::string method = f.method;
    std::optional<EptasDiagnostics> diag;
    std::optional<DerivedConstants> constants;
    Json extra = Json::object();

    auto eptas_on = [&](const Graph& h) {
        EptasResult r = run_eptas_iocp(h, p);
        diag = r.diagnostics;
        constants = compute_constants(p);
        return r.vertices;
    };
    auto from_clique = [&](CliqueSolution s) {
        method = s.method;
        if (s.method.rfind("eptas", 0) == 0) {
            p.beta = s.beta;
            p.d = 4;
            diag = s.diagnostics;
            constants = compute_constants(p);
            extra["branches"] = s.branches;
            extra["pruned"] = s.pruned;
        }
        if (s.degenerate_pairs > 0) extra["degenerate_pairs"] = s.degenerate_pairs;
        return s.vertices;
    };

    if (problem == "mis") {
        if (f.method == "eptas") {
            vertices = eptas_on(g);
        } else if (f.method == "exact" || f.method == "brute") {
            vertices = brute_force_mis(g, g.weighted());
        } else if (f.method == "bipartite") {
            auto coloring = bipartite_2coloring(g);
            if (!coloring) throw AssumptionViolation("graph is not bipartite (has an odd cycle)");
            vertices = solve_bipartite_mis(g, *coloring);
        } else if (f.method == "greedy") {
            vertices = greedy_independent_set(g);
        } else {
            throw PreconditionError("unknown method '" + f.method + "'");
        }
    } else if (problem == "clique") {
        const GeometricInstance* geo = doc.geometry ? &*doc.geometry : nullptr;
        if (f.method == "eptas") {
            if (geo && geo->dim == 2) {
                vertices = from_clique(max_clique_disks(as_disks(*geo), p));
            } else if (geo && geo->dim == 3) {
                vertices = from_clique(max_clique_unit_balls(*geo, p, f.force));
            } else {
                method = "eptas-complement";
                vertices = eptas_on(complement(g));
            }
        } else if (f.method == "exact") {
            const auto r = geo && geo->dim == 2 ? common_radius(*geo) : std::nullopt;
            if (r && geo->weights.empty()) {
                std::vector<Point> centers;
                for (std::size_t i = 0; i < geo->size(); ++i) centers.push_back(geo->center(i));
                vertices = from_clique(exact_unit_disk_clique(centers, *r, exec));
            } else {
                method = "brute";
                vertices = brute_force_max_clique(g);
            }
        } else if (f.method == "brute") {
            vertices = brute_force_max_clique(g);
        } else if (f.method == "bipartite") {
            const Graph co = complement(g);
            auto coloring = bipartite_2coloring(co);
            if (!coloring) throw AssumptionViolation("complement is not bipartite");
            vertices = solve_bipartite_mis(co, *coloring);
        } else if (f.method == "greedy") {
            vertices = greedy_independent_set(complement(g));
        } else {
            throw PreconditionError("unknown method '" + f.method + "'");
        }
    } else if (problem == "diameter-one") {
        if (!doc.geometry || doc.geometry->kind != InstanceKind::points || doc.geometry->dim != 3)
            throw PreconditionError("diameter-one needs a 3-d point instance");
        if (f.method == "eptas") {
            vertices = from_clique(max_diameter_one_subset(doc.geometry->points, p));
        } else {
            const auto unit = GeometricInstance::from_points(3, doc.geometry->points, 1.0);
            vertices = brute_force_max_clique(intersection_graph(unit).graph);
            method = "brute";
        }
    } else {
        throw PreconditionError("unknown problem '" + problem + "'");
    }

    // Validity is recomputed here, never taken from the solver.
    const Graph& check_graph = g;
    Graph unit_graph;
    const Graph* target = &check_graph;
    if (problem == "diameter-one") {
        unit_graph = intersection_graph(GeometricInstance::from_points(3, doc.geometry->points, 1.0)).graph;
        target = &unit_graph;
    }
    const Check check = check_solution(doc, *target, problem, vertices);

    Json j;
    j["format"] = "geoclique-solution";
    j["version"] = 1;
    j["problem"] = problem;
    j["method"] = method;
    j["instance"] = {{"n", g.n()}, {"m", g.m()}, {"weighted", g.weighted()}};
    j["solution"] = {{"vertices", vertices}, {"size", vertices.size()}, {"weight", target->weight_of(vertices)}};
    j["valid"] = check.pass;
    if (!check.pass) j["invalid_reason"] = check.message;
    j["params"] = params_json(p);
    j["constants"] = constants ? constants_json(*constants) : Json(nullptr);
    j["diagnostics"] = diag ? diagnostics_json(*diag) : Json(nullptr);
    if (!extra.empty()) j["frontend"] = extra;
    const auto elapsed = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start);
    j["elapsed_ms"] = std::round(elapsed.count() * 1000.0) / 1000.0;
    return j;
}

void emit(const std::string& path, const std::string& text, std::ostream& out) {
    if (path.empty() || path == "-")
        out << text;
    else
        write_text_file(path, text);
}

struct GenFlags {
    std::string kind;
    int n = 10;
    std::uint64_t seed = 0;
    bool seed_set = false;
    std::string out;
    RandomInstanceSpec spec;
    std::string graph;
    double eps = 0.1;
    double p = 0.3;
};

Json config_json(const EmbeddingConfig& c) {
    return {{"epsilon", c.epsilon},       {"epsilon_prime", c.epsilon_prime}, {"epsilon_second", c.epsilon_second},
            {"margin", c.margin},         {"eta", c.eta}};
}

InstanceDocument generate(const GenFlags& f) {
    InstanceDocument doc;
    doc.metadata["generator"] = f.kind;
    if (auto kind = parse_random_kind(f.kind)) {
        doc.geometry = gen_random_instance(*kind, f.n, f.spec, f.seed);
        doc.metadata["n"] = f.n;
        doc.metadata["seed"] = f.seed;
        doc.metadata["radius_min"] = f.spec.radius_min;
        doc.metadata["radius_max"] = f.spec.radius_max;
        doc.metadata["box"] = f.spec.box;
        doc.metadata["threshold"] = f.spec.threshold;
    } else if (f.kind == "random-graph") {
        doc.graph = random_graph(f.n, f.p, f.seed);
        doc.metadata["n"] = f.n;
        doc.metadata["p"] = f.p;
        doc.metadata["seed"] = f.seed;
    } else if (f.kind == "co2sub-r4" || f.kind == "co2sub-balls") {
        if (f.graph.empty()) throw PreconditionError(f.kind + " needs --graph");
        const Graph source = read_instance_file(f.graph).resolve_graph();
        const bool balls = f.kind == "co2sub-balls";
        const Embedding e = balls ? embed_co2subdivision_eps_balls(source, f.eps) : embed_co2subdivision_r4(source);
        doc.geometry = e.instance;
        doc.metadata["source_graph"] = graph_to_json(source);
        doc.metadata["config"] = config_json(e.config);
        if (balls) doc.metadata["target_eps"] = f.eps;
        doc.metadata["shrink_steps"] = e.shrink_steps;
        doc.metadata["min_clearance"] = e.report.min_clearance;
    } else {
        throw PreconditionError("unknown generator kind '" + f.kind + "'");
    }
    return doc;
}

struct VerifyFlags {
    std::string instance;
    std::string solution;
    std::string claim;
    bool complement_graph = false;
};

Json verify_report(const VerifyFlags& f, bool& pass) {
    const InstanceDocument doc = read_instance_file(f.instance);
    Json r;
    if (!f.solution.empty()) {
        Json sol;
        const std::string text = read_text_file(f.solution);
        try {
            sol = Json::parse(text);
        } catch (const nlohmann::json::parse_error& e) {
            throw MalformedInput(std::string("solution is not valid JSON: ") + e.what());
        }
        const std::string problem = sol.value("problem", std::string("clique"));
        VertexSet s;
        try {
            s = sol.at("solution").at("vertices").get<VertexSet>();
        } catch (const nlohmann::json::exception&) {
            throw MalformedInput("solution document lacks solution.vertices");
        }
        Graph g = doc.resolve_graph();
        if (problem == "diameter-one" && doc.geometry)
            g = intersection_graph(GeometricInstance::from_points(3, doc.geometry->points, 1.0)).graph;
        Check c = check_solution(doc, g, problem, s);
        const auto& solution = sol["solution"];
        if (c.pass && solution.contains("size") && solution["size"] != s.size()) {
            c.pass = false;
            c.message = "size field does not match the vertex list";
        }
        r["check"] = "solution";
        r["problem"] = problem;
        r["pass"] = c.pass;
        r["message"] = c.message;
        if (c.pair) r["offending_pair"] = {c.pair->first, c.pair->second};
        pass = c.pass;
        return r;
    }
    if (f.claim == "embedding") {
        if (!doc.geometry || !doc.metadata.contains("source_graph"))
            throw MalformedInput("embedding claim needs an instance with metadata.source_graph");
        const Graph source = graph_from_json(doc.metadata["source_graph"]);
        EmbeddingConfig cfg;
        if (doc.metadata.contains("config")) cfg.margin = doc.metadata["config"].value("margin", kDefaultMargin);
        std::optional<double> cap;
        if (doc.metadata.contains("target_eps")) cap = 1.0 + doc.metadata["target_eps"].get<double>();
        const EmbeddingReport rep = verify_embedding(*doc.geometry, source, cfg, cap);
        r["check"] = "embedding";
        r["pass"] = rep.pass;
        r["graph_equal"] = rep.graph_equal;
        r["min_clearance"] = std::isfinite(rep.min_clearance) ? Json(rep.min_clearance) : Json(nullptr);
        r["radii_ok"] = rep.radii_ok;
        r["message"] = rep.message;
        if (rep.mismatch) r["offending_pair"] = {rep.mismatch->first, rep.mismatch->second};
        pass = rep.pass;
        return r;
    }
    Graph g = doc.resolve_graph();
    if (f.claim == "iocp-le-1") {
        // Geometric instances are checked on the complement, the graph the
        // EPTAS runs on; plain graphs as given unless --complement.
        const bool use_complement = doc.geometry.has_value() || f.complement_graph;
        if (use_complement) g = complement(g);
        const IocpCheck c = check_iocp_le_one(g);
        r["check"] = "iocp-le-1";
        r["graph"] = use_complement ? "complement" : "input";
        r["pass"] = c.holds;
        r["induced_odd_cycles"] = c.induced_odd_cycles;
        if (c.witness) r["witness"] = {c.witness->first.vertices, c.witness->second.vertices};
        pass = c.holds;
        return r;
    }
    if (f.claim == "vcdim-le-4") {
        if (f.complement_graph) g = complement(g);
        const int vc = vc_dimension_neighborhood(g);
        r["check"] = "vcdim-le-4";
        r["vc_dimension"] = vc;
        r["pass"] = vc <= 4;
        pass = vc <= 4;
        return r;
    }
    throw PreconditionError("verify needs --solution or --claim {iocp-le-1, vcdim-le-4, embedding}");
}

struct BenchFlags {
    std::string suite = "default";
    std::string out;
    std::uint64_t seed = 0;
};

std::string csv_number(double x) {
    std::ostringstream ss;
    ss << std::setprecision(17) << x;
    return ss.str();
}

int run_bench(const BenchFlags& f, Exec exec, std::ostream& out, std::ostream& err) {
    struct Setup {
        RandomKind kind;
        RandomInstanceSpec spec;
    };
    const std::vector<Setup> setups = {
        {RandomKind::disks2d, {0.5, 1.5, 5.0, 1.0}},
        {RandomKind::points3d, {1.0, 1.0, 1.6, 1.0}},
    };
    const bool quick = f.suite == "quick";
    if (!quick && f.suite != "default") throw PreconditionError("unknown suite '" + f.suite + "'");
    const std::vector<int> sizes = quick ? std::vector<int>{10} : std::vector<int>{10, 14, 18};
    const std::vector<double> epsilons = quick ? std::vector<double>{0.2} : std::vector<double>{0.2, 0.4};
    const int seeds = quick ? 2 : 4;

    std::ostringstream csv;
    csv << "kind,n,m,method,epsilon,seed,size,opt,ratio,ms,status\n";
    std::map<std::string, std::pair<double, int>> ratio_sum;
    std::map<std::string, double> ratio_min;
    int failures = 0;
    for (const auto& setup : setups)
        for (int n : sizes)
            for (int k = 0; k < seeds; ++k) {
                const std::uint64_t seed = derive_seed(f.seed, static_cast<std::uint64_t>(n * 100 + k));
                const auto inst = gen_random_instance(setup.kind, n, setup.spec, seed);
                const Graph g = intersection_graph(inst, kDefaultMargin, exec).graph;
                const auto opt = brute_force_max_clique(g).size();
                auto row = [&](const std::string& method, double eps, auto&& solve) {
                    const auto t0 = std::chrono::steady_clock::now();
                    std::string status = "ok";
                    std::size_t size = 0;
                    try {
                        CliqueSolution s = solve();
                        size = s.vertices.size();
                        if (!s.valid) status = "invalid";
                    } catch (const std::exception& e) {
                        status = std::string("error: ") + e.what();
                        for (auto& ch : status)
                            if (ch == ',' || ch == '\n') ch = ';';
                    }
                    const double ms =
                        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
                    const double ratio = opt > 0 ? static_cast<double>(size) / opt : 1.0;
                    if (status != "ok") ++failures;
                    const std::string key = method + " eps=" + csv_number(eps);
                    ratio_sum[key].first += ratio;
                    ratio_sum[key].second += 1;
                    ratio_min[key] = ratio_min.count(key) ? std::min(ratio_min[key], ratio) : ratio;
                    csv << to_string(setup.kind) << ',' << n << ',' << g.m() << ',' << method << ','
                        << csv_number(eps) << ',' << seed << ',' << size << ',' << opt << ',' << csv_number(ratio)
                        << ',' << csv_number(ms) << ',' << status << '\n';
                };
                for (double eps : epsilons) {
                    EptasParams p;
                    p.epsilon = eps;
                    p.seed = seed;
                    p.exec = exec;
                    if (setup.kind == RandomKind::disks2d)
                        row("eptas-disks", eps, [&] { return max_clique_disks(inst, p); });
                    else
                        row("eptas-unit-balls", eps, [&] { return max_clique_unit_balls(inst, p); });
                }
                if (setup.kind == RandomKind::disks2d) {
                    row("exact-bruteforce", 0.0, [&] {
                        CliqueSolution s;
                        s.vertices = brute_force_max_clique(g);
                        return certify(s, g);
                    });
                } else {
                    row("greedy", 0.0, [&] {
                        CliqueSolution s;
                        s.vertices = greedy_independent_set(complement(g));
                        return certify(s, g);
                    });
                }
            }

    std::ostringstream summary;
    summary << "method,runs,mean_ratio,min_ratio\n";
    for (const auto& [key, acc] : ratio_sum)
        summary << key << ',' << acc.second << ',' << csv_number(acc.first / acc.second) << ','
                << csv_number(ratio_min[key]) << '\n';
    summary << "failures," << failures << "\n";
    if (f.out.empty()) {
        out << csv.str();
        err << summary.str();
    } else {
        write_text_file(f.out, csv.str());
        out << summary.str();
    }
    return kExitOk;
}

Json params_document(const ParamFlags& f, std::optional<int> n) {
    EptasParams p = f.params();
    p.mode = EptasMode::faithful;
    const DerivedConstants faithful = compute_constants(p, n);
    p.mode = EptasMode::practical;
    const DerivedConstants practical = compute_constants(p, n);
    Json j;
    j["input"] = {{"epsilon", f.epsilon}, {"beta", f.beta}, {"d", f.d}};
    Json pj;
    pj["c"] = faithful.c;
    pj["delta"] = faithful.delta;
    pj["s"] = faithful.s;
    if (std::isfinite(faithful.t) && faithful.t < 9.2e18) pj["t"] = static_cast<std::int64_t>(faithful.t);
    pj["log10_t"] = faithful.log10_t;
    pj["z"] = faithful.z;
    pj["blocks"] = faithful.blocks;
    pj["layer_window"] = faithful.layer_window;
    j["faithful"] = std::move(pj);
    j["practical"] = {{"s", practical.s_eff}, {"t", practical.t_eff}, {"t_cap", p.t_cap}};
    return j;
}

std::string params_table(const Json& j) {
    std::ostringstream ss;
    ss << std::setprecision(12);
    const auto& faithful = j["faithful"];
    ss << "epsilon        " << j["input"]["epsilon"].get<double>() << "\n";
    ss << "beta           " << j["input"]["beta"].get<double>() << "\n";
    ss << "d              " << j["input"]["d"].get<int>() << "\n";
    ss << "c              " << faithful["c"].get<double>() << "\n";
    ss << "delta          " << faithful["delta"].get<double>() << "\n";
    ss << "s              " << faithful["s"].get<std::int64_t>() << "\n";
    if (faithful.contains("t"))
        ss << "t              " << faithful["t"].get<std::int64_t>() << "\n";
    else
        ss << "t              10^" << faithful["log10_t"].get<double>() << "\n";
    ss << "z              " << faithful["z"].get<int>() << "\n";
    ss << "blocks         " << faithful["blocks"].get<int>() << "\n";
    ss << "layer window   " << faithful["layer_window"].get<int>() << "\n";
    ss << "practical s    " << j["practical"]["s"].get<std::int64_t>() << "\n";
    ss << "practical t    " << j["practical"]["t"].get<std::int64_t>() << "\n";
    return ss.str();
}

} // namespace

std::string without_elapsed(const std::string& solution_json) {
    Json j = Json::parse(solution_json);
    j.erase("elapsed_ms");
    return j.dump(2);
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Maximum clique and independent set solvers for geometric intersection graphs"};
    app.name("geoclique");
    app.require_subcommand(1);
    app.fallthrough();
    int threads = 0;
    app.add_option("--threads", threads, "worker threads (0: hardware parallelism)");

    SolveFlags solve;
    auto* solve_cmd = app.add_subcommand("solve", "solve an instance and print a solution document");
    solve_cmd->add_option("input", solve.input, "instance (.json) or graph (DIMACS)")->required();
    solve_cmd->add_option("--problem", solve.problem, "mis, clique or diameter-one")
        ->check(CLI::IsMember({"mis", "clique", "diameter-one"}));
    solve_cmd->add_option("--method", solve.method, "eptas, exact, bipartite, brute or greedy")
        ->check(CLI::IsMember({"eptas", "exact", "bipartite", "brute", "greedy"}));
    solve_cmd->add_option("--out", solve.out, "output path (default stdout)");
    solve_cmd->add_flag("--force", solve.force, "run the unit-ball frontend on unequal radii");
    solve.params.attach(solve_cmd);

    GenFlags gen;
    auto* gen_cmd = app.add_subcommand("gen", "generate an instance");
    gen_cmd->add_option("kind", gen.kind,
                        "disks2d, balls3d, points3d, points2d, random-graph, co2sub-r4, co2sub-balls")
        ->required();
    gen_cmd->add_option("--n", gen.n, "number of objects");
    auto* gen_seed = gen_cmd->add_option("--seed", gen.seed, "random seed");
    gen_cmd->add_option("--out", gen.out, "output path (default stdout)");
    gen_cmd->add_option("--radius-min", gen.spec.radius_min, "smallest radius for ball kinds");
    gen_cmd->add_option("--radius-max", gen.spec.radius_max, "largest radius for ball kinds");
    gen_cmd->add_option("--box", gen.spec.box, "side of the placement cube");
    gen_cmd->add_option("--threshold", gen.spec.threshold, "distance threshold for point kinds");
    gen_cmd->add_option("--graph", gen.graph, "source graph for co2sub-* kinds");
    gen_cmd->add_option("--eps", gen.eps, "radius slack for co2sub-balls");
    gen_cmd->add_option("--p", gen.p, "edge probability for random-graph");

    VerifyFlags verify;
    auto* verify_cmd = app.add_subcommand("verify", "check a solution or a structural claim");
    verify_cmd->add_option("instance", verify.instance)->required();
    verify_cmd->add_option("--solution", verify.solution, "solution document to re-validate");
    verify_cmd->add_option("--claim", verify.claim, "iocp-le-1, vcdim-le-4 or embedding")
        ->check(CLI::IsMember({"iocp-le-1", "vcdim-le-4", "embedding"}));
    verify_cmd->add_flag("--complement", verify.complement_graph, "check the complement of a plain graph");

    BenchFlags bench;
    auto* bench_cmd = app.add_subcommand("bench", "run the benchmark grid and print CSV");
    bench_cmd->add_option("--suite", bench.suite, "default or quick");
    bench_cmd->add_option("--out", bench.out, "CSV path (summary then goes to stdout)");
    bench_cmd->add_option("--seed", bench.seed);

    ParamFlags params;
    std::int64_t params_n = 0;
    bool params_json_flag = false;
    auto* params_cmd = app.add_subcommand("params", "print derived constants");
    params.attach(params_cmd);
    params_cmd->add_option("--n", params_n, "resolve practical caps against this vertex count");
    params_cmd->add_flag("--json", params_json_flag, "JSON output");

    std::vector<std::string> argv_store{"geoclique"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& a : argv_store) argv.push_back(a.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitMalformed;
    }

    try {
        set_thread_count(threads);
        const Exec exec = Exec::parallel;
        const std::uint64_t env_seed = default_seed();
        if (*solve_cmd) {
            if (solve_cmd->count("--seed") == 0) solve.params.seed = env_seed;
            const Json doc = solve_document(solve, exec);
            emit(solve.out, doc.dump(2) + "\n", out);
            return doc["valid"].get<bool>() ? kExitOk : kExitVerifyFailed;
        }
        if (*gen_cmd) {
            if (gen_seed->count() == 0) gen.seed = env_seed;
            emit(gen.out, write_instance(generate(gen)), out);
            return kExitOk;
        }
        if (*verify_cmd) {
            bool pass = false;
            const Json report = verify_report(verify, pass);
            out << report.dump(2) << "\n";
            return pass ? kExitOk : kExitVerifyFailed;
        }
        if (*bench_cmd) {
            if (bench_cmd->count("--seed") == 0) bench.seed = env_seed;
            return run_bench(bench, exec, out, err);
        }
        if (*params_cmd) {
            const Json j = params_document(params, params_n > 0 ? std::optional<int>(static_cast<int>(params_n))
                                                                : std::nullopt);
            out << (params_json_flag ? j.dump(2) + "\n" : params_table(j));
            return kExitOk;
        }
    } catch (const MalformedInput& e) {
        err << "error: " << e.what() << "\n";
        return kExitMalformed;
    } catch (const PreconditionError& e) {
        err << "error: " << e.what() << "\n";
        return kExitMalformed;
    } catch (const Refusal& e) {
        err << "refused: " << e.what() << "\n";
        return kExitRefused;
    } catch (const ConstructionInfeasible& e) {
        err << "refused: " << e.what() << "\n";
        return kExitRefused;
    } catch (const AssumptionViolation& e) {
        err << "assumption violated: " << e.what() << "\n";
        return kExitAssumption;
    }
    return kExitMalformed;
}

} // namespace geoclique
