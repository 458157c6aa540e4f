// mgc: colourings of (m,n)-coloured mixed graphs.
//
// Machine-readable results go to stdout, diagnostics to stderr. Exit codes:
// 0 = success, 1 = the answer is "none"/"false", 2 = usage or format error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "mgc/bounds.hpp"
#include "mgc/chromatic.hpp"
#include "mgc/experiments.hpp"
#include "mgc/generate.hpp"
#include "mgc/greedy.hpp"
#include "mgc/probability.hpp"
#include "mgc/property.hpp"
#include "mgc/text_io.hpp"
#include "mgc/universal.hpp"

namespace {

using namespace mgc;

int exit_code = 0;

std::string spec_comment(const ColourSpec& spec) {
    return "m=" + std::to_string(spec.m) + " n=" + std::to_string(spec.n);
}

OneFactorization factorization_for(int c, const std::string& path) {
    if (path.empty()) return cyclic_factorization(c);
    return parse_factorization_file(path);
}

void print_map_lines(const std::vector<int>& image) {
    for (std::size_t v = 0; v < image.size(); ++v)
        std::cout << "map " << v << ' ' << image[v] << '\n';
}

std::vector<int> parse_map_file(const std::string& path, int order) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open map file '" + path + "'");
    std::vector<int> image(order, -1);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto toks = io_detail::tokens_of(line);
        if (toks.empty()) continue;
        if (toks[0] != "map" || toks.size() != 3)
            throw ParseError(lineno, "expected 'map <vertex> <image>'");
        long long v = io_detail::parse_int(toks[1], lineno, "vertex");
        long long img = io_detail::parse_int(toks[2], lineno, "image");
        if (v < 0 || v >= order) throw ParseError(lineno, "vertex out of range");
        image[static_cast<std::size_t>(v)] = static_cast<int>(img);
    }
    for (std::size_t v = 0; v < image.size(); ++v)
        if (image[v] < 0)
            throw std::runtime_error("map file misses vertex " + std::to_string(v));
    return image;
}

std::string mode_string(const PropertyReport& report) {
    if (report.kind == CheckKind::exhaustive) return "exhaustive";
    return "sampled(trials=" + std::to_string(report.trials) +
           ",seed=" + std::to_string(report.seed) + ")";
}

void print_property_report(const PropertyReport& report) {
    std::cout << "property a=" << report.a << " b=" << report.b
              << " holds=" << (report.holds ? "yes" : "no") << " mode=" << mode_string(report)
              << '\n';
    if (report.counterexample) {
        const auto& ce = *report.counterexample;
        std::cout << "counterexample X=";
        for (std::size_t i = 0; i < ce.clique.size(); ++i)
            std::cout << (i ? "," : "") << ce.clique[i];
        if (ce.clique.empty()) std::cout << "-";
        std::cout << " L=";
        for (std::size_t i = 0; i < ce.tuple.size(); ++i)
            std::cout << (i ? "," : "") << ce.tuple[i];
        if (ce.tuple.empty()) std::cout << "-";
        std::cout << " found=" << ce.found << '\n';
    }
}

void run_chi(const std::string& input, bool verify) {
    MixedGraph g = parse_graph_file(input);
    ChromaticResult result = chromatic_number(g);
    if (verify) {
        Partition part = fibres(result.witness_map);
        auto q = quotient(g, part);
        if (!q || !is_homomorphism(g, *q, part.block_of))
            throw std::logic_error("witness failed re-validation");
        std::cerr << "witness re-validated: quotient conflict-free, block map valid\n";
    }
    std::cout << "chi " << result.chi << '\n';
    serialize_graph(result.witness_target, std::cout);
    print_map_lines(result.witness_map.image);
}

void run_hom(const std::string& source_path, const std::string& target_path,
             const std::string& check_path) {
    MixedGraph g = parse_graph_file(source_path);
    MixedGraph h = parse_graph_file(target_path);
    if (!check_path.empty()) {
        auto image = parse_map_file(check_path, g.order());
        for (int v : image)
            if (v >= h.order()) throw std::runtime_error("map image out of target range");
        const bool ok = is_homomorphism(g, h, image);
        std::cout << (ok ? "valid" : "invalid") << '\n';
        if (!ok) exit_code = 1;
        return;
    }
    auto map = find_homomorphism(g, h);
    if (!map) {
        std::cout << "none\n";
        exit_code = 1;
        return;
    }
    print_map_lines(map->image);
}

void run_build_h(int m, int n, const std::string& fac_path) {
    ColourSpec spec{m, n};
    require_valid(spec);
    OneFactorization fac = factorization_for(spec.alphabet_size(), fac_path);
    MixedGraph h = build_H(spec, fac);
    serialize_graph(h, std::cout,
                    {"bipartite template " + spec_comment(spec) +
                     " factorization=" + (fac_path.empty() ? "cyclic" : fac_path)});
}

void run_build_z(int m, int n, int q, const std::string& fac_path) {
    ColourSpec spec{m, n};
    require_valid(spec);
    OneFactorization fac = factorization_for(spec.alphabet_size(), fac_path);
    MixedGraph z = build_Z(spec, q, build_H(spec, fac));
    serialize_graph(z, std::cout,
                    {"multipartite target " + spec_comment(spec) + " q=" + std::to_string(q) +
                     " factorization=" + (fac_path.empty() ? "cyclic" : fac_path)});
}

void run_check_p(const std::string& input, int a, int b, std::optional<std::uint64_t> trials,
                 std::optional<std::uint64_t> seed, int jobs) {
    MixedGraph g = parse_graph_file(input);
    PropertyMode mode = Exhaustive{jobs};
    if (trials) {
        if (!seed) throw CLI::ValidationError("--sampled requires an explicit --seed");
        mode = Sampled{*trials, *seed};
    }
    PropertyReport report = has_property_P(g, a, b, mode);
    print_property_report(report);
    if (!report.holds) exit_code = 1;
}

void run_universal(const std::string& input, std::optional<int> k_opt,
                   const std::string& fac_path, const std::string& emit_target) {
    MixedGraph g = parse_graph_file(input);
    const int k = k_opt ? *k_opt : std::max(2, g.max_degree());
    const int q = 2 * k - 1;
    OneFactorization fac = factorization_for(g.spec().alphabet_size(), fac_path);
    MixedGraph z = build_Z(g.spec(), q, build_H(g.spec(), fac));
    if (!emit_target.empty()) {
        std::ofstream out(emit_target);
        if (!out) throw std::runtime_error("cannot write target file '" + emit_target + "'");
        serialize_graph(z, out,
                        {"multipartite target " + spec_comment(g.spec()) +
                         " q=" + std::to_string(q) +
                         " factorization=" + (fac_path.empty() ? "cyclic" : fac_path)});
    }
    VertexMap map = universal_colouring(g, z, q, k);
    std::cout << "# universal colouring " << spec_comment(g.spec()) << " k=" << k << " q=" << q
              << " target-order=" << z.order() << '\n';
    print_map_lines(map.image);
}

void run_greedy(const std::string& source_path, const std::string& target_path,
                std::optional<int> k_opt, bool trace_flag) {
    MixedGraph g = parse_graph_file(source_path);
    MixedGraph h = parse_graph_file(target_path);
    const int k = k_opt ? *k_opt : std::max(1, g.max_degree());
    GreedyTrace trace = greedy_colouring(g, h, k);
    if (trace_flag)
        for (const auto& step : trace.steps)
            std::cerr << "step v=" << step.vertex << " |W|=" << step.mapped_neighbours.size()
                      << " |X|=" << step.candidates << " |Y|=" << step.unplaced_neighbours
                      << " |Z|=" << step.shielded << " chosen=" << step.chosen
                      << " blanket=" << (step.distinctness_kept ? "yes" : "no") << '\n';
    if (!trace.map) {
        std::cout << "stuck " << trace.stuck_at << '\n';
        exit_code = 1;
        return;
    }
    std::cout << "# greedy colouring k=" << k << " target-order=" << h.order() << '\n';
    print_map_lines(trace.map->image);
}

void run_find_target(int m, int n, int k, int t, int trials, std::uint64_t seed, double budget,
                     std::uint64_t sampled_trials, int jobs) {
    ColourSpec spec{m, n};
    require_valid(spec);
    LayerPolicy policy;
    policy.exhaustive_budget = budget;
    policy.sampled_trials = sampled_trials;
    policy.jobs = jobs;
    FindTargetOutcome outcome = find_target(spec, k, t, trials, seed, policy);
    if (!outcome.target) {
        std::cout << "none\n";
        exit_code = 1;
        return;
    }
    std::vector<std::string> comments;
    comments.push_back("sampled target " + spec_comment(spec) + " k=" + std::to_string(k) +
                       " t=" + std::to_string(t) + " seed=" + std::to_string(seed) +
                       " trial=" + std::to_string(outcome.trial));
    for (const auto& report : outcome.reports)
        comments.push_back("layer a=" + std::to_string(report.a) + " b=" +
                           std::to_string(report.b) + " mode=" + mode_string(report) +
                           " holds=" + (report.holds ? "yes" : "no"));
    serialize_graph(*outcome.target, std::cout, comments);
}

void run_prob(int k, int c, std::optional<long long> t, bool no_exact) {
    LemmaParams params = lemma_params(k, c, t);
    ProbabilityLedger ledger = probability_ledger(params, !no_exact);
    std::cout << "# union bound ledger k=" << params.k << " c=" << params.c
              << " t=" << params.t << '\n';
    std::cout << "i\tcutoff\tb\tlog_tail\ttail\ttail_exact\n";
    for (const auto& row : ledger.rows) {
        std::cout << row.i << '\t' << row.cutoff << '\t' << row.cutoff + 1 << '\t';
        std::cout << static_cast<double>(row.log_tail) << '\t'
                  << log_to_sci_string(row.log_tail) << '\t';
        std::cout << (row.log_tail_exact ? log_to_sci_string(*row.log_tail_exact)
                                         : std::string("n/a"))
                  << '\n';
    }
    std::cout << "union_log\t" << static_cast<double>(ledger.log_union) << '\n';
    std::cout << "union\t" << log_to_sci_string(ledger.log_union) << '\n';
    if (ledger.log_union_exact) {
        std::cout << "union_exact\t" << ledger.union_exact_sci << '\n';
        std::cout << "backend_rel_diff\t"
                  << static_cast<double>(fabsl(expm1l(ledger.log_union - *ledger.log_union_exact)))
                  << '\n';
    }
    std::cout << "chain_log\t" << static_cast<double>(ledger.log_chain) << '\n';
    std::cout << "ineq1_margin\t" << ledger.ineq1_margin << '\n';
    std::cout << "ineq2_margin\t" << ledger.ineq2_margin << '\n';
}

void run_bounds(int delta, int m, int n) {
    ColourSpec spec{m, n};
    BoundTable table = bounds(delta, spec);
    auto row = [](const char* name, const std::optional<Wide>& value) {
        std::cout << name << '\t' << (value ? to_string(*value) : "n/a") << '\n';
    };
    std::cout << "delta\t" << delta << '\n';
    std::cout << "m\t" << m << "\nn\t" << n << "\nc\t" << spec.alphabet_size() << '\n';
    row("sopena", table.sopena);
    if (!table.sopena && table.sopena_formula) row("sopena_formula", table.sopena_formula);
    row("ksz", table.ksz);
    row("dns", table.dns);
    row("lower_floor", table.lower_floor);
    row("lower_ceil", table.lower_ceil);
    std::cout << "min_one_universal\t" << min_one_universal_size(spec) << '\n';
}

void run_gen_bounded(int m, int n, int p, int dmax, double prob, std::uint64_t seed) {
    MixedGraph g = random_bounded_degree(ColourSpec{m, n}, p, dmax, prob, seed);
    serialize_graph(g, std::cout,
                    {"random bounded-degree graph " + spec_comment(g.spec()) + " p=" +
                     std::to_string(p) + " max-degree=" + std::to_string(dmax) +
                     " prob=" + std::to_string(prob) + " seed=" + std::to_string(seed)});
}

void run_gen_complete(int m, int n, int t, std::uint64_t seed) {
    MixedGraph g = random_complete(ColourSpec{m, n}, t, seed);
    serialize_graph(g, std::cout,
                    {"random complete graph " + spec_comment(g.spec()) +
                     " t=" + std::to_string(t) + " seed=" + std::to_string(seed)});
}

void run_repro(const std::string& name, bool list) {
    if (list) {
        for (const auto& n : experiments::experiment_names()) std::cout << n << '\n';
        return;
    }
    experiments::ExperimentResult result = experiments::run_experiment(name);
    std::cout << "experiment " << result.name << '\n';
    for (const auto& line : result.lines) std::cout << line << '\n';
    for (const auto& [key, ok] : result.checks)
        std::cout << "check " << key << ' ' << (ok ? "pass" : "fail") << '\n';
    std::cout << (result.pass ? "PASS" : "FAIL") << ' ' << result.name << '\n';
    if (!result.pass) exit_code = 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"colourings of (m,n)-coloured mixed graphs"};
    app.require_subcommand(1);

    // chi
    std::string chi_input;
    bool chi_verify = false;
    auto* chi = app.add_subcommand("chi", "exact mixed chromatic number with witness");
    chi->add_option("input", chi_input, "graph file")->required();
    chi->add_flag("--verify", chi_verify, "re-validate the witness before printing");
    chi->callback([&] { run_chi(chi_input, chi_verify); });

    // hom
    std::string hom_source, hom_target, hom_check;
    auto* hom = app.add_subcommand("hom", "find or check a homomorphism between two graphs");
    hom->add_option("source", hom_source, "source graph file")->required();
    hom->add_option("target", hom_target, "target graph file")->required();
    hom->add_option("--check", hom_check, "verify this map file instead of searching");
    hom->callback([&] { run_hom(hom_source, hom_target, hom_check); });

    // build-h
    int bh_m = 0, bh_n = 0;
    std::string bh_fac;
    auto* bh = app.add_subcommand("build-h", "emit a bipartite template graph");
    bh->add_option("-m", bh_m, "edge colours")->required();
    bh->add_option("-n", bh_n, "arc colours")->required();
    bh->add_option("--factorization", bh_fac, "factorization file (default cyclic)");
    bh->callback([&] { run_build_h(bh_m, bh_n, bh_fac); });

    // build-z
    int bz_m = 0, bz_n = 0, bz_q = 1;
    std::string bz_fac;
    auto* bz = app.add_subcommand("build-z", "emit a complete multipartite target");
    bz->add_option("-m", bz_m, "edge colours")->required();
    bz->add_option("-n", bz_n, "arc colours")->required();
    bz->add_option("-q", bz_q, "number of parts")->required();
    bz->add_option("--factorization", bz_fac, "factorization file (default cyclic)");
    bz->callback([&] { run_build_z(bz_m, bz_n, bz_q, bz_fac); });

    // check-p
    std::string cp_input;
    int cp_a = 0, cp_b = 1, cp_jobs = 1;
    std::optional<std::uint64_t> cp_trials, cp_seed;
    auto* cp = app.add_subcommand("check-p", "verify adjacency-richness property P_{a,b}");
    cp->add_option("input", cp_input, "graph file")->required();
    cp->add_option("-a", cp_a, "max complete-subgraph size")->required();
    cp->add_option("-b", cp_b, "required witness count")->required();
    cp->add_option("--sampled", cp_trials, "sampled mode with this many trials")->check(CLI::PositiveNumber);
    cp->add_option("--seed", cp_seed, "seed for sampled mode");
    cp->add_option("--jobs", cp_jobs, "worker threads for exhaustive mode")->check(CLI::PositiveNumber);
    cp->callback([&] { run_check_p(cp_input, cp_a, cp_b, cp_trials, cp_seed, cp_jobs); });

    // universal
    std::string un_input, un_fac, un_emit;
    std::optional<int> un_k;
    auto* un = app.add_subcommand("universal", "constructive colouring into the q = 2k-1 target");
    un->add_option("input", un_input, "graph file")->required();
    un->add_option("-k", un_k, "degree bound (default max(2, max degree))");
    un->add_option("--factorization", un_fac, "factorization file (default cyclic)");
    un->add_option("--emit-target", un_emit, "also write the target graph to this file");
    un->callback([&] { run_universal(un_input, un_k, un_fac, un_emit); });

    // greedy
    std::string gr_source, gr_target;
    std::optional<int> gr_k;
    bool gr_trace = false;
    auto* gr = app.add_subcommand("greedy", "greedy colouring against a complete target file");
    gr->add_option("source", gr_source, "source graph file")->required();
    gr->add_option("target", gr_target, "complete target graph file")->required();
    gr->add_option("-k", gr_k, "degree bound (default max degree)");
    gr->add_flag("--trace", gr_trace, "print per-step trace to stderr");
    gr->callback([&] { run_greedy(gr_source, gr_target, gr_k, gr_trace); });

    // find-target
    int ft_m = 0, ft_n = 0, ft_k = 1, ft_t = 1, ft_trials = 100, ft_jobs = 1;
    std::uint64_t ft_seed = 0, ft_sampled = 100000;
    double ft_budget = 1e10;
    auto* ft = app.add_subcommand("find-target", "rejection-sample a layered-rich target");
    ft->add_option("-m", ft_m, "edge colours")->required();
    ft->add_option("-n", ft_n, "arc colours")->required();
    ft->add_option("-k", ft_k, "degree bound")->required();
    ft->add_option("-t", ft_t, "target order")->required()->check(CLI::PositiveNumber);
    ft->add_option("--trials", ft_trials, "max sampling trials")->check(CLI::PositiveNumber);
    ft->add_option("--seed", ft_seed, "master seed")->required();
    ft->add_option("--budget", ft_budget, "exhaustive work budget per layer")->check(CLI::PositiveNumber);
    ft->add_option("--sampled-trials", ft_sampled, "trials per sampled layer");
    ft->add_option("--jobs", ft_jobs, "worker threads for exhaustive layers")->check(CLI::PositiveNumber);
    ft->callback([&] {
        run_find_target(ft_m, ft_n, ft_k, ft_t, ft_trials, ft_seed, ft_budget, ft_sampled,
                        ft_jobs);
    });

    // prob
    int pr_k = 4, pr_c = 3;
    std::optional<long long> pr_t;
    bool pr_no_exact = false;
    auto* pr = app.add_subcommand("prob", "tail probabilities and the union-bound ledger");
    pr->add_option("-k", pr_k, "degree bound")->required();
    pr->add_option("-c", pr_c, "code alphabet size")->required();
    pr->add_option("-t", pr_t, "target order (default k^2 c^(k+1))");
    pr->add_flag("--no-exact", pr_no_exact, "skip the exact rational backend");
    pr->callback([&] { run_prob(pr_k, pr_c, pr_t, pr_no_exact); });

    // bounds
    int bo_delta = 0, bo_m = 0, bo_n = 0;
    auto* bo = app.add_subcommand("bounds", "closed-form bound table");
    bo->add_option("--delta", bo_delta, "maximum degree")->required();
    bo->add_option("-m", bo_m, "edge colours")->required();
    bo->add_option("-n", bo_n, "arc colours")->required();
    bo->callback([&] { run_bounds(bo_delta, bo_m, bo_n); });

    // gen
    auto* gen = app.add_subcommand("gen", "seeded instance generators");
    gen->require_subcommand(1);
    int gb_m = 0, gb_n = 0, gb_p = 1, gb_dmax = 0;
    double gb_prob = 0.5;
    std::uint64_t gb_seed = 0;
    auto* gb = gen->add_subcommand("bounded", "random graph with bounded degree");
    gb->add_option("-m", gb_m, "edge colours")->required();
    gb->add_option("-n", gb_n, "arc colours")->required();
    gb->add_option("-p", gb_p, "vertices")->required()->check(CLI::PositiveNumber);
    gb->add_option("--max-degree", gb_dmax, "degree cap")->required();
    gb->add_option("--prob", gb_prob, "pair probability")->check(CLI::Range(0.0, 1.0));
    gb->add_option("--seed", gb_seed, "seed")->required();
    gb->callback([&] { run_gen_bounded(gb_m, gb_n, gb_p, gb_dmax, gb_prob, gb_seed); });

    int gc_m = 0, gc_n = 0, gc_t = 1;
    std::uint64_t gc_seed = 0;
    auto* gc = gen->add_subcommand("complete", "random complete graph");
    gc->add_option("-m", gc_m, "edge colours")->required();
    gc->add_option("-n", gc_n, "arc colours")->required();
    gc->add_option("-t", gc_t, "vertices")->required()->check(CLI::PositiveNumber);
    gc->add_option("--seed", gc_seed, "seed")->required();
    gc->callback([&] { run_gen_complete(gc_m, gc_n, gc_t, gc_seed); });

    // repro
    std::string rp_name;
    bool rp_list = false;
    auto* rp = app.add_subcommand("repro", "run a named acceptance experiment");
    rp->add_option("name", rp_name, "experiment name");
    rp->add_flag("--list", rp_list, "list experiment names");
    rp->callback([&] {
        if (!rp_list && rp_name.empty())
            throw CLI::ValidationError("repro needs an experiment name or --list");
        run_repro(rp_name, rp_list);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const mgc::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return exit_code;
}
