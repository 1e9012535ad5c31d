#include <algorithm>
#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "msep/bench.hpp"
#include "msep/builder.hpp"
#include "msep/dominant.hpp"
#include "msep/errors.hpp"
#include "msep/io.hpp"
#include "msep/local_search.hpp"
#include "msep/metrics.hpp"
#include "msep/oracle.hpp"
#include "msep/reductions.hpp"
#include "msep/synth.hpp"
#include "msep/watershed.hpp"

namespace {

using namespace msep;

int thread_budget() {
    if (const char* env = std::getenv("MSEP_THREADS")) {
        const int n = std::atoi(env);
        if (n >= 1) return n;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

// runs fn(i) for i in [0, count) on up to thread_budget() workers;
// individual runs stay single-threaded
template <class Fn>
void parallel_for(std::int64_t count, Fn&& fn) {
    const int workers = std::min<std::int64_t>(thread_budget(), count);
    if (workers <= 1) {
        for (std::int64_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::int64_t> next(0);
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (std::int64_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) fn(i);
        });
    for (auto& th : pool) th.join();
}

std::vector<double> linspace(double lo, double hi, int count) {
    if (count < 1) throw usage_error("grid must contain at least one value");
    std::vector<double> out;
    if (count == 1) {
        out.push_back(lo);
        return out;
    }
    for (int i = 0; i < count; ++i)
        out.push_back(lo + (hi - lo) * static_cast<double>(i) / (count - 1));
    return out;
}

std::string fmt(double v, int precision = 6) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", precision, v);
    return buf;
}

struct SolveOutput {
    LocalSearchResult result;
    double wall_ms = 0.0;
};

SolveOutput run_solver(const MspInstance& instance, const std::string& algo) {
    SolveOutput out;
    const auto start = std::chrono::steady_clock::now();
    if (algo == "gss") {
        out.result = gss(instance);
    } else if (algo == "gsg") {
        out.result = gsg(instance);
    } else if (algo == "dominant") {
        const Separator s = solve_dominant(instance);
        out.result.separator = s;
        out.result.initial_objective = 0.0;
        out.result.final_objective = objective(instance, s);
        out.result.moves = s.size();
        out.result.trace = {out.result.final_objective};
    } else {
        throw usage_error("unknown algorithm: " + algo);
    }
    out.wall_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return out;
}

void print_summary(std::ostream& os, const SolveOutput& out) {
    os << "objective=" << fmt(out.result.final_objective, 6)
       << " nodes_in_separator=" << out.result.separator.size() << " moves=" << out.result.moves
       << " wall_ms=" << fmt(out.wall_ms, 3) << '\n';
}

int cmd_synth(const std::string& kind, int m, double t, std::uint64_t seed, const std::string& out) {
    BinaryVolume binary;
    DistanceField distance;
    NoiseParams noise;
    if (kind == "filaments") {
        FilamentParams params;
        params.m = m;
        params.d_min = 10.0 / m;
        params.r = 0.75 / m;
        auto volume = synth_filaments(params, seed);
        binary = std::move(volume.binary);
        distance = std::move(volume.distance);
        noise = filament_noise(t, m);
    } else if (kind == "cells") {
        CellParams params;
        params.m = m;
        params.n_seeds = std::max(2, static_cast<int>(static_cast<std::int64_t>(m) * m * m / 16384));
        auto volume = synth_cells(params, seed);
        binary = std::move(volume.binary);
        distance = std::move(volume.distance);
        noise = cell_noise(t);
    } else {
        throw usage_error("synth: kind must be filaments or cells");
    }
    const GrayVolume gray = gray_from_distance(distance, noise, seed);
    save_binary_volume(out + ".bin.vol", binary);
    save_gray_volume(out + ".gray.vol", gray);
    std::cout << "wrote " << out << ".bin.vol and " << out << ".gray.vol\n";
    return 0;
}

int cmd_build(const std::string& kind, const std::string& gray_path, const std::string& out,
              double bias, bool bias_nodes_only, int long_range) {
    const GrayVolume gray = load_gray_volume(gray_path);
    MspInstance instance;
    if (kind == "filaments") {
        FilamentInstanceOptions options;
        options.long_range_distance = long_range;
        instance = build_filament_instance(gray, options);
    } else if (kind == "cells") {
        instance = build_cell_instance(gray);
    } else {
        throw usage_error("build: kind must be filaments or cells");
    }
    if (bias != 0.0) instance = apply_bias(instance, bias, bias_nodes_only);
    save_instance(out, instance);
    std::cout << "wrote " << out << " (" << instance.node_count() << " nodes, "
              << instance.graph().edge_count() << " edges, " << instance.interaction_count()
              << " interactions)\n";
    return 0;
}

int cmd_solve(const std::string& instance_path, const std::string& algo, double bias,
              bool bias_nodes_only, const std::vector<double>& bias_grid, bool trace,
              const std::string& out) {
    const MspInstance base = load_instance(instance_path);
    if (!bias_grid.empty()) {
        std::vector<std::string> lines(bias_grid.size());
        parallel_for(static_cast<std::int64_t>(bias_grid.size()), [&](std::int64_t i) {
            const MspInstance biased = apply_bias(base, bias_grid[i], bias_nodes_only);
            const SolveOutput solved = run_solver(biased, algo);
            std::ostringstream os;
            os << "bias=" << fmt(bias_grid[i], 6) << ' ';
            print_summary(os, solved);
            lines[i] = os.str();
        });
        for (const auto& line : lines) std::cout << line;
        return 0;
    }
    const MspInstance instance = bias != 0.0 ? apply_bias(base, bias, bias_nodes_only) : base;
    const SolveOutput solved = run_solver(instance, algo);
    if (trace) {
        for (double v : solved.result.trace) {
            char buf[40];
            std::snprintf(buf, sizeof(buf), "%.17g", v);
            std::cout << buf << '\n';
        }
    }
    print_summary(std::cout, solved);
    if (!out.empty()) save_separator(out, solved.result.separator);
    if (!solved.result.greedy_exactness_guaranteed)
        std::cerr << "note: repulsive non-edge interactions present; greedy exactness not "
                     "guaranteed\n";
    return 0;
}

int cmd_watershed(const std::string& gray_path, double start, double end,
                  const std::vector<double>& start_grid, const std::vector<double>& end_grid,
                  const std::string& out) {
    const GrayVolume gray = load_gray_volume(gray_path);
    if (!start_grid.empty() || !end_grid.empty()) {
        const auto starts = start_grid.empty() ? std::vector<double>{start} : start_grid;
        const auto ends = end_grid.empty() ? std::vector<double>{end} : end_grid;
        std::vector<std::string> blocks(starts.size());
        parallel_for(static_cast<std::int64_t>(starts.size()), [&](std::int64_t i) {
            const FloodRecord record = flood_record(gray, starts[i]);
            std::ostringstream os;
            for (double e : ends) {
                if (e < starts[i]) continue;
                const Separator s = separator_at(record, e);
                os << "start=" << fmt(starts[i], 6) << " end=" << fmt(e, 6)
                   << " nodes_in_separator=" << s.size() << '\n';
            }
            blocks[i] = os.str();
        });
        for (const auto& b : blocks) std::cout << b;
        return 0;
    }
    const Separator s = watershed(gray, {start, end});
    std::cout << "nodes_in_separator=" << s.size() << '\n';
    if (!out.empty()) save_separator(out, s);
    return 0;
}

int cmd_evaluate(const std::string& pred_path, const std::string& truth_path) {
    const Separator predicted = load_separator(pred_path);
    const BinaryVolume truth = load_binary_volume(truth_path);
    if (predicted.node_count() != truth.voxel_count())
        throw precondition_error("evaluate: separator and truth volume sizes differ");
    const Grid3 grid = grid3(truth.nx, truth.ny, truth.nz);
    const Separator truth_sep = truth.separator();
    const ViReport ws = viws(grid.graph, predicted, truth_sep);
    const ViReport ns = vins(grid.graph, predicted, truth_sep);
    std::cout << "viws vi=" << fmt(ws.vi) << " fc=" << fmt(ws.false_cut)
              << " fj=" << fmt(ws.false_join) << '\n';
    std::cout << "vins vi=" << fmt(ns.vi) << " fcns=" << fmt(ns.false_cut)
              << " fjns=" << fmt(ns.false_join) << '\n';
    return 0;
}

int cmd_reduce(const std::string& from, const std::string& input, const std::string& out) {
    std::ifstream in(input);
    if (!in) throw format_error("cannot open " + input);
    if (from == "lmp") {
        const LmpInstance lmp = load_lmp(input);
        const auto reduction = lmp_to_msp(lmp);
        save_instance(out, reduction.target);
        std::cout << "offset=" << fmt(reduction.value_offset, 6) << " sign=" << reduction.value_sign
                  << '\n';
    } else if (from == "qubo") {
        const auto [terms, n] = read_qubo(in);
        const auto reduction = qubo_to_msp(terms, n);
        save_instance(out, reduction.target);
        std::cout << "offset=" << fmt(reduction.value_offset, 6) << " sign=" << reduction.value_sign
                  << '\n';
    } else if (from == "steiner" || from == "mtvs") {
        const TerminalProblem problem = read_terminal_problem(in);
        double offset = 0.0;
        MspInstance target;
        if (from == "steiner") {
            auto reduction = steiner_to_msp(problem.graph, problem.terminals, problem.weights);
            offset = reduction.value_offset;
            target = std::move(reduction.target);
        } else {
            auto reduction = mtvs_to_msp(problem.graph, problem.terminals, problem.weights);
            offset = reduction.value_offset;
            target = std::move(reduction.target);
        }
        save_instance(out, target);
        std::cout << "offset=" << fmt(offset, 6) << " sign=1\n";
    } else if (from == "3sat") {
        const auto formula = read_dimacs_cnf3(in);
        const Sat3Gadget gadget = sat3_to_consistency(formula);
        save_instance(out, gadget.instance);
        std::ofstream assignment_out(out + ".assn");
        write_assignment(assignment_out, gadget.assignment);
        std::cout << "wrote " << out << " and " << out << ".assn\n";
    } else {
        throw usage_error("reduce: --from must be one of lmp, qubo, steiner, mtvs, 3sat");
    }
    return 0;
}

int cmd_oracle(const std::string& problem, const std::string& input,
               const std::string& assignment_path) {
    if (problem == "msp") {
        const MspInstance instance = load_instance(input);
        const MspOptimum best = brute_force_msp(instance);
        std::cout << "value=" << fmt(best.value, 6) << " nodes_in_separator=" << best.separator.size()
                  << '\n';
    } else if (problem == "lmp") {
        const LmpInstance instance = load_lmp(input);
        std::cout << "value=" << fmt(brute_force_lmp(instance), 6) << '\n';
    } else if (problem == "qubo") {
        std::ifstream in(input);
        if (!in) throw format_error("cannot open " + input);
        const auto [terms, n] = read_qubo(in);
        const QuboOptimum best = brute_force_qubo(terms, n);
        std::cout << "value=" << fmt(best.value, 6) << '\n';
    } else if (problem == "consistency") {
        const MspInstance instance = load_instance(input);
        std::ifstream in(assignment_path);
        if (!in) throw format_error("cannot open " + assignment_path);
        const PartialAssignment x = read_assignment(in, instance);
        std::cout << (brute_force_consistency(instance, x) ? "consistent" : "inconsistent") << '\n';
    } else {
        throw usage_error("oracle: --problem must be one of msp, lmp, qubo, consistency");
    }
    return 0;
}

int cmd_bench(const std::string& kind, const std::string& sizes_arg, double t,
              const std::string& algo, std::uint64_t seed) {
    std::vector<int> sizes;
    std::stringstream ss(sizes_arg);
    std::string token;
    while (std::getline(ss, token, ','))
        if (!token.empty()) sizes.push_back(std::stoi(token));
    if (sizes.empty()) throw usage_error("bench: no sizes given");
    const auto rows = run_bench(kind, sizes, t, algo, seed);
    std::cout << "m voxels synth_ms build_ms solve_ms per_voxel_us objective\n";
    for (const auto& row : rows)
        std::cout << row.m << ' ' << row.voxels << ' ' << fmt(row.synth_ms, 1) << ' '
                  << fmt(row.build_ms, 1) << ' ' << fmt(row.solve_ms, 1) << ' '
                  << fmt(row.per_voxel_us, 3) << ' ' << fmt(row.objective, 6) << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"multi-separator toolkit: synthesis, instances, solvers, metrics"};
    app.require_subcommand(1);

    // synth
    auto* synth = app.add_subcommand("synth", "synthesize a truth volume and its gray image");
    std::string synth_kind, synth_out = "volume";
    int synth_m = 64;
    double synth_t = 0.0;
    std::uint64_t synth_seed = 0;
    synth->add_option("--kind", synth_kind, "filaments or cells")->required();
    synth->add_option("--m", synth_m, "volume side length");
    synth->add_option("--t", synth_t, "noise level in [0,1]");
    synth->add_option("--seed", synth_seed, "random seed")->required();
    synth->add_option("--out", synth_out, "output prefix");

    // build
    auto* build = app.add_subcommand("build", "build an instance from a gray volume");
    std::string build_kind, build_gray, build_out = "instance.msep";
    double build_bias = 0.0;
    bool build_bias_nodes_only = false;
    int build_long_range = 8;
    build->add_option("--kind", build_kind, "filaments or cells")->required();
    build->add_option("--gray", build_gray, "gray volume file")->required();
    build->add_option("--out", build_out, "output instance file");
    build->add_option("--bias", build_bias, "bias added to all coefficients");
    build->add_flag("--bias-nodes-only", build_bias_nodes_only, "bias node costs only");
    build->add_option("--long-range-distance", build_long_range,
                      "rounded offset length for filament interactions");

    // solve
    auto* solve = app.add_subcommand("solve", "run a solver on an instance file");
    std::string solve_instance, solve_algo = "gss", solve_out;
    double solve_bias = 0.0;
    bool solve_bias_nodes_only = false, solve_trace = false;
    std::vector<double> solve_bias_grid_spec;
    solve->add_option("--instance", solve_instance, "instance file")->required();
    solve->add_option("--algo", solve_algo, "gss, gsg, or dominant");
    solve->add_option("--bias", solve_bias, "bias added before solving");
    solve->add_flag("--bias-nodes-only", solve_bias_nodes_only, "bias node costs only");
    solve->add_option("--bias-grid", solve_bias_grid_spec,
                      "lo hi count: solve once per equally spaced bias")
        ->expected(3);
    solve->add_flag("--trace", solve_trace, "print the objective after every committed move");
    solve->add_option("--out", solve_out, "write the separator to this file");

    // trace: solve --trace shortcut
    auto* trace_cmd = app.add_subcommand("trace", "print a solver's objective trace");
    std::string trace_instance, trace_algo = "gss";
    trace_cmd->add_option("--instance", trace_instance, "instance file")->required();
    trace_cmd->add_option("--algo", trace_algo, "gss or gsg");

    // watershed
    auto* ws = app.add_subcommand("watershed", "seeded watershed baseline");
    std::string ws_gray, ws_out;
    double ws_start = 0.5, ws_end = 0.5;
    std::vector<double> ws_start_grid_spec, ws_end_grid_spec;
    ws->add_option("--gray", ws_gray, "gray volume file")->required();
    ws->add_option("--start", ws_start, "seed threshold");
    ws->add_option("--end", ws_end, "flood termination threshold");
    ws->add_option("--start-grid", ws_start_grid_spec, "lo hi count")->expected(3);
    ws->add_option("--end-grid", ws_end_grid_spec, "lo hi count")->expected(3);
    ws->add_option("--out", ws_out, "write the separator to this file");

    // evaluate
    auto* eval = app.add_subcommand("evaluate", "compare a separator against a truth volume");
    std::string eval_pred, eval_truth;
    eval->add_option("--pred", eval_pred, "separator file")->required();
    eval->add_option("--truth", eval_truth, "binary truth volume")->required();

    // reduce
    auto* reduce = app.add_subcommand("reduce", "reduce another problem to an instance file");
    std::string reduce_from, reduce_input, reduce_out = "reduced.msep";
    reduce->add_option("--from", reduce_from, "lmp, qubo, steiner, mtvs, or 3sat")->required();
    reduce->add_option("--input", reduce_input, "input file")->required();
    reduce->add_option("--out", reduce_out, "output instance file");

    // oracle
    auto* oracle = app.add_subcommand("oracle", "exhaustive reference solvers (small inputs)");
    std::string oracle_problem, oracle_input, oracle_assignment;
    oracle->add_option("--problem", oracle_problem, "msp, lmp, qubo, or consistency")->required();
    oracle->add_option("--input", oracle_input, "input file")->required();
    oracle->add_option("--assignment", oracle_assignment, "assignment file (consistency)");

    // bench
    auto* bench = app.add_subcommand("bench", "per-size runtime table");
    std::string bench_kind = "filaments", bench_sizes = "20,32,48,64", bench_algo;
    double bench_t = 0.5;
    std::uint64_t bench_seed = 1;
    bench->add_option("--kind", bench_kind, "filaments or cells");
    bench->add_option("--m", bench_sizes, "comma-separated sizes");
    bench->add_option("--t", bench_t, "noise level");
    bench->add_option("--algo", bench_algo, "override the kind's default solver");
    bench->add_option("--seed", bench_seed, "random seed");

    try {
        app.parse(argc, argv);
        if (synth->parsed()) {
            if (synth_t < 0.0 || synth_t > 1.0) throw usage_error("synth: t must be in [0,1]");
            return cmd_synth(synth_kind, synth_m, synth_t, synth_seed, synth_out);
        }
        if (build->parsed())
            return cmd_build(build_kind, build_gray, build_out, build_bias, build_bias_nodes_only,
                             build_long_range);
        if (solve->parsed()) {
            std::vector<double> grid;
            if (!solve_bias_grid_spec.empty())
                grid = linspace(solve_bias_grid_spec[0], solve_bias_grid_spec[1],
                                static_cast<int>(solve_bias_grid_spec[2]));
            return cmd_solve(solve_instance, solve_algo, solve_bias, solve_bias_nodes_only, grid,
                             solve_trace, solve_out);
        }
        if (trace_cmd->parsed())
            return cmd_solve(trace_instance, trace_algo, 0.0, false, {}, true, "");
        if (ws->parsed()) {
            std::vector<double> sg, eg;
            if (!ws_start_grid_spec.empty())
                sg = linspace(ws_start_grid_spec[0], ws_start_grid_spec[1],
                              static_cast<int>(ws_start_grid_spec[2]));
            if (!ws_end_grid_spec.empty())
                eg = linspace(ws_end_grid_spec[0], ws_end_grid_spec[1],
                              static_cast<int>(ws_end_grid_spec[2]));
            return cmd_watershed(ws_gray, ws_start, ws_end, sg, eg, ws_out);
        }
        if (eval->parsed()) return cmd_evaluate(eval_pred, eval_truth);
        if (reduce->parsed()) return cmd_reduce(reduce_from, reduce_input, reduce_out);
        if (oracle->parsed()) return cmd_oracle(oracle_problem, oracle_input, oracle_assignment);
        if (bench->parsed()) return cmd_bench(bench_kind, bench_sizes, bench_t, bench_algo, bench_seed);
        return 0;
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const usage_error& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const format_error& e) {
        std::cerr << "format error: " << e.what() << '\n';
        return 3;
    } catch (const precondition_error& e) {
        std::cerr << "precondition error: " << e.what() << '\n';
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
