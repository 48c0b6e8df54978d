// gs: sampling-pattern generation, Voronoi weights, frequency-domain
// reconstruction in boundary-corrected scaling-function bases, dyadic-grid
// evaluation, and a benchmark harness.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>

#include "gs/bench.hpp"
#include "gs/dyadic.hpp"
#include "gs/error.hpp"
#include "gs/io.hpp"
#include "gs/patterns.hpp"
#include "gs/signals.hpp"
#include "gs/solver.hpp"
#include "gs/weights.hpp"

namespace {

using json = nlohmann::json;

gs::FileFormat parse_format(const std::string& name) {
    if (name == "csv") return gs::FileFormat::csv;
    if (name == "bin" || name == "binary") return gs::FileFormat::binary;
    throw gs::UsageError("unknown format: " + name);
}

struct GenArgs {
    std::string kind;
    long long m = 0;
    double epsilon = 1.0;
    double eta = 0.0;
    uint64_t seed = 0;
    int turns = 1;
    double points_per_turn = 0.0;
    double bandwidth = 1.0;
    int dim = 1;
    std::string output;
    std::string format = "csv";
    std::string cosine_samples;
};

int cmd_gen(const GenArgs& args) {
    gs::SamplingSet set;
    if (args.kind == "grid") {
        set = gs::gen_grid(args.m, args.epsilon, args.dim);
    } else if (args.kind == "jitter") {
        set = gs::gen_jitter(args.m, args.epsilon, args.eta, args.seed, args.dim);
    } else if (args.kind == "spiral") {
        double ppt = args.points_per_turn;
        if (ppt <= 0 && args.m > 0) ppt = static_cast<double>(args.m) / args.turns;
        set = gs::gen_spiral(args.turns, ppt, args.bandwidth);
    } else {
        throw gs::UsageError("unknown pattern kind: " + args.kind);
    }
    gs::write_frequency_file(args.output, set, parse_format(args.format));
    if (!args.cosine_samples.empty()) {
        gs::cvec samples = gs::truncated_cosine_transform(set);
        gs::write_sample_file(args.cosine_samples, samples, parse_format(args.format));
    }
    std::cout << "wrote " << set.size() << " points to " << args.output << "\n";
    return 0;
}

struct WeightsArgs {
    std::string freq_file;
    double bandwidth = 0.0;
    std::string output;
};

int cmd_weights(const WeightsArgs& args) {
    gs::SamplingSet set = gs::read_frequency_file(args.freq_file);
    gs::WeightSet ws = gs::voronoi_weights(set, args.bandwidth);
    gs::DensityReport report = gs::density(set, args.bandwidth);
    if (!args.output.empty()) gs::write_weight_file(args.output, ws);
    std::printf("delta_raw %.12g\n", report.delta_raw);
    std::printf("delta_scaled %.12g\n", report.delta_scaled);
    std::printf("quarter_bound %s\n", report.satisfies_quarter_bound ? "satisfied" : "violated");
    return 0;
}

struct ReconstructArgs {
    std::string freq_file;
    std::string sample_file;
    std::string family = "haar";
    int J = 0;
    std::optional<double> bandwidth;
    std::optional<bool> weighted;
    double tol = 1e-10;
    int max_iter = 0;
    std::string output;
};

bool is_uniformish(const gs::SamplingSet& set) {
    if (set.dim != 1 || set.size() < 3) return false;
    double gap = set.coords[1] - set.coords[0];
    for (size_t m = 2; m < set.size(); ++m) {
        if (std::abs((set.coords[m] - set.coords[m - 1]) - gap) > 1e-12) return false;
    }
    return true;
}

int cmd_reconstruct(const ReconstructArgs& args) {
    gs::SamplingSet set = gs::read_frequency_file(args.freq_file);
    gs::cvec data = gs::read_sample_file(args.sample_file);
    if (data.size() != set.size()) {
        throw gs::ShapeError("frequency and sample files disagree on the point count");
    }
    gs::Family family = gs::family_from_string(args.family);

    // weighted mode auto-activates for nonuniform points with a bandwidth;
    // explicit flags override
    bool weighted = args.weighted.value_or(args.bandwidth.has_value() && !is_uniformish(set));

    gs::Freq2WaveOptions options;
    options.bandwidth = args.bandwidth;
    if (weighted) {
        double region = args.bandwidth.value_or(0.0);
        if (region <= 0.0) {
            double extent = 0.0;
            for (double v : set.coords) extent = std::max(extent, std::abs(v));
            region = extent;
        }
        options.weights = gs::voronoi_weights(set, region).mu;
    }

    auto t0 = std::chrono::steady_clock::now();
    gs::Freq2WaveOp op = gs::freq2wave(set, family, args.J, options);
    double init_seconds = std::chrono::duration<double>(
        std::chrono::steady_clock::now() - t0).count();

    gs::SolveOptions solve_options;
    solve_options.tolerance = args.tol;
    solve_options.max_iterations = args.max_iter;
    t0 = std::chrono::steady_clock::now();
    auto [coeffs, stats] = gs::solve_least_squares(op, data, solve_options);
    double solve_seconds = std::chrono::duration<double>(
        std::chrono::steady_clock::now() - t0).count();

    gs::CoefficientFile file;
    file.dim = set.dim;
    file.family = family;
    file.J = args.J;
    file.values = std::move(coeffs);
    gs::write_coefficient_file(args.output, file);

    json sidecar = {
        {"iterations", stats.iterations},
        {"converged", stats.converged},
        {"residual", stats.residual},
        {"weighted", weighted},
        {"init_seconds", init_seconds},
        {"solve_seconds", solve_seconds},
    };
    std::ofstream side(args.output + ".stats.json");
    side << sidecar.dump(2) << "\n";

    std::cout << "iterations " << stats.iterations << " residual " << stats.residual
              << (stats.converged ? "" : " (not converged)") << "\n";
    return stats.converged ? 0 : 6;
}

struct EvaluateArgs {
    std::string coefficient_file;
    int resolution = 0;
    std::string output;
};

int cmd_evaluate(const EvaluateArgs& args) {
    gs::CoefficientFile file = gs::read_coefficient_file(args.coefficient_file);
    gs::ScalingFamily fam = gs::ScalingFamily::make(file.family);
    std::vector<double> real_part(file.values.size());
    for (size_t i = 0; i < real_part.size(); ++i) real_part[i] = file.values[i].real();
    gs::ReconstructionEvaluation eval =
        (file.dim == 1) ? gs::weval_1d(real_part, fam, file.J, args.resolution)
                        : gs::weval_2d(real_part, fam, file.J, args.resolution);
    if (file.dim == 1) {
        gs::write_evaluation_csv(args.output, eval);
    } else {
        gs::write_evaluation_pgm(args.output, eval);
    }
    std::cout << "wrote " << args.output << "\n";
    return 0;
}

struct BenchArgs {
    std::string problem;
    double scale = 1.0;
    uint64_t seed = 20160613;
    int repeats = 5;
    std::string report = "bench.csv";
};

int cmd_bench(const BenchArgs& args) {
    gs::BenchRecord record = gs::run_bench(args.problem, args.scale, args.seed, 1, args.repeats);
    gs::append_bench_csv(args.report, record);
    std::printf("%s %zux%zu init %.3fs solve %.3fs iters %d s/iter %.4f\n",
                record.problem.c_str(), record.rows, record.cols, record.init_seconds,
                record.solve_seconds, record.iterations, record.seconds_per_iteration);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"generalized sampling pipeline"};
    app.require_subcommand(1);

    GenArgs gen;
    CLI::App* gen_cmd = app.add_subcommand("gen", "generate a sampling pattern");
    gen_cmd->add_option("kind", gen.kind, "grid | jitter | spiral")->required();
    gen_cmd->add_option("--M", gen.m, "point count (per axis for 2D grids)");
    gen_cmd->add_option("--epsilon", gen.epsilon, "grid spacing");
    gen_cmd->add_option("--eta", gen.eta, "jitter amplitude");
    gen_cmd->add_option("--seed", gen.seed, "jitter seed");
    gen_cmd->add_option("--turns", gen.turns, "spiral turns");
    gen_cmd->add_option("--points-per-turn", gen.points_per_turn, "spiral sampling rate");
    gen_cmd->add_option("--bandwidth", gen.bandwidth, "spiral radius bound K");
    gen_cmd->add_option("--dim", gen.dim, "1 or 2");
    gen_cmd->add_option("-o,--output", gen.output, "frequency file")->required();
    gen_cmd->add_option("--format", gen.format, "csv | bin");
    gen_cmd->add_option("--truncated-cosine-samples", gen.cosine_samples,
                        "also write analytic truncated-cosine samples at the points");

    WeightsArgs weights;
    CLI::App* weights_cmd = app.add_subcommand("weights", "Voronoi weights and density");
    weights_cmd->add_option("freq_file", weights.freq_file)->required();
    weights_cmd->add_option("--bandwidth", weights.bandwidth, "region half-width K")->required();
    weights_cmd->add_option("-o,--output", weights.output, "weight file (csv)");

    ReconstructArgs rec;
    CLI::App* rec_cmd = app.add_subcommand("reconstruct", "least-squares reconstruction");
    rec_cmd->add_option("freq_file", rec.freq_file)->required();
    rec_cmd->add_option("sample_file", rec.sample_file)->required();
    rec_cmd->add_option("--family", rec.family, "haar | db2..db8")->required();
    rec_cmd->add_option("--scale-J", rec.J, "reconstruction scale J")->required();
    double bandwidth_value = 0.0;
    CLI::Option* bw = rec_cmd->add_option("--bandwidth", bandwidth_value, "frequency bound K");
    bool weighted_flag = false, unweighted_flag = false;
    rec_cmd->add_flag("--weighted", weighted_flag, "force Voronoi row weights");
    rec_cmd->add_flag("--unweighted", unweighted_flag, "disable row weights");
    rec_cmd->add_option("--tol", rec.tol, "relative normal-equation residual target");
    rec_cmd->add_option("--max-iter", rec.max_iter, "iteration cap (0 = 2N)");
    rec_cmd->add_option("-o,--output", rec.output, "coefficient file")->required();

    EvaluateArgs eval;
    CLI::App* eval_cmd = app.add_subcommand("evaluate", "evaluate coefficients on a dyadic grid");
    eval_cmd->add_option("coefficient_file", eval.coefficient_file)->required();
    eval_cmd->add_option("--resolution", eval.resolution, "dyadic resolution R")->required();
    eval_cmd->add_option("-o,--output", eval.output, "csv (1D) or pgm (2D)")->required();

    BenchArgs bench;
    CLI::App* bench_cmd = app.add_subcommand("bench", "run a registry benchmark problem");
    bench_cmd->add_option("problem", bench.problem,
                          "uniform1d | jitter1d | uniform2d | jitter2d | spiral")->required();
    bench_cmd->add_option("--scale", bench.scale, "problem size multiplier");
    bench_cmd->add_option("--seed", bench.seed, "data seed");
    bench_cmd->add_option("--repeats", bench.repeats, "timed repetitions");
    bench_cmd->add_option("--report", bench.report, "CSV report path");

    try {
        app.parse(argc, argv);
        if (gen_cmd->parsed()) return cmd_gen(gen);
        if (weights_cmd->parsed()) return cmd_weights(weights);
        if (rec_cmd->parsed()) {
            if (*bw) rec.bandwidth = bandwidth_value;
            if (weighted_flag && unweighted_flag) {
                throw gs::UsageError("--weighted and --unweighted are mutually exclusive");
            }
            if (weighted_flag) rec.weighted = true;
            if (unweighted_flag) rec.weighted = false;
            return cmd_reconstruct(rec);
        }
        if (eval_cmd->parsed()) return cmd_evaluate(eval);
        if (bench_cmd->parsed()) return cmd_bench(bench);
        return 2;
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const gs::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.exit_code();
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
