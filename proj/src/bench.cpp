#include "gs/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <random>

#include "gs/error.hpp"
#include "gs/patterns.hpp"

namespace gs {

namespace {

using clock_type = std::chrono::steady_clock;

double seconds_since(clock_type::time_point start) {
    return std::chrono::duration<double>(clock_type::now() - start).count();
}

double median(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    size_t n = v.size();
    return (n % 2 == 1) ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

cvec seeded_coefficients(size_t n, uint64_t seed) {
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    cvec x(n);
    for (cd& z : x) z = cd(unit(rng), unit(rng));
    return x;
}

}  // namespace

const std::vector<BenchProblem>& bench_registry() {
    using Pattern = BenchProblem::Pattern;
    static const std::vector<BenchProblem> registry = {
        {"uniform1d", 1, Family::db4, 12, Pattern::uniform, 8192, 0.5, 0.0, 0, 0.0},
        {"jitter1d", 1, Family::db4, 11, Pattern::jitter, 5463, 0.36, 0.09, 0, 0.0},
        {"uniform2d", 2, Family::db4, 8, Pattern::uniform, 512, 0.5, 0.0, 0, 0.0},
        {"jitter2d", 2, Family::db4, 5, Pattern::jitter, 162, 0.19, 0.045, 0, 0.0},
        {"spiral", 2, Family::db4, 5, Pattern::spiral, 27681, 0.0, 0.0, 27, 15.8},
    };
    return registry;
}

SamplingSet bench_sampling_set(const BenchProblem& problem, double scale, uint64_t seed,
                               int* J_out) {
    if (!(scale > 0)) throw DomainError("scale must be positive");
    int J = problem.J + static_cast<int>(std::lround(std::log2(scale)));
    long long n_old = 1LL << problem.J;
    long long n_new = 1LL << J;
    long long m = std::llround(static_cast<double>(problem.m_param) * scale);
    if (m < 1) throw DomainError("scale leaves no sample points");
    if (J_out != nullptr) *J_out = J;
    double shrink = static_cast<double>(n_new) / static_cast<double>(n_old);
    switch (problem.pattern) {
        case BenchProblem::Pattern::uniform: {
            // keep epsilon * M / N fixed so the scaled grid still fills the band
            double eps = problem.epsilon * (static_cast<double>(problem.m_param) / m) * shrink;
            return gen_grid(m, eps, problem.dim);
        }
        case BenchProblem::Pattern::jitter: {
            double eps = problem.epsilon * (static_cast<double>(problem.m_param) / m) * shrink;
            double eta = problem.eta * (eps / problem.epsilon);
            return gen_jitter(m, eps, eta, seed, problem.dim);
        }
        case BenchProblem::Pattern::spiral: {
            double ppt = static_cast<double>(m) / problem.turns;
            return gen_spiral(problem.turns, ppt, problem.bandwidth * shrink);
        }
    }
    throw DomainError("unknown pattern");
}

BenchRecord run_bench(std::string_view name, double scale, uint64_t seed, int warmups,
                      int repeats, const SolveOptions& solve_options) {
    const BenchProblem* problem = nullptr;
    for (const BenchProblem& candidate : bench_registry()) {
        if (candidate.name == name) {
            problem = &candidate;
            break;
        }
    }
    if (problem == nullptr) {
        throw DomainError("unknown benchmark problem: " + std::string(name));
    }
    if (repeats < 1) throw DomainError("repeats must be >= 1");

    int J = 0;
    SamplingSet samples = bench_sampling_set(*problem, scale, seed, &J);

    BenchRecord record;
    record.problem = std::string(name);

    std::vector<double> init_times, solve_times;
    for (int round = 0; round < warmups + repeats; ++round) {
        clock_type::time_point t0 = clock_type::now();
        Freq2WaveOp op = freq2wave(samples, problem->family, J);
        double init = seconds_since(t0);

        cvec truth = seeded_coefficients(op.cols(), seed);
        cvec data = apply_forward(op, truth);

        t0 = clock_type::now();
        auto [solution, stats] = solve_least_squares(op, data, solve_options);
        double solve = seconds_since(t0);
        (void)solution;

        if (round >= warmups) {
            init_times.push_back(init);
            solve_times.push_back(solve);
            record.iterations = stats.iterations;
        }
        record.rows = op.rows();
        record.cols = op.cols();
    }
    record.init_seconds = median(init_times);
    record.solve_seconds = median(solve_times);
    record.seconds_per_iteration =
        record.iterations > 0 ? record.solve_seconds / record.iterations : 0.0;
    return record;
}

void append_bench_csv(const std::filesystem::path& path, const BenchRecord& record) {
    bool fresh = !std::filesystem::exists(path) || std::filesystem::file_size(path) == 0;
    std::ofstream out(path, std::ios::app);
    if (!out) throw FileFormatError("cannot open bench report: " + path.string());
    if (fresh) {
        out << "problem,rows,cols,init_seconds,solve_seconds,iterations,"
               "seconds_per_iteration\n";
    }
    char line[256];
    std::snprintf(line, sizeof(line), "%s,%zu,%zu,%.6f,%.6f,%d,%.6f\n",
                  record.problem.c_str(), record.rows, record.cols, record.init_seconds,
                  record.solve_seconds, record.iterations, record.seconds_per_iteration);
    out << line;
}

}  // namespace gs
