#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "gs/freq2wave.hpp"
#include "gs/solver.hpp"

namespace gs {

// One named benchmark problem.  The five registry entries reproduce the
// operator shapes 8192x4096, 5463x2048, 512^2x256^2, 26244x32^2 and
// 27681x32^2, all with the db4 family.
struct BenchProblem {
    std::string name;
    int dim;
    Family family;
    int J;
    enum class Pattern { uniform, jitter, spiral } pattern;
    long long m_param;      // 1D point count or per-axis count (tensor grids)
    double epsilon;         // grid/jitter spacing
    double eta;             // jitter amplitude
    int turns;              // spiral
    double bandwidth;       // spiral radius bound
};

struct BenchRecord {
    std::string problem;
    size_t rows = 0;
    size_t cols = 0;
    double init_seconds = 0.0;
    double solve_seconds = 0.0;
    int iterations = 0;
    double seconds_per_iteration = 0.0;
};

const std::vector<BenchProblem>& bench_registry();

// Builds the (possibly scale-reduced) sampling set of a registry entry.
SamplingSet bench_sampling_set(const BenchProblem& problem, double scale, uint64_t seed,
                               int* J_out);

// Times operator construction and the least-squares solve: `warmups` untimed
// rounds, then the median of `repeats` timed rounds of each stage.  The
// right-hand side is the forward image of seeded random coefficients.
BenchRecord run_bench(std::string_view name, double scale = 1.0, uint64_t seed = 20160613,
                      int warmups = 1, int repeats = 5,
                      const SolveOptions& solve_options = {});

// Appends a record to a CSV report, writing the header if the file is new.
void append_bench_csv(const std::filesystem::path& path, const BenchRecord& record);

}  // namespace gs
