#pragma once

#include <filesystem>
#include <string>

#include "gs/dyadic.hpp"
#include "gs/nufft.hpp"
#include "gs/scaling.hpp"
#include "gs/weights.hpp"

namespace gs {

enum class FileFormat { csv, binary };

// Frequency files: CSV with header xi_x[,xi_y], or binary magic GSFQ,
// u32 version, u32 dim, u64 count, 64-bit little-endian doubles point-major.
void write_frequency_file(const std::filesystem::path& path, const SamplingSet& set,
                          FileFormat format);
SamplingSet read_frequency_file(const std::filesystem::path& path);

// Sample files: CSV header re,im, or binary magic GSSM with the same header
// layout and interleaved re/im doubles.
void write_sample_file(const std::filesystem::path& path, const cvec& samples,
                       FileFormat format);
cvec read_sample_file(const std::filesystem::path& path);

// Coefficient files: binary magic GSCF, u32 version, u32 dim, u8 family tag
// (0 = haar, p for dbp), u32 J, interleaved complex values in the
// coefficient-grid ordering.
struct CoefficientFile {
    int dim = 1;
    Family family = Family::haar;
    int J = 0;
    cvec values;
};
void write_coefficient_file(const std::filesystem::path& path, const CoefficientFile& file);
CoefficientFile read_coefficient_file(const std::filesystem::path& path);

// Evaluations: CSV x,value in 1D; binary 16-bit PGM in 2D with the value
// range recorded in the comment line.
void write_evaluation_csv(const std::filesystem::path& path,
                          const ReconstructionEvaluation& eval);
void write_evaluation_pgm(const std::filesystem::path& path,
                          const ReconstructionEvaluation& eval);

// Weight files: CSV with header mu.
void write_weight_file(const std::filesystem::path& path, const WeightSet& weights);
WeightSet read_weight_file(const std::filesystem::path& path);

}  // namespace gs
