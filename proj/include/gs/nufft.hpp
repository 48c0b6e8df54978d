#pragma once

#include <array>
#include <complex>
#include <memory>
#include <span>
#include <vector>

namespace gs {

using cd = std::complex<double>;
using cvec = std::vector<cd>;

// Nonuniform frequency locations in natural units (cycles).  coords is
// point-major: 1D one value per point, 2D interleaved (x, y).
struct SamplingSet {
    int dim = 1;
    std::vector<double> coords;

    size_t size() const { return coords.size() / static_cast<size_t>(dim); }
    double x(size_t m) const { return coords[m * static_cast<size_t>(dim)]; }
    double y(size_t m) const { return coords[m * static_cast<size_t>(dim) + 1]; }
};

// Direct NDFT: y_m = sum_{k in I_N} x_k exp(-2 pi i k . xi_m) with
// k = -N_d/2 .. N_d/2 - 1 per axis, last axis fastest in the flat grid.
// Points are scaled locations in [-1/2, 1/2)^dim, point-major.
cvec ndft_forward(int dim, const std::array<int, 2>& N, std::span<const double> points,
                  std::span<const cd> grid);

// Adjoint: z_k = sum_m y_m exp(+2 pi i k . xi_m).
cvec ndft_adjoint(int dim, const std::array<int, 2>& N, std::span<const double> points,
                  std::span<const cd> samples);

// Window-gridding approximation of the NDFT pair.  The spreading kernel is a
// Kaiser-Bessel bump of half-width w grid points on the sigma-oversampled
// grid; forward and adjoint are exact transposes of each other, each within
// the kernel's aliasing error of the direct transform (~1e-9 relative at the
// sigma = 2, w = 6 defaults).  Immutable after construction; concurrent
// transforms on distinct buffers are safe.
class NfftPlan {
  public:
    NfftPlan(int dim, const std::array<int, 2>& N, std::span<const double> points,
             double sigma, int w);
    ~NfftPlan();
    NfftPlan(NfftPlan&&) noexcept;
    NfftPlan& operator=(NfftPlan&&) noexcept;
    NfftPlan(const NfftPlan&) = delete;
    NfftPlan& operator=(const NfftPlan&) = delete;

    int dim() const;
    size_t points_count() const;
    size_t grid_size() const;           // prod N_d
    int oversampled_length(int axis) const;

    cvec forward(std::span<const cd> grid) const;
    cvec adjoint(std::span<const cd> samples) const;

  private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

NfftPlan plan_nfft(int dim, const std::array<int, 2>& N, std::span<const double> points,
                   double sigma = 2.0, int w = 6);

cvec nfft_forward(const NfftPlan& plan, std::span<const cd> grid);
cvec nfft_adjoint(const NfftPlan& plan, std::span<const cd> samples);

// Exact NDFT on the uniform grid xi_m = (epsilon/N)(m - 1 - M/2), m = 1..M,
// via one zero-embedded DFT of length q N / epsilon.  Requires 1/epsilon a
// positive integer and M >= N >= x.size().
cvec uniform_ndft_fft(std::span<const cd> x, long long M, double epsilon, long long N);

// Adjoint companion for the same grid with x-length N: returns the length-N
// grid sum_m samples_m exp(+2 pi i k xi_m), k = -N/2 .. N/2 - 1.
cvec uniform_ndft_adjoint_fft(std::span<const cd> samples, double epsilon, long long N);

}  // namespace gs
