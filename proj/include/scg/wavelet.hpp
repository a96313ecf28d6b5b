#ifndef SCG_WAVELET_HPP
#define SCG_WAVELET_HPP

#include <cstddef>
#include <vector>

#include "scg/signal.hpp"

namespace scg {

// Sampled Gaus-2 (Mexican hat) kernel at one scale. `values[k]` holds
// psi((t_k)/l)/sqrt(l) for t_k = (k - half) / fs, k = 0 .. 2*half.
struct WaveletKernel {
  double scale_s = 0.0;          // l, in seconds
  std::size_t half_support = 0;  // kernel length = 2*half_support + 1
  std::vector<double> values;
};

// L2-normalized Gaus-2 prototype psi(t) = C (1 - t^2) exp(-t^2/2),
// C = sqrt(4 / (3 sqrt(pi))).
double gaus2_prototype(double t);

// Kernel truncated where |t/l| > 5 (tails below 1e-5 of the peak).
WaveletKernel gaus2_kernel(double scale_s, double fs);

struct CwtMatrix {
  std::vector<std::vector<double>> coefficients;  // scales x time
  std::vector<double> scales_s;
  double fs = 0.0;
};

// Correlation of the signal with each scale's kernel, symmetric-reflection
// boundary handling, FFT-accelerated. Rows match `scales_s` order.
CwtMatrix cwt(const SampledSignal& signal, const std::vector<double>& scales_s);

// Default scale grid: 1..count samples expressed in seconds (k / fs).
std::vector<double> default_scales(double fs, int count = 150);

struct Scalogram {
  std::vector<std::vector<double>> energies;  // scales x time, sums to 1
  std::vector<double> scales_s;
  double fs = 0.0;
};

// |w|^2 normalized by the global sum. Throws DegenerateInputError when all
// coefficients are zero.
Scalogram to_scalogram(const CwtMatrix& coeffs);

struct MrweSeries {
  std::vector<double> values;             // per-sample max over scales
  std::vector<std::size_t> argmax_scale;  // scale row attaining it (ties: smaller)
};

MrweSeries mrwe(const Scalogram& s);

}  // namespace scg

#endif
