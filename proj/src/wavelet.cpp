#include "scg/wavelet.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>

#include "scg/errors.hpp"
#include "scg/fft.hpp"

namespace scg {

double gaus2_prototype(double t) {
  static const double c = std::sqrt(4.0 / (3.0 * std::sqrt(std::numbers::pi)));
  return c * (1.0 - t * t) * std::exp(-t * t / 2.0);
}

WaveletKernel gaus2_kernel(double scale_s, double fs) {
  if (scale_s <= 0.0) throw ParameterError("gaus2_kernel: scale must be > 0");
  if (fs <= 0.0) throw ParameterError("gaus2_kernel: fs must be > 0");
  WaveletKernel k;
  k.scale_s = scale_s;
  k.half_support = static_cast<std::size_t>(std::ceil(5.0 * scale_s * fs));
  const double inv_sqrt_l = 1.0 / std::sqrt(scale_s);
  k.values.resize(2 * k.half_support + 1);
  for (std::size_t i = 0; i < k.values.size(); ++i) {
    const double t = (static_cast<double>(i) - static_cast<double>(k.half_support)) / fs;
    k.values[i] = inv_sqrt_l * gaus2_prototype(t / scale_s);
  }
  return k;
}

namespace {

// Half-sample symmetric extension: index -1 mirrors 0, index n mirrors n-1.
inline std::size_t reflect_index(long i, long n) {
  while (i < 0 || i >= n) {
    if (i < 0) i = -i - 1;
    if (i >= n) i = 2 * n - 1 - i;
  }
  return static_cast<std::size_t>(i);
}

std::size_t next_pow2(std::size_t n) {
  std::size_t p = 1;
  while (p < n) p <<= 1;
  return p;
}

}  // namespace

CwtMatrix cwt(const SampledSignal& signal, const std::vector<double>& scales_s) {
  require_valid(signal, "cwt");
  if (scales_s.empty()) throw ParameterError("cwt: empty scale list");
  for (double l : scales_s)
    if (l <= 0.0) throw ParameterError("cwt: scales must be > 0");

  const long n = static_cast<long>(signal.size());
  long max_half = 0;
  for (double l : scales_s)
    max_half = std::max(max_half, static_cast<long>(std::ceil(5.0 * l * signal.fs)));
  if (n < 2 * max_half + 1)
    throw InputError("cwt: signal shorter than the longest kernel support");

  // One reflected extension covers every scale; FFT of it is shared. All
  // correlation lags used below stay inside [0, ext_n), so zero-padding to a
  // power of two adds no circular wraparound.
  const long pad = max_half;
  const long ext_n = n + 2 * pad;
  const std::size_t m = next_pow2(static_cast<std::size_t>(ext_n));
  std::vector<std::complex<double>> ext(m, 0.0);
  for (long i = 0; i < ext_n; ++i) ext[i] = signal.samples[reflect_index(i - pad, n)];
  const auto ext_fft = fft::forward(ext);

  CwtMatrix out;
  out.scales_s = scales_s;
  out.fs = signal.fs;
  out.coefficients.resize(scales_s.size());

  std::vector<std::complex<double>> kbuf(m);
  for (std::size_t r = 0; r < scales_s.size(); ++r) {
    const WaveletKernel kern = gaus2_kernel(scales_s[r], signal.fs);
    const long half = static_cast<long>(kern.half_support);

    // corr[j] = sum_i ext[i + j] * kern[i], so the kernel center sits at
    // extension position j + half; signal position t is corr[pad + t - half].
    std::fill(kbuf.begin(), kbuf.end(), std::complex<double>(0.0));
    for (std::size_t i = 0; i < kern.values.size(); ++i) kbuf[i] = kern.values[i];
    auto kfft = fft::forward(kbuf);
    for (std::size_t i = 0; i < m; ++i) kfft[i] = ext_fft[i] * std::conj(kfft[i]);
    const auto corr = fft::inverse(kfft);

    auto& row = out.coefficients[r];
    row.resize(signal.size());
    for (long t = 0; t < n; ++t)
      row[static_cast<std::size_t>(t)] = corr[static_cast<std::size_t>(pad + t - half)].real();
  }
  return out;
}

std::vector<double> default_scales(double fs, int count) {
  if (fs <= 0.0) throw ParameterError("default_scales: fs must be > 0");
  if (count < 1) throw ParameterError("default_scales: count must be >= 1");
  std::vector<double> scales(static_cast<std::size_t>(count));
  for (int k = 1; k <= count; ++k) scales[static_cast<std::size_t>(k - 1)] = static_cast<double>(k) / fs;
  return scales;
}

Scalogram to_scalogram(const CwtMatrix& coeffs) {
  if (coeffs.coefficients.empty() || coeffs.coefficients.front().empty())
    throw ParameterError("to_scalogram: empty coefficient matrix");
  Scalogram s;
  s.scales_s = coeffs.scales_s;
  s.fs = coeffs.fs;
  s.energies.resize(coeffs.coefficients.size());
  double total = 0.0;
  for (std::size_t r = 0; r < coeffs.coefficients.size(); ++r) {
    auto& row = s.energies[r];
    row.resize(coeffs.coefficients[r].size());
    for (std::size_t t = 0; t < row.size(); ++t) {
      const double w = coeffs.coefficients[r][t];
      row[t] = w * w;
      total += row[t];
    }
  }
  if (total == 0.0) throw DegenerateInputError("to_scalogram: all-zero coefficients");
  for (auto& row : s.energies)
    for (double& e : row) e /= total;
  return s;
}

MrweSeries mrwe(const Scalogram& s) {
  if (s.energies.empty() || s.energies.front().empty())
    throw ParameterError("mrwe: empty scalogram");
  const std::size_t n = s.energies.front().size();
  MrweSeries out;
  out.values.assign(n, 0.0);
  out.argmax_scale.assign(n, 0);
  for (std::size_t t = 0; t < n; ++t) {
    double best = s.energies[0][t];
    std::size_t best_r = 0;
    for (std::size_t r = 1; r < s.energies.size(); ++r) {
      if (s.energies[r][t] > best) {
        best = s.energies[r][t];
        best_r = r;
      }
    }
    out.values[t] = best;
    out.argmax_scale[t] = best_r;
  }
  return out;
}

}  // namespace scg
