#include "scg/fft.hpp"

#include <fftw3.h>

#include <cstring>
#include <map>
#include <mutex>

#include "scg/errors.hpp"

namespace scg::fft {

namespace {

// Cached FFTW plans per (size, direction). Plans are created once on aligned
// scratch buffers and re-executed on per-call buffers from fftw_malloc, which
// share the same alignment. Planner access is serialized (FFTW's planner is
// not thread-safe); execution under the lock keeps result order deterministic.
class PlanCache {
 public:
  static PlanCache& instance() {
    static PlanCache c;
    return c;
  }

  std::vector<std::complex<double>> run(const std::vector<std::complex<double>>& x, int sign) {
    const std::size_t n = x.size();
    if (n == 0) throw ParameterError("fft: empty input");
    std::lock_guard<std::mutex> guard(mu_);
    fftw_plan plan = get_plan(n, sign);
    fftw_complex* in = static_cast<fftw_complex*>(fftw_malloc(sizeof(fftw_complex) * n));
    fftw_complex* out = static_cast<fftw_complex*>(fftw_malloc(sizeof(fftw_complex) * n));
    std::memcpy(in, x.data(), sizeof(fftw_complex) * n);
    fftw_execute_dft(plan, in, out);
    std::vector<std::complex<double>> y(n);
    std::memcpy(y.data(), out, sizeof(fftw_complex) * n);
    fftw_free(in);
    fftw_free(out);
    return y;
  }

 private:
  PlanCache() = default;
  ~PlanCache() {
    for (auto& [key, plan] : plans_) fftw_destroy_plan(plan);
  }

  fftw_plan get_plan(std::size_t n, int sign) {
    auto key = std::make_pair(n, sign);
    auto it = plans_.find(key);
    if (it != plans_.end()) return it->second;
    fftw_complex* a = static_cast<fftw_complex*>(fftw_malloc(sizeof(fftw_complex) * n));
    fftw_complex* b = static_cast<fftw_complex*>(fftw_malloc(sizeof(fftw_complex) * n));
    fftw_plan plan = fftw_plan_dft_1d(static_cast<int>(n), a, b, sign, FFTW_ESTIMATE);
    fftw_free(a);
    fftw_free(b);
    plans_.emplace(key, plan);
    return plan;
  }

  std::mutex mu_;
  std::map<std::pair<std::size_t, int>, fftw_plan> plans_;
};

}  // namespace

std::vector<std::complex<double>> forward(const std::vector<std::complex<double>>& x) {
  return PlanCache::instance().run(x, FFTW_FORWARD);
}

std::vector<std::complex<double>> inverse(const std::vector<std::complex<double>>& x) {
  auto y = PlanCache::instance().run(x, FFTW_BACKWARD);
  const double scale = 1.0 / static_cast<double>(x.size());
  for (auto& v : y) v *= scale;
  return y;
}

std::vector<std::complex<double>> analytic_signal(const std::vector<double>& x) {
  const std::size_t n = x.size();
  if (n == 0) throw ParameterError("analytic_signal: empty input");
  std::vector<std::complex<double>> cx(n);
  for (std::size_t i = 0; i < n; ++i) cx[i] = x[i];
  auto spectrum = forward(cx);
  // Keep DC (and Nyquist for even n), double positive frequencies, zero the rest.
  for (std::size_t k = 1; k < (n + 1) / 2; ++k) spectrum[k] *= 2.0;
  for (std::size_t k = n / 2 + 1; k < n; ++k) spectrum[k] = 0.0;
  return inverse(spectrum);
}

}  // namespace scg::fft
