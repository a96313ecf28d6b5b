#ifndef SCG_SIGNAL_HPP
#define SCG_SIGNAL_HPP

#include <cstddef>
#include <string>
#include <vector>

namespace scg {

// Uniformly sampled real-valued series. The unit of `samples` is whatever
// the channel carries (volts, g, ...); fs is in Hz.
struct SampledSignal {
  std::vector<double> samples;
  double fs = 0.0;
  std::string label;

  std::size_t size() const { return samples.size(); }
  double duration_s() const { return fs > 0 ? static_cast<double>(samples.size()) / fs : 0.0; }
};

// Milliseconds -> whole samples at rate fs.
inline long ms_to_samples(double ms, double fs) {
  return static_cast<long>(ms * fs / 1000.0 + 0.5);
}

inline double samples_to_ms(long n, double fs) { return 1000.0 * static_cast<double>(n) / fs; }

// Throws if the signal is unusable for processing (empty, fs <= 0,
// non-finite samples).
void require_valid(const SampledSignal& s, const char* who);

enum class NormalizeMode { MaxAbs, MinMax };

// MaxAbs: divide by max |x|, result in [-1, 1] with max magnitude 1.
// MinMax: affine map onto [0, 1] attaining both endpoints.
SampledSignal normalize_unit(const SampledSignal& s, NormalizeMode mode);

}  // namespace scg

#endif
