#include "scg/signal.hpp"

#include <algorithm>
#include <cmath>

#include "scg/errors.hpp"

namespace scg {

void require_valid(const SampledSignal& s, const char* who) {
  if (s.fs <= 0.0) throw ParameterError(std::string(who) + ": sampling rate must be > 0");
  if (s.samples.empty()) throw InputError(std::string(who) + ": empty signal");
  for (double v : s.samples) {
    if (!std::isfinite(v)) throw InputError(std::string(who) + ": non-finite sample");
  }
}

SampledSignal normalize_unit(const SampledSignal& s, NormalizeMode mode) {
  require_valid(s, "normalize_unit");
  SampledSignal out = s;
  if (mode == NormalizeMode::MaxAbs) {
    double peak = 0.0;
    for (double v : s.samples) peak = std::max(peak, std::fabs(v));
    if (peak == 0.0) throw DegenerateInputError("normalize_unit: all-zero signal under max-abs");
    for (double& v : out.samples) v /= peak;
  } else {
    auto [lo_it, hi_it] = std::minmax_element(s.samples.begin(), s.samples.end());
    const double lo = *lo_it, hi = *hi_it;
    if (hi == lo) throw DegenerateInputError("normalize_unit: all-equal signal under min-max");
    const double range = hi - lo;
    for (double& v : out.samples) v = (v - lo) / range;
  }
  return out;
}

}  // namespace scg
