#ifndef SCG_ENVELOPE_HPP
#define SCG_ENVELOPE_HPP

#include <utility>
#include <vector>

#include "scg/extrema.hpp"
#include "scg/signal.hpp"

namespace scg {

// Exponential-ratio transfer characteristic y = (1 - e^{-qx}) / (1 + p e^{-qx})
// on [0, 1]. Shipped defaults p=39, q=16.
struct EnvelopeModel {
  int p = 39;
  int q = 16;
};

double transfer_point(double x, const EnvelopeModel& m);

// Pointwise application; every sample must already be in [0, 1].
SampledSignal transfer_envelope(const SampledSignal& signal01, const EnvelopeModel& m);

// Piecewise-linear desired transfer characteristic on [0, 1].
struct TargetCurve {
  std::vector<std::pair<double, double>> breakpoints;  // x strictly increasing 0..1

  double eval(double x) const;
};

// Default target: ramp (0,0) -> (0.3,1) -> (1,1).
TargetCurve default_target_curve();

struct IntRange {
  int lo = 1;
  int hi = 1;
};

struct FitResult {
  EnvelopeModel model;
  double correlation = 0.0;
  double ssr = 0.0;
};

// Integer grid search minimizing squared residuals on a 0.001-step x grid;
// ties broken by smaller p then smaller q. Also reports the Pearson
// correlation between the winning curve and the target.
FitResult fit_pq(const TargetCurve& target, IntRange p_range, IntRange q_range);

// Shannon entropy and Shannon energy envelopes with the 0*log(0) := 0
// convention (natural log).
std::pair<SampledSignal, SampledSignal> shannon_envelopes(const SampledSignal& signal01);

struct ImpulsePeakConfig {
  double threshold_frac = 0.3;  // of the moving maximum
  double refractory_ms = 300.0;
  double moving_max_window_s = 2.0;
};

// Local maxima of a non-negative envelope above threshold_frac times the
// centered moving maximum, with a refractory separation; on conflicts the
// larger amplitude wins (ties: earlier index).
ExtremaList impulse_peaks(const SampledSignal& envelope, const ImpulsePeakConfig& cfg);

}  // namespace scg

#endif
