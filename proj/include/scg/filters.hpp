#ifndef SCG_FILTERS_HPP
#define SCG_FILTERS_HPP

#include <vector>

#include "scg/signal.hpp"

namespace scg {

// One second-order section, a0 normalized to 1.
struct Biquad {
  double b0 = 1.0, b1 = 0.0, b2 = 0.0;
  double a1 = 0.0, a2 = 0.0;
};

using SosChain = std::vector<Biquad>;

enum class BandKind { Lowpass, Highpass, Bandpass };

// Digital Butterworth via bilinear transform with frequency prewarping.
// `order` is the analog prototype order; a bandpass therefore has 2*order
// poles. f2_hz is ignored for lowpass/highpass.
SosChain butterworth(BandKind kind, int order, double f1_hz, double f2_hz, double fs);

// Single forward pass through the cascade with given per-section initial
// states (two per section, DF2T).
std::vector<double> sosfilt(const SosChain& sos, const std::vector<double>& x,
                            std::vector<double>* state = nullptr);

// Zero-phase forward-backward filtering with odd-reflection padding and
// steady-state initial conditions (the usual filtfilt construction).
std::vector<double> sosfiltfilt(const SosChain& sos, const std::vector<double>& x);

// Baseline-drift removal: zero-phase Butterworth highpass. Default order 2
// (doubled by the forward-backward pass).
SampledSignal highpass_detrend(const SampledSignal& s, double cutoff_hz, int order = 2);

// Zero-phase Butterworth bandpass.
SampledSignal bandpass(const SampledSignal& s, double low_hz, double high_hz, int order = 4);

// Zero-phase Butterworth lowpass (optional anti-alias preprocessing).
SampledSignal lowpass(const SampledSignal& s, double cutoff_hz, int order = 4);

// Padding length filtfilt needs; inputs must be longer than this.
std::size_t filtfilt_padlen(const SosChain& sos);

}  // namespace scg

#endif
