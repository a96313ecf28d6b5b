#include "scg/filters.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>

#include "scg/errors.hpp"

namespace scg {

namespace {

using cd = std::complex<double>;

struct Zpk {
  std::vector<cd> zeros;
  std::vector<cd> poles;
  double gain = 1.0;
};

// Analog Butterworth prototype: unit-cutoff all-pole lowpass.
Zpk butter_prototype(int order) {
  Zpk zpk;
  for (int k = 0; k < order; ++k) {
    const double theta = std::numbers::pi * (2.0 * k + order + 1.0) / (2.0 * order);
    zpk.poles.push_back(std::polar(1.0, theta));
  }
  return zpk;
}

Zpk lp_to_lp(const Zpk& in, double wc) {
  Zpk out;
  for (const cd& p : in.poles) out.poles.push_back(p * wc);
  for (const cd& z : in.zeros) out.zeros.push_back(z * wc);
  const int degree = static_cast<int>(in.poles.size() - in.zeros.size());
  out.gain = in.gain * std::pow(wc, degree);
  return out;
}

Zpk lp_to_hp(const Zpk& in, double wc) {
  Zpk out;
  cd num = 1.0, den = 1.0;
  for (const cd& z : in.zeros) num *= -z;
  for (const cd& p : in.poles) den *= -p;
  for (const cd& p : in.poles) out.poles.push_back(wc / p);
  for (const cd& z : in.zeros) out.zeros.push_back(wc / z);
  // Zeros at the origin replace the prototype's zeros at infinity.
  const int degree = static_cast<int>(in.poles.size() - in.zeros.size());
  for (int i = 0; i < degree; ++i) out.zeros.push_back(0.0);
  out.gain = in.gain * (num / den).real();
  return out;
}

Zpk lp_to_bp(const Zpk& in, double w0, double bw) {
  Zpk out;
  const int degree = static_cast<int>(in.poles.size() - in.zeros.size());
  auto transform = [&](const cd& s) {
    const cd half = s * bw / 2.0;
    const cd disc = std::sqrt(half * half - w0 * w0);
    return std::make_pair(half + disc, half - disc);
  };
  for (const cd& p : in.poles) {
    auto [p1, p2] = transform(p);
    out.poles.push_back(p1);
    out.poles.push_back(p2);
  }
  for (const cd& z : in.zeros) {
    auto [z1, z2] = transform(z);
    out.zeros.push_back(z1);
    out.zeros.push_back(z2);
  }
  for (int i = 0; i < degree; ++i) out.zeros.push_back(0.0);
  out.gain = in.gain * std::pow(bw, degree);
  return out;
}

// Bilinear transform at sampling rate fs; zeros at infinity map to z = -1.
Zpk bilinear(const Zpk& in, double fs) {
  Zpk out;
  const double fs2 = 2.0 * fs;
  cd num = 1.0, den = 1.0;
  for (const cd& z : in.zeros) {
    out.zeros.push_back((fs2 + z) / (fs2 - z));
    num *= fs2 - z;
  }
  for (const cd& p : in.poles) {
    out.poles.push_back((fs2 + p) / (fs2 - p));
    den *= fs2 - p;
  }
  const int degree = static_cast<int>(in.poles.size() - in.zeros.size());
  for (int i = 0; i < degree; ++i) out.zeros.push_back(-1.0);
  out.gain = in.gain * (num / den).real();
  return out;
}

// Sort so complex-conjugate partners are adjacent (by real part, then |imag|).
void sort_conjugate_pairs(std::vector<cd>& roots) {
  std::sort(roots.begin(), roots.end(), [](const cd& a, const cd& b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return std::fabs(a.imag()) < std::fabs(b.imag());
  });
}

cd eval_sos(const SosChain& sos, const cd& z) {
  cd h = 1.0;
  const cd zi = 1.0 / z;
  for (const Biquad& s : sos) {
    h *= (s.b0 + s.b1 * zi + s.b2 * zi * zi) / (1.0 + s.a1 * zi + s.a2 * zi * zi);
  }
  return h;
}

}  // namespace

SosChain butterworth(BandKind kind, int order, double f1_hz, double f2_hz, double fs) {
  if (fs <= 0.0) throw ParameterError("butterworth: fs must be > 0");
  if (order < 1) throw ParameterError("butterworth: order must be >= 1");
  const double nyq = fs / 2.0;
  if (kind == BandKind::Bandpass) {
    if (!(0.0 < f1_hz && f1_hz < f2_hz && f2_hz < nyq))
      throw ParameterError("butterworth: need 0 < low < high < fs/2");
  } else {
    if (!(0.0 < f1_hz && f1_hz < nyq)) throw ParameterError("butterworth: need 0 < cutoff < fs/2");
  }

  const auto warp = [fs](double f) { return 2.0 * fs * std::tan(std::numbers::pi * f / fs); };
  Zpk proto = butter_prototype(order);
  Zpk analog;
  double ref_w = 0.0;  // digital frequency (rad/sample) where |H| is pinned to 1
  switch (kind) {
    case BandKind::Lowpass:
      analog = lp_to_lp(proto, warp(f1_hz));
      ref_w = 0.0;
      break;
    case BandKind::Highpass:
      analog = lp_to_hp(proto, warp(f1_hz));
      ref_w = std::numbers::pi;
      break;
    case BandKind::Bandpass: {
      const double w1 = warp(f1_hz), w2 = warp(f2_hz);
      const double w0 = std::sqrt(w1 * w2);
      analog = lp_to_bp(proto, w0, w2 - w1);
      ref_w = 2.0 * std::atan(w0 / (2.0 * fs));
      break;
    }
  }
  Zpk digital = bilinear(analog, fs);

  sort_conjugate_pairs(digital.poles);
  sort_conjugate_pairs(digital.zeros);

  // Build biquads: conjugate pole pairs with real coefficients. Butterworth
  // orders used here give an even count for bandpass; lowpass/highpass of odd
  // order yield one real pole handled as a first-order section. All digital
  // zeros sit at +1 or -1; for bandpass take one from each end of the sorted
  // list so every section carries (z-1)(z+1) and stays well conditioned.
  SosChain sos;
  std::size_t z_lo = 0;
  std::size_t z_hi = digital.zeros.size();
  auto take_zero = [&](bool from_back) {
    if (z_lo >= z_hi) return cd(0.0);
    return from_back ? digital.zeros[--z_hi] : digital.zeros[z_lo++];
  };

  std::size_t i = 0;
  while (i < digital.poles.size()) {
    Biquad q;
    const cd p = digital.poles[i];
    if (std::fabs(p.imag()) > 1e-12 && i + 1 < digital.poles.size()) {
      const cd p2 = digital.poles[i + 1];
      q.a1 = -(p + p2).real();
      q.a2 = (p * p2).real();
      const cd z1 = take_zero(false);
      const cd z2 = take_zero(true);
      q.b0 = 1.0;
      q.b1 = -(z1 + z2).real();
      q.b2 = (z1 * z2).real();
      i += 2;
    } else {
      q.a1 = -p.real();
      q.a2 = 0.0;
      const cd z = take_zero(false);
      q.b0 = 1.0;
      q.b1 = -z.real();
      q.b2 = 0.0;
      i += 1;
    }
    sos.push_back(q);
  }

  // Apply the overall gain to the first section, then pin |H(ref)| to exactly 1.
  if (!sos.empty()) {
    sos.front().b0 *= digital.gain;
    sos.front().b1 *= digital.gain;
    sos.front().b2 *= digital.gain;
    const double mag = std::abs(eval_sos(sos, std::polar(1.0, ref_w)));
    if (mag > 0.0) {
      sos.front().b0 /= mag;
      sos.front().b1 /= mag;
      sos.front().b2 /= mag;
    }
  }
  return sos;
}

std::vector<double> sosfilt(const SosChain& sos, const std::vector<double>& x,
                            std::vector<double>* state) {
  std::vector<double> zi;
  if (state && state->size() == 2 * sos.size()) zi = *state;
  else zi.assign(2 * sos.size(), 0.0);

  std::vector<double> y = x;
  for (std::size_t s = 0; s < sos.size(); ++s) {
    const Biquad& q = sos[s];
    double z1 = zi[2 * s], z2 = zi[2 * s + 1];
    for (double& v : y) {
      const double in = v;
      const double out = q.b0 * in + z1;
      z1 = q.b1 * in - q.a1 * out + z2;
      z2 = q.b2 * in - q.a2 * out;
      v = out;
    }
    zi[2 * s] = z1;
    zi[2 * s + 1] = z2;
  }
  if (state) *state = zi;
  return y;
}

std::size_t filtfilt_padlen(const SosChain& sos) { return 3 * (2 * sos.size() + 1); }

namespace {

// Per-section steady-state states for a unit-step input, cascade-aware.
std::vector<double> sosfilt_zi(const SosChain& sos) {
  std::vector<double> zi(2 * sos.size(), 0.0);
  double scale = 1.0;
  for (std::size_t s = 0; s < sos.size(); ++s) {
    const Biquad& q = sos[s];
    const double denom = 1.0 + q.a1 + q.a2;
    const double k = denom != 0.0 ? (q.b0 + q.b1 + q.b2) / denom : 0.0;
    zi[2 * s] = scale * (k - q.b0);
    zi[2 * s + 1] = scale * (q.b2 - q.a2 * k);
    scale *= k;
  }
  return zi;
}

}  // namespace

std::vector<double> sosfiltfilt(const SosChain& sos, const std::vector<double>& x) {
  const std::size_t pad = filtfilt_padlen(sos);
  const std::size_t n = x.size();
  if (n <= pad) throw InputError("sosfiltfilt: signal shorter than filter warm-up length");

  // Odd reflection about both endpoints.
  std::vector<double> ext;
  ext.reserve(n + 2 * pad);
  for (std::size_t i = pad; i >= 1; --i) ext.push_back(2.0 * x.front() - x[i]);
  ext.insert(ext.end(), x.begin(), x.end());
  for (std::size_t i = 2; i <= pad + 1; ++i) ext.push_back(2.0 * x.back() - x[n - i]);

  const std::vector<double> zi_unit = sosfilt_zi(sos);

  auto run = [&](std::vector<double> v) {
    std::vector<double> zi = zi_unit;
    for (double& z : zi) z *= v.front();
    return sosfilt(sos, v, &zi);
  };

  std::vector<double> y = run(ext);
  std::reverse(y.begin(), y.end());
  y = run(y);
  std::reverse(y.begin(), y.end());
  return std::vector<double>(y.begin() + pad, y.begin() + pad + n);
}

namespace {

SampledSignal apply_zero_phase(const SampledSignal& s, const SosChain& sos) {
  SampledSignal out = s;
  out.samples = sosfiltfilt(sos, s.samples);
  return out;
}

}  // namespace

SampledSignal highpass_detrend(const SampledSignal& s, double cutoff_hz, int order) {
  require_valid(s, "highpass_detrend");
  if (!(cutoff_hz > 0.0 && cutoff_hz < s.fs / 2.0))
    throw ParameterError("highpass_detrend: cutoff must lie in (0, fs/2)");
  return apply_zero_phase(s, butterworth(BandKind::Highpass, order, cutoff_hz, 0.0, s.fs));
}

SampledSignal bandpass(const SampledSignal& s, double low_hz, double high_hz, int order) {
  require_valid(s, "bandpass");
  if (order < 2) throw ParameterError("bandpass: order must be >= 2");
  if (!(0.0 < low_hz && low_hz < high_hz && high_hz < s.fs / 2.0))
    throw ParameterError("bandpass: need 0 < low < high < fs/2");
  return apply_zero_phase(s, butterworth(BandKind::Bandpass, order, low_hz, high_hz, s.fs));
}

SampledSignal lowpass(const SampledSignal& s, double cutoff_hz, int order) {
  require_valid(s, "lowpass");
  if (!(cutoff_hz > 0.0 && cutoff_hz < s.fs / 2.0))
    throw ParameterError("lowpass: cutoff must lie in (0, fs/2)");
  return apply_zero_phase(s, butterworth(BandKind::Lowpass, order, cutoff_hz, 0.0, s.fs));
}

}  // namespace scg
