#include "scg/envelope.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>

#include "scg/errors.hpp"

namespace scg {

double transfer_point(double x, const EnvelopeModel& m) {
  const double e = std::exp(-static_cast<double>(m.q) * x);
  return (1.0 - e) / (1.0 + static_cast<double>(m.p) * e);
}

SampledSignal transfer_envelope(const SampledSignal& signal01, const EnvelopeModel& m) {
  require_valid(signal01, "transfer_envelope");
  if (m.p < 1 || m.q < 1) throw ParameterError("transfer_envelope: p and q must be >= 1");
  SampledSignal out = signal01;
  for (double& v : out.samples) {
    if (v < 0.0 || v > 1.0)
      throw PreconditionError("transfer_envelope: samples must lie in [0, 1]");
    v = transfer_point(v, m);
  }
  return out;
}

double TargetCurve::eval(double x) const {
  const auto& bp = breakpoints;
  if (x <= bp.front().first) return bp.front().second;
  if (x >= bp.back().first) return bp.back().second;
  for (std::size_t i = 1; i < bp.size(); ++i) {
    if (x <= bp[i].first) {
      const auto& [x0, y0] = bp[i - 1];
      const auto& [x1, y1] = bp[i];
      return y0 + (y1 - y0) * (x - x0) / (x1 - x0);
    }
  }
  return bp.back().second;
}

TargetCurve default_target_curve() {
  return TargetCurve{{{0.0, 0.0}, {0.3, 1.0}, {1.0, 1.0}}};
}

namespace {

double pearson(const std::vector<double>& a, const std::vector<double>& b) {
  const std::size_t n = a.size();
  double ma = 0.0, mb = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    ma += a[i];
    mb += b[i];
  }
  ma /= static_cast<double>(n);
  mb /= static_cast<double>(n);
  double sab = 0.0, saa = 0.0, sbb = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sab += (a[i] - ma) * (b[i] - mb);
    saa += (a[i] - ma) * (a[i] - ma);
    sbb += (b[i] - mb) * (b[i] - mb);
  }
  if (saa == 0.0 || sbb == 0.0) return 0.0;
  return sab / std::sqrt(saa * sbb);
}

}  // namespace

FitResult fit_pq(const TargetCurve& target, IntRange p_range, IntRange q_range) {
  if (target.breakpoints.size() < 2) throw ParameterError("fit_pq: degenerate target curve");
  for (std::size_t i = 1; i < target.breakpoints.size(); ++i) {
    if (target.breakpoints[i].first <= target.breakpoints[i - 1].first)
      throw ParameterError("fit_pq: target x must be strictly increasing");
  }
  if (p_range.lo > p_range.hi || q_range.lo > q_range.hi || p_range.lo < 1 || q_range.lo < 1)
    throw ParameterError("fit_pq: empty or invalid parameter range");

  constexpr int kGrid = 1000;  // x = 0, 0.001, ..., 1
  std::vector<double> xs(kGrid + 1), ys(kGrid + 1);
  for (int i = 0; i <= kGrid; ++i) {
    xs[static_cast<std::size_t>(i)] = static_cast<double>(i) / kGrid;
    ys[static_cast<std::size_t>(i)] = target.eval(xs[static_cast<std::size_t>(i)]);
  }

  FitResult best;
  best.ssr = std::numeric_limits<double>::infinity();
  std::vector<double> fit(kGrid + 1);
  for (int p = p_range.lo; p <= p_range.hi; ++p) {
    for (int q = q_range.lo; q <= q_range.hi; ++q) {
      const EnvelopeModel m{p, q};
      double ssr = 0.0;
      for (int i = 0; i <= kGrid; ++i) {
        const double d = transfer_point(xs[static_cast<std::size_t>(i)], m) - ys[static_cast<std::size_t>(i)];
        ssr += d * d;
      }
      if (ssr < best.ssr) {
        best.ssr = ssr;
        best.model = m;
      }
    }
  }
  for (int i = 0; i <= kGrid; ++i)
    fit[static_cast<std::size_t>(i)] = transfer_point(xs[static_cast<std::size_t>(i)], best.model);
  best.correlation = pearson(fit, ys);
  return best;
}

std::pair<SampledSignal, SampledSignal> shannon_envelopes(const SampledSignal& signal01) {
  require_valid(signal01, "shannon_envelopes");
  SampledSignal se = signal01, see = signal01;
  for (std::size_t i = 0; i < signal01.size(); ++i) {
    const double x = signal01.samples[i];
    if (x < 0.0 || x > 1.0)
      throw PreconditionError("shannon_envelopes: samples must lie in [0, 1]");
    se.samples[i] = x > 0.0 ? -x * std::log(x) : 0.0;
    const double x2 = x * x;
    see.samples[i] = x2 > 0.0 ? -x2 * std::log(x2) : 0.0;
  }
  return {se, see};
}

namespace {

// Centered moving maximum via monotonic deque, O(n).
std::vector<double> moving_max(const std::vector<double>& x, std::size_t half_window) {
  const std::size_t n = x.size();
  std::vector<double> out(n);
  std::deque<std::size_t> dq;
  std::size_t right = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t hi = std::min(n - 1, i + half_window);
    while (right <= hi) {
      while (!dq.empty() && x[dq.back()] <= x[right]) dq.pop_back();
      dq.push_back(right);
      ++right;
    }
    const std::size_t lo = i >= half_window ? i - half_window : 0;
    while (dq.front() < lo) dq.pop_front();
    out[i] = x[dq.front()];
  }
  return out;
}

}  // namespace

ExtremaList impulse_peaks(const SampledSignal& envelope, const ImpulsePeakConfig& cfg) {
  require_valid(envelope, "impulse_peaks");
  if (!(cfg.threshold_frac > 0.0 && cfg.threshold_frac < 1.0))
    throw ParameterError("impulse_peaks: threshold_frac must lie in (0, 1)");
  if (cfg.refractory_ms <= 0.0) throw ParameterError("impulse_peaks: refractory must be > 0");
  for (double v : envelope.samples)
    if (v < 0.0) throw PreconditionError("impulse_peaks: envelope must be non-negative");

  ExtremaList result;
  result.kind = ExtremaKind::Maxima;
  if (envelope.size() < 3) return result;

  const auto maxima = local_extrema(envelope, ExtremaKind::Maxima);
  if (maxima.empty()) return result;

  const std::size_t half_win =
      static_cast<std::size_t>(ms_to_samples(cfg.moving_max_window_s * 500.0, envelope.fs));
  const auto movmax = moving_max(envelope.samples, half_win);

  std::vector<std::size_t> candidates;
  for (std::size_t idx : maxima.indices) {
    if (movmax[idx] > 0.0 && envelope.samples[idx] >= cfg.threshold_frac * movmax[idx])
      candidates.push_back(idx);
  }

  // Larger amplitude claims its refractory span first; ties go to the
  // earlier index.
  std::sort(candidates.begin(), candidates.end(), [&](std::size_t a, std::size_t b) {
    if (envelope.samples[a] != envelope.samples[b])
      return envelope.samples[a] > envelope.samples[b];
    return a < b;
  });
  const long refractory = ms_to_samples(cfg.refractory_ms, envelope.fs);
  std::vector<std::size_t> accepted;
  for (std::size_t idx : candidates) {
    bool blocked = false;
    for (std::size_t kept : accepted) {
      if (std::labs(static_cast<long>(idx) - static_cast<long>(kept)) < refractory) {
        blocked = true;
        break;
      }
    }
    if (!blocked) accepted.push_back(idx);
  }
  std::sort(accepted.begin(), accepted.end());
  result.indices = std::move(accepted);
  return result;
}

}  // namespace scg
