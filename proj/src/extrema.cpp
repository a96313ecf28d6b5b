#include "scg/extrema.hpp"

#include "scg/errors.hpp"

namespace scg {

namespace {

// Shared scan for maxima/minima. An interior index i starts an extremum if
// x[i] beats its left neighbour and the plateau starting at i ends with a
// drop on the right before the signal does.
ExtremaList scan(const std::vector<double>& x, ExtremaKind kind) {
  if (x.size() < 3) throw InputError("local_extrema: need at least 3 samples");
  const bool maxima = (kind == ExtremaKind::Maxima);
  auto beats = [maxima](double a, double b) { return maxima ? a > b : a < b; };

  ExtremaList out;
  out.kind = kind;
  const std::size_t n = x.size();
  for (std::size_t i = 1; i + 1 < n; ++i) {
    if (!beats(x[i], x[i - 1])) continue;
    std::size_t j = i;
    while (j + 1 < n && x[j + 1] == x[i]) ++j;
    if (j + 1 < n && beats(x[i], x[j + 1])) out.indices.push_back(i);
    i = j;  // skip the plateau
  }
  return out;
}

}  // namespace

ExtremaList local_extrema(const std::vector<double>& x, ExtremaKind kind) { return scan(x, kind); }

ExtremaList local_extrema(const SampledSignal& s, ExtremaKind kind) {
  require_valid(s, "local_extrema");
  return scan(s.samples, kind);
}

}  // namespace scg
