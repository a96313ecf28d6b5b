#ifndef SCG_EXTREMA_HPP
#define SCG_EXTREMA_HPP

#include <cstddef>
#include <vector>

#include "scg/signal.hpp"

namespace scg {

enum class ExtremaKind { Maxima, Minima };

// Strictly increasing sample indices of strict local extrema.
// Plateau rule: the first sample of a flat run counts; endpoints never do.
struct ExtremaList {
  std::vector<std::size_t> indices;
  ExtremaKind kind = ExtremaKind::Maxima;

  std::size_t size() const { return indices.size(); }
  bool empty() const { return indices.empty(); }
};

ExtremaList local_extrema(const SampledSignal& s, ExtremaKind kind);
ExtremaList local_extrema(const std::vector<double>& x, ExtremaKind kind);

}  // namespace scg

#endif
