#pragma once

#include "kge/common.hpp"
#include "kge/triples.hpp"

#include <algorithm>
#include <vector>

namespace kge {

/// Per-entity loss weights w(t) = w0 * (#t / max #t) + (1 - w0), where #t counts
/// tail occurrences in the (augmented) train split.
struct WeightTable {
  std::vector<double> w;
  double w0 = 0.0;
};

inline WeightTable tail_frequency_weights(const TripleStore& train, double w0, int n_entities) {
  if (w0 < 0.0 || w0 > 1.0) throw config_error("w0 must lie in [0, 1]");
  if (train.triples.empty()) throw data_error("cannot compute tail frequencies of an empty train split");

  std::vector<long> counts(n_entities, 0);
  for (const Triple& t : train.triples) ++counts.at(t.tail);
  long max_count = *std::max_element(counts.begin(), counts.end());

  WeightTable table;
  table.w0 = w0;
  table.w.resize(n_entities);
  for (int e = 0; e < n_entities; ++e) {
    table.w[e] = w0 * (static_cast<double>(counts[e]) / static_cast<double>(max_count)) + (1.0 - w0);
  }
  return table;
}

}  // namespace kge
