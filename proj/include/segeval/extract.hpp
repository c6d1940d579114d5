// segeval/extract.hpp

// Copyright 2026  The segeval authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#ifndef SEGEVAL_EXTRACT_HPP_
#define SEGEVAL_EXTRACT_HPP_

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <string>
#include <vector>

#include "segeval/core.hpp"

namespace segeval {

enum class PlateauPolicy { kLeftmost, kCenter };

struct PeakConfig {
  double threshold = 0.5;
  // Minimum index separation of returned peaks. 2 frames = 40 ms at a
  // 50 Hz stride, under typical English phone duration, which suppresses
  // the adjacent-frame double peaks that inflate lenient precision.
  std::size_t min_distance_frames = 2;
  PlateauPolicy plateau_policy = PlateauPolicy::kLeftmost;
};

inline void validate(const PeakConfig& cfg) {
  if (!(cfg.threshold >= 0.0 && cfg.threshold <= 1.0))
    throw input_error("PeakConfig: threshold must lie in [0, 1]");
  if (cfg.min_distance_frames < 1)
    throw input_error("PeakConfig: min_distance_frames must be at least 1");
}

// Local maxima of the probability curve with value >= threshold, thinned
// so that returned indices differ by at least min_distance_frames (the
// higher peak wins, the earlier one on ties). A plateau of equal values
// counts as one peak, represented by its leftmost or center index.
// Sequence edges qualify: a run touching index 0 or the last frame needs
// to fall off on its inner side only.
inline std::vector<std::size_t> pick_peaks(const FrameProbabilitySequence& seq,
                                           const PeakConfig& cfg) {
  validate(cfg);
  validate(seq);
  const auto& p = seq.probs;

  struct Candidate {
    std::size_t index;
    double value;
  };
  std::vector<Candidate> cands;
  for (std::size_t i = 0; i < p.size();) {
    std::size_t j = i;
    while (j + 1 < p.size() && p[j + 1] == p[i]) ++j;  // plateau [i, j]
    const bool rises = i == 0 || p[i - 1] < p[i];
    const bool falls = j + 1 == p.size() || p[j + 1] < p[i];
    if (rises && falls && p[i] >= cfg.threshold) {
      const std::size_t idx =
          cfg.plateau_policy == PlateauPolicy::kLeftmost ? i : i + (j - i) / 2;
      cands.push_back({idx, p[i]});
    }
    i = j + 1;
  }

  std::vector<std::size_t> order(cands.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (cands[a].value != cands[b].value) return cands[a].value > cands[b].value;
    return cands[a].index < cands[b].index;
  });
  std::vector<std::size_t> kept;
  for (std::size_t k : order) {
    const std::size_t idx = cands[k].index;
    const bool clear = std::none_of(kept.begin(), kept.end(), [&](std::size_t other) {
      return (idx > other ? idx - other : other - idx) < cfg.min_distance_frames;
    });
    if (clear) kept.push_back(idx);
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

// Frame targets bootstrapped from another model's predicted boundaries.
// Same contract as bin_boundaries; named separately as the entry point
// that turns one system's output into another's (noisy) supervision.
inline FrameLabelSequence bootstrap_labels(const Segmentation& hyp, const Timebase& tb,
                                           std::size_t n_frames) {
  return bin_boundaries(hyp, tb, n_frames);
}

// One boundary at frame_index * stride for every 1.
inline Segmentation binary_labels_to_segmentation(const FrameLabelSequence& labels,
                                                  const Timebase& tb,
                                                  std::string utterance_id = {}) {
  validate(tb);
  validate(labels);
  Segmentation seg;
  seg.utterance_id = std::move(utterance_id);
  for (std::size_t i = 0; i < labels.labels.size(); ++i)
    if (labels.labels[i]) seg.boundaries.push_back(static_cast<double>(i) * tb.frame_stride);
  seg.duration_sec = static_cast<double>(labels.labels.size()) * tb.frame_stride;
  return seg;
}

}  // namespace segeval

#endif  // SEGEVAL_EXTRACT_HPP_
