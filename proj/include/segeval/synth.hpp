// segeval/synth.hpp

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

// Synthetic segmentations and controlled corruptions of them, for
// property tests and for demonstrating how the metrics respond to known
// error types (jitter, deletions, spurious insertions).

#ifndef SEGEVAL_SYNTH_HPP_
#define SEGEVAL_SYNTH_HPP_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "segeval/core.hpp"
#include "segeval/rng.hpp"

namespace segeval {

struct PerturbConfig {
  double jitter_std_sec = 0.0;     // truncated-Gaussian displacement, +/- 3 sigma
  double p_delete = 0.0;           // per-boundary deletion probability
  double p_insert = 0.0;           // per-boundary spurious-insertion probability
  double insert_margin_sec = 0.05; // insertions keep this distance from all originals
  std::uint64_t seed = 0;
};

inline void validate(const PerturbConfig& cfg) {
  if (!(cfg.p_delete >= 0.0 && cfg.p_delete <= 1.0))
    throw input_error("PerturbConfig: p_delete must lie in [0, 1]");
  if (!(cfg.p_insert >= 0.0 && cfg.p_insert <= 1.0))
    throw input_error("PerturbConfig: p_insert must lie in [0, 1]");
  if (!(cfg.jitter_std_sec >= 0.0))
    throw input_error("PerturbConfig: jitter_std_sec must be nonnegative");
  if (!(cfg.insert_margin_sec > 0.0))
    throw input_error("PerturbConfig: insert_margin_sec must be positive");
}

// n_boundaries sorted timestamps inside [0, duration] with pairwise gaps
// of at least min_gap_sec, identical for identical seeds. Built by the
// spacing construction: sort n uniforms on the slack interval, then add
// i * min_gap to the i-th.
inline Segmentation gen_segmentation(std::size_t n_boundaries, double min_gap_sec,
                                     double duration_sec, std::uint64_t seed,
                                     std::string utterance_id = {}) {
  if (!(min_gap_sec >= 0.0) || !(duration_sec > 0.0))
    throw input_error("gen_segmentation: need min_gap >= 0 and duration > 0");
  if (static_cast<double>(n_boundaries) * min_gap_sec > duration_sec)
    throw input_error("gen_segmentation: infeasible, n_boundaries * min_gap exceeds duration");
  DeterministicRng rng(seed);
  const double slack = duration_sec - static_cast<double>(n_boundaries) * min_gap_sec;
  std::vector<double> u(n_boundaries);
  for (auto& x : u) x = rng.uniform(0.0, slack);
  std::sort(u.begin(), u.end());
  Segmentation seg;
  seg.utterance_id = std::move(utterance_id);
  seg.duration_sec = duration_sec;
  seg.boundaries.resize(n_boundaries);
  for (std::size_t i = 0; i < n_boundaries; ++i)
    seg.boundaries[i] = u[i] + static_cast<double>(i) * min_gap_sec;
  // min_gap == 0 can produce exact ties; collapse them.
  seg.boundaries.erase(std::unique(seg.boundaries.begin(), seg.boundaries.end()),
                       seg.boundaries.end());
  validate(seg);
  return seg;
}

// Corrupt a segmentation: walk the boundaries in order, deleting each
// with p_delete and jittering survivors by a truncated Gaussian; then one
// insertion trial per original boundary, rejection-placed at least
// insert_margin_sec from every original. Output is clamped into
// [0, duration], re-sorted, and deduplicated.
inline Segmentation perturb(const Segmentation& seg, const PerturbConfig& cfg) {
  validate(cfg);
  validate(seg);
  DeterministicRng rng(cfg.seed);
  std::vector<double> out;
  out.reserve(seg.boundaries.size());
  for (double b : seg.boundaries) {
    if (rng.uniform() < cfg.p_delete) continue;
    double t = b;
    if (cfg.jitter_std_sec > 0.0) t += rng.truncated_gaussian(cfg.jitter_std_sec);
    out.push_back(t);
  }
  const double hi = seg.duration_sec.value_or(
      seg.boundaries.empty() ? 1.0 : seg.boundaries.back() + 10.0 * cfg.insert_margin_sec);
  for (std::size_t k = 0; k < seg.boundaries.size(); ++k) {
    if (rng.uniform() >= cfg.p_insert) continue;
    for (int attempt = 0; attempt < 1000; ++attempt) {
      const double t = rng.uniform(0.0, hi);
      const bool clear = std::none_of(seg.boundaries.begin(), seg.boundaries.end(),
                                      [&](double b) { return std::abs(t - b) < cfg.insert_margin_sec; });
      if (clear) {
        out.push_back(t);
        break;
      }
    }
  }
  for (double& t : out) {
    t = std::max(t, 0.0);
    if (seg.duration_sec) t = std::min(t, *seg.duration_sec);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  Segmentation res;
  res.utterance_id = seg.utterance_id;
  res.duration_sec = seg.duration_sec;
  res.boundaries = std::move(out);
  validate(res);
  return res;
}

}  // namespace segeval

#endif  // SEGEVAL_SYNTH_HPP_
