// segeval/objective.hpp

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

#ifndef SEGEVAL_OBJECTIVE_HPP_
#define SEGEVAL_OBJECTIVE_HPP_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

#include "segeval/core.hpp"

namespace segeval {

enum class LossReduction { kSum, kMean };

struct LossConfig {
  double w_star = 1.0;    // weight on boundary-positive frames, strictly positive
  double epsilon = 1e-7;  // probability clamp keeping the logs finite
  LossReduction reduction = LossReduction::kSum;
};

inline void validate(const LossConfig& cfg) {
  if (!(cfg.w_star > 0.0))
    throw input_error("LossConfig: w_star must be strictly positive");
  if (!(cfg.epsilon > 0.0 && cfg.epsilon < 0.5))
    throw input_error("LossConfig: epsilon must lie in (0, 0.5)");
}

// Class-weighted binary cross entropy over one utterance's frames,
//
//   L = -sum_j [ w* y_j log(p_j) + (1 - y_j) log(1 - p_j) ]
//
// with p clamped to [eps, 1-eps] before the logs. The sum is negated so
// the quantity is minimized by perfect prediction; a corpus-level value
// is the plain sum of the per-utterance values. kMean divides by the
// frame count instead.
inline double weighted_bce(const FrameProbabilitySequence& probs,
                           const FrameLabelSequence& labels, const LossConfig& cfg) {
  validate(cfg);
  validate(probs);
  validate(labels);
  if (probs.probs.size() != labels.labels.size())
    throw input_error("weighted_bce: probs and labels differ in length (" +
                      std::to_string(probs.probs.size()) + " vs " +
                      std::to_string(labels.labels.size()) + ")");
  double acc = 0.0;
  for (std::size_t j = 0; j < probs.probs.size(); ++j) {
    const double p = std::clamp(probs.probs[j], cfg.epsilon, 1.0 - cfg.epsilon);
    if (labels.labels[j])
      acc += cfg.w_star * std::log(p);
    else
      acc += std::log(1.0 - p);
  }
  double loss = -acc;
  if (cfg.reduction == LossReduction::kMean && !probs.probs.empty())
    loss /= static_cast<double>(probs.probs.size());
  return loss;
}

// dL/dp_j of weighted_bce, same clamping:
//   dL/dp_j = -w* y_j / p_j + (1 - y_j) / (1 - p_j)
inline std::vector<double> weighted_bce_grad(const FrameProbabilitySequence& probs,
                                             const FrameLabelSequence& labels,
                                             const LossConfig& cfg) {
  validate(cfg);
  validate(probs);
  validate(labels);
  if (probs.probs.size() != labels.labels.size())
    throw input_error("weighted_bce_grad: probs and labels differ in length (" +
                      std::to_string(probs.probs.size()) + " vs " +
                      std::to_string(labels.labels.size()) + ")");
  std::vector<double> grad(probs.probs.size());
  const double scale = cfg.reduction == LossReduction::kMean && !probs.probs.empty()
                           ? 1.0 / static_cast<double>(probs.probs.size())
                           : 1.0;
  for (std::size_t j = 0; j < probs.probs.size(); ++j) {
    const double p = std::clamp(probs.probs[j], cfg.epsilon, 1.0 - cfg.epsilon);
    grad[j] = scale * (labels.labels[j] ? -cfg.w_star / p : 1.0 / (1.0 - p));
  }
  return grad;
}

}  // namespace segeval

#endif  // SEGEVAL_OBJECTIVE_HPP_
