// segeval/core.hpp

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

#ifndef SEGEVAL_CORE_HPP_
#define SEGEVAL_CORE_HPP_

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace segeval {

// Error taxonomy, mirrored by the CLI exit codes: input_error and its
// subclasses -> exit 2, eval_error -> exit 1.
class input_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed file content. Messages carry source name and line number.
class parse_error : public input_error {
 public:
  using input_error::input_error;
};

// Reference and hypothesis sets whose utterance ids do not line up.
class pairing_error : public input_error {
 public:
  using input_error::input_error;
};

// Well-formed input on which the requested evaluation is undefined
// (e.g. a reference with no boundaries left to score against).
class eval_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Sampling geometry shared by every time <-> frame conversion.
struct Timebase {
  int sample_rate = 16000;     // samples per second
  double frame_stride = 0.02;  // seconds per prediction frame (0.02 = 50 Hz)
};

// Ordered boundary timestamps of one utterance. All times are seconds
// relative to the start of the utterance; sample counts are converted
// on parse so only one unit circulates.
struct Segmentation {
  std::string utterance_id;
  std::vector<double> boundaries;      // strictly increasing, all >= 0
  std::optional<double> duration_sec;  // utterance length, when known
};

// Per-frame binary boundary targets.
struct FrameLabelSequence {
  std::vector<std::uint8_t> labels;  // each 0 or 1
};

// Per-frame boundary probabilities, before peak picking.
struct FrameProbabilitySequence {
  std::vector<double> probs;  // each in [0, 1]
};

inline void validate(const Timebase& tb) {
  if (tb.sample_rate <= 0)
    throw input_error("Timebase: sample_rate must be positive");
  if (!(tb.frame_stride > 0.0) || !std::isfinite(tb.frame_stride))
    throw input_error("Timebase: frame_stride must be positive and finite");
}

inline void validate(const Segmentation& seg) {
  const auto& b = seg.boundaries;
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (!std::isfinite(b[i]) || b[i] < 0.0)
      throw input_error("segmentation '" + seg.utterance_id + "': boundary " +
                        std::to_string(i) + " is negative or non-finite");
    if (i > 0 && !(b[i] > b[i - 1]))
      throw input_error("segmentation '" + seg.utterance_id +
                        "': boundaries not strictly increasing at index " +
                        std::to_string(i));
  }
  if (seg.duration_sec && !b.empty() && b.back() > *seg.duration_sec)
    throw input_error("segmentation '" + seg.utterance_id +
                      "': boundary exceeds stated duration");
}

inline void validate(const FrameLabelSequence& fl) {
  for (auto v : fl.labels)
    if (v > 1) throw input_error("frame labels must be 0 or 1");
}

inline void validate(const FrameProbabilitySequence& fp) {
  for (double p : fp.probs)
    if (!(p >= 0.0 && p <= 1.0))
      throw input_error("frame probabilities must lie in [0, 1]");
}

// Nearest frame of a timestamp; rounds half up on t / stride.
inline std::size_t frame_index_for_time(double t_sec, const Timebase& tb) {
  const double idx = std::floor(t_sec / tb.frame_stride + 0.5);
  return idx <= 0.0 ? 0 : static_cast<std::size_t>(idx);
}

// Render boundary timestamps as per-frame binary labels of length n_frames.
// Boundaries rounding to the same frame collapse to a single 1. A boundary
// may overshoot the last frame by up to one stride (it is clamped onto it);
// anything further out is rejected.
inline FrameLabelSequence bin_boundaries(const Segmentation& seg,
                                         const Timebase& tb,
                                         std::size_t n_frames) {
  validate(tb);
  validate(seg);
  if (n_frames == 0) throw input_error("bin_boundaries: n_frames must be positive");
  FrameLabelSequence out;
  out.labels.assign(n_frames, 0);
  for (double t : seg.boundaries) {
    if (t > (static_cast<double>(n_frames) + 1.0) * tb.frame_stride)
      throw input_error("bin_boundaries: boundary at " + std::to_string(t) +
                        " s lies more than one stride past the last of " +
                        std::to_string(n_frames) + " frames");
    std::size_t idx = frame_index_for_time(t, tb);
    if (idx >= n_frames) idx = n_frames - 1;
    out.labels[idx] = 1;
  }
  return out;
}

// Frame indices back to timestamps, frame-start convention. offset_sec
// shifts every timestamp, e.g. +stride/2 to report frame centers.
inline std::vector<double> frames_to_times(const std::vector<std::size_t>& indices,
                                           const Timebase& tb,
                                           double offset_sec = 0.0) {
  validate(tb);
  for (std::size_t i = 1; i < indices.size(); ++i)
    if (indices[i] <= indices[i - 1])
      throw input_error("frames_to_times: indices must be strictly increasing");
  std::vector<double> times;
  times.reserve(indices.size());
  for (auto idx : indices)
    times.push_back(static_cast<double>(idx) * tb.frame_stride + offset_sec);
  return times;
}

inline std::vector<std::size_t> one_indices(const FrameLabelSequence& fl) {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < fl.labels.size(); ++i)
    if (fl.labels[i]) idx.push_back(i);
  return idx;
}

}  // namespace segeval

#endif  // SEGEVAL_CORE_HPP_
