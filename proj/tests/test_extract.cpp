// tests/test_extract.cpp

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

#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "segeval/extract.hpp"
#include "segeval/rng.hpp"

using namespace segeval;

namespace {
std::vector<std::size_t> peaks(std::vector<double> p, PeakConfig cfg = {}) {
  return pick_peaks(FrameProbabilitySequence{std::move(p)}, cfg);
}
}  // namespace

TEST_CASE("a single spike is a peak") {
  CHECK(peaks({0.0, 0.0, 0.9, 0.0, 0.0}) == std::vector<std::size_t>{2});
}

TEST_CASE("peaks at the sequence edges count") {
  CHECK(peaks({0.9, 0.2, 0.9, 0.2}) == std::vector<std::size_t>{0, 2});
  CHECK(peaks({0.2, 0.9}) == std::vector<std::size_t>{1});
}

TEST_CASE("plateaus resolve by policy") {
  CHECK(peaks({0.8, 0.8, 0.1}) == std::vector<std::size_t>{0});
  PeakConfig center;
  center.plateau_policy = PlateauPolicy::kCenter;
  CHECK(peaks({0.8, 0.8, 0.1}, center) == std::vector<std::size_t>{0});
  CHECK(peaks({0.1, 0.8, 0.8, 0.8, 0.1}, center) == std::vector<std::size_t>{2});
  CHECK(peaks({0.1, 0.8, 0.8, 0.8, 0.1}) == std::vector<std::size_t>{1});
}

TEST_CASE("threshold is inclusive and filters low maxima") {
  CHECK(peaks({0.0, 0.5, 0.0}) == std::vector<std::size_t>{1});
  CHECK(peaks({0.0, 0.49, 0.0}).empty());
  PeakConfig strict_thr;
  strict_thr.threshold = 0.9;
  CHECK(peaks({0.0, 0.5, 0.0, 0.95, 0.0}, strict_thr) == std::vector<std::size_t>{3});
}

TEST_CASE("minimum distance keeps the higher peak, earlier on ties") {
  PeakConfig cfg;
  cfg.min_distance_frames = 3;
  // 0.9 at index 0 beats 0.8 at index 2; index 4 is far enough from 0.
  CHECK(peaks({0.9, 0.2, 0.8, 0.2, 0.7}, cfg) == std::vector<std::size_t>{0, 4});
  // Equal heights: the earlier one wins.
  CHECK(peaks({0.8, 0.2, 0.8, 0.3}, cfg) == std::vector<std::size_t>{0});
}

TEST_CASE("peak output is increasing and respects min distance") {
  DeterministicRng rng(21);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<double> p(rng.below(120));
    for (auto& x : p) x = rng.uniform();
    PeakConfig cfg;
    cfg.min_distance_frames = 1 + rng.below(6);
    cfg.threshold = rng.uniform(0.0, 0.9);
    auto got = pick_peaks(FrameProbabilitySequence{p}, cfg);
    for (std::size_t k = 1; k < got.size(); ++k) {
      REQUIRE(got[k] > got[k - 1]);
      REQUIRE(got[k] - got[k - 1] >= cfg.min_distance_frames);
    }
    for (auto idx : got) REQUIRE(p[idx] >= cfg.threshold);
  }
}

TEST_CASE("raising the threshold never adds peaks") {
  DeterministicRng rng(22);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<double> p(20 + rng.below(60));
    for (auto& x : p) x = rng.uniform();
    PeakConfig lo, hi;
    lo.threshold = rng.uniform(0.0, 0.5);
    hi.threshold = lo.threshold + rng.uniform(0.0, 0.5);
    auto low = pick_peaks(FrameProbabilitySequence{p}, lo);
    auto high = pick_peaks(FrameProbabilitySequence{p}, hi);
    REQUIRE(high.size() <= low.size());
  }
}

TEST_CASE("peak config validation") {
  PeakConfig bad_thr;
  bad_thr.threshold = 1.5;
  CHECK_THROWS_AS(peaks({0.1}, bad_thr), input_error);
  PeakConfig bad_dist;
  bad_dist.min_distance_frames = 0;
  CHECK_THROWS_AS(peaks({0.1}, bad_dist), input_error);
  CHECK_THROWS_AS(pick_peaks(FrameProbabilitySequence{{1.5}}, PeakConfig{}), input_error);
}

TEST_CASE("bootstrap_labels matches the binning contract") {
  Timebase tb{16000, 0.02};
  Segmentation preds{"u", {0.02, 0.04, 0.06}, {}};
  auto fl = bootstrap_labels(preds, tb, 5);
  CHECK(one_indices(fl) == std::vector<std::size_t>{1, 2, 3});

  CHECK(one_indices(bootstrap_labels(Segmentation{"u", {}, {}}, tb, 8)).empty());

  Segmentation crowded{"u", {0.039, 0.041}, {}};
  CHECK(one_indices(bootstrap_labels(crowded, tb, 5)) == std::vector<std::size_t>{2});
}

TEST_CASE("binary labels back to timestamps") {
  Timebase tb{16000, 0.02};
  auto seg = binary_labels_to_segmentation(FrameLabelSequence{{0, 1, 0, 1}}, tb, "u");
  CHECK(seg.utterance_id == "u");
  CHECK(seg.boundaries == std::vector<double>{0.02, 0.06});
  REQUIRE(seg.duration_sec.has_value());
  CHECK(*seg.duration_sec == Catch::Approx(0.08));

  CHECK(binary_labels_to_segmentation(FrameLabelSequence{{0, 0, 0}}, tb).boundaries.empty());
  CHECK(binary_labels_to_segmentation(FrameLabelSequence{{1, 1, 1}}, Timebase{16000, 0.01})
            .boundaries == std::vector<double>{0.0, 0.01, 0.02});
}

TEST_CASE("labels -> segmentation -> labels is the identity") {
  DeterministicRng rng(23);
  Timebase tb{16000, 0.02};
  for (int trial = 0; trial < 200; ++trial) {
    FrameLabelSequence fl;
    fl.labels.assign(1 + rng.below(100), 0);
    for (std::size_t i = 0; i < fl.labels.size(); ++i)
      if (rng.uniform() < 0.3) fl.labels[i] = 1;
    auto seg = binary_labels_to_segmentation(fl, tb);
    auto back = bootstrap_labels(seg, tb, fl.labels.size());
    REQUIRE(back.labels == fl.labels);
  }
}
