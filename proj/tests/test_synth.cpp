// tests/test_synth.cpp

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

#include <algorithm>
#include <cmath>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "segeval/metrics.hpp"
#include "segeval/synth.hpp"

using namespace segeval;

TEST_CASE("gen_segmentation basics") {
  CHECK(gen_segmentation(0, 0.1, 1.0, 3).boundaries.empty());

  auto seg = gen_segmentation(5, 0.1, 1.0, 7, "u");
  REQUIRE(seg.boundaries.size() == 5);
  REQUIRE(seg.duration_sec.has_value());
  for (std::size_t i = 1; i < seg.boundaries.size(); ++i)
    CHECK(seg.boundaries[i] - seg.boundaries[i - 1] >= 0.1);
  CHECK(seg.boundaries.back() <= 1.0);
  CHECK(seg.boundaries.front() >= 0.0);

  CHECK(gen_segmentation(5, 0.1, 1.0, 7, "u").boundaries == seg.boundaries);
  CHECK(gen_segmentation(5, 0.1, 1.0, 8, "u").boundaries != seg.boundaries);

  CHECK_THROWS_AS(gen_segmentation(11, 0.1, 1.0, 7), input_error);
}

TEST_CASE("perturb with neutral parameters is the identity") {
  auto seg = gen_segmentation(8, 0.05, 2.0, 11, "u");
  PerturbConfig cfg;
  cfg.seed = 99;
  auto out = perturb(seg, cfg);
  CHECK(out.boundaries == seg.boundaries);
  CHECK(out.utterance_id == seg.utterance_id);
}

TEST_CASE("perturb deleting everything empties the segmentation") {
  auto seg = gen_segmentation(8, 0.05, 2.0, 12, "u");
  PerturbConfig cfg;
  cfg.p_delete = 1.0;
  cfg.seed = 1;
  CHECK(perturb(seg, cfg).boundaries.empty());
}

TEST_CASE("perturb is deterministic in the seed") {
  auto seg = gen_segmentation(10, 0.05, 3.0, 13, "u");
  PerturbConfig cfg;
  cfg.jitter_std_sec = 0.004;
  cfg.p_delete = 0.3;
  cfg.p_insert = 0.4;
  cfg.insert_margin_sec = 0.03;
  cfg.seed = 21;
  CHECK(perturb(seg, cfg).boundaries == perturb(seg, cfg).boundaries);
  cfg.seed = 22;
  auto other = perturb(seg, cfg);
  CHECK(other.boundaries != perturb(seg, PerturbConfig{0.004, 0.3, 0.4, 0.03, 21}).boundaries);
}

TEST_CASE("sub-tolerance jitter keeps both schemes at 1.0") {
  const double tol = 0.02;
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    auto ref = gen_segmentation(12, 2.5 * tol, 4.0, 100 + seed, "u");
    PerturbConfig cfg;
    cfg.jitter_std_sec = tol / 4.0;  // 3 sigma < tol
    cfg.seed = 500 + seed;
    auto hyp = perturb(ref, cfg);
    MatchConfig mc;
    mc.tolerance_sec = tol;
    mc.trim_edges = false;
    for (auto scheme : {MatchScheme::kLenient, MatchScheme::kStrict}) {
      mc.scheme = scheme;
      auto rep = evaluate_corpus({{ref, hyp}}, mc).overall;
      REQUIRE(rep.precision == 1.0);
      REQUIRE(rep.recall == 1.0);
      REQUIRE(rep.f1 == 1.0);
      REQUIRE(rep.r_value == 1.0);
    }
  }
}

TEST_CASE("deletions cut recall and leave survivor precision at 1.0") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    auto ref = gen_segmentation(20, 0.05, 3.0, 200 + seed, "u");
    PerturbConfig cfg;
    cfg.p_delete = 0.3;
    cfg.seed = 700 + seed;
    auto hyp = perturb(ref, cfg);
    if (hyp.boundaries.empty()) continue;  // all deleted; nothing to score
    MatchConfig mc;
    mc.trim_edges = false;
    for (auto scheme : {MatchScheme::kLenient, MatchScheme::kStrict}) {
      mc.scheme = scheme;
      auto rep = evaluate_corpus({{ref, hyp}}, mc).overall;
      REQUIRE(rep.precision == 1.0);
      REQUIRE(rep.recall ==
              static_cast<double>(hyp.boundaries.size()) / static_cast<double>(ref.boundaries.size()));
    }
  }
}

TEST_CASE("far insertions cut precision and leave recall alone") {
  const double tol = 0.02;
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    auto ref = gen_segmentation(10, 0.05, 3.0, 300 + seed, "u");
    PerturbConfig cfg;
    cfg.p_insert = 1.0;
    cfg.insert_margin_sec = 2.0 * tol;  // insertions land outside every window
    cfg.seed = 900 + seed;
    auto hyp = perturb(ref, cfg);
    REQUIRE(hyp.boundaries.size() > ref.boundaries.size());
    MatchConfig mc;
    mc.tolerance_sec = tol;
    mc.trim_edges = false;
    for (auto scheme : {MatchScheme::kLenient, MatchScheme::kStrict}) {
      mc.scheme = scheme;
      auto rep = evaluate_corpus({{ref, hyp}}, mc).overall;
      REQUIRE(rep.recall == 1.0);
      REQUIRE(rep.precision < 1.0);
      REQUIRE(rep.counts.hits_precision == ref.boundaries.size());
    }
  }
}

TEST_CASE("perturb validates probabilities") {
  auto seg = gen_segmentation(3, 0.1, 1.0, 5, "u");
  PerturbConfig cfg;
  cfg.p_delete = 1.5;
  CHECK_THROWS_AS(perturb(seg, cfg), input_error);
  PerturbConfig neg;
  neg.jitter_std_sec = -0.01;
  CHECK_THROWS_AS(perturb(seg, neg), input_error);
  PerturbConfig margin;
  margin.insert_margin_sec = 0.0;
  CHECK_THROWS_AS(perturb(seg, margin), input_error);
}
