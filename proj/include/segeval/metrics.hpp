// segeval/metrics.hpp

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

// Boundary-detection scoring with a symmetric tolerance window, under two
// hit-counting schemes:
//
//   lenient  - a reference boundary may validate any number of predictions
//              and vice versa; precision hits and recall hits are counted
//              independently.
//   strict   - hits are a one-to-one matching between predictions and
//              references; a matched reference is out of play, so the
//              precision and recall hit counts coincide.
//
// The schemes can diverge sharply: an isolated reference at frame p with
// predictions at p-1, p, p+1 scores precision 1.0 leniently but only 1/3
// strictly. Report both when comparing against published numbers of
// unknown provenance.

#ifndef SEGEVAL_METRICS_HPP_
#define SEGEVAL_METRICS_HPP_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <map>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include "segeval/core.hpp"

namespace segeval {

enum class MatchScheme { kLenient, kStrict };
enum class StrictVariant { kMaximum, kSequential };
enum class Aggregation { kMicro, kMacro };

struct MatchConfig {
  double tolerance_sec = 0.02;  // window on either side of a reference boundary
  MatchScheme scheme = MatchScheme::kLenient;
  StrictVariant strict_variant = StrictVariant::kMaximum;
  bool trim_edges = true;  // drop utterance-initial/final reference boundaries
  Aggregation aggregation = Aggregation::kMicro;
};

inline void validate(const MatchConfig& cfg) {
  if (!(cfg.tolerance_sec >= 0.0) || !std::isfinite(cfg.tolerance_sec))
    throw input_error("MatchConfig: tolerance_sec must be nonnegative and finite");
}

// Hit counts for one utterance (or, summed, for a corpus).
struct MatchResult {
  std::size_t hits_precision = 0;  // predictions validated by some reference
  std::size_t hits_recall = 0;     // references validated by some prediction
  std::size_t n_hyp = 0;
  std::size_t n_ref = 0;
  // One-to-one matching (hyp index, ref index); filled by the strict
  // scheme only, in which case hits_precision == hits_recall == pairs.size().
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
};

// Slack absorbing double rounding when boundaries come out of frame
// arithmetic: 0.2 - 0.18 evaluates just above 0.02, yet a prediction one
// 20 ms frame away from its reference must count as inside a 20 ms window.
// One nanosecond is far below any meaningful time scale here.
inline constexpr double kTimeEpsilonSec = 1e-9;

inline bool within_tolerance(double a, double b, double tolerance_sec) {
  return std::abs(a - b) <= tolerance_sec + kTimeEpsilonSec;
}

namespace detail {

// Does `sorted` contain a value within tolerance of t?
inline bool has_neighbor(const std::vector<double>& sorted, double t, double tol) {
  auto it = std::lower_bound(sorted.begin(), sorted.end(), t);
  if (it != sorted.end() && within_tolerance(*it, t, tol)) return true;
  if (it != sorted.begin() && within_tolerance(*std::prev(it), t, tol)) return true;
  return false;
}

}  // namespace detail

// Lenient counting: every prediction near some reference is a precision
// hit, every reference near some prediction is a recall hit. Double
// counting is allowed on both sides, so the two hit counts may differ.
inline MatchResult match_lenient(const Segmentation& ref, const Segmentation& hyp,
                                 const MatchConfig& cfg) {
  validate(cfg);
  validate(ref);
  validate(hyp);
  MatchResult mr;
  mr.n_ref = ref.boundaries.size();
  mr.n_hyp = hyp.boundaries.size();
  for (double h : hyp.boundaries)
    if (detail::has_neighbor(ref.boundaries, h, cfg.tolerance_sec)) ++mr.hits_precision;
  for (double r : ref.boundaries)
    if (detail::has_neighbor(hyp.boundaries, r, cfg.tolerance_sec)) ++mr.hits_recall;
  return mr;
}

// Strict counting: a one-to-one matching under |h - r| <= tolerance.
//
// kMaximum pairs each prediction with the earliest unmatched compatible
// reference via a two-pointer sweep of the sorted lists. On a line with a
// symmetric tolerance every boundary's compatible references form a
// contiguous interval, so this greedy attains maximum cardinality (the
// test suite checks it against exhaustive search).
//
// kSequential walks predictions in temporal order and claims the nearest
// unmatched reference inside the window, earlier reference on ties. It is
// order-dependent and can fall short of the maximum; it exists to
// reproduce scorers written that way.
inline MatchResult match_strict(const Segmentation& ref, const Segmentation& hyp,
                                const MatchConfig& cfg) {
  validate(cfg);
  validate(ref);
  validate(hyp);
  const auto& r = ref.boundaries;
  const auto& h = hyp.boundaries;
  MatchResult mr;
  mr.n_ref = r.size();
  mr.n_hyp = h.size();
  if (cfg.strict_variant == StrictVariant::kMaximum) {
    std::size_t i = 0, j = 0;
    while (i < h.size() && j < r.size()) {
      if (within_tolerance(h[i], r[j], cfg.tolerance_sec)) {
        mr.pairs.emplace_back(i, j);
        ++i;
        ++j;
      } else if (h[i] < r[j]) {
        ++i;  // too early for r[j], hence for every later reference
      } else {
        ++j;  // r[j] unreachable by this and all later predictions
      }
    }
  } else {
    std::vector<char> used(r.size(), 0);
    for (std::size_t i = 0; i < h.size(); ++i) {
      const auto pivot = static_cast<std::size_t>(
          std::lower_bound(r.begin(), r.end(), h[i]) - r.begin());
      std::size_t best = r.size();
      double best_dist = 0.0;
      auto consider = [&](std::size_t j) {
        if (used[j]) return;
        const double d = std::abs(h[i] - r[j]);
        if (best == r.size() || d < best_dist || (d == best_dist && j < best)) {
          best = j;
          best_dist = d;
        }
      };
      for (std::size_t j = pivot; j < r.size(); ++j) {
        if (!within_tolerance(h[i], r[j], cfg.tolerance_sec)) break;
        consider(j);
      }
      for (std::size_t j = pivot; j-- > 0;) {
        if (!within_tolerance(h[i], r[j], cfg.tolerance_sec)) break;
        consider(j);
      }
      if (best < r.size()) {
        used[best] = 1;
        mr.pairs.emplace_back(i, best);
      }
    }
  }
  mr.hits_precision = mr.hits_recall = mr.pairs.size();
  return mr;
}

inline MatchResult match_segmentations(const Segmentation& ref, const Segmentation& hyp,
                                       const MatchConfig& cfg) {
  return cfg.scheme == MatchScheme::kStrict ? match_strict(ref, hyp, cfg)
                                            : match_lenient(ref, hyp, cfg);
}

// Precision/recall and their derivatives. Ratios are stored unrounded in
// [0, 1]; os and the r-value inputs are percentages.
struct MetricsReport {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  double os = 0.0;       // over-segmentation percent; negative when under-segmented
  double r_value = 0.0;  // nominally [0, 1]; drops below 0 under extreme over-segmentation
  MatchResult counts;
};

// R-value from hit rate and over-segmentation, both in percent:
//   r1 = sqrt((100 - HR)^2 + OS^2)
//   r2 = (-OS + HR - 100) / sqrt(2)
//   R  = 1 - (|r1| + |r2|) / 200
inline double r_value_from(double hit_rate_percent, double os_percent) {
  const double r1 = std::hypot(100.0 - hit_rate_percent, os_percent);
  const double r2 = (-os_percent + hit_rate_percent - 100.0) / std::numbers::sqrt2;
  return 1.0 - (std::abs(r1) + std::abs(r2)) / 200.0;
}

inline MetricsReport compute_metrics(const MatchResult& mr) {
  if (mr.n_ref == 0)
    throw eval_error("compute_metrics: reference has no boundaries, recall and "
                     "over-segmentation are undefined");
  MetricsReport rep;
  rep.counts = mr;
  // n_hyp == 0 alongside n_ref == 0 would read as a perfect empty match,
  // but that case is rejected above.
  rep.precision =
      mr.n_hyp == 0 ? 0.0 : static_cast<double>(mr.hits_precision) / static_cast<double>(mr.n_hyp);
  rep.recall = static_cast<double>(mr.hits_recall) / static_cast<double>(mr.n_ref);
  rep.f1 = rep.precision + rep.recall > 0.0
               ? 2.0 * rep.precision * rep.recall / (rep.precision + rep.recall)
               : 0.0;
  rep.os = (static_cast<double>(mr.n_hyp) / static_cast<double>(mr.n_ref) - 1.0) * 100.0;
  rep.r_value = r_value_from(100.0 * rep.recall, rep.os);
  return rep;
}

// Drop the utterance-initial and -final reference boundaries, and mirror
// the trim onto the hypothesis: any prediction within tolerance of a
// removed edge goes too. Scoring utterance edges mostly rewards detecting
// the recording switch on/off, hence the convention of excluding them.
inline std::pair<Segmentation, Segmentation> trim_edge_boundaries(
    const Segmentation& ref, const Segmentation& hyp, double tolerance_sec) {
  Segmentation r = ref;
  Segmentation h = hyp;
  if (r.boundaries.empty()) return {std::move(r), std::move(h)};
  const double first = r.boundaries.front();
  const double last = r.boundaries.back();
  r.boundaries.erase(r.boundaries.begin());
  if (!r.boundaries.empty()) r.boundaries.pop_back();
  std::erase_if(h.boundaries, [&](double t) {
    return within_tolerance(t, first, tolerance_sec) ||
           within_tolerance(t, last, tolerance_sec);
  });
  return {std::move(r), std::move(h)};
}

struct UtteranceReport {
  std::string utterance_id;
  MetricsReport report;
};

struct CorpusReport {
  MetricsReport overall;
  std::vector<UtteranceReport> per_utterance;
};

// Pair reference and hypothesis segmentations by utterance_id, sorted by
// id. Ids present on one side only (or duplicated) raise pairing_error
// naming every offender.
inline std::vector<std::pair<Segmentation, Segmentation>> pair_by_utterance_id(
    const std::vector<Segmentation>& refs, const std::vector<Segmentation>& hyps) {
  std::map<std::string, const Segmentation*> ref_by_id, hyp_by_id;
  for (const auto& s : refs)
    if (!ref_by_id.emplace(s.utterance_id, &s).second)
      throw pairing_error("duplicate reference utterance_id '" + s.utterance_id + "'");
  for (const auto& s : hyps)
    if (!hyp_by_id.emplace(s.utterance_id, &s).second)
      throw pairing_error("duplicate hypothesis utterance_id '" + s.utterance_id + "'");
  std::string only_ref, only_hyp;
  for (const auto& [id, p] : ref_by_id)
    if (!hyp_by_id.count(id)) only_ref += " " + id;
  for (const auto& [id, p] : hyp_by_id)
    if (!ref_by_id.count(id)) only_hyp += " " + id;
  if (!only_ref.empty() || !only_hyp.empty()) {
    std::string msg = "utterance ids do not pair up;";
    if (!only_ref.empty()) msg += " missing from hypothesis:" + only_ref + ";";
    if (!only_hyp.empty()) msg += " missing from reference:" + only_hyp + ";";
    msg.pop_back();
    throw pairing_error(msg);
  }
  std::vector<std::pair<Segmentation, Segmentation>> out;
  out.reserve(ref_by_id.size());
  for (const auto& [id, rp] : ref_by_id) out.emplace_back(*rp, *hyp_by_id.at(id));
  return out;
}

// Score a corpus of (reference, hypothesis) pairs.
//
// kMicro sums hit and boundary counts across utterances and computes the
// metrics once on the totals (hits form a commutative monoid, so order
// never matters). kMacro averages the per-utterance metric values; its
// overall f1 is the mean of the per-utterance f1s, not the harmonic
// combination of the averaged precision and recall.
//
// With trim_edges, every utterance is edge-trimmed (see
// trim_edge_boundaries) before matching; a reference left empty by the
// trim makes the evaluation undefined and raises eval_error listing the
// offending utterances.
inline CorpusReport evaluate_corpus(
    const std::vector<std::pair<Segmentation, Segmentation>>& pairs,
    const MatchConfig& cfg) {
  validate(cfg);
  if (pairs.empty()) throw eval_error("evaluate_corpus: no utterances to evaluate");
  CorpusReport out;
  out.per_utterance.reserve(pairs.size());
  MatchResult total;
  std::string empty_refs;
  for (const auto& [ref, hyp] : pairs) {
    Segmentation r = ref;
    Segmentation h = hyp;
    if (cfg.trim_edges) std::tie(r, h) = trim_edge_boundaries(ref, hyp, cfg.tolerance_sec);
    if (r.boundaries.empty()) {
      empty_refs += " " + ref.utterance_id;
      continue;
    }
    const MatchResult mr = match_segmentations(r, h, cfg);
    total.hits_precision += mr.hits_precision;
    total.hits_recall += mr.hits_recall;
    total.n_hyp += mr.n_hyp;
    total.n_ref += mr.n_ref;
    out.per_utterance.push_back({ref.utterance_id, compute_metrics(mr)});
  }
  if (!empty_refs.empty())
    throw eval_error("evaluate_corpus: reference empty after edge trimming for:" + empty_refs);
  if (cfg.aggregation == Aggregation::kMicro) {
    out.overall = compute_metrics(total);
  } else {
    MetricsReport m;
    const auto n = static_cast<double>(out.per_utterance.size());
    for (const auto& u : out.per_utterance) {
      m.precision += u.report.precision / n;
      m.recall += u.report.recall / n;
      m.f1 += u.report.f1 / n;
      m.os += u.report.os / n;
      m.r_value += u.report.r_value / n;
    }
    m.counts = total;
    out.overall = m;
  }
  return out;
}

inline CorpusReport evaluate_corpus(const std::vector<Segmentation>& refs,
                                    const std::vector<Segmentation>& hyps,
                                    const MatchConfig& cfg) {
  return evaluate_corpus(pair_by_utterance_id(refs, hyps), cfg);
}

}  // namespace segeval

#endif  // SEGEVAL_METRICS_HPP_
