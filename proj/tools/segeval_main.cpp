// tools/segeval_main.cpp

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

// segeval: phone-boundary segmentation toolkit.
//
//   convert    corpus annotations -> canonical segmentation jsonl
//   eval       score hypothesis boundaries against a reference
//   peaks      frame probabilities -> boundary timestamps
//   bootstrap  boundary timestamps -> frame labels
//   loss       weighted cross entropy of probabilities vs labels
//   synth      generate and corrupt synthetic segmentations
//   report     re-render stored results; tolerance sweeps
//
// Every subcommand accepts "-" for stdin/stdout on jsonl paths. Exit
// codes: 0 ok, 1 evaluation-domain error, 2 input error.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "segeval/segeval.hpp"

namespace {

using namespace segeval;

std::unique_ptr<std::istream> open_input(const std::string& path) {
  if (path == "-") return std::make_unique<std::istream>(std::cin.rdbuf());
  auto f = std::make_unique<std::ifstream>(path);
  if (!*f) throw input_error("cannot open " + path);
  return f;
}

std::unique_ptr<std::ostream> open_output(const std::string& path) {
  if (path == "-") return std::make_unique<std::ostream>(std::cout.rdbuf());
  auto f = std::make_unique<std::ofstream>(path);
  if (!*f) throw input_error("cannot write " + path);
  return f;
}

std::vector<Segmentation> load_segmentations(const std::string& path) {
  auto in = open_input(path);
  return read_segmentations_jsonl(*in, path);
}

std::vector<UtteranceProbs> load_probs(const std::string& path, const std::string& format) {
  if (format == "f32") {
    if (path == "-") throw input_error("float32 probabilities need a real path");
    return read_probs_f32(path);
  }
  auto in = open_input(path);
  return read_probs_jsonl(*in, path);
}

std::string format_full(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

// ---------------------------------------------------------------------------
// rendering

void print_table(std::ostream& out, const std::vector<std::string>& headers,
                 const std::vector<std::pair<std::string, std::vector<double>>>& rows) {
  std::size_t label_width = 0;
  for (const auto& [label, vals] : rows) label_width = std::max(label_width, label.size());
  const int w = 11;
  if (label_width > 0) out << std::string(label_width, ' ');
  for (const auto& h : headers) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%*s", w, h.c_str());
    out << buf;
  }
  out << '\n';
  for (const auto& [label, vals] : rows) {
    out << label << std::string(label_width - label.size(), ' ');
    for (double v : vals) {
      char buf[32];
      std::snprintf(buf, sizeof(buf), "%*.2f", w, 100.0 * v);
      out << buf;
    }
    out << '\n';
  }
}

std::vector<double> metric_row(const MetricsReport* lenient, const MetricsReport* strict) {
  std::vector<double> row;
  auto push = [&](auto member) {
    if (lenient) row.push_back(lenient->*member);
    if (strict) row.push_back(strict->*member);
  };
  push(&MetricsReport::precision);
  push(&MetricsReport::recall);
  push(&MetricsReport::f1);
  push(&MetricsReport::r_value);
  return row;
}

std::vector<std::string> metric_headers(bool lenient, bool strict) {
  std::vector<std::string> h;
  auto push = [&](const std::string& name) {
    if (lenient) h.push_back(name);
    if (strict) h.push_back(name + "*");
  };
  push("Precision");
  push("Recall");
  push("F1");
  push("R-Value");
  return h;
}

struct EvalOutput {
  double tolerance_sec = 0.02;
  std::string strict_variant = "maximum";
  bool trim_edges = true;
  std::string aggregation = "micro";
  std::optional<CorpusReport> lenient;
  std::optional<CorpusReport> strict;
};

void render_eval_table(std::ostream& out, const EvalOutput& r, bool per_utterance) {
  const MetricsReport* l = r.lenient ? &r.lenient->overall : nullptr;
  const MetricsReport* s = r.strict ? &r.strict->overall : nullptr;
  std::vector<std::pair<std::string, std::vector<double>>> rows;
  rows.emplace_back("", metric_row(l, s));
  if (per_utterance) {
    const auto& ids = r.lenient ? r.lenient->per_utterance : r.strict->per_utterance;
    for (std::size_t i = 0; i < ids.size(); ++i) {
      const MetricsReport* ul = r.lenient ? &r.lenient->per_utterance[i].report : nullptr;
      const MetricsReport* us = r.strict ? &r.strict->per_utterance[i].report : nullptr;
      rows.emplace_back(ids[i].utterance_id + "  ", metric_row(ul, us));
    }
  }
  print_table(out, metric_headers(l != nullptr, s != nullptr), rows);
}

ordered_json eval_output_to_json(const EvalOutput& r, bool per_utterance) {
  ordered_json j;
  j["tolerance_sec"] = r.tolerance_sec;
  j["strict_variant"] = r.strict_variant;
  j["trim_edges"] = r.trim_edges;
  j["aggregation"] = r.aggregation;
  if (r.lenient) j["lenient"] = metrics_report_to_json(r.lenient->overall);
  if (r.strict) j["strict"] = metrics_report_to_json(r.strict->overall);
  if (per_utterance) {
    ordered_json arr = ordered_json::array();
    const auto& ids = r.lenient ? r.lenient->per_utterance : r.strict->per_utterance;
    for (std::size_t i = 0; i < ids.size(); ++i) {
      ordered_json u;
      u["id"] = ids[i].utterance_id;
      if (r.lenient) u["lenient"] = metrics_report_to_json(r.lenient->per_utterance[i].report);
      if (r.strict) u["strict"] = metrics_report_to_json(r.strict->per_utterance[i].report);
      arr.push_back(u);
    }
    j["per_utterance"] = arr;
  }
  return j;
}

void csv_metric_rows(std::ostream& out, const std::string& scheme, const std::string& id,
                     const MetricsReport& m, const std::string& prefix = {}) {
  out << prefix << scheme << ',' << id << ',' << format_full(100.0 * m.precision) << ','
      << format_full(100.0 * m.recall) << ',' << format_full(100.0 * m.f1) << ','
      << format_full(m.os) << ',' << format_full(100.0 * m.r_value) << '\n';
}

void render_eval_csv(std::ostream& out, const EvalOutput& r, bool per_utterance) {
  out << "scheme,id,precision,recall,f1,os,r_value\n";
  if (r.lenient) csv_metric_rows(out, "lenient", "OVERALL", r.lenient->overall);
  if (r.strict) csv_metric_rows(out, "strict", "OVERALL", r.strict->overall);
  if (per_utterance) {
    if (r.lenient)
      for (const auto& u : r.lenient->per_utterance)
        csv_metric_rows(out, "lenient", u.utterance_id, u.report);
    if (r.strict)
      for (const auto& u : r.strict->per_utterance)
        csv_metric_rows(out, "strict", u.utterance_id, u.report);
  }
}

// ---------------------------------------------------------------------------
// eval (also the probabilities -> peaks -> eval pipeline)

struct EvalOptions {
  std::string ref_path;
  std::string hyp_path;
  double tolerance = 0.02;
  std::string scheme = "both";
  std::string strict_variant = "maximum";
  bool trim_edges = true;
  std::string aggregation = "micro";
  std::string format = "table";
  std::string out_path = "-";
  bool per_utterance = false;
  // pipeline entry: score probabilities directly
  std::string probs_path;
  std::string probs_format = "jsonl";
  double stride = 0.02;
  double threshold = 0.5;
  std::size_t min_distance = 2;
  std::string plateau = "leftmost";
  double time_offset = 0.0;
  std::string save_peaks;
};

PlateauPolicy plateau_from(const std::string& name) {
  return name == "center" ? PlateauPolicy::kCenter : PlateauPolicy::kLeftmost;
}

std::vector<Segmentation> peaks_to_segmentations(const std::vector<UtteranceProbs>& probs,
                                                 double stride, double threshold,
                                                 std::size_t min_distance,
                                                 const std::string& plateau,
                                                 double time_offset) {
  if (time_offset < 0.0) throw input_error("--time-offset must be nonnegative");
  Timebase tb;
  tb.frame_stride = stride;
  PeakConfig pc;
  pc.threshold = threshold;
  pc.min_distance_frames = min_distance;
  pc.plateau_policy = plateau_from(plateau);
  std::vector<Segmentation> out;
  out.reserve(probs.size());
  for (const auto& rec : probs) {
    Segmentation seg;
    seg.utterance_id = rec.id;
    seg.boundaries = frames_to_times(pick_peaks(rec.probs, pc), tb, time_offset);
    seg.duration_sec =
        static_cast<double>(rec.probs.probs.size()) * stride + time_offset;
    out.push_back(std::move(seg));
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.utterance_id < b.utterance_id; });
  return out;
}

MatchConfig match_config_from(const EvalOptions& o) {
  MatchConfig cfg;
  cfg.tolerance_sec = o.tolerance;
  cfg.strict_variant =
      o.strict_variant == "sequential" ? StrictVariant::kSequential : StrictVariant::kMaximum;
  cfg.trim_edges = o.trim_edges;
  cfg.aggregation = o.aggregation == "macro" ? Aggregation::kMacro : Aggregation::kMicro;
  return cfg;
}

EvalOutput run_eval_schemes(const std::vector<Segmentation>& refs,
                            const std::vector<Segmentation>& hyps, const EvalOptions& o) {
  EvalOutput out;
  out.tolerance_sec = o.tolerance;
  out.strict_variant = o.strict_variant;
  out.trim_edges = o.trim_edges;
  out.aggregation = o.aggregation;
  auto pairs = pair_by_utterance_id(refs, hyps);
  MatchConfig cfg = match_config_from(o);
  if (o.scheme == "both" || o.scheme == "lenient") {
    cfg.scheme = MatchScheme::kLenient;
    out.lenient = evaluate_corpus(pairs, cfg);
  }
  if (o.scheme == "both" || o.scheme == "strict") {
    cfg.scheme = MatchScheme::kStrict;
    out.strict = evaluate_corpus(pairs, cfg);
  }
  return out;
}

int run_eval(const EvalOptions& o) {
  auto refs = load_segmentations(o.ref_path);
  std::vector<Segmentation> hyps;
  if (!o.probs_path.empty()) {
    hyps = peaks_to_segmentations(load_probs(o.probs_path, o.probs_format), o.stride,
                                  o.threshold, o.min_distance, o.plateau, o.time_offset);
    if (!o.save_peaks.empty()) {
      auto out = open_output(o.save_peaks);
      write_segmentations_jsonl(*out, hyps);
    }
  } else {
    hyps = load_segmentations(o.hyp_path);
  }
  const EvalOutput result = run_eval_schemes(refs, hyps, o);
  auto out = open_output(o.out_path);
  if (o.format == "json")
    *out << eval_output_to_json(result, o.per_utterance).dump() << '\n';
  else if (o.format == "csv")
    render_eval_csv(*out, result, o.per_utterance);
  else
    render_eval_table(*out, result, o.per_utterance);
  return 0;
}

// ---------------------------------------------------------------------------
// convert

struct ConvertOptions {
  std::string format;
  std::string in_dir;
  std::string out_path = "-";
  int sample_rate = 16000;
  std::vector<std::string> nonspeech;
  double min_split_gap = 0.5;
  double max_edge_nonspeech = 0.02;
  bool no_chunk = false;
  std::uint64_t seed = 0;
  double valid_fraction = 0.1;
  std::string emit_split;
};

void write_id_list(const std::string& path, const std::vector<std::string>& ids) {
  auto out = open_output(path);
  for (const auto& id : ids) *out << id << '\n';
}

int run_convert(const ConvertOptions& o) {
  ChunkConfig cc;
  if (!o.nonspeech.empty())
    cc.nonspeech_labels = std::set<std::string>(o.nonspeech.begin(), o.nonspeech.end());
  cc.min_split_gap_sec = o.min_split_gap;
  cc.max_edge_nonspeech_sec = o.max_edge_nonspeech;

  std::vector<Segmentation> segs;
  std::vector<std::string> speakers;
  std::vector<std::string> utterance_ids;
  if (o.format == "timit") {
    for (const auto& ann : load_timit_dir(o.in_dir, o.sample_rate)) {
      segs.push_back(annotation_to_segmentation(ann));
      utterance_ids.push_back(ann.utterance_id);
      if (speakers.empty() || speakers.back() != ann.speaker_id)
        speakers.push_back(ann.speaker_id);
    }
  } else {
    for (const auto& ann : load_buckeye_dir(o.in_dir)) {
      if (speakers.empty() || speakers.back() != ann.speaker_id)
        speakers.push_back(ann.speaker_id);
      if (o.no_chunk) {
        segs.push_back(annotation_to_segmentation(ann));
        utterance_ids.push_back(ann.utterance_id);
      } else {
        for (const auto& chunk : split_buckeye_chunks(ann, cc)) {
          segs.push_back(annotation_to_segmentation(chunk));
          utterance_ids.push_back(chunk.utterance_id);
        }
      }
    }
  }
  std::sort(segs.begin(), segs.end(),
            [](const auto& a, const auto& b) { return a.utterance_id < b.utterance_id; });
  auto out = open_output(o.out_path);
  write_segmentations_jsonl(*out, segs);

  if (!o.emit_split.empty()) {
    if (o.format == "timit") {
      // Utterance-level split: hold out a validation fraction of the tree.
      auto valid = sample_fraction(utterance_ids, o.valid_fraction, o.seed);
      std::vector<std::string> train;
      for (const auto& id : utterance_ids)
        if (!std::binary_search(valid.begin(), valid.end(), id)) train.push_back(id);
      std::sort(train.begin(), train.end());
      write_id_list(o.emit_split + ".train", train);
      write_id_list(o.emit_split + ".valid", valid);
    } else {
      std::sort(speakers.begin(), speakers.end());
      speakers.erase(std::unique(speakers.begin(), speakers.end()), speakers.end());
      auto split = speaker_split(speakers, o.seed);
      std::sort(split.train.begin(), split.train.end());
      std::sort(split.valid.begin(), split.valid.end());
      std::sort(split.test.begin(), split.test.end());
      write_id_list(o.emit_split + ".train", split.train);
      write_id_list(o.emit_split + ".valid", split.valid);
      write_id_list(o.emit_split + ".test", split.test);
    }
  }
  return 0;
}

// ---------------------------------------------------------------------------
// peaks / bootstrap / loss / synth

struct PeaksOptions {
  std::string in_path;
  std::string out_path = "-";
  std::string probs_format = "jsonl";
  double stride = 0.02;
  double threshold = 0.5;
  std::size_t min_distance = 2;
  std::string plateau = "leftmost";
  double time_offset = 0.0;
};

int run_peaks(const PeaksOptions& o) {
  auto segs = peaks_to_segmentations(load_probs(o.in_path, o.probs_format), o.stride,
                                     o.threshold, o.min_distance, o.plateau, o.time_offset);
  auto out = open_output(o.out_path);
  write_segmentations_jsonl(*out, segs);
  return 0;
}

struct BootstrapOptions {
  std::string in_path;
  std::string out_path = "-";
  double stride = 0.02;
  std::size_t n_frames = 0;  // 0 = derive per utterance
};

int run_bootstrap(const BootstrapOptions& o) {
  Timebase tb;
  tb.frame_stride = o.stride;
  auto segs = load_segmentations(o.in_path);
  std::sort(segs.begin(), segs.end(),
            [](const auto& a, const auto& b) { return a.utterance_id < b.utterance_id; });
  std::vector<UtteranceLabels> recs;
  recs.reserve(segs.size());
  for (const auto& seg : segs) {
    std::size_t n = o.n_frames;
    if (n == 0) {
      if (seg.duration_sec)
        n = static_cast<std::size_t>(std::ceil(*seg.duration_sec / o.stride - 1e-9));
      else if (!seg.boundaries.empty())
        n = frame_index_for_time(seg.boundaries.back(), tb) + 1;
    }
    UtteranceLabels rec;
    rec.id = seg.utterance_id;
    if (n > 0) rec.labels = bootstrap_labels(seg, tb, n);
    recs.push_back(std::move(rec));
  }
  auto out = open_output(o.out_path);
  write_labels_jsonl(*out, recs);
  return 0;
}

struct LossOptions {
  std::string probs_path;
  std::string probs_format = "jsonl";
  std::string labels_path;
  double w_star = 1.0;
  double epsilon = 1e-7;
  std::string reduction = "sum";
  bool as_json = false;
  std::string out_path = "-";
};

int run_loss(const LossOptions& o) {
  auto probs = load_probs(o.probs_path, o.probs_format);
  auto labels_in = open_input(o.labels_path);
  auto labels = read_labels_jsonl(*labels_in, o.labels_path);

  std::map<std::string, const UtteranceProbs*> probs_by_id;
  for (const auto& rec : probs)
    if (!probs_by_id.emplace(rec.id, &rec).second)
      throw pairing_error("duplicate probability id '" + rec.id + "'");
  std::map<std::string, const UtteranceLabels*> labels_by_id;
  for (const auto& rec : labels)
    if (!labels_by_id.emplace(rec.id, &rec).second)
      throw pairing_error("duplicate label id '" + rec.id + "'");
  std::string missing;
  for (const auto& [id, p] : probs_by_id)
    if (!labels_by_id.count(id)) missing += " " + id;
  for (const auto& [id, p] : labels_by_id)
    if (!probs_by_id.count(id)) missing += " " + id;
  if (!missing.empty())
    throw pairing_error("probability and label ids do not pair up:" + missing);

  LossConfig cfg;
  cfg.w_star = o.w_star;
  cfg.epsilon = o.epsilon;
  double total = 0.0;
  std::size_t total_frames = 0;
  ordered_json per = ordered_json::array();
  for (const auto& [id, prec] : probs_by_id) {
    const auto& lrec = *labels_by_id.at(id);
    const double l = weighted_bce(prec->probs, lrec.labels, cfg);
    total += l;
    total_frames += lrec.labels.labels.size();
    if (o.as_json) {
      ordered_json u;
      u["id"] = id;
      u["n_frames"] = lrec.labels.labels.size();
      u["loss"] = l;
      per.push_back(u);
    }
  }
  if (o.reduction == "mean" && total_frames > 0)
    total /= static_cast<double>(total_frames);

  auto out = open_output(o.out_path);
  if (o.as_json) {
    ordered_json j;
    j["loss"] = total;
    j["reduction"] = o.reduction;
    j["w_star"] = o.w_star;
    j["epsilon"] = o.epsilon;
    j["n_utterances"] = probs_by_id.size();
    j["n_frames"] = total_frames;
    j["per_utterance"] = per;
    *out << j.dump() << '\n';
  } else {
    *out << format_full(total) << '\n';
  }
  return 0;
}

struct SynthOptions {
  std::string out_path = "-";
  std::string perturb_out;
  std::size_t n_utterances = 10;
  std::size_t n_boundaries = 20;
  double min_gap = 0.05;
  double duration = 2.0;
  std::uint64_t seed = 0;
  double jitter_std = 0.0;
  double p_delete = 0.0;
  double p_insert = 0.0;
  double insert_margin = 0.05;
};

int run_synth(const SynthOptions& o) {
  std::vector<Segmentation> refs, hyps;
  for (std::size_t u = 0; u < o.n_utterances; ++u) {
    char id[32];
    std::snprintf(id, sizeof(id), "synth-%04zu", u);
    // Stream layout: utterance u draws from seed + 2u (generation) and
    // seed + 2u + 1 (perturbation).
    auto ref = gen_segmentation(o.n_boundaries, o.min_gap, o.duration, o.seed + 2 * u, id);
    if (!o.perturb_out.empty()) {
      PerturbConfig pc;
      pc.jitter_std_sec = o.jitter_std;
      pc.p_delete = o.p_delete;
      pc.p_insert = o.p_insert;
      pc.insert_margin_sec = o.insert_margin;
      pc.seed = o.seed + 2 * u + 1;
      hyps.push_back(perturb(ref, pc));
    }
    refs.push_back(std::move(ref));
  }
  auto out = open_output(o.out_path);
  write_segmentations_jsonl(*out, refs);
  if (!o.perturb_out.empty()) {
    auto pout = open_output(o.perturb_out);
    write_segmentations_jsonl(*pout, hyps);
  }
  return 0;
}

// ---------------------------------------------------------------------------
// report

struct ReportOptions {
  std::string metrics_path;
  std::string format = "table";
  std::string out_path = "-";
  // sweep mode
  std::string ref_path;
  std::string hyp_path;
  std::string sweep;  // "start:stop:step" in seconds
  std::string scheme = "both";
  std::string strict_variant = "maximum";
  bool trim_edges = true;
  std::string aggregation = "micro";
};

std::vector<double> parse_sweep(const std::string& spec) {
  double start = 0.0, stop = 0.0, step = 0.0;
  if (std::sscanf(spec.c_str(), "%lf:%lf:%lf", &start, &stop, &step) != 3)
    throw input_error("--sweep expects start:stop:step, got '" + spec + "'");
  if (step <= 0.0 || start < 0.0 || stop < start)
    throw input_error("--sweep needs 0 <= start <= stop and step > 0");
  std::vector<double> out;
  for (double t = start; t <= stop + 1e-12; t += step) out.push_back(t);
  return out;
}

int run_report(const ReportOptions& o) {
  auto out = open_output(o.out_path);
  if (!o.metrics_path.empty()) {
    auto in = open_input(o.metrics_path);
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(*in);
    } catch (const nlohmann::json::exception& e) {
      throw parse_error(o.metrics_path + ": " + e.what());
    }
    EvalOutput r;
    try {
      r.tolerance_sec = j.value("tolerance_sec", 0.02);
      r.strict_variant = j.value("strict_variant", "maximum");
      r.trim_edges = j.value("trim_edges", true);
      r.aggregation = j.value("aggregation", "micro");
      if (j.contains("lenient"))
        r.lenient = CorpusReport{metrics_report_from_json(j.at("lenient")), {}};
      if (j.contains("strict"))
        r.strict = CorpusReport{metrics_report_from_json(j.at("strict")), {}};
    } catch (const nlohmann::json::exception& e) {
      throw parse_error(o.metrics_path + ": " + e.what());
    }
    if (!r.lenient && !r.strict)
      throw input_error(o.metrics_path + ": no 'lenient' or 'strict' report found");
    if (o.format == "json")
      *out << eval_output_to_json(r, false).dump() << '\n';
    else if (o.format == "csv")
      render_eval_csv(*out, r, false);
    else
      render_eval_table(*out, r, false);
    return 0;
  }

  // sweep mode
  auto refs = load_segmentations(o.ref_path);
  auto hyps = load_segmentations(o.hyp_path);
  auto pairs = pair_by_utterance_id(refs, hyps);
  *out << "tolerance_sec,scheme,id,precision,recall,f1,os,r_value\n";
  for (double tol : parse_sweep(o.sweep)) {
    MatchConfig cfg;
    cfg.tolerance_sec = tol;
    cfg.strict_variant =
        o.strict_variant == "sequential" ? StrictVariant::kSequential : StrictVariant::kMaximum;
    cfg.trim_edges = o.trim_edges;
    cfg.aggregation = o.aggregation == "macro" ? Aggregation::kMacro : Aggregation::kMicro;
    if (o.scheme == "both" || o.scheme == "lenient") {
      cfg.scheme = MatchScheme::kLenient;
      csv_metric_rows(*out, "lenient", "OVERALL", evaluate_corpus(pairs, cfg).overall,
                      format_full(tol) + ",");
    }
    if (o.scheme == "both" || o.scheme == "strict") {
      cfg.scheme = MatchScheme::kStrict;
      csv_metric_rows(*out, "strict", "OVERALL", evaluate_corpus(pairs, cfg).overall,
                      format_full(tol) + ",");
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"phone-boundary segmentation toolkit"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "segeval 0.1.0");

  EvalOptions eval_opts;
  auto* eval_cmd = app.add_subcommand("eval", "score hypothesis boundaries against a reference");
  eval_cmd->add_option("--ref", eval_opts.ref_path, "reference segmentation jsonl")->required();
  auto* hyp_opt = eval_cmd->add_option("--hyp", eval_opts.hyp_path, "hypothesis segmentation jsonl");
  eval_cmd->add_option("--tolerance", eval_opts.tolerance, "matching window in seconds")
      ->envname("SEGEVAL_TOLERANCE")
      ->check(CLI::NonNegativeNumber);
  eval_cmd->add_option("--scheme", eval_opts.scheme, "hit counting scheme")
      ->check(CLI::IsMember({"both", "lenient", "strict"}));
  eval_cmd->add_option("--strict-variant", eval_opts.strict_variant, "strict matcher")
      ->check(CLI::IsMember({"maximum", "sequential"}));
  eval_cmd->add_flag("--trim-edges,!--no-trim-edges", eval_opts.trim_edges,
                     "drop utterance-edge reference boundaries (default on)");
  eval_cmd->add_option("--aggregation", eval_opts.aggregation, "corpus aggregation")
      ->check(CLI::IsMember({"micro", "macro"}));
  eval_cmd->add_option("--format", eval_opts.format, "output format")
      ->check(CLI::IsMember({"table", "json", "csv"}));
  eval_cmd->add_option("--out", eval_opts.out_path, "output path or -");
  eval_cmd->add_flag("--per-utterance", eval_opts.per_utterance, "include per-utterance rows");
  auto* probs_opt = eval_cmd->add_option("--probs", eval_opts.probs_path,
                                         "score probabilities directly (peaks, then eval)");
  eval_cmd->add_option("--probs-format", eval_opts.probs_format, "probability container")
      ->check(CLI::IsMember({"jsonl", "f32"}));
  eval_cmd->add_option("--stride", eval_opts.stride, "seconds per frame for --probs")
      ->envname("SEGEVAL_STRIDE")
      ->check(CLI::PositiveNumber);
  eval_cmd->add_option("--threshold", eval_opts.threshold, "peak threshold for --probs");
  eval_cmd->add_option("--min-distance", eval_opts.min_distance, "peak separation in frames");
  eval_cmd->add_option("--plateau", eval_opts.plateau, "plateau representative")
      ->check(CLI::IsMember({"leftmost", "center"}));
  eval_cmd->add_option("--time-offset", eval_opts.time_offset, "added to every peak time");
  eval_cmd->add_option("--save-peaks", eval_opts.save_peaks,
                       "also write the intermediate peak segmentation jsonl");
  probs_opt->excludes(hyp_opt);

  ConvertOptions conv_opts;
  auto* conv_cmd = app.add_subcommand("convert", "corpus annotations to canonical jsonl");
  conv_cmd->add_option("--format", conv_opts.format, "corpus layout")
      ->required()
      ->check(CLI::IsMember({"timit", "buckeye"}));
  conv_cmd->add_option("--in", conv_opts.in_dir, "corpus directory")->required();
  conv_cmd->add_option("--out", conv_opts.out_path, "output jsonl path or -");
  conv_cmd->add_option("--sample-rate", conv_opts.sample_rate, "timit sample rate")
      ->check(CLI::PositiveNumber);
  conv_cmd->add_option("--nonspeech", conv_opts.nonspeech,
                       "non-speech labels (default: built-in list)")
      ->delimiter(',');
  conv_cmd->add_option("--min-split-gap", conv_opts.min_split_gap,
                       "split at non-speech runs longer than this many seconds");
  conv_cmd->add_option("--max-edge-nonspeech", conv_opts.max_edge_nonspeech,
                       "non-speech allowed at chunk edges, seconds");
  conv_cmd->add_flag("--no-chunk", conv_opts.no_chunk, "emit whole recordings unchunked");
  conv_cmd->add_option("--seed", conv_opts.seed, "split sampling seed");
  conv_cmd->add_option("--valid-fraction", conv_opts.valid_fraction,
                       "timit validation holdout fraction");
  conv_cmd->add_option("--emit-split", conv_opts.emit_split,
                       "write <prefix>.train/.valid(/.test) id lists");

  PeaksOptions peaks_opts;
  auto* peaks_cmd = app.add_subcommand("peaks", "frame probabilities to boundary timestamps");
  peaks_cmd->add_option("--in", peaks_opts.in_path, "probability jsonl or f32 path")->required();
  peaks_cmd->add_option("--out", peaks_opts.out_path, "segmentation jsonl path or -");
  peaks_cmd->add_option("--probs-format", peaks_opts.probs_format, "probability container")
      ->check(CLI::IsMember({"jsonl", "f32"}));
  peaks_cmd->add_option("--stride", peaks_opts.stride, "seconds per frame")
      ->envname("SEGEVAL_STRIDE")
      ->check(CLI::PositiveNumber);
  peaks_cmd->add_option("--threshold", peaks_opts.threshold, "minimum peak probability");
  peaks_cmd->add_option("--min-distance", peaks_opts.min_distance, "peak separation in frames");
  peaks_cmd->add_option("--plateau", peaks_opts.plateau, "plateau representative")
      ->check(CLI::IsMember({"leftmost", "center"}));
  peaks_cmd->add_option("--time-offset", peaks_opts.time_offset, "added to every peak time");

  BootstrapOptions boot_opts;
  auto* boot_cmd = app.add_subcommand("bootstrap", "boundary timestamps to frame labels");
  boot_cmd->add_option("--in", boot_opts.in_path, "segmentation jsonl path or -")->required();
  boot_cmd->add_option("--out", boot_opts.out_path, "frame-label jsonl path or -");
  boot_cmd->add_option("--stride", boot_opts.stride, "seconds per frame")
      ->envname("SEGEVAL_STRIDE")
      ->check(CLI::PositiveNumber);
  boot_cmd->add_option("--n-frames", boot_opts.n_frames,
                       "fixed frame count (default: derive per utterance)");

  LossOptions loss_opts;
  auto* loss_cmd = app.add_subcommand("loss", "weighted cross entropy of probabilities vs labels");
  loss_cmd->add_option("--probs", loss_opts.probs_path, "probability jsonl or f32 path")
      ->required();
  loss_cmd->add_option("--probs-format", loss_opts.probs_format, "probability container")
      ->check(CLI::IsMember({"jsonl", "f32"}));
  loss_cmd->add_option("--labels", loss_opts.labels_path, "frame-label jsonl")->required();
  loss_cmd->add_option("--w-star", loss_opts.w_star, "weight on boundary-positive frames")
      ->check(CLI::PositiveNumber);
  loss_cmd->add_option("--epsilon", loss_opts.epsilon, "probability clamp");
  loss_cmd->add_option("--reduction", loss_opts.reduction,
                       "sum over frames, or mean over the corpus frame count")
      ->check(CLI::IsMember({"sum", "mean"}));
  loss_cmd->add_flag("--json", loss_opts.as_json, "emit a json report with per-utterance values");
  loss_cmd->add_option("--out", loss_opts.out_path, "output path or -");

  SynthOptions synth_opts;
  auto* synth_cmd = app.add_subcommand("synth", "generate synthetic segmentations");
  synth_cmd->add_option("--out", synth_opts.out_path, "reference jsonl path or -");
  synth_cmd->add_option("--perturb-out", synth_opts.perturb_out,
                        "also write a corrupted copy to this path");
  synth_cmd->add_option("--n-utterances", synth_opts.n_utterances, "utterance count");
  synth_cmd->add_option("--n-boundaries", synth_opts.n_boundaries, "boundaries per utterance");
  synth_cmd->add_option("--min-gap", synth_opts.min_gap, "minimum boundary gap, seconds");
  synth_cmd->add_option("--duration", synth_opts.duration, "utterance duration, seconds");
  synth_cmd->add_option("--seed", synth_opts.seed, "generation seed");
  synth_cmd->add_option("--jitter-std", synth_opts.jitter_std, "jitter sigma, seconds");
  synth_cmd->add_option("--p-delete", synth_opts.p_delete, "per-boundary delete probability");
  synth_cmd->add_option("--p-insert", synth_opts.p_insert, "per-boundary insert probability");
  synth_cmd->add_option("--insert-margin", synth_opts.insert_margin,
                        "insertion distance from originals, seconds");

  ReportOptions report_opts;
  auto* report_cmd = app.add_subcommand("report", "re-render stored results or sweep tolerances");
  auto* metrics_opt =
      report_cmd->add_option("--metrics", report_opts.metrics_path, "eval --format json output");
  report_cmd->add_option("--format", report_opts.format, "output format for --metrics")
      ->check(CLI::IsMember({"table", "json", "csv"}));
  report_cmd->add_option("--out", report_opts.out_path, "output path or -");
  auto* sweep_ref = report_cmd->add_option("--ref", report_opts.ref_path, "reference jsonl");
  auto* sweep_hyp = report_cmd->add_option("--hyp", report_opts.hyp_path, "hypothesis jsonl");
  auto* sweep_opt = report_cmd->add_option("--sweep", report_opts.sweep,
                                           "tolerance sweep start:stop:step, csv output");
  report_cmd->add_option("--scheme", report_opts.scheme, "hit counting scheme")
      ->check(CLI::IsMember({"both", "lenient", "strict"}));
  report_cmd->add_option("--strict-variant", report_opts.strict_variant, "strict matcher")
      ->check(CLI::IsMember({"maximum", "sequential"}));
  report_cmd->add_flag("--trim-edges,!--no-trim-edges", report_opts.trim_edges,
                       "drop utterance-edge reference boundaries (default on)");
  report_cmd->add_option("--aggregation", report_opts.aggregation, "corpus aggregation")
      ->check(CLI::IsMember({"micro", "macro"}));
  sweep_opt->needs(sweep_ref);
  sweep_opt->needs(sweep_hyp);
  sweep_opt->excludes(metrics_opt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (eval_cmd->parsed()) {
      if (eval_opts.probs_path.empty() && eval_opts.hyp_path.empty())
        throw input_error("eval needs --hyp or --probs");
      return run_eval(eval_opts);
    }
    if (conv_cmd->parsed()) return run_convert(conv_opts);
    if (peaks_cmd->parsed()) return run_peaks(peaks_opts);
    if (boot_cmd->parsed()) return run_bootstrap(boot_opts);
    if (loss_cmd->parsed()) return run_loss(loss_opts);
    if (synth_cmd->parsed()) return run_synth(synth_opts);
    if (report_cmd->parsed()) {
      if (report_opts.metrics_path.empty() && report_opts.sweep.empty())
        throw input_error("report needs --metrics or --sweep with --ref/--hyp");
      return run_report(report_opts);
    }
  } catch (const eval_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const input_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
