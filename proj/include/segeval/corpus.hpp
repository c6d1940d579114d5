// segeval/corpus.hpp

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

// Readers for phone-level corpus annotations.
//
// TIMIT .phn: one interval per line, "start_sample end_sample label",
// 16 kHz sample indices. Buckeye .phones: free-form header terminated by
// a '#' line, then one record per line whose first field is the phone's
// END time in seconds (typically "time color label"); interval starts are
// reconstructed from the preceding record's end, the first starting at 0.

#ifndef SEGEVAL_CORPUS_HPP_
#define SEGEVAL_CORPUS_HPP_

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "segeval/core.hpp"
#include "segeval/rng.hpp"

namespace segeval {

struct PhoneInterval {
  double start_sec = 0.0;
  double end_sec = 0.0;
  std::string label;
};

// Labeled phone intervals of one utterance: non-overlapping, ordered,
// start < end each; contiguous for the formats parsed here.
struct UtteranceAnnotation {
  std::string utterance_id;
  std::string speaker_id;
  std::vector<PhoneInterval> intervals;
};

// Disjoint speaker sets covering the input.
struct SpeakerSplit {
  std::vector<std::string> train;
  std::vector<std::string> valid;
  std::vector<std::string> test;
  std::uint64_t seed = 0;
};

namespace detail {

inline std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    pos = nl + 1;
    if (nl == text.size()) break;
  }
  return lines;
}

inline std::vector<std::string_view> tokenize(std::string_view line) {
  std::vector<std::string_view> toks;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) toks.push_back(line.substr(i, j - i));
    i = j;
  }
  return toks;
}

inline double parse_double(std::string_view tok, const std::string& context) {
  double value = 0.0;
  const auto* end = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(tok.data(), end, value);
  if (ec != std::errc() || ptr != end)
    throw parse_error(context + ": expected a number, got '" + std::string(tok) + "'");
  return value;
}

inline long long parse_int(std::string_view tok, const std::string& context) {
  long long value = 0;
  const auto* end = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(tok.data(), end, value);
  if (ec != std::errc() || ptr != end)
    throw parse_error(context + ": expected an integer, got '" + std::string(tok) + "'");
  return value;
}

}  // namespace detail

inline UtteranceAnnotation parse_timit_phn(std::string_view text, int sample_rate = 16000) {
  if (sample_rate <= 0) throw input_error("parse_timit_phn: sample_rate must be positive");
  UtteranceAnnotation ann;
  long long prev_end = 0;
  std::size_t line_no = 0;
  for (std::string_view line : detail::split_lines(text)) {
    ++line_no;
    const auto toks = detail::tokenize(line);
    if (toks.empty()) continue;
    const std::string where = "timit line " + std::to_string(line_no);
    if (toks.size() != 3)
      throw parse_error(where + ": expected 'start_sample end_sample label'");
    const long long start = detail::parse_int(toks[0], where);
    const long long end = detail::parse_int(toks[1], where);
    if (start < 0) throw parse_error(where + ": negative sample index");
    if (end <= start) throw parse_error(where + ": interval end must exceed start");
    if (start < prev_end)
      throw parse_error(where + ": sample indices decrease across intervals");
    ann.intervals.push_back({static_cast<double>(start) / sample_rate,
                             static_cast<double>(end) / sample_rate,
                             std::string(toks[2])});
    prev_end = end;
  }
  return ann;
}

inline UtteranceAnnotation parse_buckeye_phones(std::string_view text) {
  UtteranceAnnotation ann;
  bool in_header = true;
  bool saw_content = false;
  double prev_end = 0.0;
  std::size_t line_no = 0;
  for (std::string_view line : detail::split_lines(text)) {
    ++line_no;
    const auto toks = detail::tokenize(line);
    if (!toks.empty()) saw_content = true;
    if (in_header) {
      if (!toks.empty() && toks[0][0] == '#') in_header = false;
      continue;
    }
    if (toks.empty()) continue;
    const std::string where = "buckeye line " + std::to_string(line_no);
    if (toks.size() < 2)
      throw parse_error(where + ": expected 'end_time [color] label'");
    const double end = detail::parse_double(toks[0], where);
    // Records are usually "time color label"; tolerate the two-field form.
    const std::string label(toks.size() >= 3 ? toks[2] : toks[1]);
    if (!(end > prev_end))
      throw parse_error(where + ": timestamps must be strictly increasing");
    ann.intervals.push_back({prev_end, end, label});
    prev_end = end;
  }
  if (in_header && saw_content)
    throw parse_error("buckeye: missing '#' header terminator");
  return ann;
}

// Boundaries of an annotation: every interval start plus the final end.
inline Segmentation annotation_to_segmentation(const UtteranceAnnotation& ann) {
  Segmentation seg;
  seg.utterance_id = ann.utterance_id;
  for (const auto& iv : ann.intervals) seg.boundaries.push_back(iv.start_sec);
  if (!ann.intervals.empty()) {
    seg.boundaries.push_back(ann.intervals.back().end_sec);
    seg.duration_sec = ann.intervals.back().end_sec;
  }
  std::sort(seg.boundaries.begin(), seg.boundaries.end());
  seg.boundaries.erase(std::unique(seg.boundaries.begin(), seg.boundaries.end()),
                       seg.boundaries.end());
  return seg;
}

// Buckeye tags appear bare (SIL), braced ({B_TRANS}) or angled (<SIL>)
// depending on release; classification strips one layer of markup.
inline std::string strip_label_markup(std::string_view label) {
  if (label.size() >= 2 &&
      ((label.front() == '{' && label.back() == '}') ||
       (label.front() == '<' && label.back() == '>')))
    label = label.substr(1, label.size() - 2);
  return std::string(label);
}

inline const std::set<std::string>& default_nonspeech_labels() {
  static const std::set<std::string> labels = {
      "SIL",    "NOISE", "VOCNOISE", "IVER",        "LAUGH",       "UNKNOWN",
      "CUTOFF", "ERROR", "EXCLUDE",  "B_TRANS",     "E_TRANS",     "B_THIRD_SPK",
      "E_THIRD_SPK"};
  return labels;
}

struct ChunkConfig {
  std::set<std::string> nonspeech_labels = default_nonspeech_labels();
  double max_edge_nonspeech_sec = 0.02;  // non-speech allowed at a chunk edge
  double min_split_gap_sec = 0.5;        // non-speech runs longer than this split
};

inline bool is_nonspeech(const std::string& label, const std::set<std::string>& nonspeech) {
  return nonspeech.count(strip_label_markup(label)) > 0;
}

// Split a long recording at extended non-speech runs into chunks that
// start and end with at most max_edge_nonspeech_sec of non-speech. Speech
// intervals are never cut; only non-speech time at chunk edges is.
// Chunks are re-based to start at time zero. Chunks without any speech
// are dropped. A single surviving chunk keeps the input's utterance_id;
// otherwise ids get a _c<k> suffix.
inline std::vector<UtteranceAnnotation> split_buckeye_chunks(const UtteranceAnnotation& ann,
                                                             const ChunkConfig& cfg) {
  if (cfg.nonspeech_labels.empty())
    throw input_error("split_buckeye_chunks: nonspeech label set must not be empty");
  if (cfg.max_edge_nonspeech_sec < 0.0 || cfg.min_split_gap_sec < 0.0)
    throw input_error("split_buckeye_chunks: durations must be nonnegative");
  std::vector<UtteranceAnnotation> chunks;
  if (ann.intervals.empty()) return chunks;

  struct Run {
    std::size_t begin, end;  // interval index range [begin, end)
    bool nonspeech;
    double duration;
  };
  std::vector<Run> runs;
  for (std::size_t i = 0; i < ann.intervals.size();) {
    const bool ns = is_nonspeech(ann.intervals[i].label, cfg.nonspeech_labels);
    std::size_t j = i;
    double dur = 0.0;
    while (j < ann.intervals.size() &&
           is_nonspeech(ann.intervals[j].label, cfg.nonspeech_labels) == ns) {
      dur += ann.intervals[j].end_sec - ann.intervals[j].start_sec;
      ++j;
    }
    runs.push_back({i, j, ns, dur});
    i = j;
  }

  // Candidate chunks span between splitting runs, with each splitting run
  // shared by its two neighbors; edge trimming below cuts the shared run
  // down to the allowed budget on either side.
  std::vector<std::pair<std::size_t, std::size_t>> spans;  // run index ranges, inclusive
  std::size_t span_start = 0;
  for (std::size_t k = 0; k < runs.size(); ++k) {
    if (runs[k].nonspeech && runs[k].duration > cfg.min_split_gap_sec) {
      spans.emplace_back(span_start, k);
      span_start = k;
    }
  }
  spans.emplace_back(span_start, runs.size() - 1);

  for (const auto& [ra, rb] : spans) {
    std::vector<PhoneInterval> ivs(ann.intervals.begin() + runs[ra].begin,
                                   ann.intervals.begin() + runs[rb].end);
    // Locate speech extent.
    double first_speech = 0.0, last_speech = 0.0;
    bool has_speech = false;
    for (const auto& iv : ivs) {
      if (!is_nonspeech(iv.label, cfg.nonspeech_labels)) {
        if (!has_speech) first_speech = iv.start_sec;
        last_speech = iv.end_sec;
        has_speech = true;
      }
    }
    if (!has_speech) continue;
    const double lo = std::max(ivs.front().start_sec, first_speech - cfg.max_edge_nonspeech_sec);
    const double hi = std::min(ivs.back().end_sec, last_speech + cfg.max_edge_nonspeech_sec);
    UtteranceAnnotation chunk;
    chunk.speaker_id = ann.speaker_id;
    for (const auto& iv : ivs) {
      const double s = std::max(iv.start_sec, lo);
      const double e = std::min(iv.end_sec, hi);
      if (e > s) chunk.intervals.push_back({s - lo, e - lo, iv.label});
    }
    chunks.push_back(std::move(chunk));
  }

  if (chunks.size() == 1) {
    chunks[0].utterance_id = ann.utterance_id;
  } else {
    for (std::size_t k = 0; k < chunks.size(); ++k)
      chunks[k].utterance_id = ann.utterance_id + "_c" + std::to_string(k);
  }
  return chunks;
}

// Deterministic speaker-level split. Sizes are the round-half-up shares
// of the first two ratios; the remainder goes to test.
inline SpeakerSplit speaker_split(std::vector<std::string> speakers,
                                  const std::array<double, 3>& ratios,
                                  std::uint64_t seed) {
  double sum = 0.0;
  for (double r : ratios) {
    if (r < 0.0) throw input_error("speaker_split: ratios must be nonnegative");
    sum += r;
  }
  if (std::abs(sum - 1.0) > 1e-9) throw input_error("speaker_split: ratios must sum to 1");
  if (speakers.size() < 3) throw input_error("speaker_split: need at least 3 speakers");
  DeterministicRng rng(seed);
  rng.shuffle(speakers);
  const auto n = speakers.size();
  auto share = [n](double r) {
    return static_cast<std::size_t>(std::floor(r * static_cast<double>(n) + 0.5));
  };
  const std::size_t n_train = std::min(share(ratios[0]), n);
  const std::size_t n_valid = std::min(share(ratios[1]), n - n_train);
  SpeakerSplit out;
  out.seed = seed;
  out.train.assign(speakers.begin(), speakers.begin() + n_train);
  out.valid.assign(speakers.begin() + n_train, speakers.begin() + n_train + n_valid);
  out.test.assign(speakers.begin() + n_train + n_valid, speakers.end());
  return out;
}

inline SpeakerSplit speaker_split(std::vector<std::string> speakers, std::uint64_t seed) {
  return speaker_split(std::move(speakers), {0.8, 0.1, 0.1}, seed);
}

// Deterministic uniform sample of round(fraction * n) ids, e.g. to hold
// out a validation set at the utterance level. Returned sorted.
inline std::vector<std::string> sample_fraction(std::vector<std::string> ids,
                                                double fraction, std::uint64_t seed) {
  if (!(fraction >= 0.0 && fraction <= 1.0))
    throw input_error("sample_fraction: fraction must lie in [0, 1]");
  DeterministicRng rng(seed);
  rng.shuffle(ids);
  const auto take = static_cast<std::size_t>(
      std::floor(fraction * static_cast<double>(ids.size()) + 0.5));
  ids.resize(take);
  std::sort(ids.begin(), ids.end());
  return ids;
}

namespace detail {

inline std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw input_error("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline bool has_extension(const std::filesystem::path& p, std::string_view ext) {
  std::string e = p.extension().string();
  std::transform(e.begin(), e.end(), e.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return e == ext;
}

}  // namespace detail

// Walk a TIMIT-style tree for .phn files. utterance_id is
// "<speaker>_<stem>" with the speaker taken from the parent directory.
inline std::vector<UtteranceAnnotation> load_timit_dir(const std::filesystem::path& root,
                                                       int sample_rate = 16000) {
  if (!std::filesystem::is_directory(root))
    throw input_error("not a directory: " + root.string());
  std::vector<UtteranceAnnotation> out;
  for (const auto& entry : std::filesystem::recursive_directory_iterator(root)) {
    if (!entry.is_regular_file() || !detail::has_extension(entry.path(), ".phn")) continue;
    try {
      UtteranceAnnotation ann = parse_timit_phn(detail::read_file(entry.path()), sample_rate);
      ann.speaker_id = entry.path().parent_path().filename().string();
      ann.utterance_id = ann.speaker_id + "_" + entry.path().stem().string();
      out.push_back(std::move(ann));
    } catch (const parse_error& e) {
      throw parse_error(entry.path().string() + ": " + e.what());
    }
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.utterance_id < b.utterance_id; });
  return out;
}

// Walk a Buckeye-style tree for .phones files. utterance_id is the file
// stem; the speaker is the leading sNN of the stem when present.
inline std::vector<UtteranceAnnotation> load_buckeye_dir(const std::filesystem::path& root) {
  if (!std::filesystem::is_directory(root))
    throw input_error("not a directory: " + root.string());
  std::vector<UtteranceAnnotation> out;
  for (const auto& entry : std::filesystem::recursive_directory_iterator(root)) {
    if (!entry.is_regular_file() || !detail::has_extension(entry.path(), ".phones")) continue;
    try {
      UtteranceAnnotation ann = parse_buckeye_phones(detail::read_file(entry.path()));
      const std::string stem = entry.path().stem().string();
      ann.utterance_id = stem;
      if (stem.size() >= 3 && stem[0] == 's' && std::isdigit(static_cast<unsigned char>(stem[1])) &&
          std::isdigit(static_cast<unsigned char>(stem[2])))
        ann.speaker_id = stem.substr(0, 3);
      else
        ann.speaker_id = stem;
      out.push_back(std::move(ann));
    } catch (const parse_error& e) {
      throw parse_error(entry.path().string() + ": " + e.what());
    }
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.utterance_id < b.utterance_id; });
  return out;
}

}  // namespace segeval

#endif  // SEGEVAL_CORPUS_HPP_
