// segeval/jsonl.hpp

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

// Readers and writers for the canonical line formats every subcommand
// speaks. One JSON object per line, blank lines ignored:
//
//   segmentations  {"id": "...", "boundaries_sec": [...], "duration_sec": ...}
//   frame labels   {"id": "...", "labels": [0, 1, ...]}
//   probabilities  {"id": "...", "probs": [...]}
//
// Probabilities alternatively travel as raw little-endian float32 with a
// JSONL sidecar at <path>.idx of {"id", "offset", "count"} records
// (offset and count in floats). Doubles round-trip losslessly through
// the JSON forms (shortest-representation printing).

#ifndef SEGEVAL_JSONL_HPP_
#define SEGEVAL_JSONL_HPP_

#include <cstdint>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"

#include "segeval/core.hpp"
#include "segeval/metrics.hpp"

namespace segeval {

using ordered_json = nlohmann::ordered_json;

struct UtteranceLabels {
  std::string id;
  FrameLabelSequence labels;
};

struct UtteranceProbs {
  std::string id;
  FrameProbabilitySequence probs;
};

namespace detail {

inline nlohmann::json parse_json_line(const std::string& line, std::size_t line_no,
                                      const std::string& source) {
  try {
    return nlohmann::json::parse(line);
  } catch (const nlohmann::json::exception& e) {
    throw parse_error(source + " line " + std::to_string(line_no) + ": " + e.what());
  }
}

template <typename Fn>
inline void for_each_jsonl_record(std::istream& in, const std::string& source, Fn&& fn) {
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const nlohmann::json j = parse_json_line(line, line_no, source);
    try {
      fn(j);
    } catch (const nlohmann::json::exception& e) {
      throw parse_error(source + " line " + std::to_string(line_no) + ": " + e.what());
    } catch (const input_error& e) {
      throw parse_error(source + " line " + std::to_string(line_no) + ": " + e.what());
    }
  }
}

}  // namespace detail

inline std::vector<Segmentation> read_segmentations_jsonl(std::istream& in,
                                                          const std::string& source = "<stream>") {
  std::vector<Segmentation> out;
  detail::for_each_jsonl_record(in, source, [&](const nlohmann::json& j) {
    Segmentation seg;
    seg.utterance_id = j.at("id").get<std::string>();
    seg.boundaries = j.at("boundaries_sec").get<std::vector<double>>();
    if (j.contains("duration_sec") && !j.at("duration_sec").is_null())
      seg.duration_sec = j.at("duration_sec").get<double>();
    validate(seg);
    out.push_back(std::move(seg));
  });
  return out;
}

inline void write_segmentations_jsonl(std::ostream& out, const std::vector<Segmentation>& segs) {
  for (const auto& seg : segs) {
    ordered_json j;
    j["id"] = seg.utterance_id;
    j["boundaries_sec"] = seg.boundaries;
    if (seg.duration_sec) j["duration_sec"] = *seg.duration_sec;
    out << j.dump() << '\n';
  }
}

inline std::vector<UtteranceLabels> read_labels_jsonl(std::istream& in,
                                                      const std::string& source = "<stream>") {
  std::vector<UtteranceLabels> out;
  detail::for_each_jsonl_record(in, source, [&](const nlohmann::json& j) {
    UtteranceLabels rec;
    rec.id = j.at("id").get<std::string>();
    rec.labels.labels = j.at("labels").get<std::vector<std::uint8_t>>();
    validate(rec.labels);
    out.push_back(std::move(rec));
  });
  return out;
}

inline void write_labels_jsonl(std::ostream& out, const std::vector<UtteranceLabels>& recs) {
  for (const auto& rec : recs) {
    ordered_json j;
    j["id"] = rec.id;
    j["labels"] = rec.labels.labels;
    out << j.dump() << '\n';
  }
}

inline std::vector<UtteranceProbs> read_probs_jsonl(std::istream& in,
                                                    const std::string& source = "<stream>") {
  std::vector<UtteranceProbs> out;
  detail::for_each_jsonl_record(in, source, [&](const nlohmann::json& j) {
    UtteranceProbs rec;
    rec.id = j.at("id").get<std::string>();
    rec.probs.probs = j.at("probs").get<std::vector<double>>();
    validate(rec.probs);
    out.push_back(std::move(rec));
  });
  return out;
}

inline void write_probs_jsonl(std::ostream& out, const std::vector<UtteranceProbs>& recs) {
  for (const auto& rec : recs) {
    ordered_json j;
    j["id"] = rec.id;
    j["probs"] = rec.probs.probs;
    out << j.dump() << '\n';
  }
}

// Raw float32 probability container. Values live little-endian in
// data_path; the index sidecar lives at data_path + ".idx".
inline std::vector<UtteranceProbs> read_probs_f32(const std::filesystem::path& data_path) {
  const std::filesystem::path idx_path = data_path.string() + ".idx";
  std::ifstream idx(idx_path);
  if (!idx) throw input_error("cannot open probability index " + idx_path.string());
  std::ifstream data(data_path, std::ios::binary);
  if (!data) throw input_error("cannot open probability data " + data_path.string());
  std::vector<char> bytes((std::istreambuf_iterator<char>(data)),
                          std::istreambuf_iterator<char>());
  if (bytes.size() % sizeof(float) != 0)
    throw parse_error(data_path.string() + ": size is not a multiple of 4 bytes");
  const std::size_t n_floats = bytes.size() / sizeof(float);

  std::vector<UtteranceProbs> out;
  detail::for_each_jsonl_record(idx, idx_path.string(), [&](const nlohmann::json& j) {
    const auto offset = j.at("offset").get<std::size_t>();
    const auto count = j.at("count").get<std::size_t>();
    if (offset + count > n_floats)
      throw input_error("index entry for '" + j.at("id").get<std::string>() +
                        "' reaches past the end of the data file");
    UtteranceProbs rec;
    rec.id = j.at("id").get<std::string>();
    rec.probs.probs.resize(count);
    for (std::size_t k = 0; k < count; ++k) {
      float v = 0.0f;
      std::memcpy(&v, bytes.data() + (offset + k) * sizeof(float), sizeof(float));
      rec.probs.probs[k] = static_cast<double>(v);
    }
    validate(rec.probs);
    out.push_back(std::move(rec));
  });
  return out;
}

inline void write_probs_f32(const std::filesystem::path& data_path,
                            const std::vector<UtteranceProbs>& recs) {
  std::ofstream data(data_path, std::ios::binary);
  if (!data) throw input_error("cannot write " + data_path.string());
  const std::filesystem::path idx_path = data_path.string() + ".idx";
  std::ofstream idx(idx_path);
  if (!idx) throw input_error("cannot write " + idx_path.string());
  std::size_t offset = 0;
  for (const auto& rec : recs) {
    for (double pd : rec.probs.probs) {
      const float v = static_cast<float>(pd);
      char buf[sizeof(float)];
      std::memcpy(buf, &v, sizeof(float));
      data.write(buf, sizeof(float));
    }
    ordered_json j;
    j["id"] = rec.id;
    j["offset"] = offset;
    j["count"] = rec.probs.probs.size();
    idx << j.dump() << '\n';
    offset += rec.probs.probs.size();
  }
}

inline ordered_json metrics_report_to_json(const MetricsReport& r) {
  ordered_json counts;
  counts["hits_precision"] = r.counts.hits_precision;
  counts["hits_recall"] = r.counts.hits_recall;
  counts["n_hyp"] = r.counts.n_hyp;
  counts["n_ref"] = r.counts.n_ref;
  ordered_json j;
  j["precision"] = r.precision;
  j["recall"] = r.recall;
  j["f1"] = r.f1;
  j["os"] = r.os;
  j["r_value"] = r.r_value;
  j["counts"] = counts;
  return j;
}

inline MetricsReport metrics_report_from_json(const nlohmann::json& j) {
  MetricsReport r;
  r.precision = j.at("precision").get<double>();
  r.recall = j.at("recall").get<double>();
  r.f1 = j.at("f1").get<double>();
  r.os = j.at("os").get<double>();
  r.r_value = j.at("r_value").get<double>();
  const auto& c = j.at("counts");
  r.counts.hits_precision = c.at("hits_precision").get<std::size_t>();
  r.counts.hits_recall = c.at("hits_recall").get<std::size_t>();
  r.counts.n_hyp = c.at("n_hyp").get<std::size_t>();
  r.counts.n_ref = c.at("n_ref").get<std::size_t>();
  return r;
}

}  // namespace segeval

#endif  // SEGEVAL_JSONL_HPP_
