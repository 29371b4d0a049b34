// core/src/labels.cc

// Copyright 2026  The doalab Authors

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

#include "doalab/labels.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <stdexcept>

#include <json.hpp>

namespace doalab {

void LabelTensor::resize(int frames, const std::vector<std::string>& ids) {
  num_frames = frames;
  speaker_ids = ids;
  const size_t n = static_cast<size_t>(frames) * ids.size();
  y.assign(n, 0);
  present.assign(n, 0);
  theta_deg.assign(n, std::numeric_limits<double>::quiet_NaN());
}

void LabelTensor::validate() const {
  const size_t n = static_cast<size_t>(num_frames) * speaker_ids.size();
  if (y.size() != n || present.size() != n || theta_deg.size() != n)
    throw std::runtime_error("LabelTensor: inconsistent shapes");
  for (int t = 0; t < num_frames; ++t)
    for (int s = 0; s < num_speakers(); ++s) {
      if (active(t, s) && !is_present(t, s))
        throw std::runtime_error("LabelTensor: active frame without known azimuth");
      if (is_present(t, s)) {
        const double a = angle(t, s);
        if (!(a >= 0.0 && a <= 180.0))
          throw std::runtime_error("LabelTensor: azimuth out of [0, 180]");
      }
    }
}

LabelTensor LabelTensor::slice(int t0, int n) const {
  if (t0 < 0 || n < 0 || t0 + n > num_frames)
    throw std::out_of_range("LabelTensor::slice: bad range");
  LabelTensor out;
  out.hop_s = hop_s;
  out.resize(n, speaker_ids);
  const int s_count = num_speakers();
  for (int t = 0; t < n; ++t)
    for (int s = 0; s < s_count; ++s) {
      out.y[out.idx(t, s)] = y[idx(t0 + t, s)];
      out.present[out.idx(t, s)] = present[idx(t0 + t, s)];
      out.theta_deg[out.idx(t, s)] = theta_deg[idx(t0 + t, s)];
    }
  return out;
}

LabelTensor read_labels_jsonl(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("read_labels_jsonl: cannot open " + path);

  std::vector<nlohmann::json> rows;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    try {
      rows.push_back(nlohmann::json::parse(line));
    } catch (const nlohmann::json::exception& e) {
      throw std::runtime_error("read_labels_jsonl: " + path + ":" +
                               std::to_string(lineno) + ": " + e.what());
    }
  }

  LabelTensor labels;
  if (rows.empty()) return labels;

  // Collect the speaker id universe in first-seen order.
  std::vector<std::string> ids;
  for (const auto& row : rows)
    for (const auto& spk : row.at("speakers")) {
      const std::string id = spk.at("id").get<std::string>();
      bool known = false;
      for (const auto& k : ids) known |= (k == id);
      if (!known) ids.push_back(id);
    }

  labels.resize(static_cast<int>(rows.size()), ids);
  if (rows.size() >= 2)
    labels.hop_s = rows[1].at("t").get<double>() - rows[0].at("t").get<double>();

  for (size_t t = 0; t < rows.size(); ++t)
    for (const auto& spk : rows[t].at("speakers")) {
      const std::string id = spk.at("id").get<std::string>();
      int s = -1;
      for (size_t k = 0; k < ids.size(); ++k)
        if (ids[k] == id) s = static_cast<int>(k);
      const size_t i = labels.idx(static_cast<int>(t), s);
      labels.y[i] = spk.at("active").get<bool>() ? 1 : 0;
      const auto& az = spk.at("azimuth_deg");
      if (!az.is_null()) {
        labels.present[i] = 1;
        labels.theta_deg[i] = az.get<double>();
      }
    }
  labels.validate();
  return labels;
}

void write_labels_jsonl(const LabelTensor& labels, const std::string& path) {
  labels.validate();
  std::ofstream out(path);
  if (!out) throw std::runtime_error("write_labels_jsonl: cannot write " + path);
  for (int t = 0; t < labels.num_frames; ++t) {
    nlohmann::json row;
    row["t"] = t * labels.hop_s;
    auto& speakers = row["speakers"] = nlohmann::json::array();
    for (int s = 0; s < labels.num_speakers(); ++s) {
      nlohmann::json spk;
      spk["id"] = labels.speaker_ids[s];
      if (labels.is_present(t, s))
        spk["azimuth_deg"] = labels.angle(t, s);
      else
        spk["azimuth_deg"] = nullptr;
      spk["active"] = labels.active(t, s);
      speakers.push_back(std::move(spk));
    }
    out << row.dump() << "\n";
  }
  if (!out) throw std::runtime_error("write_labels_jsonl: write failed " + path);
}

}  // namespace doalab
