// core/include/doalab/labels.hpp

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

#ifndef DOALAB_LABELS_HPP_
#define DOALAB_LABELS_HPP_

#include <cstdint>
#include <string>
#include <vector>

namespace doalab {

// Per-frame reference labels on the label grid (default hop 100 ms).
//
//   y[t,s]        speaker s is actively talking in frame t
//   theta_deg[t,s] reference azimuth (cone angle, degrees); NaN if unknown
//   present[t,s]  azimuth is known for (t,s) - i.e. s is a candidate there
//
// The non-silence mask m_t, the activation count A and the non-silent frame
// count B are derived quantities.
struct LabelTensor {
  double hop_s = 0.1;
  int num_frames = 0;
  std::vector<std::string> speaker_ids;
  std::vector<uint8_t> y;          // (num_frames x S)
  std::vector<uint8_t> present;    // (num_frames x S)
  std::vector<double> theta_deg;   // (num_frames x S)

  int num_speakers() const { return static_cast<int>(speaker_ids.size()); }

  size_t idx(int t, int s) const {
    return static_cast<size_t>(t) * speaker_ids.size() + static_cast<size_t>(s);
  }

  bool active(int t, int s) const { return y[idx(t, s)] != 0; }
  bool is_present(int t, int s) const { return present[idx(t, s)] != 0; }
  double angle(int t, int s) const { return theta_deg[idx(t, s)]; }

  // m_t = 1 iff any speaker is active in frame t.
  bool mask(int t) const {
    for (int s = 0; s < num_speakers(); ++s)
      if (active(t, s)) return true;
    return false;
  }

  // p_t: number of active speakers in frame t.
  int active_count(int t) const {
    int n = 0;
    for (int s = 0; s < num_speakers(); ++s) n += active(t, s) ? 1 : 0;
    return n;
  }

  int64_t activation_count() const {  // A
    int64_t a = 0;
    for (uint8_t v : y) a += v;
    return a;
  }

  int64_t nonsilent_count() const {  // B
    int64_t b = 0;
    for (int t = 0; t < num_frames; ++t) b += mask(t) ? 1 : 0;
    return b;
  }

  void resize(int frames, const std::vector<std::string>& ids);
  void validate() const;  // shape and range checks; throws on violation

  // Row view restricted to frames [t0, t0 + n).
  LabelTensor slice(int t0, int n) const;
};

// JSON-lines label files: one object per label frame,
// {"t": <s>, "speakers": [{"id", "azimuth_deg" (null if unknown), "active"}]}.
LabelTensor read_labels_jsonl(const std::string& path);
void write_labels_jsonl(const LabelTensor& labels, const std::string& path);

inline int label_frame_count(double duration_s, double hop_s = 0.1) {
  return static_cast<int>(duration_s / hop_s + 1e-9);
}

}  // namespace doalab

#endif  // DOALAB_LABELS_HPP_
