// core/src/annotate.cc

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

#include "doalab/annotate.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace doalab {
namespace annotate {

std::vector<TrackRecord> read_track_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("read_track_csv: cannot open " + path);
  std::string line;
  int lineno = 0;
  if (!std::getline(in, line))
    throw std::runtime_error("read_track_csv: " + path + ": empty file");
  ++lineno;
  // Tolerate trailing \r from foreign line endings.
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != "frame_idx,track_id,u1,v1,u2,v2")
    throw std::runtime_error("read_track_csv: " + path +
                             ":1: expected header frame_idx,track_id,u1,v1,u2,v2");

  std::vector<TrackRecord> records;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::istringstream ls(line);
    TrackRecord r;
    char c1, c2, c3, c4, c5;
    if (!(ls >> r.frame_idx >> c1 >> r.track_id >> c2 >> r.bbox.u1 >> c3 >>
          r.bbox.v1 >> c4 >> r.bbox.u2 >> c5 >> r.bbox.v2) ||
        c1 != ',' || c2 != ',' || c3 != ',' || c4 != ',' || c5 != ',')
      throw std::runtime_error("read_track_csv: " + path + ":" +
                               std::to_string(lineno) + ": malformed record");
    std::string rest;
    if (ls >> rest)
      throw std::runtime_error("read_track_csv: " + path + ":" +
                               std::to_string(lineno) + ": trailing fields");
    records.push_back(r);
  }
  return records;
}

void write_track_csv(const std::vector<TrackRecord>& records,
                     const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("write_track_csv: cannot write " + path);
  out.precision(17);
  out << "frame_idx,track_id,u1,v1,u2,v2\n";
  for (const auto& r : records)
    out << r.frame_idx << ',' << r.track_id << ',' << r.bbox.u1 << ','
        << r.bbox.v1 << ',' << r.bbox.u2 << ',' << r.bbox.v2 << "\n";
  if (!out) throw std::runtime_error("write_track_csv: write failed " + path);
}

AnnotationTimeline annotate_tracks(const std::vector<TrackRecord>& records,
                                   const geom::CameraIntrinsics& k, double fps,
                                   const AnnotateOptions& opts) {
  if (!(fps > 0.0)) throw std::invalid_argument("annotate_tracks: fps must be > 0");
  if (!k.valid()) throw std::invalid_argument("annotate_tracks: invalid intrinsics");

  std::map<int64_t, std::vector<const TrackRecord*>> by_track;
  for (const auto& r : records) {
    if (r.frame_idx < 0)
      throw std::runtime_error("annotate_tracks: negative frame_idx on track " +
                               std::to_string(r.track_id));
    by_track[r.track_id].push_back(&r);
  }

  AnnotationTimeline tl;
  for (auto& [track_id, recs] : by_track) {
    std::sort(recs.begin(), recs.end(),
              [](const TrackRecord* a, const TrackRecord* b) {
                return a->frame_idx < b->frame_idx;
              });
    for (size_t i = 1; i < recs.size(); ++i)
      if (recs[i]->frame_idx == recs[i - 1]->frame_idx)
        throw std::runtime_error("annotate_tracks: duplicate frame " +
                                 std::to_string(recs[i]->frame_idx) +
                                 " on track " + std::to_string(track_id));

    SpeakerTimeline spk;
    spk.track_id = track_id;
    const int64_t first = recs.front()->frame_idx;
    const int64_t last = recs.back()->frame_idx;
    spk.points.reserve(static_cast<size_t>(last - first + 1));

    size_t next = 0;  // index of the next observed record
    double prev_az = 0.0;
    int64_t prev_frame = -1;
    for (int64_t f = first; f <= last; ++f) {
      if (next < recs.size() && recs[next]->frame_idx == f) {
        const auto& r = *recs[next];
        const double az =
            geom::azimuth_of(geom::pixel_to_camera(geom::mouth_from_bbox(r.bbox), k));
        spk.points.push_back({f / fps + opts.time_offset_s, az, true});
        prev_az = az;
        prev_frame = f;
        ++next;
      } else {
        // Missing frame inside the track: interpolate across short gaps.
        const auto& nxt = *recs[next];
        const double gap_s = static_cast<double>(nxt.frame_idx - prev_frame) / fps;
        TimelinePoint p;
        p.t = f / fps + opts.time_offset_s;
        if (gap_s <= opts.gap_limit_s + 1e-12) {
          const double nxt_az = geom::azimuth_of(
              geom::pixel_to_camera(geom::mouth_from_bbox(nxt.bbox), k));
          const double w = static_cast<double>(f - prev_frame) /
                           static_cast<double>(nxt.frame_idx - prev_frame);
          p.azimuth_deg = prev_az + w * (nxt_az - prev_az);
          p.present = true;
        } else {
          p.azimuth_deg = prev_az;
          p.present = false;
        }
        spk.points.push_back(p);
      }
    }
    tl.speakers.push_back(std::move(spk));
  }
  return tl;
}

ResampledTrack resample_to_label_grid(const SpeakerTimeline& tl, double hop_s,
                                      int num_frames) {
  if (!(hop_s > 0.0))
    throw std::invalid_argument("resample_to_label_grid: hop must be > 0");
  ResampledTrack out;
  out.azimuth_deg.assign(num_frames, 0.0);
  out.present.assign(num_frames, 0);
  if (tl.points.empty() || num_frames == 0) return out;

  size_t j = 0;
  for (int l = 0; l < num_frames; ++l) {
    const double tc = (l + 0.5) * hop_s;  // window center
    while (j + 1 < tl.points.size() &&
           std::abs(tl.points[j + 1].t - tc) <= std::abs(tl.points[j].t - tc))
      ++j;
    const TimelinePoint& p = tl.points[j];
    if (std::abs(p.t - tc) <= hop_s / 2.0 + 1e-12 && p.present) {
      out.present[l] = 1;
      out.azimuth_deg[l] = p.azimuth_deg;
    }
  }
  return out;
}

LabelTensor timeline_to_labels(const AnnotationTimeline& tl, double hop_s,
                               int num_frames) {
  std::vector<std::string> ids;
  ids.reserve(tl.speakers.size());
  for (const auto& spk : tl.speakers) ids.push_back(std::to_string(spk.track_id));

  LabelTensor labels;
  labels.hop_s = hop_s;
  labels.resize(num_frames, ids);
  for (size_t s = 0; s < tl.speakers.size(); ++s) {
    const ResampledTrack rt =
        resample_to_label_grid(tl.speakers[s], hop_s, num_frames);
    for (int t = 0; t < num_frames; ++t) {
      const size_t i = labels.idx(t, static_cast<int>(s));
      if (rt.present[t]) {
        labels.present[i] = 1;
        labels.theta_deg[i] = rt.azimuth_deg[t];
        labels.y[i] = 1;  // 'active' from camera tracks means visible
      }
    }
  }
  return labels;
}

}  // namespace annotate
}  // namespace doalab
