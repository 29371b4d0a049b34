// core/include/doalab/annotate.hpp

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

#ifndef DOALAB_ANNOTATE_HPP_
#define DOALAB_ANNOTATE_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "doalab/geom.hpp"
#include "doalab/labels.hpp"

namespace doalab {
namespace annotate {

// One detector/tracker output record. Detection and tracking themselves are
// upstream tools; we only ingest their exported boxes.
struct TrackRecord {
  int64_t frame_idx = 0;
  int64_t track_id = 0;
  geom::BoundingBox bbox;
};

// CSV with header `frame_idx,track_id,u1,v1,u2,v2`. Parse errors carry the
// 1-based line number.
std::vector<TrackRecord> read_track_csv(const std::string& path);
void write_track_csv(const std::vector<TrackRecord>& records,
                     const std::string& path);

struct TimelinePoint {
  double t = 0.0;            // seconds
  double azimuth_deg = 0.0;  // meaningful when present
  bool present = false;
};

struct SpeakerTimeline {
  int64_t track_id = 0;
  std::vector<TimelinePoint> points;  // strictly increasing t
};

struct AnnotationTimeline {
  std::vector<SpeakerTimeline> speakers;
};

struct AnnotateOptions {
  // Frames missing inside a track are linearly interpolated up to this gap;
  // beyond it the speaker is marked absent for the missing span.
  double gap_limit_s = 0.5;
  // Audio/video clock offset added to every video timestamp.
  double time_offset_s = 0.0;
};

// Bounding boxes -> per-speaker azimuth timelines. Azimuths compose
// mouth_from_bbox, pixel_to_camera and azimuth_of; timestamps are
// frame_idx / fps (+ offset).
AnnotationTimeline annotate_tracks(const std::vector<TrackRecord>& records,
                                   const geom::CameraIntrinsics& k, double fps,
                                   const AnnotateOptions& opts = {});

struct ResampledTrack {
  std::vector<double> azimuth_deg;
  std::vector<uint8_t> present;
};

// Nearest-in-time timeline sample per label frame; a frame gets present=0
// when no timeline point lies within hop/2 of the frame's window center.
ResampledTrack resample_to_label_grid(const SpeakerTimeline& tl, double hop_s,
                                      int num_frames);

// Whole-timeline convenience wrapper producing the label file content.
// The `active` flag of annotate-derived labels means "visible in camera".
LabelTensor timeline_to_labels(const AnnotationTimeline& tl, double hop_s,
                               int num_frames);

}  // namespace annotate
}  // namespace doalab

#endif  // DOALAB_ANNOTATE_HPP_
