// core/include/doalab/geom.hpp

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

#ifndef DOALAB_GEOM_HPP_
#define DOALAB_GEOM_HPP_

#include <string>

namespace doalab {
namespace geom {

// Calibration parameters of the ideal pin-hole camera: focal lengths in
// pixel units and the principal point. The physical focal length and pixel
// pitch are not separately recoverable from these and are not stored.
struct CameraIntrinsics {
  double fx = 0.0;
  double fy = 0.0;
  double u0 = 0.0;
  double v0 = 0.0;

  bool valid() const;
};

struct PixelPoint {
  double u = 0.0;  // column
  double v = 0.0;  // row
};

// Normalized image-plane coordinates (focal length divided out).
struct ImagePoint {
  double x = 0.0;
  double y = 0.0;
};

// Camera-frame point. The X axis carries the microphone array, Z is the
// optical axis. Back-projected points are direction-only rays at Zc = 1;
// metric depth is not recoverable from a monocular camera.
struct CameraPoint {
  double xc = 0.0;
  double yc = 0.0;
  double zc = 0.0;
};

struct BoundingBox {
  double u1 = 0.0;
  double v1 = 0.0;  // top-left
  double u2 = 0.0;
  double v2 = 0.0;  // bottom-right

  bool valid() const;
};

ImagePoint pixel_to_image(const PixelPoint& p, const CameraIntrinsics& k);
PixelPoint image_to_pixel(const ImagePoint& q, const CameraIntrinsics& k);

// Back-projection to the unit-depth ray ((u-u0)/fx, (v-v0)/fy, 1).
// Throws std::invalid_argument on non-finite input or invalid intrinsics.
CameraPoint pixel_to_camera(const PixelPoint& p, const CameraIntrinsics& k);

// Perspective projection (fx*Xc/Zc + u0, fy*Yc/Zc + v0).
// Throws std::domain_error when the point is not in front of the camera.
PixelPoint camera_to_pixel(const CameraPoint& pt, const CameraIntrinsics& k);

// Mouth proxy: midpoint of the head-and-shoulder box corners.
PixelPoint mouth_from_bbox(const BoundingBox& b);

// Cone angle, in degrees, between the ray and the array axis X:
// arccos(Xc / |P|) in [0, 180]. This is the angle a linear array resolves.
// Throws std::invalid_argument for the zero vector.
double azimuth_of(const CameraPoint& pt);

// Plain-text key/value intrinsics file (keys fx, fy, u0, v0).
CameraIntrinsics load_intrinsics(const std::string& path);
void save_intrinsics(const CameraIntrinsics& k, const std::string& path);

}  // namespace geom
}  // namespace doalab

#endif  // DOALAB_GEOM_HPP_
