// core/src/geom.cc

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

#include "doalab/geom.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "doalab/angles.hpp"

namespace doalab {
namespace geom {

bool CameraIntrinsics::valid() const {
  return std::isfinite(fx) && std::isfinite(fy) && std::isfinite(u0) &&
         std::isfinite(v0) && fx > 0.0 && fy > 0.0;
}

bool BoundingBox::valid() const {
  return std::isfinite(u1) && std::isfinite(v1) && std::isfinite(u2) &&
         std::isfinite(v2) && u1 <= u2 && v1 <= v2;
}

ImagePoint pixel_to_image(const PixelPoint& p, const CameraIntrinsics& k) {
  if (!k.valid()) throw std::invalid_argument("pixel_to_image: invalid intrinsics");
  if (!std::isfinite(p.u) || !std::isfinite(p.v))
    throw std::invalid_argument("pixel_to_image: non-finite pixel");
  return {(p.u - k.u0) / k.fx, (p.v - k.v0) / k.fy};
}

PixelPoint image_to_pixel(const ImagePoint& q, const CameraIntrinsics& k) {
  if (!k.valid()) throw std::invalid_argument("image_to_pixel: invalid intrinsics");
  return {k.fx * q.x + k.u0, k.fy * q.y + k.v0};
}

CameraPoint pixel_to_camera(const PixelPoint& p, const CameraIntrinsics& k) {
  const ImagePoint q = pixel_to_image(p, k);
  return {q.x, q.y, 1.0};
}

PixelPoint camera_to_pixel(const CameraPoint& pt, const CameraIntrinsics& k) {
  if (!k.valid()) throw std::invalid_argument("camera_to_pixel: invalid intrinsics");
  if (!(pt.zc > 0.0))
    throw std::domain_error("camera_to_pixel: point is behind the camera (Zc <= 0)");
  return {k.fx * pt.xc / pt.zc + k.u0, k.fy * pt.yc / pt.zc + k.v0};
}

PixelPoint mouth_from_bbox(const BoundingBox& b) {
  if (!b.valid()) throw std::invalid_argument("mouth_from_bbox: invalid bounding box");
  return {0.5 * (b.u1 + b.u2), 0.5 * (b.v1 + b.v2)};
}

double azimuth_of(const CameraPoint& pt) {
  const double n = std::sqrt(pt.xc * pt.xc + pt.yc * pt.yc + pt.zc * pt.zc);
  if (!(n > 0.0) || !std::isfinite(n))
    throw std::invalid_argument("azimuth_of: zero or non-finite vector");
  double c = pt.xc / n;
  if (c > 1.0) c = 1.0;
  if (c < -1.0) c = -1.0;
  return rad_to_deg(std::acos(c));
}

CameraIntrinsics load_intrinsics(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("load_intrinsics: cannot open " + path);
  CameraIntrinsics k;
  bool got_fx = false, got_fy = false, got_u0 = false, got_v0 = false;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    for (char& ch : line)
      if (ch == '=' || ch == ':') ch = ' ';
    std::istringstream ls(line);
    std::string key;
    if (!(ls >> key)) continue;
    double value;
    if (!(ls >> value))
      throw std::runtime_error("load_intrinsics: " + path + ":" +
                               std::to_string(lineno) + ": missing value for " + key);
    if (key == "fx") { k.fx = value; got_fx = true; }
    else if (key == "fy") { k.fy = value; got_fy = true; }
    else if (key == "u0") { k.u0 = value; got_u0 = true; }
    else if (key == "v0") { k.v0 = value; got_v0 = true; }
    else
      throw std::runtime_error("load_intrinsics: " + path + ":" +
                               std::to_string(lineno) + ": unknown key " + key);
  }
  if (!(got_fx && got_fy && got_u0 && got_v0))
    throw std::runtime_error("load_intrinsics: " + path + ": requires fx, fy, u0, v0");
  if (!k.valid()) throw std::runtime_error("load_intrinsics: " + path + ": invalid values");
  return k;
}

void save_intrinsics(const CameraIntrinsics& k, const std::string& path) {
  if (!k.valid()) throw std::invalid_argument("save_intrinsics: invalid intrinsics");
  std::ofstream out(path);
  if (!out) throw std::runtime_error("save_intrinsics: cannot write " + path);
  out.precision(17);
  out << "fx " << k.fx << "\n"
      << "fy " << k.fy << "\n"
      << "u0 " << k.u0 << "\n"
      << "v0 " << k.v0 << "\n";
}

}  // namespace geom
}  // namespace doalab
