// core/include/doalab/angles.hpp

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

#ifndef DOALAB_ANGLES_HPP_
#define DOALAB_ANGLES_HPP_

#include <cmath>

namespace doalab {

inline constexpr double kPi = 3.14159265358979323846;

inline constexpr double deg_to_rad(double deg) { return deg * kPi / 180.0; }
inline constexpr double rad_to_deg(double rad) { return rad * 180.0 / kPi; }

// Unit vector (cos, sin) of an azimuth given in degrees. Azimuths are cone
// angles in [0, 180], so the sin component of a reference angle is >= 0.
struct AngleVec {
  double c = 1.0;
  double s = 0.0;
};

inline AngleVec angle_vec(double azimuth_deg) {
  const double r = deg_to_rad(azimuth_deg);
  return {std::cos(r), std::sin(r)};
}

}  // namespace doalab

#endif  // DOALAB_ANGLES_HPP_
