// core/include/doalab/wav_io.hpp

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

#ifndef DOALAB_WAV_IO_HPP_
#define DOALAB_WAV_IO_HPP_

#include <cstdint>
#include <string>
#include <vector>

namespace doalab {

struct Wave {
  int sample_rate = 0;
  std::vector<std::vector<float>> channels;  // [channel][sample]

  int64_t num_samples() const {
    return channels.empty() ? 0 : static_cast<int64_t>(channels[0].size());
  }
  int num_channels() const { return static_cast<int>(channels.size()); }
  double duration_s() const {
    return sample_rate > 0 ? static_cast<double>(num_samples()) / sample_rate : 0.0;
  }
};

// Reads PCM16 or IEEE float32 RIFF/WAVE files.
Wave read_wav(const std::string& path);

// Writes 32-bit float PCM (WAVE_FORMAT_IEEE_FLOAT), the dataset format.
void write_wav_float32(const Wave& w, const std::string& path);

}  // namespace doalab

#endif  // DOALAB_WAV_IO_HPP_
