// core/include/doalab/dsp.hpp

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

#ifndef DOALAB_DSP_HPP_
#define DOALAB_DSP_HPP_

#include <complex>
#include <string>
#include <vector>

namespace doalab {
namespace dsp {

struct StftOptions {
  int win = 400;   // 25 ms at 16 kHz
  int hop = 160;   // 10 ms
  int nfft = 0;    // 0 -> next power of two >= win
};

struct Spectrogram {
  int num_frames = 0;
  int num_bins = 0;  // onesided, nfft/2 + 1
  int win = 0, hop = 0, nfft = 0;
  std::vector<std::complex<double>> data;  // row-major (num_frames x num_bins)

  const std::complex<double>& at(int t, int k) const {
    return data[static_cast<size_t>(t) * num_bins + k];
  }
};

// Hann-windowed short-time transform; frame count 1 + floor((len-win)/hop).
// Throws when the signal is shorter than one window.
Spectrogram stft(const std::vector<float>& x, const StftOptions& opts = {});

struct FbankOptions {
  StftOptions stft;
  int num_mels = 64;
  double fmin_hz = 0.0;
  double fmax_hz = 8000.0;
  double power_floor = 1e-10;
};

struct FbankSequence {
  int num_frames = 0;
  int num_bins = 0;
  double hop_s = 0.0;
  int sample_rate = 0;
  std::vector<double> data;  // row-major (num_frames x num_bins), natural log

  double at(int t, int b) const {
    return data[static_cast<size_t>(t) * num_bins + b];
  }
};

// Log-mel filterbank energies: power spectrum -> triangular mel filters
// (HTK mel scale) -> ln(max(e, floor)). Requires sample_rate == 16000.
FbankSequence fbank(const std::vector<float>& x, int sample_rate,
                    const FbankOptions& opts = {});

struct PooledFeatures {
  int num_label_frames = 0;
  int group = 0;     // feature frames per label frame
  int num_bins = 0;
  std::vector<double> data;  // (num_label_frames x group x num_bins)
};

// Groups consecutive feature frames per label frame (default 100 ms grid);
// a trailing partial group is dropped. The label hop must be an integer
// multiple of the feature hop.
PooledFeatures pool_to_label_grid(const FbankSequence& f, double label_hop_s = 0.1);

// Raw little-endian float32 feature cache with a JSON sidecar (at
// bin_path + ".json") describing shape, hop and sample rate.
void write_feature_cache(const std::string& bin_path,
                         const std::vector<FbankSequence>& per_channel);
std::vector<FbankSequence> read_feature_cache(const std::string& bin_path);

}  // namespace dsp
}  // namespace doalab

#endif  // DOALAB_DSP_HPP_
