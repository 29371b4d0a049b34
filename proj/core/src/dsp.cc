// core/src/dsp.cc

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

#include "doalab/dsp.hpp"

#include <cmath>
#include <cstring>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

#include "doalab/angles.hpp"
#include "doalab/fft.hpp"

namespace doalab {
namespace dsp {

namespace {

double hz_to_mel(double hz) { return 1127.0 * std::log(1.0 + hz / 700.0); }

// Triangular mel filter weights as a dense (num_mels x num_bins) matrix.
std::vector<double> mel_weights(int num_mels, int nfft, int sample_rate,
                                double fmin, double fmax) {
  const int num_bins = nfft / 2 + 1;
  const double mel_lo = hz_to_mel(fmin);
  const double mel_hi = hz_to_mel(fmax);
  std::vector<double> centers(num_mels + 2);
  for (int i = 0; i < num_mels + 2; ++i)
    centers[i] = mel_lo + (mel_hi - mel_lo) * i / (num_mels + 1);

  std::vector<double> w(static_cast<size_t>(num_mels) * num_bins, 0.0);
  for (int k = 0; k < num_bins; ++k) {
    const double mel = hz_to_mel(static_cast<double>(k) * sample_rate / nfft);
    for (int m = 0; m < num_mels; ++m) {
      const double left = centers[m], center = centers[m + 1], right = centers[m + 2];
      double v = 0.0;
      if (mel > left && mel < right)
        v = mel <= center ? (mel - left) / (center - left)
                          : (right - mel) / (right - center);
      if (v > 0.0) w[static_cast<size_t>(m) * num_bins + k] = v;
    }
  }
  return w;
}

}  // namespace

Spectrogram stft(const std::vector<float>& x, const StftOptions& opts) {
  if (x.empty()) throw std::invalid_argument("stft: empty signal");
  if (opts.win <= 0 || opts.hop <= 0 || opts.win < opts.hop)
    throw std::invalid_argument("stft: require win >= hop > 0");
  if (static_cast<int>(x.size()) < opts.win)
    throw std::invalid_argument("stft: signal shorter than one window");
  const int nfft = opts.nfft > 0 ? opts.nfft : static_cast<int>(next_pow2(opts.win));
  if (nfft < opts.win) throw std::invalid_argument("stft: nfft < win");

  Spectrogram s;
  s.win = opts.win;
  s.hop = opts.hop;
  s.nfft = nfft;
  s.num_frames = 1 + (static_cast<int>(x.size()) - opts.win) / opts.hop;
  s.num_bins = nfft / 2 + 1;
  s.data.resize(static_cast<size_t>(s.num_frames) * s.num_bins);

  std::vector<double> window(opts.win);
  for (int n = 0; n < opts.win; ++n)
    window[n] = 0.5 - 0.5 * std::cos(2.0 * kPi * n / opts.win);

  std::vector<std::complex<double>> frame(nfft);
  for (int t = 0; t < s.num_frames; ++t) {
    const int start = t * opts.hop;
    for (int n = 0; n < opts.win; ++n)
      frame[n] = std::complex<double>(window[n] * x[start + n], 0.0);
    for (int n = opts.win; n < nfft; ++n) frame[n] = 0.0;
    fft_inplace(frame, false);
    for (int k = 0; k < s.num_bins; ++k)
      s.data[static_cast<size_t>(t) * s.num_bins + k] = frame[k];
  }
  return s;
}

FbankSequence fbank(const std::vector<float>& x, int sample_rate,
                    const FbankOptions& opts) {
  if (sample_rate != 16000)
    throw std::invalid_argument("fbank: expects 16 kHz input");
  const Spectrogram s = stft(x, opts.stft);
  const std::vector<double> w =
      mel_weights(opts.num_mels, s.nfft, sample_rate, opts.fmin_hz, opts.fmax_hz);

  FbankSequence f;
  f.num_frames = s.num_frames;
  f.num_bins = opts.num_mels;
  f.hop_s = static_cast<double>(s.hop) / sample_rate;
  f.sample_rate = sample_rate;
  f.data.resize(static_cast<size_t>(f.num_frames) * f.num_bins);

  std::vector<double> power(s.num_bins);
  for (int t = 0; t < s.num_frames; ++t) {
    for (int k = 0; k < s.num_bins; ++k) power[k] = std::norm(s.at(t, k));
    for (int m = 0; m < opts.num_mels; ++m) {
      double e = 0.0;
      const double* wm = &w[static_cast<size_t>(m) * s.num_bins];
      for (int k = 0; k < s.num_bins; ++k) e += wm[k] * power[k];
      if (e < opts.power_floor) e = opts.power_floor;
      f.data[static_cast<size_t>(t) * f.num_bins + m] = std::log(e);
    }
  }
  return f;
}

PooledFeatures pool_to_label_grid(const FbankSequence& f, double label_hop_s) {
  if (f.hop_s <= 0.0 || label_hop_s <= 0.0)
    throw std::invalid_argument("pool_to_label_grid: non-positive hop");
  const double ratio = label_hop_s / f.hop_s;
  const int group = static_cast<int>(std::lround(ratio));
  if (group < 1 || std::abs(ratio - group) > 1e-6)
    throw std::invalid_argument(
        "pool_to_label_grid: label hop must be an integer multiple of the feature hop");

  PooledFeatures p;
  p.group = group;
  p.num_bins = f.num_bins;
  p.num_label_frames = f.num_frames / group;
  p.data.resize(static_cast<size_t>(p.num_label_frames) * group * f.num_bins);
  std::memcpy(p.data.data(), f.data.data(), p.data.size() * sizeof(double));
  return p;
}

void write_feature_cache(const std::string& bin_path,
                         const std::vector<FbankSequence>& per_channel) {
  if (per_channel.empty())
    throw std::invalid_argument("write_feature_cache: no channels");
  const auto& first = per_channel.front();
  for (const auto& ch : per_channel)
    if (ch.num_frames != first.num_frames || ch.num_bins != first.num_bins)
      throw std::invalid_argument("write_feature_cache: ragged channels");

  std::ofstream os(bin_path, std::ios::binary);
  if (!os) throw std::runtime_error("write_feature_cache: cannot write " + bin_path);
  for (const auto& ch : per_channel)
    for (double v : ch.data) {
      const float fv = static_cast<float>(v);
      os.write(reinterpret_cast<const char*>(&fv), sizeof(float));
    }
  if (!os) throw std::runtime_error("write_feature_cache: write failed " + bin_path);

  nlohmann::json sidecar = {
      {"shape", {per_channel.size(), first.num_frames, first.num_bins}},
      {"dtype", "f32"},
      {"hop_s", first.hop_s},
      {"sample_rate", first.sample_rate},
  };
  std::ofstream js(bin_path + ".json");
  if (!js) throw std::runtime_error("write_feature_cache: cannot write sidecar");
  js << sidecar.dump(2) << "\n";
}

std::vector<FbankSequence> read_feature_cache(const std::string& bin_path) {
  std::ifstream js(bin_path + ".json");
  if (!js) throw std::runtime_error("read_feature_cache: missing sidecar for " + bin_path);
  nlohmann::json sidecar;
  js >> sidecar;
  const auto shape = sidecar.at("shape");
  if (shape.size() != 3 || sidecar.at("dtype") != "f32")
    throw std::runtime_error("read_feature_cache: unsupported sidecar " + bin_path);
  const int channels = shape[0].get<int>();
  const int frames = shape[1].get<int>();
  const int bins = shape[2].get<int>();

  std::ifstream is(bin_path, std::ios::binary);
  if (!is) throw std::runtime_error("read_feature_cache: cannot open " + bin_path);
  std::vector<FbankSequence> out(channels);
  std::vector<float> buf(static_cast<size_t>(frames) * bins);
  for (int c = 0; c < channels; ++c) {
    is.read(reinterpret_cast<char*>(buf.data()),
            static_cast<std::streamsize>(buf.size() * sizeof(float)));
    if (!is) throw std::runtime_error("read_feature_cache: truncated " + bin_path);
    auto& f = out[c];
    f.num_frames = frames;
    f.num_bins = bins;
    f.hop_s = sidecar.at("hop_s").get<double>();
    f.sample_rate = sidecar.at("sample_rate").get<int>();
    f.data.assign(buf.begin(), buf.end());
  }
  return out;
}

}  // namespace dsp
}  // namespace doalab
