// core/src/wav_io.cc

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

#include "doalab/wav_io.hpp"

#include <cstring>
#include <fstream>
#include <stdexcept>

namespace doalab {

namespace {

uint32_t read_u32(const unsigned char* p) {
  return static_cast<uint32_t>(p[0]) | (static_cast<uint32_t>(p[1]) << 8) |
         (static_cast<uint32_t>(p[2]) << 16) | (static_cast<uint32_t>(p[3]) << 24);
}

uint16_t read_u16(const unsigned char* p) {
  return static_cast<uint16_t>(p[0] | (p[1] << 8));
}

void put_u32(std::string& s, uint32_t v) {
  s.push_back(static_cast<char>(v & 0xff));
  s.push_back(static_cast<char>((v >> 8) & 0xff));
  s.push_back(static_cast<char>((v >> 16) & 0xff));
  s.push_back(static_cast<char>((v >> 24) & 0xff));
}

void put_u16(std::string& s, uint16_t v) {
  s.push_back(static_cast<char>(v & 0xff));
  s.push_back(static_cast<char>((v >> 8) & 0xff));
}

}  // namespace

Wave read_wav(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("read_wav: cannot open " + path);
  std::string bytes((std::istreambuf_iterator<char>(in)),
                    std::istreambuf_iterator<char>());
  const auto* p = reinterpret_cast<const unsigned char*>(bytes.data());
  const size_t n = bytes.size();
  if (n < 12 || std::memcmp(p, "RIFF", 4) != 0 || std::memcmp(p + 8, "WAVE", 4) != 0)
    throw std::runtime_error("read_wav: " + path + " is not a RIFF/WAVE file");

  uint16_t format = 0, channels = 0, bits = 0;
  uint32_t rate = 0;
  const unsigned char* data = nullptr;
  uint32_t data_len = 0;

  size_t off = 12;
  while (off + 8 <= n) {
    const char* id = bytes.data() + off;
    const uint32_t len = read_u32(p + off + 4);
    const size_t body = off + 8;
    if (body + len > n)
      throw std::runtime_error("read_wav: " + path + ": truncated chunk");
    if (std::memcmp(id, "fmt ", 4) == 0) {
      if (len < 16) throw std::runtime_error("read_wav: " + path + ": short fmt chunk");
      format = read_u16(p + body);
      channels = read_u16(p + body + 2);
      rate = read_u32(p + body + 4);
      bits = read_u16(p + body + 14);
      if (format == 0xFFFE && len >= 40)  // WAVE_FORMAT_EXTENSIBLE
        format = read_u16(p + body + 24);
    } else if (std::memcmp(id, "data", 4) == 0) {
      data = p + body;
      data_len = len;
    }
    off = body + len + (len & 1);
  }
  if (channels == 0 || rate == 0 || data == nullptr)
    throw std::runtime_error("read_wav: " + path + ": missing fmt or data chunk");

  Wave w;
  w.sample_rate = static_cast<int>(rate);
  w.channels.assign(channels, {});
  if (format == 1 && bits == 16) {
    const size_t frames = data_len / (2u * channels);
    for (auto& ch : w.channels) ch.resize(frames);
    for (size_t f = 0; f < frames; ++f)
      for (uint16_t c = 0; c < channels; ++c) {
        const unsigned char* s = data + 2 * (f * channels + c);
        const int16_t v = static_cast<int16_t>(s[0] | (s[1] << 8));
        w.channels[c][f] = static_cast<float>(v) / 32768.0f;
      }
  } else if (format == 3 && bits == 32) {
    const size_t frames = data_len / (4u * channels);
    for (auto& ch : w.channels) ch.resize(frames);
    for (size_t f = 0; f < frames; ++f)
      for (uint16_t c = 0; c < channels; ++c) {
        float v;
        std::memcpy(&v, data + 4 * (f * channels + c), 4);
        w.channels[c][f] = v;
      }
  } else {
    throw std::runtime_error("read_wav: " + path + ": unsupported format (need PCM16 or float32)");
  }
  return w;
}

void write_wav_float32(const Wave& w, const std::string& path) {
  if (w.channels.empty() || w.sample_rate <= 0)
    throw std::invalid_argument("write_wav_float32: empty wave");
  const size_t frames = w.channels[0].size();
  for (const auto& ch : w.channels)
    if (ch.size() != frames)
      throw std::invalid_argument("write_wav_float32: ragged channels");

  const uint16_t channels = static_cast<uint16_t>(w.channels.size());
  const uint32_t data_len = static_cast<uint32_t>(frames * channels * 4);
  std::string out;
  out.reserve(58 + data_len);
  out += "RIFF";
  put_u32(out, 4 + 24 + 12 + 8 + data_len);
  out += "WAVE";
  out += "fmt ";
  put_u32(out, 16);
  put_u16(out, 3);  // IEEE float
  put_u16(out, channels);
  put_u32(out, static_cast<uint32_t>(w.sample_rate));
  put_u32(out, static_cast<uint32_t>(w.sample_rate) * channels * 4);
  put_u16(out, static_cast<uint16_t>(channels * 4));
  put_u16(out, 32);
  // A fact chunk is required for non-PCM formats.
  out += "fact";
  put_u32(out, 4);
  put_u32(out, static_cast<uint32_t>(frames));
  out += "data";
  put_u32(out, data_len);
  for (size_t f = 0; f < frames; ++f)
    for (uint16_t c = 0; c < channels; ++c) {
      char buf[4];
      const float v = w.channels[c][f];
      std::memcpy(buf, &v, 4);
      out.append(buf, 4);
    }

  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("write_wav_float32: cannot write " + path);
  os.write(out.data(), static_cast<std::streamsize>(out.size()));
  if (!os) throw std::runtime_error("write_wav_float32: write failed for " + path);
}

}  // namespace doalab
