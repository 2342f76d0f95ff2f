// Copyright 2026 The tegg Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "tegg/wav.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <iterator>
#include <string>
#include <system_error>
#include <thread>
#include <utility>

#include "tegg/error.hpp"

namespace tegg {
namespace {

constexpr std::uint16_t kFormatPcm = 1;
constexpr std::uint16_t kFormatFloat = 3;
constexpr std::uint16_t kFormatExtensible = 0xFFFE;

std::uint32_t read_u32(const unsigned char* p) {
  return static_cast<std::uint32_t>(p[0]) |
         (static_cast<std::uint32_t>(p[1]) << 8) |
         (static_cast<std::uint32_t>(p[2]) << 16) |
         (static_cast<std::uint32_t>(p[3]) << 24);
}

std::uint16_t read_u16(const unsigned char* p) {
  return static_cast<std::uint16_t>(p[0] | (p[1] << 8));
}

void put_u32(std::vector<unsigned char>& out, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) out.push_back(static_cast<unsigned char>(v >> (8 * i)));
}

void put_u16(std::vector<unsigned char>& out, std::uint16_t v) {
  out.push_back(static_cast<unsigned char>(v & 0xFF));
  out.push_back(static_cast<unsigned char>(v >> 8));
}

void put_tag(std::vector<unsigned char>& out, const char* tag) {
  out.insert(out.end(), tag, tag + 4);
}

double decode_sample(const unsigned char* p, WavEncoding enc) {
  switch (enc) {
    case WavEncoding::kPcm16: {
      const auto v = static_cast<std::int16_t>(read_u16(p));
      return v / 32768.0;
    }
    case WavEncoding::kPcm24: {
      std::int32_t v = p[0] | (p[1] << 8) | (p[2] << 16);
      if (v & 0x800000) v -= 0x1000000;
      return v / 8388608.0;
    }
    case WavEncoding::kPcm32: {
      const auto v = static_cast<std::int32_t>(read_u32(p));
      return v / 2147483648.0;
    }
    case WavEncoding::kFloat32: {
      const std::uint32_t bits = read_u32(p);
      float f;
      std::memcpy(&f, &bits, sizeof f);
      return static_cast<double>(f);
    }
  }
  return 0.0;
}

void encode_sample(std::vector<unsigned char>& out, double v, WavEncoding enc) {
  switch (enc) {
    case WavEncoding::kPcm16: {
      const long q = std::clamp(std::lround(v * 32768.0), -32768L, 32767L);
      put_u16(out, static_cast<std::uint16_t>(static_cast<std::int16_t>(q)));
      break;
    }
    case WavEncoding::kPcm24: {
      const long q = std::clamp(std::lround(v * 8388608.0), -8388608L, 8388607L);
      const auto u = static_cast<std::uint32_t>(static_cast<std::int32_t>(q));
      out.push_back(static_cast<unsigned char>(u & 0xFF));
      out.push_back(static_cast<unsigned char>((u >> 8) & 0xFF));
      out.push_back(static_cast<unsigned char>((u >> 16) & 0xFF));
      break;
    }
    case WavEncoding::kPcm32: {
      const long long q = std::clamp(std::llround(v * 2147483648.0),
                                     -2147483648LL, 2147483647LL);
      put_u32(out, static_cast<std::uint32_t>(static_cast<std::int32_t>(q)));
      break;
    }
    case WavEncoding::kFloat32: {
      const auto f = static_cast<float>(v);
      std::uint32_t bits;
      std::memcpy(&bits, &f, sizeof bits);
      put_u32(out, bits);
      break;
    }
  }
}

WavWriteResult write_channels(std::span<const MonoSignal* const> channels,
                              const std::filesystem::path& path,
                              WavEncoding enc) {
  const MonoSignal& first = *channels.front();
  if (first.empty()) {
    throw Error(Errc::kEmptySignal, "refusing to write an empty signal to " +
                                        path.string());
  }
  for (const MonoSignal* ch : channels) {
    if (ch->size() != first.size() || ch->sample_rate() != first.sample_rate()) {
      throw Error(Errc::kDimensionMismatch,
                  "channels differ in length or sample rate");
    }
  }

  const int bits = bits_per_sample(enc);
  const auto n_channels = static_cast<std::uint16_t>(channels.size());
  const std::uint16_t block_align = static_cast<std::uint16_t>(n_channels * bits / 8);
  const std::uint64_t data_bytes = static_cast<std::uint64_t>(first.size()) * block_align;
  if (data_bytes > 0xFFFFFFFFull - 44) {
    throw Error(Errc::kInvalidArgument, "signal too long for a RIFF file");
  }

  std::vector<unsigned char> buf;
  buf.reserve(44 + data_bytes);
  put_tag(buf, "RIFF");
  put_u32(buf, static_cast<std::uint32_t>(36 + data_bytes));
  put_tag(buf, "WAVE");
  put_tag(buf, "fmt ");
  put_u32(buf, 16);
  put_u16(buf, enc == WavEncoding::kFloat32 ? kFormatFloat : kFormatPcm);
  put_u16(buf, n_channels);
  put_u32(buf, static_cast<std::uint32_t>(first.sample_rate()));
  put_u32(buf, static_cast<std::uint32_t>(first.sample_rate()) * block_align);
  put_u16(buf, block_align);
  put_u16(buf, static_cast<std::uint16_t>(bits));
  put_tag(buf, "data");
  put_u32(buf, static_cast<std::uint32_t>(data_bytes));

  WavWriteResult result;
  for (std::size_t i = 0; i < first.size(); ++i) {
    for (const MonoSignal* ch : channels) {
      double v = (*ch)[i];
      if (v > 1.0 || v < -1.0) {
        ++result.clipped_samples;
        v = std::clamp(v, -1.0, 1.0);
      }
      encode_sample(buf, v, enc);
    }
  }
  if (result.clipped_samples > 0) {
    warn("clipped " + std::to_string(result.clipped_samples) +
         " samples outside [-1, 1] while writing " + path.string());
  }

  // Unique sibling name so concurrent writers never share a temp file.
  static std::atomic<unsigned long> counter{0};
  std::filesystem::path tmp = path;
  tmp += ".tmp" + std::to_string(std::hash<std::thread::id>{}(std::this_thread::get_id()) % 100000) +
         "_" + std::to_string(counter++);
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) {
      throw Error(Errc::kIoError, "cannot open " + path.string() + " for writing");
    }
    out.write(reinterpret_cast<const char*>(buf.data()),
              static_cast<std::streamsize>(buf.size()));
    if (!out) {
      throw Error(Errc::kIoError, "failed writing " + path.string());
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw Error(Errc::kIoError, "cannot move output into place at " + path.string());
  }
  return result;
}

}  // namespace

int bits_per_sample(WavEncoding encoding) {
  switch (encoding) {
    case WavEncoding::kPcm16: return 16;
    case WavEncoding::kPcm24: return 24;
    case WavEncoding::kPcm32: return 32;
    case WavEncoding::kFloat32: return 32;
  }
  return 0;
}

WavData read_wav(const std::filesystem::path& path) {
  std::error_code ec;
  if (!std::filesystem::is_regular_file(path, ec)) {
    throw Error(Errc::kFileNotFound, "no such file: " + path.string());
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::kIoError, "cannot open " + path.string());
  const std::vector<unsigned char> bytes((std::istreambuf_iterator<char>(in)),
                                         std::istreambuf_iterator<char>());

  if (bytes.size() < 12 || std::memcmp(bytes.data(), "RIFF", 4) != 0 ||
      std::memcmp(bytes.data() + 8, "WAVE", 4) != 0) {
    throw Error(Errc::kNotWav, path.string() + " is not a RIFF/WAVE file");
  }

  bool have_fmt = false;
  std::uint16_t format = 0, channels = 0, bits = 0;
  std::uint32_t rate = 0;
  const unsigned char* data = nullptr;
  std::size_t data_size = 0;

  std::size_t pos = 12;
  while (pos + 8 <= bytes.size()) {
    const unsigned char* chunk = bytes.data() + pos;
    const std::uint32_t size = read_u32(chunk + 4);
    const std::size_t body = pos + 8;
    const std::size_t avail = std::min<std::size_t>(size, bytes.size() - body);
    if (std::memcmp(chunk, "fmt ", 4) == 0) {
      if (avail < 16) throw Error(Errc::kNotWav, "truncated fmt chunk in " + path.string());
      format = read_u16(chunk + 8);
      channels = read_u16(chunk + 10);
      rate = read_u32(chunk + 12);
      bits = read_u16(chunk + 22);
      if (format == kFormatExtensible && avail >= 26) {
        // Sub-format GUID starts at offset 24 of the fmt body; its first two
        // bytes carry the actual format tag.
        format = read_u16(chunk + 8 + 24);
      }
      have_fmt = true;
    } else if (std::memcmp(chunk, "data", 4) == 0) {
      data = bytes.data() + body;
      data_size = avail;
    }
    pos = body + size + (size & 1u);
  }
  if (!have_fmt || data == nullptr) {
    throw Error(Errc::kNotWav, path.string() + " lacks a fmt or data chunk");
  }

  WavData out;
  if (format == kFormatPcm && bits == 16) {
    out.encoding = WavEncoding::kPcm16;
  } else if (format == kFormatPcm && bits == 24) {
    out.encoding = WavEncoding::kPcm24;
  } else if (format == kFormatPcm && bits == 32) {
    out.encoding = WavEncoding::kPcm32;
  } else if (format == kFormatFloat && bits == 32) {
    out.encoding = WavEncoding::kFloat32;
  } else {
    throw Error(Errc::kUnsupportedEncoding,
                "unsupported encoding in " + path.string() + ": format tag " +
                    std::to_string(format) + ", " + std::to_string(bits) +
                    " bits (expected PCM 16/24/32 or float32)");
  }
  if (channels < 1 || channels > 2) {
    throw Error(Errc::kChannelCount, "expected 1 or 2 channels, found " +
                                         std::to_string(channels));
  }
  if (rate == 0) throw Error(Errc::kNotWav, "zero sample rate in " + path.string());

  out.sample_rate = static_cast<int>(rate);
  const std::size_t width = static_cast<std::size_t>(bits / 8);
  const std::size_t frames = data_size / (width * channels);
  out.channels.assign(channels, std::vector<double>(frames));
  for (std::size_t i = 0; i < frames; ++i) {
    for (std::size_t c = 0; c < channels; ++c) {
      const double v = decode_sample(data + (i * channels + c) * width, out.encoding);
      out.channels[c][i] = std::isfinite(v) ? v : 0.0;
    }
  }
  return out;
}

StereoRecording read_recording(const std::filesystem::path& path,
                               SpeechChannel speech) {
  WavData wav = read_wav(path);
  if (wav.channels.size() != 2) {
    throw Error(Errc::kChannelCount, "expected 2 channels, found " +
                                         std::to_string(wav.channels.size()));
  }
  const std::size_t s = speech == SpeechChannel::kLeft ? 0 : 1;
  return StereoRecording(MonoSignal(std::move(wav.channels[s]), wav.sample_rate),
                         MonoSignal(std::move(wav.channels[1 - s]), wav.sample_rate));
}

WavWriteResult write_wav(const MonoSignal& signal,
                         const std::filesystem::path& path,
                         WavEncoding encoding) {
  const std::array<const MonoSignal*, 1> ch{&signal};
  return write_channels(ch, path, encoding);
}

WavWriteResult write_stereo_wav(const MonoSignal& left, const MonoSignal& right,
                                const std::filesystem::path& path,
                                WavEncoding encoding) {
  const std::array<const MonoSignal*, 2> ch{&left, &right};
  return write_channels(ch, path, encoding);
}

}  // namespace tegg
