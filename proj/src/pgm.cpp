/*
 * Copyright 2026 The softgrip Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 *
*/

#include "softgrip/pgm.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <iterator>

#include "softgrip/error.hpp"

namespace softgrip {
namespace {

class HeaderReader {
 public:
  explicit HeaderReader(std::string_view bytes) : bytes_(bytes) {}

  void skip_space_and_comments() {
    while (pos_ < bytes_.size()) {
      const char c = bytes_[pos_];
      if (c == '#') {
        while (pos_ < bytes_.size() && bytes_[pos_] != '\n') ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
      } else {
        break;
      }
    }
  }

  int integer(const char* what) {
    skip_space_and_comments();
    int value = 0;
    const auto* first = bytes_.data() + pos_;
    const auto* last = bytes_.data() + bytes_.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr == first) throw ParseError(std::string("PGM header: bad ") + what);
    pos_ += static_cast<std::size_t>(ptr - first);
    return value;
  }

  std::size_t position() const { return pos_; }
  void advance(std::size_t n) { pos_ += n; }
  std::string_view rest() const { return bytes_.substr(pos_); }

 private:
  std::string_view bytes_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string encode_pgm(const TactileFrame& frame) {
  frame.validate();
  std::string out = "P5\n" + std::to_string(frame.width) + " " + std::to_string(frame.height) + "\n255\n";
  out.append(reinterpret_cast<const char*>(frame.pixels.data()), frame.pixels.size());
  return out;
}

TactileFrame decode_pgm(std::string_view bytes) {
  if (bytes.size() < 2 || bytes.substr(0, 2) != "P5") throw ParseError("not a binary PGM (P5) image");
  HeaderReader header(bytes);
  header.advance(2);
  const int width = header.integer("width");
  const int height = header.integer("height");
  const int maxval = header.integer("maxval");
  if (width <= 0 || height <= 0) throw ParseError("PGM header: dimensions must be positive");
  if (maxval != 255) throw ParseError("PGM header: only maxval 255 is supported");
  // Exactly one whitespace byte separates the header from the raster.
  if (header.position() >= bytes.size() || !std::isspace(static_cast<unsigned char>(bytes[header.position()])))
    throw ParseError("PGM header: missing separator before raster");
  header.advance(1);

  const auto raster = header.rest();
  const std::size_t expected = static_cast<std::size_t>(width) * height;
  if (raster.size() < expected) throw ParseError("PGM raster is truncated");

  TactileFrame frame(width, height);
  std::copy_n(raster.begin(), expected, reinterpret_cast<char*>(frame.pixels.data()));
  return frame;
}

void write_pgm(const std::filesystem::path& path, const TactileFrame& frame) {
  const auto bytes = encode_pgm(frame);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw IoError("failed writing '" + path.string() + "'");
}

TactileFrame read_pgm(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "'");
  const std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return decode_pgm(bytes);
}

}  // namespace softgrip
