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

#include <gtest/gtest.h>

#include <filesystem>

#include "softgrip/error.hpp"
#include "softgrip/pgm.hpp"

namespace softgrip {
namespace {

TEST(Pgm, EncodeHeaderAndRaster) {
  TactileFrame f(3, 2);
  f.pixels = {0, 1, 2, 253, 254, 255};
  const auto bytes = encode_pgm(f);
  EXPECT_EQ(bytes.substr(0, 11), "P5\n3 2\n255\n");
  EXPECT_EQ(bytes.size(), 11u + 6u);
  EXPECT_EQ(static_cast<unsigned char>(bytes.back()), 255);
}

TEST(Pgm, RoundTrip) {
  TactileFrame f(17, 9);
  for (std::size_t i = 0; i < f.pixels.size(); ++i) f.pixels[i] = static_cast<std::uint8_t>(i * 37);
  EXPECT_EQ(decode_pgm(encode_pgm(f)), f);
}

TEST(Pgm, HeaderCommentsAndWhitespace) {
  const std::string bytes = std::string("P5 # made by hand\n2\t# w\n 1\n#maxval next\n255\n") + '\x0a' + '\x7f';
  const auto f = decode_pgm(bytes);
  EXPECT_EQ(f.width, 2);
  EXPECT_EQ(f.height, 1);
  EXPECT_EQ(f.pixels, (std::vector<std::uint8_t>{10, 127}));
}

TEST(Pgm, Rejects) {
  EXPECT_THROW(decode_pgm("P2\n1 1\n255\n0"), ParseError);
  EXPECT_THROW(decode_pgm("P5\n2 2\n255\nabc"), ParseError);
  EXPECT_THROW(decode_pgm("P5\n2 2\n65535\n"), ParseError);
  EXPECT_THROW(decode_pgm("P5\n0 2\n255\n"), ParseError);
  EXPECT_THROW(decode_pgm("P5\nx 2\n255\n"), ParseError);
  EXPECT_THROW(decode_pgm(""), ParseError);
}

TEST(Pgm, FileRoundTripAndMissingFile) {
  const auto path = std::filesystem::temp_directory_path() / "softgrip_test_frame.pgm";
  TactileFrame f(4, 4, 99);
  write_pgm(path, f);
  EXPECT_EQ(read_pgm(path), f);
  std::filesystem::remove(path);
  EXPECT_THROW(read_pgm(path), IoError);
}

}  // namespace
}  // namespace softgrip
