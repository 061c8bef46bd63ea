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

#pragma once

// Binary portable graymap (P5, maxval 255) I/O for tactile frames.

#include <filesystem>
#include <string>
#include <string_view>

#include "softgrip/tactile.hpp"

namespace softgrip {

std::string encode_pgm(const TactileFrame& frame);

/// Parses a P5 image. Header comments are allowed; maxval must be 255.
TactileFrame decode_pgm(std::string_view bytes);

void write_pgm(const std::filesystem::path& path, const TactileFrame& frame);
TactileFrame read_pgm(const std::filesystem::path& path);

}  // namespace softgrip
