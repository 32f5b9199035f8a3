// Copyright 2026 The walletdiff Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "walletdiff/common/json_util.h"

#include <cstdint>
#include <fstream>
#include <sstream>

#include "walletdiff/common/error.h"

namespace walletdiff {

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("io-error", "cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  if (path.has_parent_path()) {
    std::error_code ec;
    std::filesystem::create_directories(path.parent_path(), ec);
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("io-error", "cannot write " + path.string());
  out << text;
  if (!out) throw Error("io-error", "short write to " + path.string());
}

Json read_json_file(const std::filesystem::path& path) {
  std::string text = read_text_file(path);
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error("malformed-json", path.string() + ": " + e.what());
  }
}

const Json& require(const Json& j, const char* key, const char* code) {
  if (!j.is_object() || !j.contains(key)) {
    throw Error(code, std::string("missing field '") + key + "'");
  }
  return j.at(key);
}

std::string require_string(const Json& j, const char* key, const char* code) {
  const Json& v = require(j, key, code);
  if (!v.is_string()) {
    throw Error(code, std::string("field '") + key + "' must be a string");
  }
  return v.get<std::string>();
}

std::size_t utf8_sequence_length(std::string_view s, std::size_t i) {
  auto b = static_cast<unsigned char>(s[i]);
  if (b < 0x80) return 1;
  std::size_t n = b >= 0xc2 && b <= 0xdf ? 2 : b >= 0xe0 && b <= 0xef ? 3 : b >= 0xf0 && b <= 0xf4 ? 4 : 0;
  if (n == 0 || i + n > s.size()) return 0;
  std::uint32_t cp = b & (0x7f >> n);
  for (std::size_t k = 1; k < n; ++k) {
    auto c = static_cast<unsigned char>(s[i + k]);
    if ((c & 0xc0) != 0x80) return 0;
    cp = (cp << 6) | (c & 0x3f);
  }
  if ((n == 3 && cp < 0x800) || (n == 4 && cp < 0x10000) || cp > 0x10ffff ||
      (cp >= 0xd800 && cp <= 0xdfff)) {
    return 0;
  }
  return n;
}

namespace {

constexpr std::uint32_t kRawByteBase = 0xf700;

template <typename F>
std::string map_invalid_bytes(std::string_view s, F on_invalid) {
  std::string out;
  out.reserve(s.size());
  for (std::size_t i = 0; i < s.size();) {
    if (std::size_t n = utf8_sequence_length(s, i)) {
      out.append(s.substr(i, n));
      i += n;
    } else {
      on_invalid(out, static_cast<unsigned char>(s[i]));
      ++i;
    }
  }
  return out;
}

}  // namespace

std::string escape_raw_bytes(std::string_view s) {
  return map_invalid_bytes(s, [](std::string& out, unsigned char b) {
    std::uint32_t cp = kRawByteBase + b;
    out += static_cast<char>(0xe0 | (cp >> 12));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3f));
    out += static_cast<char>(0x80 | (cp & 0x3f));
  });
}

std::string restore_raw_bytes(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (std::size_t i = 0; i < s.size();) {
    if (i + 3 <= s.size() && utf8_sequence_length(s, i) == 3) {
      std::uint32_t cp = ((static_cast<unsigned char>(s[i]) & 0x0f) << 12) |
                         ((static_cast<unsigned char>(s[i + 1]) & 0x3f) << 6) |
                         (static_cast<unsigned char>(s[i + 2]) & 0x3f);
      if (cp >= kRawByteBase && cp < kRawByteBase + 0x100) {
        out += static_cast<char>(cp - kRawByteBase);
        i += 3;
        continue;
      }
    }
    out += s[i++];
  }
  return out;
}

std::string replace_invalid_utf8(std::string_view s) {
  return map_invalid_bytes(s, [](std::string& out, unsigned char) { out += "\xef\xbf\xbd"; });
}

}  // namespace walletdiff
