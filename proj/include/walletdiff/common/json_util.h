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

#ifndef WALLETDIFF_COMMON_JSON_UTIL_H_
#define WALLETDIFF_COMMON_JSON_UTIL_H_

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

namespace walletdiff {

using Json = nlohmann::json;
// Keeps key insertion order; used for reports so output is stable and readable.
using OrderedJson = nlohmann::ordered_json;

// Throws Error("io-error") when unreadable, Error("malformed-json") on parse
// failure. Both messages carry the path.
Json read_json_file(const std::filesystem::path& path);
std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

// Field accessors that raise Error(code) naming the missing key.
const Json& require(const Json& j, const char* key, const char* code);
std::string require_string(const Json& j, const char* key, const char* code);

// Length of the well-formed UTF-8 sequence starting at s[i], 0 if malformed.
std::size_t utf8_sequence_length(std::string_view s, std::size_t i);

// Seeds may carry bytes that are not UTF-8, which JSON cannot hold. Each such
// byte b is stored as the private-use code point U+F700+b and restored on load.
std::string escape_raw_bytes(std::string_view s);
std::string restore_raw_bytes(std::string_view s);
// Replaces every byte outside well-formed UTF-8 with U+FFFD.
std::string replace_invalid_utf8(std::string_view s);

// Applies `f` to every string value in `j`; keys are left alone.
template <typename J, typename F>
J map_strings(const J& j, F f) {
  if (j.is_string()) return J(f(j.template get_ref<const std::string&>()));
  if (!j.is_structured()) return j;
  J out = j;
  for (auto it = out.begin(); it != out.end(); ++it) *it = map_strings(*it, f);
  return out;
}

}  // namespace walletdiff

#endif  // WALLETDIFF_COMMON_JSON_UTIL_H_
