// Copyright 2026 The netjam Authors
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

#ifndef NETJAM_FORMAT_HPP_
#define NETJAM_FORMAT_HPP_

#include <charconv>
#include <string>
#include <string_view>
#include <system_error>

namespace netjam {

// Shortest decimal text that parses back to exactly `value`; locale
// independent, so CSV output is byte-stable. Moderate magnitudes are kept in
// positional notation (0.0001 rather than 1e-04).
inline std::string format_number(double value) {
  char buf[400];
  auto res = std::to_chars(buf, buf + sizeof buf, value);
  if (res.ec != std::errc{}) return "nan";
  const double mag = value < 0 ? -value : value;
  if (std::string_view(buf, res.ptr).find('e') != std::string_view::npos &&
      mag >= 1e-6 && mag < 1e15) {
    res = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::fixed);
    if (res.ec != std::errc{}) return "nan";
  }
  return std::string(buf, res.ptr);
}

}  // namespace netjam

#endif  // NETJAM_FORMAT_HPP_
