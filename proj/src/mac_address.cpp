// Copyright 2026 The Proxsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "proxsim/mac_address.hpp"

namespace proxsim {

std::string MacAddress::to_string() const {
  static constexpr char kDigits[] = "0123456789ABCDEF";
  std::string out;
  out.reserve(17);
  for (size_t i = 0; i < octets.size(); ++i) {
    if (i != 0) out.push_back(':');
    out.push_back(kDigits[octets[i] >> 4]);
    out.push_back(kDigits[octets[i] & 0x0F]);
  }
  return out;
}

std::optional<MacAddress> MacAddress::parse(const std::string& text) {
  if (text.size() != 17) return std::nullopt;
  auto nibble = [](char c) -> int {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
  };
  MacAddress mac;
  for (size_t i = 0; i < 6; ++i) {
    const size_t pos = i * 3;
    if (i != 0 && text[pos - 1] != ':') return std::nullopt;
    const int hi = nibble(text[pos]);
    const int lo = nibble(text[pos + 1]);
    if (hi < 0 || lo < 0) return std::nullopt;
    mac.octets[i] = static_cast<uint8_t>((hi << 4) | lo);
  }
  return mac;
}

}  // namespace proxsim
