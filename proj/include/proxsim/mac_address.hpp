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

#ifndef PROXSIM_MAC_ADDRESS_HPP_
#define PROXSIM_MAC_ADDRESS_HPP_

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>

namespace proxsim {

struct MacAddress {
  std::array<uint8_t, 6> octets{};

  // Colon-separated uppercase hex, "AA:BB:CC:DD:EE:FF".
  std::string to_string() const;
  static std::optional<MacAddress> parse(const std::string& text);

  auto operator<=>(const MacAddress&) const = default;
};

}  // namespace proxsim

#endif  // PROXSIM_MAC_ADDRESS_HPP_
