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

#ifndef PROXSIM_BEACON_CODEC_HPP_
#define PROXSIM_BEACON_CODEC_HPP_

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "proxsim/bytes.hpp"

namespace proxsim {

// BLE legacy advertisement: at most 31 bytes of consecutive AD structures,
// each [length][type][value...] with length covering type + value.
struct AdvPayload {
  Bytes bytes;

  auto operator<=>(const AdvPayload&) const = default;
};

struct AdStructure {
  uint8_t type = 0;
  ByteSpan value;
};

// Returns the AD structures, or nullopt if the walk is malformed
// (zero length, overrun, or payload longer than 31 bytes).
std::optional<std::vector<AdStructure>> parse_ad_structures(
    const AdvPayload& payload);

inline bool well_formed(const AdvPayload& payload) {
  return parse_ad_structures(payload).has_value();
}

// Manufacturer-specific AD, company 0x004C, subtype 0x02/len 0x15.
struct IBeacon {
  std::array<uint8_t, 16> uuid{};
  uint16_t major = 0;
  uint16_t minor = 0;
  int8_t measured_power = 0;  // dBm at 1 m

  bool operator==(const IBeacon&) const = default;
};

// Manufacturer-specific AD with beacon code 0xBEAC.
struct AltBeacon {
  std::array<uint8_t, 20> beacon_id{};
  int8_t ref_rssi = 0;
  uint8_t mfg_reserved = 0;

  bool operator==(const AltBeacon&) const = default;
};

// Service data for 16-bit UUID 0xFEAA, frame type 0x10, with the standard
// URL scheme-prefix/suffix compression.
struct EddystoneUrl {
  std::string url;
  int8_t tx_power = 0;  // dBm at 0 m

  bool operator==(const EddystoneUrl&) const = default;
};

// Exposure-notification service data for 16-bit UUID 0xFD6F:
// 16-byte rolling identifier + 4 bytes of associated metadata.
struct Ens {
  std::array<uint8_t, 16> ephid{};
  std::array<uint8_t, 4> metadata{};

  bool operator==(const Ens&) const = default;
};

struct UnknownBeacon {
  Bytes raw;

  bool operator==(const UnknownBeacon&) const = default;
};

using BeaconSpec = std::variant<IBeacon, AltBeacon, EddystoneUrl, Ens>;
using BeaconKind =
    std::variant<IBeacon, AltBeacon, EddystoneUrl, Ens, UnknownBeacon>;

class CodecError : public std::runtime_error {
 public:
  enum class Kind { UrlTooLong, InvalidField };

  CodecError(Kind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

// Throws CodecError: UrlTooLong if the Eddystone body exceeds 17 encoded
// bytes, InvalidField if the URL has no known scheme prefix.
AdvPayload encode_beacon(const BeaconSpec& spec);

// Total: unparseable or unrecognized payloads come back as UnknownBeacon
// carrying the original bytes.
BeaconKind decode_beacon(const AdvPayload& payload);

// Log-distance path loss inverted: 10^((measured_power - rssi) / (10 n)).
double estimate_distance(double measured_power_dbm, double rssi_dbm,
                         double path_loss_exponent);

// One payload per line in golden-vector files.
std::string payload_to_hex(const AdvPayload& payload);
std::optional<AdvPayload> payload_from_hex(const std::string& line);

}  // namespace proxsim

#endif  // PROXSIM_BEACON_CODEC_HPP_
