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

#include "proxsim/beacon_codec.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <stdexcept>

namespace proxsim {

namespace {

constexpr size_t kMaxPayload = 31;

constexpr uint8_t kAdFlags = 0x01;
constexpr uint8_t kAdServiceUuid16 = 0x03;
constexpr uint8_t kAdServiceData16 = 0x16;
constexpr uint8_t kAdManufacturer = 0xFF;

constexpr uint16_t kAppleCompanyId = 0x004C;
// Radius Networks; AltBeacon decodes regardless of manufacturer id.
constexpr uint16_t kAltBeaconCompanyId = 0x0118;
constexpr uint16_t kEddystoneUuid = 0xFEAA;
constexpr uint16_t kEnsUuid = 0xFD6F;
constexpr uint8_t kEddystoneUrlFrame = 0x10;

// Eddystone-URL compression tables, code = index.
constexpr const char* kUrlSchemes[] = {
    "http://www.",
    "https://www.",
    "http://",
    "https://",
};
constexpr const char* kUrlSuffixes[] = {
    ".com/", ".org/", ".edu/", ".net/", ".info/", ".biz/", ".gov/",
    ".com",  ".org",  ".edu",  ".net",  ".info",  ".biz",  ".gov",
};

void append_ad(Bytes& out, uint8_t type, ByteSpan value) {
  out.push_back(static_cast<uint8_t>(1 + value.size()));
  out.push_back(type);
  out.insert(out.end(), value.begin(), value.end());
}

void append_flags(Bytes& out) {
  const uint8_t flags[] = {0x06};  // LE General Discoverable, no BR/EDR
  append_ad(out, kAdFlags, flags);
}

AdvPayload encode_ibeacon(const IBeacon& b) {
  Bytes out;
  append_flags(out);
  Bytes mfg;
  mfg.push_back(kAppleCompanyId & 0xFF);
  mfg.push_back(kAppleCompanyId >> 8);
  mfg.push_back(0x02);
  mfg.push_back(0x15);
  mfg.insert(mfg.end(), b.uuid.begin(), b.uuid.end());
  put_u16_be(mfg, b.major);
  put_u16_be(mfg, b.minor);
  mfg.push_back(static_cast<uint8_t>(b.measured_power));
  append_ad(out, kAdManufacturer, mfg);
  return AdvPayload{std::move(out)};
}

AdvPayload encode_altbeacon(const AltBeacon& b) {
  Bytes out;
  append_flags(out);
  Bytes mfg;
  mfg.push_back(kAltBeaconCompanyId & 0xFF);
  mfg.push_back(kAltBeaconCompanyId >> 8);
  mfg.push_back(0xBE);
  mfg.push_back(0xAC);
  mfg.insert(mfg.end(), b.beacon_id.begin(), b.beacon_id.end());
  mfg.push_back(static_cast<uint8_t>(b.ref_rssi));
  mfg.push_back(b.mfg_reserved);
  append_ad(out, kAdManufacturer, mfg);
  return AdvPayload{std::move(out)};
}

AdvPayload encode_eddystone_url(const EddystoneUrl& b) {
  size_t scheme_code = kUrlSchemes[0] != nullptr ? size_t(-1) : 0;
  std::string_view rest;
  // Longest prefix first so "https://www." beats "https://".
  size_t best_len = 0;
  for (size_t i = 0; i < std::size(kUrlSchemes); ++i) {
    const std::string_view scheme = kUrlSchemes[i];
    if (b.url.size() >= scheme.size() && b.url.compare(0, scheme.size(), scheme) == 0 &&
        scheme.size() > best_len) {
      best_len = scheme.size();
      scheme_code = i;
    }
  }
  if (best_len == 0) {
    throw CodecError(CodecError::Kind::InvalidField,
                     "Eddystone URL has no known scheme prefix: " + b.url);
  }
  rest = std::string_view(b.url).substr(best_len);

  Bytes body;
  body.push_back(static_cast<uint8_t>(scheme_code));
  size_t pos = 0;
  while (pos < rest.size()) {
    size_t code = size_t(-1);
    size_t code_len = 0;
    for (size_t i = 0; i < std::size(kUrlSuffixes); ++i) {
      const std::string_view suffix = kUrlSuffixes[i];
      if (rest.compare(pos, suffix.size(), suffix) == 0 &&
          suffix.size() > code_len) {
        code = i;
        code_len = suffix.size();
      }
    }
    if (code != size_t(-1)) {
      body.push_back(static_cast<uint8_t>(code));
      pos += code_len;
    } else {
      body.push_back(static_cast<uint8_t>(rest[pos]));
      ++pos;
    }
  }
  if (body.size() - 1 > 17) {
    throw CodecError(CodecError::Kind::UrlTooLong,
                     "Eddystone body exceeds 17 encoded bytes: " + b.url);
  }

  Bytes out;
  append_flags(out);
  const uint8_t uuid_le[] = {kEddystoneUuid & 0xFF, kEddystoneUuid >> 8};
  append_ad(out, kAdServiceUuid16, uuid_le);
  Bytes svc;
  svc.push_back(uuid_le[0]);
  svc.push_back(uuid_le[1]);
  svc.push_back(kEddystoneUrlFrame);
  svc.push_back(static_cast<uint8_t>(b.tx_power));
  svc.insert(svc.end(), body.begin(), body.end());
  append_ad(out, kAdServiceData16, svc);
  return AdvPayload{std::move(out)};
}

AdvPayload encode_ens(const Ens& b) {
  Bytes out;
  const uint8_t uuid_le[] = {kEnsUuid & 0xFF, kEnsUuid >> 8};
  append_ad(out, kAdServiceUuid16, uuid_le);
  Bytes svc;
  svc.push_back(uuid_le[0]);
  svc.push_back(uuid_le[1]);
  svc.insert(svc.end(), b.ephid.begin(), b.ephid.end());
  svc.insert(svc.end(), b.metadata.begin(), b.metadata.end());
  append_ad(out, kAdServiceData16, svc);
  return AdvPayload{std::move(out)};
}

std::optional<BeaconKind> decode_manufacturer(ByteSpan v) {
  if (v.size() < 4) return std::nullopt;
  const uint16_t company = static_cast<uint16_t>(v[0] | (v[1] << 8));
  if (company == kAppleCompanyId && v.size() == 25 && v[2] == 0x02 &&
      v[3] == 0x15) {
    IBeacon b;
    std::copy_n(v.begin() + 4, 16, b.uuid.begin());
    b.major = get_u16_be(v.subspan(20));
    b.minor = get_u16_be(v.subspan(22));
    b.measured_power = static_cast<int8_t>(v[24]);
    return BeaconKind{b};
  }
  if (v.size() == 26 && v[2] == 0xBE && v[3] == 0xAC) {
    AltBeacon b;
    std::copy_n(v.begin() + 4, 20, b.beacon_id.begin());
    b.ref_rssi = static_cast<int8_t>(v[24]);
    b.mfg_reserved = v[25];
    return BeaconKind{b};
  }
  return std::nullopt;
}

std::optional<BeaconKind> decode_service_data(ByteSpan v) {
  if (v.size() < 2) return std::nullopt;
  const uint16_t uuid = static_cast<uint16_t>(v[0] | (v[1] << 8));
  if (uuid == kEddystoneUuid && v.size() >= 5 && v[2] == kEddystoneUrlFrame) {
    const uint8_t scheme = v[4];
    if (scheme >= std::size(kUrlSchemes)) return std::nullopt;
    EddystoneUrl b;
    b.tx_power = static_cast<int8_t>(v[3]);
    b.url = kUrlSchemes[scheme];
    for (size_t i = 5; i < v.size(); ++i) {
      const uint8_t c = v[i];
      if (c < std::size(kUrlSuffixes)) {
        b.url += kUrlSuffixes[c];
      } else {
        b.url.push_back(static_cast<char>(c));
      }
    }
    return BeaconKind{b};
  }
  if (uuid == kEnsUuid && v.size() == 22) {
    Ens b;
    std::copy_n(v.begin() + 2, 16, b.ephid.begin());
    std::copy_n(v.begin() + 18, 4, b.metadata.begin());
    return BeaconKind{b};
  }
  return std::nullopt;
}

}  // namespace

std::optional<std::vector<AdStructure>> parse_ad_structures(
    const AdvPayload& payload) {
  const Bytes& b = payload.bytes;
  if (b.size() > kMaxPayload) return std::nullopt;
  std::vector<AdStructure> out;
  size_t pos = 0;
  while (pos < b.size()) {
    const uint8_t len = b[pos];
    if (len == 0 || pos + 1 + len > b.size()) return std::nullopt;
    out.push_back(AdStructure{b[pos + 1], ByteSpan(&b[pos + 2], len - 1)});
    pos += 1 + static_cast<size_t>(len);
  }
  return out;
}

AdvPayload encode_beacon(const BeaconSpec& spec) {
  return std::visit(
      [](const auto& b) -> AdvPayload {
        using T = std::decay_t<decltype(b)>;
        if constexpr (std::is_same_v<T, IBeacon>) return encode_ibeacon(b);
        if constexpr (std::is_same_v<T, AltBeacon>) return encode_altbeacon(b);
        if constexpr (std::is_same_v<T, EddystoneUrl>)
          return encode_eddystone_url(b);
        if constexpr (std::is_same_v<T, Ens>) return encode_ens(b);
      },
      spec);
}

BeaconKind decode_beacon(const AdvPayload& payload) {
  const auto ads = parse_ad_structures(payload);
  if (!ads) return UnknownBeacon{payload.bytes};
  for (const AdStructure& ad : *ads) {
    std::optional<BeaconKind> decoded;
    if (ad.type == kAdManufacturer) {
      decoded = decode_manufacturer(ad.value);
    } else if (ad.type == kAdServiceData16) {
      decoded = decode_service_data(ad.value);
    }
    if (decoded) return *decoded;
  }
  return UnknownBeacon{payload.bytes};
}

double estimate_distance(double measured_power_dbm, double rssi_dbm,
                         double path_loss_exponent) {
  if (path_loss_exponent <= 0.0) {
    throw std::invalid_argument("path_loss_exponent must be > 0");
  }
  return std::pow(10.0,
                  (measured_power_dbm - rssi_dbm) / (10.0 * path_loss_exponent));
}

std::string payload_to_hex(const AdvPayload& payload) {
  return to_hex(payload.bytes);
}

std::optional<AdvPayload> payload_from_hex(const std::string& line) {
  auto bytes = from_hex(line);
  if (!bytes) return std::nullopt;
  return AdvPayload{std::move(*bytes)};
}

}  // namespace proxsim
