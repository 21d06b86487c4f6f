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

#ifndef PROXSIM_CRYPTO_HPP_
#define PROXSIM_CRYPTO_HPP_

#include <array>
#include <cstdint>

#include "proxsim/bytes.hpp"

namespace proxsim {

using Digest256 = std::array<uint8_t, 32>;

Digest256 sha256(ByteSpan data);
Digest256 hmac_sha256(ByteSpan key, ByteSpan message);

// Number of leading zero bits of the digest, scanning from byte 0, MSB first.
int leading_zero_bits(const Digest256& digest);

}  // namespace proxsim

#endif  // PROXSIM_CRYPTO_HPP_
