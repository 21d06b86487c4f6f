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

#include "proxsim/rng.hpp"

#include <cmath>
#include <numbers>

namespace proxsim {

uint64_t mix64(uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

namespace {

uint64_t hash_label(std::string_view label) {
  // FNV-1a folded through the mixer.
  uint64_t h = 0xCBF29CE484222325ULL;
  for (char c : label) {
    h = (h ^ static_cast<uint8_t>(c)) * 0x100000001B3ULL;
  }
  return mix64(h);
}

}  // namespace

Rng::Rng(uint64_t seed) : engine_(mix64(seed)), stream_id_(seed) {}

Rng Rng::fork(std::string_view label) const {
  return Rng(mix64(stream_id_ ^ hash_label(label)));
}

Rng Rng::fork(std::string_view label, uint64_t index) const {
  return Rng(mix64(stream_id_ ^ hash_label(label)) ^ mix64(index + 1));
}

uint64_t Rng::next_u64() { return engine_(); }

double Rng::uniform() {
  // 53 random bits -> [0, 1).
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double Rng::uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

uint64_t Rng::uniform_index(uint64_t n) {
  if (n == 0) return 0;
  // Rejection sampling to avoid modulo bias.
  const uint64_t limit = ~uint64_t{0} - (~uint64_t{0} % n);
  uint64_t v = next_u64();
  while (v >= limit) v = next_u64();
  return v % n;
}

bool Rng::bernoulli(double p) { return uniform() < p; }

double Rng::normal(double mean, double stddev) {
  if (has_spare_) {
    has_spare_ = false;
    return mean + stddev * spare_;
  }
  double u1 = uniform();
  while (u1 <= 0.0) u1 = uniform();
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double theta = 2.0 * std::numbers::pi * u2;
  spare_ = r * std::sin(theta);
  has_spare_ = true;
  return mean + stddev * r * std::cos(theta);
}

void Rng::fill_bytes(std::span<uint8_t> out) {
  size_t i = 0;
  while (i < out.size()) {
    uint64_t v = next_u64();
    for (int b = 0; b < 8 && i < out.size(); ++b, ++i) {
      out[i] = static_cast<uint8_t>(v & 0xFF);
      v >>= 8;
    }
  }
}

}  // namespace proxsim
