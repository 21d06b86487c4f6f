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

#ifndef PROXSIM_RNG_HPP_
#define PROXSIM_RNG_HPP_

#include <cstdint>
#include <random>
#include <string_view>

#include "proxsim/bytes.hpp"

namespace proxsim {

// Deterministic RNG with hand-rolled distributions. std:: distributions are
// implementation-defined, which would break reproducibility of traces across
// standard libraries, so uniform/normal/bernoulli are derived here directly
// from the raw engine output.
class Rng {
 public:
  explicit Rng(uint64_t seed);

  // Independent child stream identified by a label; forking does not
  // perturb this stream's state.
  Rng fork(std::string_view label) const;
  Rng fork(std::string_view label, uint64_t index) const;

  uint64_t next_u64();
  // Uniform in [0, 1).
  double uniform();
  double uniform(double lo, double hi);
  // Uniform in [0, n).
  uint64_t uniform_index(uint64_t n);
  bool bernoulli(double p);
  // Standard Box-Muller; one draw consumed per call pair, cached spare kept.
  double normal(double mean, double stddev);
  void fill_bytes(std::span<uint8_t> out);

 private:
  std::mt19937_64 engine_;
  uint64_t stream_id_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

// SplitMix64 finalizer, also used for label hashing.
uint64_t mix64(uint64_t x);

}  // namespace proxsim

#endif  // PROXSIM_RNG_HPP_
