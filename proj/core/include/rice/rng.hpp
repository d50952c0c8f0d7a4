// Copyright 2026 The ricesim Authors
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

#pragma once

#include <cstdint>
#include <limits>

namespace rice {

enum class StreamPurpose : std::uint64_t {
  kAction = 1,
  kProposal = 2,
  kResponse = 3,
  kTrade = 4,
  kTraining = 5,
};

// Identifies one independent random stream. Streams are derived by hashing
// the key, so draws never depend on evaluation order or thread scheduling.
struct StreamKey {
  std::uint64_t seed = 0;
  std::uint64_t episode = 0;
  std::uint64_t step = 0;
  std::uint64_t region = 0;
  StreamPurpose purpose = StreamPurpose::kAction;
};

// Counter-based generator: output k is splitmix64(key_hash + k * golden).
// Satisfies UniformRandomBitGenerator so it plugs into <random>
// distributions.
class RngStream {
 public:
  using result_type = std::uint64_t;

  RngStream() = default;
  explicit RngStream(const StreamKey& key);

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  result_type operator()();

  // Uniform in [0, 1) with 53 random bits.
  double uniform();

  std::uint64_t counter() const { return counter_; }

 private:
  std::uint64_t base_ = 0;
  std::uint64_t counter_ = 0;
};

std::uint64_t mix64(std::uint64_t x);

// Order-sensitive combination of two 64-bit values.
std::uint64_t hash_combine(std::uint64_t a, std::uint64_t b);

}  // namespace rice
